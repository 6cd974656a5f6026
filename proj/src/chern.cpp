#include "wallflip/chern.hpp"

namespace wallflip {

Rat tau(const ChernData& e, const SurfaceLattice& lat) {
    Rat c1sq = lat.square(e.c1);
    Rat c1k = lat.k_dot(e.c1);
    return (c1sq - 2 * e.c2 - c1k) / (2 * Rat(e.rank));
}

HilbertPoly reduced_hilbert(const ChernData& e, const NumClass& twist, const NumClass& h,
                            const SurfaceLattice& lat) {
    Rat hsq = lat.square(h);
    if (hsq <= 0) throw Error("nonpositive_square", "polarization must have positive square");
    NumClass mu = e.c1 * (Rat(1) / Rat(e.rank));  // c1/r
    HilbertPoly p;
    p.a2 = hsq / 2;
    p.a1 = lat.pair(mu, h) + lat.pair(twist, h) - lat.k_dot(h) / 2;
    p.a0 = lat.square(twist) / 2 + lat.pair(mu, twist) - lat.k_dot(twist) / 2 + tau(e, lat) +
           Rat(lat.chi());
    return p;
}

bool bogomolov_holds(const ChernData& e, const SurfaceLattice& lat) {
    return e.c2 >= Rat(e.rank - 1) * lat.square(e.c1) / (2 * Rat(e.rank));
}

ChernData integral_twist_transform(const ChernData& e, const NumClass& l,
                                   const SurfaceLattice& lat) {
    if (!l.integral())
        throw Error("not_integral",
                    "only integral classes transform; rational twists stay as parameters");
    NumClass c1t = e.c1 + l * Rat(e.rank);
    Rat c2t = e.c2 + Rat(e.rank - 1) * lat.pair(e.c1, l) +
              Rat(e.rank * (e.rank - 1)) / 2 * lat.square(l);
    return ChernData(e.rank, std::move(c1t), std::move(c2t));
}

CoverTwistCoefficients cover_twist_integrality(const Int& p, const Int& q, const Int& m) {
    if (q < 1) throw Error("bad_denominator", "twist denominator q must be positive");
    if (m < 1) throw Error("bad_cover_degree", "cover degree m must be positive");
    if (m % q != 0) throw Error("twist_not_integral_on_cover", "twist not integral on cover");
    CoverTwistCoefficients c;
    c.gamma_coef = Rat(p * m, q) + Rat(m - 1);
    c.phi_a_coef = 2 * m * (m - 1);
    return c;
}

}  // namespace wallflip
