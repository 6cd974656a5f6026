#pragma once

#include "wallflip/lattice.hpp"

namespace wallflip {

// Numerical stand-in for a torsion-free sheaf: (rank, c1, c2).  c2 is kept
// rational so that formal quotient data can be represented; feasibility
// searches round it with exact ceilings where integrality matters.
struct ChernData {
    Int rank;
    NumClass c1;
    Rat c2;

    ChernData(Int r, NumClass c, Rat k) : rank(std::move(r)), c1(std::move(c)), c2(std::move(k)) {
        if (rank < 1) throw Error("bad_rank", "sheaf rank must be >= 1");
    }
};

// Reduced Hilbert polynomial a2 n^2 + a1 n + a0 with exact coefficients.
struct HilbertPoly {
    Rat a2, a1, a0;

    Rat eval(const Rat& n) const { return (a2 * n + a1) * n + a0; }
    bool operator==(const HilbertPoly& o) const { return a2 == o.a2 && a1 == o.a1 && a0 == o.a0; }
};

// (c1^2 - 2 c2 - c1.K) / (2 r): the rank-normalized constant part of the
// Riemann-Roch expression, before adding chi(O).
Rat tau(const ChernData& e, const SurfaceLattice& lat);

// Reduced Hilbert polynomial of E formally tensored by the rational class
// `twist`, with respect to the polarization H.  twist = 0 recovers the plain
// reduced polynomial.
HilbertPoly reduced_hilbert(const ChernData& e, const NumClass& twist, const NumClass& h,
                            const SurfaceLattice& lat);

// c2 >= (r-1)/(2r) c1^2, compared exactly.
bool bogomolov_holds(const ChernData& e, const SurfaceLattice& lat);

// Chern data of E tensored by the integral class L:
// (r, c1 + rL, c2 + (r-1) c1.L + r(r-1)/2 L^2).
ChernData integral_twist_transform(const ChernData& e, const NumClass& l, const SurfaceLattice& lat);

// Coefficients of the twist pulled back to the degree-m Kummer cover: the
// multiple of the reduced ramification curve (guaranteed integral when q | m)
// and the multiple of the pulled-back polarization.
struct CoverTwistCoefficients {
    Rat gamma_coef;  // p m / q + (m - 1), integral by construction
    Int phi_a_coef;  // 2 m (m - 1)
};

CoverTwistCoefficients cover_twist_integrality(const Int& p, const Int& q, const Int& m);

}  // namespace wallflip
