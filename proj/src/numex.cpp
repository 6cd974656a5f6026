#include "wallflip/numex.hpp"

#include <tuple>

namespace wallflip {

namespace {

struct CfState {
    Int a0, m, d, a;
    Int h_prev, h_cur, k_prev, k_cur;  // convergent numerators/denominators
};

CfState cf_begin(const Int& d) {
    if (d < 2) throw Error("bad_radicand", "need d >= 2");
    Int a0 = isqrt(d);
    if (a0 * a0 == d) throw Error("perfect_square", "d is a perfect square");
    return {a0, 0, 1, a0, 1, a0, 0, 1};
}

// advance to the next convergent h/k of sqrt(d)
void cf_next(CfState& s, const Int& d) {
    s.m = s.d * s.a - s.m;
    s.d = (d - s.m * s.m) / s.d;
    s.a = (s.a0 + s.m) / s.d;
    Int h = s.a * s.h_cur + s.h_prev;
    Int k = s.a * s.k_cur + s.k_prev;
    s.h_prev = s.h_cur;
    s.h_cur = h;
    s.k_prev = s.k_cur;
    s.k_cur = k;
}

// exact check of 0 < q/p - sqrt(d) < 1/p^2
bool above_within(const Int& p, const Int& q, const Int& d) {
    if (q * q <= d * p * p) return false;  // not above
    Int qp = q * p;
    if (qp <= 1) return true;  // q p - 1 <= 0 < p^2 sqrt(d)
    return (qp - 1) * (qp - 1) < d * p * p * p * p;
}

}  // namespace

SurdApprox approximate_surd(const Int& d, int count) {
    if (count < 1) throw Error("bad_count", "count must be >= 1");
    SurdApprox out;
    out.d = d;
    CfState s = cf_begin(d);
    // first convergent is a0/1 (from below); walk until enough from above
    while (static_cast<int>(out.convergents.size()) < count) {
        if (above_within(s.k_cur, s.h_cur, d)) out.convergents.emplace_back(s.k_cur, s.h_cur);
        cf_next(s, d);
    }
    return out;
}

std::vector<std::pair<Int, Int>> pell_solutions(const Int& d, int count) {
    std::vector<std::pair<Int, Int>> out;
    if (count <= 0) {
        cf_begin(d);  // still reject perfect squares
        return out;
    }
    CfState s = cf_begin(d);
    Int p1 = 0, q1 = 0;
    while (true) {
        if (s.h_cur * s.h_cur - d * s.k_cur * s.k_cur == 1) {
            p1 = s.k_cur;
            q1 = s.h_cur;
            break;
        }
        cf_next(s, d);
    }
    Int p = p1, q = q1;
    out.emplace_back(p, q);
    while (static_cast<int>(out.size()) < count) {
        Int np = q1 * p + p1 * q;
        Int nq = q1 * q + d * p1 * p;
        p = np;
        q = nq;
        out.emplace_back(p, q);
    }
    return out;
}

SurfaceLattice product_abelian_lattice() {
    return SurfaceLattice(3, {{6, 0, 0}, {0, -2, 0}, {0, 0, -2}}, {0, 0, 0}, 0);
}

std::vector<Int> product_coordinates(const Int& u, const Int& v) {
    // u U + v V = u(E1+E2+D) + v(E1-D)
    return {u + v, u, u - v};
}

UnboundedFamily remark17_family(int count, const NumClass& probe_ample) {
    if (count < 1) throw Error("bad_count", "count must be >= 1");
    SurfaceLattice lat = product_abelian_lattice();
    lat.validate();
    if (lat.square(probe_ample) <= 0)
        throw Error("nonpositive_square", "probe class must have positive square");

    UnboundedFamily fam;
    Rat prev_probe;
    bool first = true;
    for (const auto& [p, q] : pell_solutions(3, count)) {
        FamilyMember m;
        m.p = p;
        m.q = q;
        m.l = NumClass({Rat(p), Rat(q), Rat(0)});
        m.h = NumClass({Rat(q), Rat(3 * p), Rat(0)});
        m.c2 = -lat.square(m.l);
        std::string tag = "(p,q)=(" + p.str() + "," + q.str() + ")";
        if (q * q - 3 * p * p != 1) throw Error("family_invariant", "Pell identity fails at " + tag);
        if (lat.square(m.l) != -2) throw Error("family_invariant", "L^2 != -2 at " + tag);
        if (m.c2 != 2) throw Error("family_invariant", "c2 != 2 at " + tag);
        if (lat.square(m.h) != 6) throw Error("family_invariant", "H^2 != 6 at " + tag);
        if (lat.pair(m.h, m.l) != 0) throw Error("family_invariant", "H.L != 0 at " + tag);
        if (!(m.c2 > 0 && m.c2 < 8))
            throw Error("family_invariant", "c2 outside the window (0,8) at " + tag);
        Verdict v = split_bundle_verdict({m.l, -m.l}, NumClass::zero(3), m.h, lat);
        m.verdict = v.kind;
        if (v.kind == Stability::UNSTABLE)
            throw Error("family_invariant", "split bundle unstable at its own H at " + tag);
        m.probe_pairing = lat.pair(probe_ample, m.l);
        if (!first && !(m.probe_pairing > prev_probe))
            throw Error("family_invariant", "probe pairing not strictly increasing at " + tag);
        prev_probe = m.probe_pairing;
        first = false;
        fam.members.push_back(std::move(m));
    }
    ChernData e(2, NumClass::zero(3), fam.members.front().c2);
    fam.reduced_constant_term =
        reduced_hilbert(e, NumClass::zero(3), fam.members.front().h, lat).a0;
    return fam;
}

}  // namespace wallflip
