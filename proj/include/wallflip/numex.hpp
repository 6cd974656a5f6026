#pragma once

#include <vector>

#include "wallflip/stability.hpp"

namespace wallflip {

// Rational approximations q/p of sqrt(d) from above with error < 1/p^2,
// certified by integer inequalities only.
struct SurdApprox {
    Int d;
    std::vector<std::pair<Int, Int>> convergents;  // (p, q) with q/p > sqrt(d)
};

SurdApprox approximate_surd(const Int& d, int count);

// Solutions (p, q) of q^2 - d p^2 = 1, fundamental first.
std::vector<std::pair<Int, Int>> pell_solutions(const Int& d, int count);

// The abelian-product lattice used for the unbounded family, in the
// diagonalized (U, V, W) coordinates: gram diag(6, -2, -2), K = 0, chi = 0.
// The change of basis back to the product coordinates (E1, E2, D) is
// U = E1+E2+D, V = E1-D, W = E2-D; note that V.W = -1 under the product
// pairing, so the diagonal form is exact only on the (U, V) plane where the
// family lives.
SurfaceLattice product_abelian_lattice();

// E1, E2, D coordinates of a (U,V)-plane class.
std::vector<Int> product_coordinates(const Int& u, const Int& v);

struct FamilyMember {
    Int p, q;
    NumClass l;        // p U + q V
    NumClass h;        // q U + 3p V, with h.l = 0 and h^2 = 6
    Rat c2;            // -l^2 = 2
    Rat probe_pairing;  // probe . l, strictly increasing along the family
    Stability verdict;  // split-bundle verdict of O(l) + O(-l) at h
};

struct UnboundedFamily {
    std::vector<FamilyMember> members;
    // constant term of the reduced polynomial of each member at its own h;
    // equals -c2/2 under the Riemann-Roch convention used throughout
    Rat reduced_constant_term;
};

// Builds the rank-2 split family from the Pell solutions of q^2 - 3p^2 = 1,
// verifies its invariants and reports the unboundedness witness probe.l.
UnboundedFamily remark17_family(int count, const NumClass& probe_ample);

}  // namespace wallflip
