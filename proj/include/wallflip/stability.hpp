#pragma once

#include <optional>
#include <vector>

#include "wallflip/chern.hpp"

namespace wallflip {

enum class Order { LESS, EQUAL, GREATER };

enum class Stability { STABLE, STRICTLY_SEMISTABLE, UNSTABLE };

// A semistability verdict relative to an explicit candidate list.  Genuine
// semistability of an abstract sheaf is not decidable from (r, c1, c2) alone;
// the split-bundle checker below is the one case where the candidate list is
// provably sufficient.
struct Verdict {
    Stability kind;
    std::optional<ChernData> witness;  // a maximizing subobject, when not STABLE
};

// Eventual order of two reduced polynomials with equal leading term:
// lexicographic on (a1, a0).
Order compare_reduced(const HilbertPoly& pf, const HilbertPoly& pe);

// Sign of (c1F/rF - c1E/rE).H.
Order compare_slope(const ChernData& f, const ChernData& e, const NumClass& h,
                    const SurfaceLattice& lat);

// Twisted Gieseker verdict of E against the supplied candidate subobjects at
// polarization A.  Soundness relative to the list is the caller's concern.
Verdict twisted_verdict(const ChernData& e, const std::vector<ChernData>& subdata,
                        const NumClass& twist, const NumClass& a, const SurfaceLattice& lat);

// Verdict for a direct sum of line bundles O(L_1) + ... + O(L_k), checked
// against every nonempty proper sub-multiset.  For split bundles this list is
// sufficient: any saturated subsheaf is dominated by some partial sum.
Verdict split_bundle_verdict(const std::vector<NumClass>& lines, const NumClass& twist,
                             const NumClass& h, const SurfaceLattice& lat);

// Membership of E in the H-refined semistable set at polarization A: every
// candidate whose reduced A-polynomial equals E's must satisfy xi.H >= 0
// (note the reversed inequality direction relative to plain semistability).
bool classify_at_wall(const ChernData& e, const std::vector<ChernData>& candidates,
                      const NumClass& a, const NumClass& h, const SurfaceLattice& lat);

// Checks that the parabolic difference (1-a) (p(E,0,A) - p(F,0,A)) +
// a (p(E,nH,A) - p(F,nH,A)) coincides coefficientwise with the twisted
// difference at twist a*nH.  Holds identically by affinity of differences.
bool parabolic_difference_check(const ChernData& e, const ChernData& f, const NumClass& h,
                                const NumClass& a_pol, const Int& n, const Rat& weight,
                                const SurfaceLattice& lat);

}  // namespace wallflip
