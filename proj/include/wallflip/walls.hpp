#pragma once

#include <optional>
#include <vector>

#include "wallflip/chern.hpp"

namespace wallflip {

// A polyhedral subcone of the ample cone, given by generators.  Ampleness of
// the generators is asserted by the user; sanity() checks the numerical
// positivity expected of ample classes.
struct AmpleCone {
    std::vector<NumClass> generators;

    void validate(const SurfaceLattice& lat) const;  // structural checks
    bool sanity(const SurfaceLattice& lat) const;    // H_i^2 > 0, H_i.H_j > 0
};

// One potential destabilizing splitting: rank and first Chern class of the
// subobject, the orthogonality class L, the wall functional xi, and the
// feasible interval of c2(F).
struct WallDatum {
    Int r_f;
    NumClass c1_f;
    NumClass l;        // c1F - (rF/r) c1, in the (1/r)-lattice coset
    NumClass xi;       // L / rF
    Int c2f_lo, c2f_hi;  // inclusive interval of admissible c2(F)

    bool operator==(const WallDatum& o) const {
        return r_f == o.r_f && c1_f == o.c1_f && c2f_lo == o.c2f_lo && c2f_hi == o.c2f_hi;
    }
};

// A wall hyperplane {H : n.H = 0} with its supporting data; n is the primitive
// integral normal with canonical sign (first nonzero coordinate positive).
struct WallHyperplane {
    NumClass normal;
    std::vector<WallDatum> data;

    bool operator==(const WallHyperplane& o) const { return normal == o.normal && data == o.data; }
};

struct WallSet {
    std::vector<WallHyperplane> hyperplanes;
    std::string notice;  // e.g. rank-1 input

    bool same_hyperplanes(const WallSet& o) const;
    bool operator==(const WallSet& o) const { return hyperplanes == o.hyperplanes; }
};

// (c2 - l) / (1 - h) with h = min over splittings of the paired Bogomolov
// slack and l = (r-1)/(2r) c1^2.  A negative value means no wall can exist.
Rat case_a_bound(const Int& r, const NumClass& c1, const Rat& c2, const SurfaceLattice& lat);

// True iff L.H = 0 for some H in the closed cone: min_i L.H_i <= 0 <= max_i.
bool sign_spans_cone(const NumClass& l, const AmpleCone& cone, const SurfaceLattice& lat);

// A narrow piece of the cone together with its majorant data.
struct SubconePiece {
    std::vector<NumClass> generators;  // slice-normalized against the barycenter
    NumClass barycenter;               // H0 = sum of incoming generators
    MajorantForm form;
    Rat csq;    // max_i -(Hhat_i - H0)^2, < H0^2 by construction
    Rat h0sq;
};

inline constexpr int kDefaultMaxDepth = 48;

// Bisects the generator simplex (longest edge, midpoint) until each piece
// satisfies the narrowness criterion csq < H0^2.
std::vector<SubconePiece> subdivide_cone(const AmpleCone& cone, const SurfaceLattice& lat,
                                         int max_depth = kDefaultMaxDepth);

// All x in (1/denom) Z^rho with 0 < -x^2 <= N and sign_spans_cone(x).
std::vector<NumClass> enumerate_orthogonal_classes(const SurfaceLattice& lat, const Int& denom,
                                                   const Rat& n_bound, const AmpleCone& cone,
                                                   int max_depth = kDefaultMaxDepth);

// Same harvest restricted to the coset shift + Z^rho.
std::vector<NumClass> enumerate_orthogonal_coset(const SurfaceLattice& lat, const NumClass& shift,
                                                 const Rat& n_bound, const AmpleCone& cone,
                                                 int max_depth = kDefaultMaxDepth);

// All potential wall data for E over the cone, grouped by hyperplane.  The
// output is the standard numerical superset: existence of an actual semistable
// sheaf realizing a datum is not decided here.
WallSet enumerate_walls(const ChernData& e, const AmpleCone& cone, const SurfaceLattice& lat,
                        int max_depth = kDefaultMaxDepth, int threads = 1);

struct NefHeuristicResult {
    WallSet walls;       // wall set of the last completed shrink step
    bool stabilized;     // last three completed steps agree
    std::vector<std::size_t> step_wall_counts;
    std::vector<std::string> step_errors;  // empty string = step completed
};

// Shrinks each nef generator by g + eps*H0 for eps = 1/2^k and watches the
// wall set stabilize.  Non-stabilization is a flagged result, not an error.
NefHeuristicResult enumerate_walls_nef_heuristic(const ChernData& e,
                                                 const std::vector<NumClass>& nef_generators,
                                                 const SurfaceLattice& lat, int shrink_steps,
                                                 int max_depth = kDefaultMaxDepth);

// Smallest positive integral multiple of a rational class, sign-canonicalized
// so its first nonzero coordinate is positive.
NumClass primitive_normal(const NumClass& xi);

}  // namespace wallflip
