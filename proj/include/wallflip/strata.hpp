#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wallflip/stability.hpp"
#include "wallflip/walls.hpp"

namespace wallflip {

// Ordered wall crossings along the segment from start to end.
struct ChamberPath {
    NumClass start, end;
    struct Event {
        Rat t;                           // crossing parameter in (0,1)
        std::vector<NumClass> normals;   // hyperplanes met at this t
    };
    std::vector<Event> events;
};

ChamberPath chamber_path(const ChernData& e, const AmpleCone& cone, const WallSet& walls,
                         const NumClass& h_start, const NumClass& h_end, const SurfaceLattice& lat);

// One affine functional delta(z) = xi.z + tau(F) - tau(E) for a wall datum
// instantiated at a specific c2(F).
struct TwistFunctional {
    WallDatum datum;
    Int c2f;
    Rat tau_diff;  // tau(F) - tau(E)

    Rat eval(const NumClass& z, const SurfaceLattice& lat) const {
        return lat.pair(datum.xi, z) + tau_diff;
    }
};

// Stratification of the twist line z(s) = (1-s) z_start + s z_end at the wall
// point A: alternating chambers M_0, walls L_0, ..., L_l, M_{l+1}.
struct TwistStratification {
    NumClass wall_point;  // A
    NumClass z_start, z_end;
    std::vector<TwistFunctional> functionals;  // all with xi.A = 0
    std::vector<Rat> crossings;                // strictly increasing s in (0,1)
    std::vector<NumClass> wall_reps;           // L_i = z(s_i)
    std::vector<NumClass> chamber_reps;        // M_i = z(midpoint of the i-th interval)

    NumClass at(const Rat& s) const { return z_start * (1 - s) + z_end * s; }
};

TwistStratification twist_strata(const ChernData& e, const WallSet& walls, const NumClass& a,
                                 const NumClass& z_start, const NumClass& z_end,
                                 const SurfaceLattice& lat);

// Effective threshold for replacing the polarization H by the twist n H at the
// wall point A: for every n >= n_min all twist functionals have the sign of
// xi.H at n H.
Int lemma36_threshold(const ChernData& e, const WallSet& walls, const NumClass& a,
                      const NumClass& h, const SurfaceLattice& lat);

// The flip diagram attached to one crossed wall.
struct FlipSequence {
    NumClass wall_normal;
    NumClass wall_point;          // generic rational A on the wall
    Int threshold_min;            // max of the two computed lemma-3.6 minima
    Int threshold;                // the value actually used (one above the minimum)
    TwistStratification strata;
    // per wall rep L_i: transformed Chern data when the rep is integral
    std::vector<std::optional<ChernData>> integral_annotations;
    // stratum containing the zero twist: even index 2i = chamber M_i, odd 2i+1 = wall L_i
    int origin_stratum;
};

struct FlipReport {
    std::string note;  // "same cell" when no wall is crossed
    std::vector<FlipSequence> sequences;
};

FlipReport flip_sequence(const ChernData& e, const AmpleCone& cone, const NumClass& h,
                         const NumClass& h_prime, const SurfaceLattice& lat, std::uint64_t seed = 0,
                         int max_depth = kDefaultMaxDepth);

// Generic rational point on wall `normal` inside the cone; genericity (xi.A = 0
// exactly for the data of this wall) is verified against the wall set, with up
// to 10 re-draws.
NumClass generic_wall_point(const NumClass& normal, const AmpleCone& cone, const WallSet& walls,
                            const SurfaceLattice& lat, std::uint64_t seed);

}  // namespace wallflip
