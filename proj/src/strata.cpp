#include "wallflip/strata.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace wallflip {

namespace {

std::string class_str(const NumClass& x) {
    std::string s = "(";
    for (std::size_t i = 0; i < x.dim(); ++i) s += (i ? "," : "") + rat_str(x.coords[i]);
    return s + ")";
}

// Closed-cone membership: barycentric solve for simplicial cones, nonnegative
// pairing with every generator otherwise.  Boundary points are allowed; being
// off every wall hyperplane is the meaningful precondition and is checked
// separately.
bool inside_cone(const NumClass& h, const AmpleCone& cone, const SurfaceLattice& lat) {
    const std::size_t n = lat.rank();
    if (h.is_zero()) return false;
    if (cone.generators.size() == n) {
        // solve sum_j t_j g_j = h exactly
        std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n + 1));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) m[i][j] = cone.generators[j].coords[i];
            m[i][n] = h.coords[i];
        }
        for (std::size_t k = 0; k < n; ++k) {
            std::size_t piv = k;
            while (piv < n && m[piv][k] == 0) ++piv;
            if (piv == n) return false;  // generators degenerate; fall through as outside
            std::swap(m[k], m[piv]);
            for (std::size_t i = 0; i < n; ++i) {
                if (i == k || m[i][k] == 0) continue;
                Rat f = m[i][k] / m[k][k];
                for (std::size_t j = k; j <= n; ++j) m[i][j] -= f * m[k][j];
            }
        }
        for (std::size_t k = 0; k < n; ++k)
            if (m[k][n] / m[k][k] < 0) return false;
        return true;
    }
    for (const auto& g : cone.generators)
        if (lat.pair(h, g) < 0) return false;
    return true;
}

std::vector<TwistFunctional> collect_functionals(const ChernData& e, const WallSet& walls,
                                                 const NumClass& a, const SurfaceLattice& lat) {
    Rat tau_e = tau(e, lat);
    std::vector<TwistFunctional> fs;
    for (const auto& hp : walls.hyperplanes) {
        for (const auto& d : hp.data) {
            if (lat.pair(d.xi, a) != 0) continue;
            for (Int c2f = d.c2f_lo; c2f <= d.c2f_hi; ++c2f) {
                ChernData f(d.r_f, d.c1_f, Rat(c2f));
                fs.push_back({d, c2f, tau(f, lat) - tau_e});
            }
        }
    }
    return fs;
}

int sign_of(const Rat& v) { return v < 0 ? -1 : (v > 0 ? 1 : 0); }

}  // namespace

ChamberPath chamber_path(const ChernData& e, const AmpleCone& cone, const WallSet& walls,
                         const NumClass& h_start, const NumClass& h_end,
                         const SurfaceLattice& lat) {
    (void)e;
    if (!inside_cone(h_start, cone, lat) || !inside_cone(h_end, cone, lat))
        throw Error("endpoint_outside_cone", "path endpoints must lie in the cone");
    std::map<Rat, std::vector<NumClass>> by_t;
    for (const auto& hp : walls.hyperplanes) {
        Rat vs = lat.pair(hp.normal, h_start);
        Rat ve = lat.pair(hp.normal, h_end);
        if (vs == 0 && ve == 0)
            throw Error("segment_in_wall", "segment lies in wall " + class_str(hp.normal));
        if (vs == 0 || ve == 0)
            throw Error("endpoint_on_wall", "path endpoint lies on wall " + class_str(hp.normal));
        if ((vs > 0) == (ve > 0)) continue;
        Rat t = vs / (vs - ve);
        by_t[t].push_back(hp.normal);
    }
    ChamberPath path;
    path.start = h_start;
    path.end = h_end;
    for (auto& [t, normals] : by_t) path.events.push_back({t, std::move(normals)});
    return path;
}

TwistStratification twist_strata(const ChernData& e, const WallSet& walls, const NumClass& a,
                                 const NumClass& z_start, const NumClass& z_end,
                                 const SurfaceLattice& lat) {
    if (lat.square(a) <= 0)
        throw Error("nonpositive_square", "wall point must have positive square");
    if (z_start == z_end) throw Error("degenerate_line", "twist line endpoints coincide");
    TwistStratification st;
    st.wall_point = a;
    st.z_start = z_start;
    st.z_end = z_end;
    st.functionals = collect_functionals(e, walls, a, lat);

    NumClass dir = z_end - z_start;
    std::set<Rat> cross;
    for (const auto& f : st.functionals) {
        Rat v0 = f.eval(z_start, lat);
        Rat slope = lat.pair(f.datum.xi, dir);
        if (slope == 0) {
            if (v0 == 0)
                throw Error("line_in_stratum_wall", "twist line lies in a stratum wall");
            continue;
        }
        Rat s = -v0 / slope;
        if (s == 0 || s == 1)
            throw Error("endpoint_on_stratum_wall", "twist line endpoint lies on a stratum wall");
        if (s > 0 && s < 1) cross.insert(s);
    }
    st.crossings.assign(cross.begin(), cross.end());
    for (const auto& s : st.crossings) st.wall_reps.push_back(st.at(s));
    Rat prev = 0;
    for (std::size_t i = 0; i <= st.crossings.size(); ++i) {
        Rat next = i < st.crossings.size() ? st.crossings[i] : Rat(1);
        st.chamber_reps.push_back(st.at((prev + next) / 2));
        prev = next;
    }
    return st;
}

Int lemma36_threshold(const ChernData& e, const WallSet& walls, const NumClass& a,
                      const NumClass& h, const SurfaceLattice& lat) {
    if (lat.square(a) <= 0)
        throw Error("nonpositive_square", "wall point must have positive square");
    for (const auto& hp : walls.hyperplanes)
        if (lat.pair(hp.normal, h) == 0)
            throw Error("endpoint_on_wall", "polarization lies on wall " + class_str(hp.normal));
    Int best = 0;
    for (const auto& f : collect_functionals(e, walls, a, lat)) {
        Rat xh = lat.pair(f.datum.xi, h);
        if (xh == 0) continue;  // cannot happen for H off all walls
        Int n = ceil_rat(rat_abs(f.tau_diff) / rat_abs(xh));
        if (n > best) best = n;
    }
    return best + 1;
}

NumClass generic_wall_point(const NumClass& normal, const AmpleCone& cone, const WallSet& walls,
                            const SurfaceLattice& lat, std::uint64_t seed) {
    // rational spanning set of wall `normal` intersected with the cone
    std::vector<NumClass> span;
    const auto& gens = cone.generators;
    for (const auto& g : gens)
        if (lat.pair(normal, g) == 0) span.push_back(g);
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            Rat vi = lat.pair(normal, gens[i]);
            Rat vj = lat.pair(normal, gens[j]);
            if ((vi > 0 && vj < 0) || (vi < 0 && vj > 0))
                span.push_back(gens[j] * vi - gens[i] * vj);
        }
    if (span.empty()) throw Error("wall_misses_cone", "wall does not meet the cone");
    for (auto& p : span)
        if (lat.pair(normal, p) < 0) p = -p;  // orientation irrelevant; keep deterministic

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> weight(1, (1u << 16) - 1);
    for (int attempt = 0; attempt < 10; ++attempt) {
        NumClass a = NumClass::zero(lat.rank());
        for (const auto& p : span) a = a + p * Rat(Int(weight(rng)));
        if (lat.square(a) <= 0) continue;
        bool generic = true;
        for (const auto& hp : walls.hyperplanes) {
            bool on_this = hp.normal == normal;
            if ((lat.pair(hp.normal, a) == 0) != on_this) {
                generic = false;
                break;
            }
        }
        if (generic) return a;
    }
    throw Error("genericity", "no generic wall point found after 10 draws");
}

FlipReport flip_sequence(const ChernData& e, const AmpleCone& cone, const NumClass& h,
                         const NumClass& h_prime, const SurfaceLattice& lat, std::uint64_t seed,
                         int max_depth) {
    WallSet walls = enumerate_walls(e, cone, lat, max_depth);
    ChamberPath path = chamber_path(e, cone, walls, h, h_prime, lat);
    FlipReport report;
    if (path.events.empty()) {
        report.note = "same cell";
        return report;
    }
    for (const auto& event : path.events) {
        for (const auto& normal : event.normals) {
            FlipSequence seq;
            seq.wall_normal = normal;
            seq.wall_point = generic_wall_point(normal, cone, walls, lat, seed);
            Int n1 = lemma36_threshold(e, walls, seq.wall_point, h, lat);
            Int n2 = lemma36_threshold(e, walls, seq.wall_point, h_prime, lat);
            seq.threshold_min = n1 > n2 ? n1 : n2;
            seq.threshold = seq.threshold_min + 1;  // strict margin on both sides
            seq.strata = twist_strata(e, walls, seq.wall_point, h * Rat(seq.threshold),
                                      h_prime * Rat(seq.threshold), lat);
            for (const auto& rep : seq.strata.wall_reps) {
                if (rep.integral())
                    seq.integral_annotations.emplace_back(integral_twist_transform(e, rep, lat));
                else
                    seq.integral_annotations.emplace_back(std::nullopt);
            }
            // locate the zero twist among the strata by its functional signs
            NumClass zero = NumClass::zero(lat.rank());
            auto signs_at = [&](const NumClass& z) {
                std::vector<int> s;
                for (const auto& f : seq.strata.functionals) s.push_back(sign_of(f.eval(z, lat)));
                return s;
            };
            auto s0 = signs_at(zero);
            seq.origin_stratum = -1;
            const auto& st = seq.strata;
            for (std::size_t i = 0; i < st.chamber_reps.size(); ++i) {
                if (signs_at(st.chamber_reps[i]) == s0) {
                    seq.origin_stratum = static_cast<int>(2 * i);
                    break;
                }
                if (i < st.wall_reps.size() && signs_at(st.wall_reps[i]) == s0) {
                    seq.origin_stratum = static_cast<int>(2 * i + 1);
                    break;
                }
            }
            report.sequences.push_back(std::move(seq));
        }
    }
    return report;
}

}  // namespace wallflip
