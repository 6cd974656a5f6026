#include "wallflip/walls.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <set>
#include <sstream>

namespace wallflip {

void AmpleCone::validate(const SurfaceLattice& lat) const {
    if (generators.empty()) throw Error("empty_cone", "cone needs at least one generator");
    for (const auto& g : generators) {
        if (g.dim() != lat.rank())
            throw Error("dimension_mismatch", "generator dimension does not match lattice rank");
        if (g.is_zero()) throw Error("zero_generator", "cone generator must be nonzero");
    }
}

bool AmpleCone::sanity(const SurfaceLattice& lat) const {
    for (std::size_t i = 0; i < generators.size(); ++i)
        for (std::size_t j = i; j < generators.size(); ++j)
            if (lat.pair(generators[i], generators[j]) <= 0) return false;
    return true;
}

bool WallSet::same_hyperplanes(const WallSet& o) const {
    if (hyperplanes.size() != o.hyperplanes.size()) return false;
    for (std::size_t i = 0; i < hyperplanes.size(); ++i)
        if (hyperplanes[i].normal != o.hyperplanes[i].normal) return false;
    return true;
}

Rat case_a_bound(const Int& r, const NumClass& c1, const Rat& c2, const SurfaceLattice& lat) {
    if (r < 2) throw Error("rank_too_small", "no proper subobjects below rank 2");
    // h = min over rF + rG = r of (rF-1)/(2rF) + (rG-1)/(2rG)
    Rat h;
    bool first = true;
    for (Int rf = 1; rf < r; ++rf) {
        Int rg = r - rf;
        Rat v = Rat(rf - 1) / (2 * Rat(rf)) + Rat(rg - 1) / (2 * Rat(rg));
        if (first || v < h) h = v, first = false;
    }
    // the minimized expression for l is constant over splittings
    Rat l = Rat(r - 1) / (2 * Rat(r)) * lat.square(c1);
    return (c2 - l) / (1 - h);
}

bool sign_spans_cone(const NumClass& l, const AmpleCone& cone, const SurfaceLattice& lat) {
    bool has_nonneg = false, has_nonpos = false;
    for (const auto& g : cone.generators) {
        Rat v = lat.pair(l, g);
        if (v >= 0) has_nonneg = true;
        if (v <= 0) has_nonpos = true;
        if (has_nonneg && has_nonpos) return true;
    }
    return false;
}

namespace {

std::string describe_gens(const std::vector<NumClass>& gens) {
    std::ostringstream os;
    for (const auto& g : gens) {
        os << "(";
        for (std::size_t i = 0; i < g.dim(); ++i) os << (i ? "," : "") << rat_str(g.coords[i]);
        os << ")";
    }
    return os.str();
}

void subdivide_rec(std::vector<NumClass> gens, const SurfaceLattice& lat, int depth, int max_depth,
                   std::vector<SubconePiece>& out) {
    if (depth > max_depth)
        throw Error("cone_subdivision",
                    "cone too close to isotropic boundary; offending subcone " +
                        describe_gens(gens));
    NumClass h0 = NumClass::zero(lat.rank());
    for (const auto& g : gens) h0 = h0 + g;
    Rat h0sq = lat.square(h0);

    bool evaluable = h0sq > 0;
    std::vector<NumClass> norm;
    if (evaluable) {
        for (const auto& g : gens) {
            Rat gh = lat.pair(g, h0);
            if (gh <= 0) {
                evaluable = false;
                break;
            }
            norm.push_back(g * (h0sq / gh));
        }
    }
    if (evaluable) {
        Rat csq = 0;
        for (const auto& gh : norm) {
            Rat v = -lat.square(gh - h0);
            if (v > csq) csq = v;
        }
        if (csq < h0sq) {
            SubconePiece piece;
            piece.generators = norm;
            piece.barycenter = h0;
            piece.form = majorant(lat, h0);
            piece.csq = csq;
            piece.h0sq = h0sq;
            out.push_back(std::move(piece));
            return;
        }
    }
    if (gens.size() < 2)
        throw Error("cone_subdivision",
                    "single ray with nonpositive square: " + describe_gens(gens));

    // split the longest simplex edge at its midpoint
    const std::vector<NumClass>& pts = evaluable ? norm : gens;
    std::size_t bi = 0, bj = 1;
    if (evaluable) {
        MajorantForm q = majorant(lat, h0);
        Rat best = -1;
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j = i + 1; j < pts.size(); ++j) {
                Rat len = q.eval(pts[i] - pts[j]);
                if (len > best) best = len, bi = i, bj = j;
            }
    } else {
        // no usable metric near the boundary; widest-angle pair instead
        Rat best_pairing;
        bool first = true;
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j = i + 1; j < pts.size(); ++j) {
                Rat v = lat.pair(pts[i], pts[j]);
                if (first || v < best_pairing) best_pairing = v, bi = i, bj = j, first = false;
            }
    }
    NumClass mid = pts[bi] + pts[bj];
    std::vector<NumClass> left = pts, right = pts;
    left[bi] = mid;
    right[bj] = mid;
    subdivide_rec(std::move(left), lat, depth + 1, max_depth, out);
    subdivide_rec(std::move(right), lat, depth + 1, max_depth, out);
}

}  // namespace

std::vector<SubconePiece> subdivide_cone(const AmpleCone& cone, const SurfaceLattice& lat,
                                         int max_depth) {
    cone.validate(lat);
    std::vector<SubconePiece> out;
    subdivide_rec(cone.generators, lat, 0, max_depth, out);
    return out;
}

namespace {

// Shared harvest: lattice points of the scaled lattice (1/denom) Z^rho in the
// given coset with 0 < -x^2 <= N and a sign change over the cone generators.
std::vector<NumClass> harvest(const SurfaceLattice& lat, const NumClass& shift, const Int& denom,
                              const Rat& n_bound, const AmpleCone& cone, int max_depth) {
    std::vector<NumClass> result;
    if (n_bound <= 0) return result;  // Hodge index forces x = 0 at N = 0
    auto pieces = subdivide_cone(cone, lat, max_depth);
    std::set<std::vector<Rat>> seen;
    for (const auto& piece : pieces) {
        Rat p = n_bound / (1 - piece.csq / piece.h0sq);
        Rat b = piece.csq * p / piece.h0sq + p;
        std::vector<NumClass> cand;
        if (denom == 1) {
            cand = fincke_pohst(piece.form.gram_q, shift, b);
        } else {
            // scale: x = y/denom, q(x) <= b  <=>  q(y) <= b denom^2
            NumClass scaled_shift = shift * Rat(denom);
            std::vector<NumClass> raw =
                fincke_pohst(piece.form.gram_q, scaled_shift, b * Rat(denom * denom));
            for (auto& y : raw) cand.push_back(y * Rat(1, denom));
        }
        for (const auto& x : cand) {
            Rat xsq = lat.square(x);
            if (!(xsq < 0) || -xsq > n_bound) continue;
            if (!sign_spans_cone(x, cone, lat)) continue;
            if (seen.insert(x.coords).second) result.push_back(x);
        }
    }
    std::sort(result.begin(), result.end());
    return result;
}

}  // namespace

std::vector<NumClass> enumerate_orthogonal_classes(const SurfaceLattice& lat, const Int& denom,
                                                   const Rat& n_bound, const AmpleCone& cone,
                                                   int max_depth) {
    if (denom < 1) throw Error("bad_denominator", "denom must be positive");
    return harvest(lat, NumClass::zero(lat.rank()), denom, n_bound, cone, max_depth);
}

std::vector<NumClass> enumerate_orthogonal_coset(const SurfaceLattice& lat, const NumClass& shift,
                                                 const Rat& n_bound, const AmpleCone& cone,
                                                 int max_depth) {
    return harvest(lat, shift, 1, n_bound, cone, max_depth);
}

NumClass primitive_normal(const NumClass& xi) {
    Int lcm = 1;
    for (const auto& c : xi.coords) lcm = boost::multiprecision::lcm(lcm, rat_den(c));
    std::vector<Int> v;
    Int g = 0;
    for (const auto& c : xi.coords) {
        Int n = rat_num(c) * (lcm / rat_den(c));
        v.push_back(n);
        g = boost::multiprecision::gcd(g, n);
    }
    if (g == 0) throw Error("zero_class", "cannot primitivize the zero class");
    int sign = 0;
    for (const auto& n : v)
        if (n != 0) {
            sign = n > 0 ? 1 : -1;
            break;
        }
    std::vector<Rat> out;
    for (const auto& n : v) out.emplace_back(sign > 0 ? Int(n / g) : Int(-n / g));
    return NumClass(std::move(out));
}

namespace {

std::vector<std::pair<NumClass, WallDatum>> walls_for_rank(const ChernData& e, const AmpleCone& cone,
                                                           const SurfaceLattice& lat, const Int& rf,
                                                           const Rat& bound, int max_depth) {
    std::vector<std::pair<NumClass, WallDatum>> out;
    const Int r = e.rank;
    const Int rg = r - rf;
    // coset (-rF/r) c1 + Z^rho, reduced to representatives in [0,1)
    NumClass shift = NumClass::zero(lat.rank());
    for (std::size_t i = 0; i < lat.rank(); ++i) {
        Rat v = -Rat(rf) / Rat(r) * e.c1.coords[i];
        shift.coords[i] = v - Rat(floor_rat(v));
    }
    for (const auto& l : enumerate_orthogonal_coset(lat, shift, bound, cone, max_depth)) {
        NumClass c1f = l + e.c1 * (Rat(rf) / Rat(r));
        if (!c1f.integral()) continue;
        NumClass c1g = e.c1 - c1f;
        Rat bf = Rat(rf - 1) / (2 * Rat(rf)) * lat.square(c1f);
        Rat bg = Rat(rg - 1) / (2 * Rat(rg)) * lat.square(c1g);
        Int lo = ceil_rat(bf);
        Int hi = floor_rat(e.c2 - lat.pair(c1f, c1g) - Rat(ceil_rat(bg)));
        if (lo > hi) continue;
        WallDatum d;
        d.r_f = rf;
        d.c1_f = c1f;
        d.l = l;
        d.xi = l * (Rat(1) / Rat(rf));
        d.c2f_lo = lo;
        d.c2f_hi = hi;
        out.emplace_back(primitive_normal(d.xi), std::move(d));
    }
    return out;
}

}  // namespace

WallSet enumerate_walls(const ChernData& e, const AmpleCone& cone, const SurfaceLattice& lat,
                        int max_depth, int threads) {
    cone.validate(lat);
    WallSet ws;
    if (e.rank < 2) {
        ws.notice = "rank < 2: no proper splittings";
        return ws;
    }
    Rat bound = case_a_bound(e.rank, e.c1, e.c2, lat);
    std::vector<std::pair<NumClass, WallDatum>> flat;
    if (bound > 0) {
        std::vector<Int> ranks;
        for (Int rf = 1; rf < e.rank; ++rf) ranks.push_back(rf);
        if (threads > 1 && ranks.size() > 1) {
            std::vector<std::future<std::vector<std::pair<NumClass, WallDatum>>>> futs;
            for (const auto& rf : ranks)
                futs.push_back(std::async(std::launch::async, walls_for_rank, std::cref(e),
                                          std::cref(cone), std::cref(lat), rf, bound, max_depth));
            for (auto& f : futs)
                for (auto& p : f.get()) flat.push_back(std::move(p));
        } else {
            for (const auto& rf : ranks)
                for (auto& p : walls_for_rank(e, cone, lat, rf, bound, max_depth))
                    flat.push_back(std::move(p));
        }
    }
    std::map<std::vector<Rat>, std::vector<WallDatum>> grouped;
    for (auto& [normal, datum] : flat) grouped[normal.coords].push_back(std::move(datum));
    for (auto& [ncoords, data] : grouped) {
        std::sort(data.begin(), data.end(), [](const WallDatum& a, const WallDatum& b) {
            if (a.r_f != b.r_f) return a.r_f < b.r_f;
            return a.c1_f.coords < b.c1_f.coords;
        });
        ws.hyperplanes.push_back({NumClass(ncoords), std::move(data)});
    }
    return ws;
}

NefHeuristicResult enumerate_walls_nef_heuristic(const ChernData& e,
                                                 const std::vector<NumClass>& nef_generators,
                                                 const SurfaceLattice& lat, int shrink_steps,
                                                 int max_depth) {
    if (nef_generators.empty()) throw Error("empty_cone", "need nef generators");
    NumClass h0 = NumClass::zero(lat.rank());
    for (const auto& g : nef_generators) h0 = h0 + g;

    NefHeuristicResult res;
    res.stabilized = false;
    std::vector<std::optional<WallSet>> steps;
    Rat eps(1, 2);
    for (int k = 1; k <= shrink_steps; ++k, eps /= 2) {
        AmpleCone cone;
        for (const auto& g : nef_generators) cone.generators.push_back(g + h0 * eps);
        try {
            WallSet ws = enumerate_walls(e, cone, lat, max_depth);
            res.step_wall_counts.push_back(ws.hyperplanes.size());
            res.step_errors.emplace_back();
            steps.emplace_back(std::move(ws));
        } catch (const Error& err) {
            res.step_wall_counts.push_back(0);
            res.step_errors.push_back(err.code());
            steps.emplace_back(std::nullopt);
        }
    }
    for (auto it = steps.rbegin(); it != steps.rend(); ++it)
        if (*it) {
            res.walls = **it;
            break;
        }
    if (steps.size() >= 3) {
        auto n = steps.size();
        res.stabilized = steps[n - 1] && steps[n - 2] && steps[n - 3] &&
                         *steps[n - 1] == *steps[n - 2] && *steps[n - 2] == *steps[n - 3];
    }
    return res;
}

}  // namespace wallflip
