#include "wallflip/stability.hpp"

#include <algorithm>

namespace wallflip {

Order compare_reduced(const HilbertPoly& pf, const HilbertPoly& pe) {
    if (pf.a2 != pe.a2)
        throw Error("leading_mismatch", "reduced polynomials have different leading terms");
    if (pf.a1 != pe.a1) return pf.a1 < pe.a1 ? Order::LESS : Order::GREATER;
    if (pf.a0 != pe.a0) return pf.a0 < pe.a0 ? Order::LESS : Order::GREATER;
    return Order::EQUAL;
}

Order compare_slope(const ChernData& f, const ChernData& e, const NumClass& h,
                    const SurfaceLattice& lat) {
    if (lat.square(h) <= 0)
        throw Error("nonpositive_square", "polarization must have positive square");
    Rat d = lat.pair(f.c1, h) / Rat(f.rank) - lat.pair(e.c1, h) / Rat(e.rank);
    if (d < 0) return Order::LESS;
    if (d > 0) return Order::GREATER;
    return Order::EQUAL;
}

namespace {

// Tie-break among maximizing candidates: smallest rank, then lexicographically
// smallest c1 coordinates.
bool witness_preferred(const ChernData& a, const ChernData& b) {
    if (a.rank != b.rank) return a.rank < b.rank;
    return a.c1.coords < b.c1.coords;
}

}  // namespace

Verdict twisted_verdict(const ChernData& e, const std::vector<ChernData>& subdata,
                        const NumClass& twist, const NumClass& a, const SurfaceLattice& lat) {
    HilbertPoly pe = reduced_hilbert(e, twist, a, lat);
    bool saw_equal = false;
    std::optional<ChernData> best;
    std::optional<HilbertPoly> best_poly;
    for (const auto& f : subdata) {
        if (f.rank < 1 || f.rank > e.rank)
            throw Error("bad_rank", "candidate rank out of range (0, rank(E)]");
        HilbertPoly pf = reduced_hilbert(f, twist, a, lat);
        Order ord = compare_reduced(pf, pe);
        if (ord == Order::EQUAL) saw_equal = true;
        if (ord != Order::GREATER) continue;
        if (!best || compare_reduced(pf, *best_poly) == Order::GREATER ||
            (compare_reduced(pf, *best_poly) == Order::EQUAL && witness_preferred(f, *best))) {
            best = f;
            best_poly = pf;
        }
    }
    if (best) return {Stability::UNSTABLE, best};
    if (saw_equal) {
        // witness: an equal-polynomial candidate under the same tie-break
        std::optional<ChernData> w;
        for (const auto& f : subdata)
            if (compare_reduced(reduced_hilbert(f, twist, a, lat), pe) == Order::EQUAL)
                if (!w || witness_preferred(f, *w)) w = f;
        return {Stability::STRICTLY_SEMISTABLE, w};
    }
    return {Stability::STABLE, std::nullopt};
}

Verdict split_bundle_verdict(const std::vector<NumClass>& lines, const NumClass& twist,
                             const NumClass& h, const SurfaceLattice& lat) {
    if (lines.size() < 2) throw Error("too_few_lines", "need at least 2 line bundle summands");
    const std::size_t k = lines.size();
    auto chern_of = [&](const std::vector<std::size_t>& idx) {
        NumClass c1 = NumClass::zero(lat.rank());
        Rat c2 = 0;
        for (std::size_t i = 0; i < idx.size(); ++i) {
            c1 = c1 + lines[idx[i]];
            for (std::size_t j = i + 1; j < idx.size(); ++j)
                c2 += lat.pair(lines[idx[i]], lines[idx[j]]);
        }
        return ChernData(Int(idx.size()), std::move(c1), std::move(c2));
    };
    std::vector<std::size_t> all(k);
    for (std::size_t i = 0; i < k; ++i) all[i] = i;
    ChernData total = chern_of(all);

    std::vector<ChernData> candidates;
    for (std::size_t mask = 1; mask + 1 < (std::size_t(1) << k); ++mask) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < k; ++i)
            if (mask & (std::size_t(1) << i)) idx.push_back(i);
        candidates.push_back(chern_of(idx));
    }
    return twisted_verdict(total, candidates, twist, h, lat);
}

bool classify_at_wall(const ChernData& e, const std::vector<ChernData>& candidates,
                      const NumClass& a, const NumClass& h, const SurfaceLattice& lat) {
    HilbertPoly pe = reduced_hilbert(e, NumClass::zero(lat.rank()), a, lat);
    for (const auto& f : candidates) {
        HilbertPoly pf = reduced_hilbert(f, NumClass::zero(lat.rank()), a, lat);
        if (!(pf == pe)) continue;
        NumClass xi = f.c1 * (Rat(1) / Rat(f.rank)) - e.c1 * (Rat(1) / Rat(e.rank));
        if (lat.pair(xi, h) < 0) return false;
    }
    return true;
}

bool parabolic_difference_check(const ChernData& e, const ChernData& f, const NumClass& h,
                                const NumClass& a_pol, const Int& n, const Rat& weight,
                                const SurfaceLattice& lat) {
    if (n < 1) throw Error("bad_multiple", "multiple n must be positive");
    NumClass zero = NumClass::zero(lat.rank());
    NumClass nh = h * Rat(n);
    auto diff = [](const HilbertPoly& x, const HilbertPoly& y) {
        return HilbertPoly{x.a2 - y.a2, x.a1 - y.a1, x.a0 - y.a0};
    };
    HilbertPoly d0 = diff(reduced_hilbert(e, zero, a_pol, lat), reduced_hilbert(f, zero, a_pol, lat));
    HilbertPoly d1 = diff(reduced_hilbert(e, nh, a_pol, lat), reduced_hilbert(f, nh, a_pol, lat));
    HilbertPoly par{(1 - weight) * d0.a2 + weight * d1.a2, (1 - weight) * d0.a1 + weight * d1.a1,
                    (1 - weight) * d0.a0 + weight * d1.a0};
    NumClass tw = nh * weight;
    HilbertPoly dtw =
        diff(reduced_hilbert(e, tw, a_pol, lat), reduced_hilbert(f, tw, a_pol, lat));
    return par == dtw;
}

}  // namespace wallflip
