#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "wallflip/walls.hpp"

namespace wallflip::testing {

inline SurfaceLattice quadric() { return SurfaceLattice(2, {{0, 1}, {1, 0}}, {-2, -2}, 1); }

inline SurfaceLattice product_ee() {
    return SurfaceLattice(3, {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}, {0, 0, 0}, 0);
}

inline SurfaceLattice diag622() {
    return SurfaceLattice(3, {{6, 0, 0}, {0, -2, 0}, {0, 0, -2}}, {0, 0, 0}, 0);
}

inline NumClass nc(std::vector<Rat> v) { return NumClass(std::move(v)); }

// Exact inverse by Gauss-Jordan; throws on singular input.
inline std::vector<std::vector<Rat>> rational_inverse(std::vector<std::vector<Rat>> m) {
    const std::size_t n = m.size();
    std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m[piv][k] == 0) ++piv;
        if (piv == n) throw Error("singular", "matrix not invertible");
        std::swap(m[k], m[piv]);
        std::swap(inv[k], inv[piv]);
        Rat d = m[k][k];
        for (std::size_t j = 0; j < n; ++j) {
            m[k][j] /= d;
            inv[k][j] /= d;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || m[i][k] == 0) continue;
            Rat f = m[i][k];
            for (std::size_t j = 0; j < n; ++j) {
                m[i][j] -= f * m[k][j];
                inv[i][j] -= f * inv[k][j];
            }
        }
    }
    return inv;
}

// Exhaustive oracle for ellipsoid enumeration: all shift + z (z integral) with
// x^T G x <= bound, found by scanning the exact bounding box x_i^2 <= B*inv_ii.
inline std::vector<NumClass> box_scan(const std::vector<std::vector<Rat>>& gram,
                                      const NumClass& shift, const Rat& bound) {
    const std::size_t n = gram.size();
    std::vector<NumClass> out;
    if (bound < 0) return out;
    auto inv = rational_inverse(gram);
    std::vector<Int> lo(n), hi(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rat t = bound * inv[i][i];
        lo[i] = ceil_sub_sqrt(-shift.coords[i], t);
        hi[i] = floor_add_sqrt(-shift.coords[i], t);
    }
    std::vector<Rat> x(n);
    auto eval = [&]() {
        Rat acc = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) acc += x[i] * gram[i][j] * x[j];
        return acc;
    };
    std::vector<Int> z(n);
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == n) {
            if (eval() <= bound) out.emplace_back(x);
            return;
        }
        for (z[k] = lo[k]; z[k] <= hi[k]; ++z[k]) {
            x[k] = shift.coords[k] + Rat(z[k]);
            self(self, k + 1);
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

// Classical rank-2 wall normals on a rank-2 lattice by brute force:
// xi = c1 mod 2, c1^2 - 4 c2 <= xi^2 < 0, sign change over the cone.
inline std::vector<NumClass> rank2_wall_oracle(const SurfaceLattice& lat, const NumClass& c1,
                                               const Rat& c2, const AmpleCone& cone, long box) {
    std::vector<NumClass> normals;
    Rat lo_sq = lat.square(c1) - 4 * c2;
    for (long a = -box; a <= box; ++a)
        for (long b = -box; b <= box; ++b) {
            NumClass xi({Rat(a), Rat(b)});
            bool parity_ok = true;
            for (std::size_t i = 0; i < 2; ++i) {
                Rat d = xi.coords[i] - c1.coords[i];
                if (!is_integral(d / 2)) parity_ok = false;
            }
            if (!parity_ok) continue;
            Rat sq = lat.square(xi);
            if (!(sq < 0) || sq < lo_sq) continue;
            if (!sign_spans_cone(xi, cone, lat)) continue;
            NumClass n = primitive_normal(xi);
            if (std::find(normals.begin(), normals.end(), n) == normals.end())
                normals.push_back(n);
        }
    std::sort(normals.begin(), normals.end());
    return normals;
}

inline std::vector<NumClass> wall_normals(const WallSet& ws) {
    std::vector<NumClass> out;
    for (const auto& h : ws.hyperplanes) out.push_back(h.normal);
    std::sort(out.begin(), out.end());
    return out;
}

// Random positive definite integral gram via L L^T with unit-lower-triangular
// L and positive diagonal.
inline std::vector<std::vector<Rat>> random_posdef(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<int> diag(1, 3), off(-2, 2);
    std::vector<std::vector<Rat>> l(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        l[i][i] = diag(rng);
        for (std::size_t j = 0; j < i; ++j) l[i][j] = off(rng);
    }
    std::vector<std::vector<Rat>> g(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) g[i][j] += l[i][k] * l[j][k];
    return g;
}

}  // namespace wallflip::testing
