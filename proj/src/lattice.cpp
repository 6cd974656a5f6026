#include "wallflip/lattice.hpp"

#include <algorithm>

namespace wallflip {

NumClass NumClass::operator+(const NumClass& o) const {
    if (dim() != o.dim()) throw Error("dimension_mismatch", "class dimensions differ");
    NumClass r = *this;
    for (std::size_t i = 0; i < dim(); ++i) r.coords[i] += o.coords[i];
    return r;
}

NumClass NumClass::operator-(const NumClass& o) const {
    if (dim() != o.dim()) throw Error("dimension_mismatch", "class dimensions differ");
    NumClass r = *this;
    for (std::size_t i = 0; i < dim(); ++i) r.coords[i] -= o.coords[i];
    return r;
}

NumClass NumClass::operator-() const {
    NumClass r = *this;
    for (auto& c : r.coords) c = -c;
    return r;
}

NumClass NumClass::operator*(const Rat& s) const {
    NumClass r = *this;
    for (auto& c : r.coords) c *= s;
    return r;
}

SurfaceLattice::SurfaceLattice(std::size_t rank, std::vector<std::vector<Int>> gram,
                               std::vector<Int> canonical, Int chi)
    : rank_(rank), gram_(std::move(gram)), chi_(std::move(chi)) {
    if (rank_ == 0) throw Error("bad_rank", "lattice rank must be positive");
    if (gram_.size() != rank_) throw Error("dimension_mismatch", "gram matrix row count != rank");
    for (const auto& row : gram_)
        if (row.size() != rank_) throw Error("dimension_mismatch", "gram matrix is not square");
    if (canonical.size() != rank_)
        throw Error("dimension_mismatch", "canonical class length != rank");
    std::vector<Rat> k(rank_);
    for (std::size_t i = 0; i < rank_; ++i) k[i] = Rat(canonical[i]);
    canonical_ = NumClass(std::move(k));
}

Rat SurfaceLattice::pair(const NumClass& x, const NumClass& y) const {
    if (x.dim() != rank_ || y.dim() != rank_)
        throw Error("dimension_mismatch", "class dimension does not match lattice rank");
    Rat acc = 0;
    for (std::size_t i = 0; i < rank_; ++i) {
        if (x.coords[i] == 0) continue;
        Rat row = 0;
        for (std::size_t j = 0; j < rank_; ++j) row += Rat(gram_[i][j]) * y.coords[j];
        acc += x.coords[i] * row;
    }
    return acc;
}

DiagonalCongruence SurfaceLattice::validate() const {
    const std::size_t n = rank_;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (gram_[i][j] != gram_[j][i])
                throw Error("not_symmetric", "gram matrix is not symmetric");

    // Symmetric Gaussian congruence reduction over the rationals.  A zero
    // pivot with a nonzero off-diagonal entry is repaired by adding the
    // corresponding basis vector (x^2 = 0 = y^2, x.y != 0 gives (x+y)^2 != 0).
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
    std::vector<std::vector<Rat>> s(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        s[i][i] = 1;
        for (std::size_t j = 0; j < n; ++j) m[i][j] = Rat(gram_[i][j]);
    }
    auto add_col = [&](std::size_t dst, std::size_t src, const Rat& f) {
        // basis[dst] += f * basis[src]; update form rows/cols accordingly
        for (std::size_t i = 0; i < n; ++i) s[i][dst] += f * s[i][src];
        for (std::size_t i = 0; i < n; ++i) m[i][dst] += f * m[i][src];
        for (std::size_t j = 0; j < n; ++j) m[dst][j] += f * m[src][j];
    };
    for (std::size_t k = 0; k < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t j = k + 1;
            for (; j < n; ++j)
                if (m[j][j] != 0) break;
            if (j < n) {
                std::swap(m[k], m[j]);
                for (std::size_t i = 0; i < n; ++i) {
                    std::swap(m[i][k], m[i][j]);
                    std::swap(s[i][k], s[i][j]);
                }
            } else {
                for (j = k + 1; j < n; ++j)
                    if (m[k][j] != 0) break;
                if (j == n) throw Error("degenerate", "gram matrix is degenerate");
                add_col(k, j, Rat(1));
            }
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m[i][k] == 0) continue;
            add_col(i, k, -m[i][k] / m[k][k]);
        }
    }

    DiagonalCongruence w;
    w.basis = s;
    w.diag.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        w.diag[i] = m[i][i];
        if (m[i][i] > 0)
            ++w.positives;
        else if (m[i][i] < 0)
            ++w.negatives;
        else
            throw Error("degenerate", "gram matrix is degenerate");
    }
    if (w.positives != 1 || w.negatives != static_cast<int>(n) - 1)
        throw Error("bad_signature", "signature (" + std::to_string(w.positives) + "," +
                                         std::to_string(w.negatives) + "), expected (1," +
                                         std::to_string(n - 1) + ")");
    return w;
}

Rat MajorantForm::eval(const NumClass& x) const {
    const std::size_t n = gram_q.size();
    if (x.dim() != n) throw Error("dimension_mismatch", "class dimension != form dimension");
    Rat acc = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (x.coords[i] == 0) continue;
        Rat row = 0;
        for (std::size_t j = 0; j < n; ++j) row += gram_q[i][j] * x.coords[j];
        acc += x.coords[i] * row;
    }
    return acc;
}

MajorantForm majorant(const SurfaceLattice& lat, const NumClass& h0) {
    Rat h0sq = lat.square(h0);
    if (h0sq <= 0) throw Error("nonpositive_square", "majorant base point must have positive square");
    const std::size_t n = lat.rank();
    // q = (2/H0^2) (Q h0)(Q h0)^T - Q
    std::vector<Rat> qh(n, Rat(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) qh[i] += Rat(lat.gram()[i][j]) * h0.coords[j];
    MajorantForm f;
    f.base_point = h0;
    f.gram_q.assign(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            f.gram_q[i][j] = Rat(2) * qh[i] * qh[j] / h0sq - Rat(lat.gram()[i][j]);
    return f;
}

std::vector<NumClass> fincke_pohst(const std::vector<std::vector<Rat>>& gram, const NumClass& shift,
                                   const Rat& bound) {
    const std::size_t n = gram.size();
    if (shift.dim() != n) throw Error("dimension_mismatch", "shift dimension != form dimension");
    std::vector<NumClass> out;
    if (bound < 0) return out;

    // Rational LDL^T: q(x) = sum_k d_k (x_k + sum_{j>k} u_kj x_j)^2.
    std::vector<std::vector<Rat>> a = gram;
    std::vector<Rat> d(n);
    std::vector<std::vector<Rat>> u(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t k = 0; k < n; ++k) {
        d[k] = a[k][k];
        if (d[k] <= 0) throw Error("not_positive_definite", "form is not positive definite");
        for (std::size_t j = k + 1; j < n; ++j) u[k][j] = a[k][j] / d[k];
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] -= a[i][k] * a[k][j] / d[k];
    }

    std::vector<Rat> x(n);  // coordinates shift + z, fixed from the top index down
    auto recurse = [&](auto&& self, std::size_t level, const Rat& rem) -> void {
        if (level == 0 && n == 0) return;
        std::size_t k = level - 1;
        Rat w = 0;
        for (std::size_t j = k + 1; j < n; ++j) w += u[k][j] * x[j];
        Rat t = rem / d[k];
        Rat center = -(shift.coords[k] + w);  // z with (z - center)^2 <= t
        Int zlo = ceil_sub_sqrt(center, t);
        Int zhi = floor_add_sqrt(center, t);
        for (Int z = zlo; z <= zhi; ++z) {
            x[k] = shift.coords[k] + Rat(z);
            Rat term = d[k] * (x[k] + w) * (x[k] + w);
            if (term > rem) continue;  // guards rounding at the exact boundary
            if (k == 0)
                out.emplace_back(x);
            else
                self(self, k, rem - term);
        }
    };
    if (n > 0) recurse(recurse, n, bound);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<NumClass> enumerate_ellipsoid(const MajorantForm& q, const NumClass& shift, const Int& denom,
                                          const Rat& bound) {
    if (bound < 0) throw Error("negative_bound", "ellipsoid bound must be nonnegative");
    if (denom <= 0) throw Error("bad_denominator", "denom must be positive");
    for (const auto& c : shift.coords)
        if (!is_integral(c * Rat(denom)))
            throw Error("bad_shift", "shift denominators must divide denom");
    return fincke_pohst(q.gram_q, shift, bound);
}

}  // namespace wallflip
