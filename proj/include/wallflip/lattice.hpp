#pragma once

#include <cstddef>
#include <vector>

#include "wallflip/rational.hpp"

namespace wallflip {

// A rational divisor class in coordinates of a fixed lattice basis.
struct NumClass {
    std::vector<Rat> coords;

    NumClass() = default;
    explicit NumClass(std::vector<Rat> c) : coords(std::move(c)) {}
    static NumClass zero(std::size_t n) { return NumClass(std::vector<Rat>(n, Rat(0))); }

    std::size_t dim() const { return coords.size(); }
    bool is_zero() const {
        for (const auto& c : coords)
            if (c != 0) return false;
        return true;
    }
    bool integral() const {
        for (const auto& c : coords)
            if (!is_integral(c)) return false;
        return true;
    }

    NumClass operator+(const NumClass& o) const;
    NumClass operator-(const NumClass& o) const;
    NumClass operator-() const;
    NumClass operator*(const Rat& s) const;

    bool operator==(const NumClass& o) const { return coords == o.coords; }
    bool operator!=(const NumClass& o) const { return coords != o.coords; }
    // Canonical (lexicographic) order on coordinate vectors.
    bool operator<(const NumClass& o) const { return coords < o.coords; }
};

// Witness of a rational congruence S^T Q S = diag(d).
struct DiagonalCongruence {
    std::vector<std::vector<Rat>> basis;  // columns are the new basis vectors
    std::vector<Rat> diag;
    int positives = 0;
    int negatives = 0;
};

// Intersection lattice of a projective surface: integral symmetric pairing of
// signature (1, rho-1), canonical class and chi(O).
class SurfaceLattice {
public:
    SurfaceLattice(std::size_t rank, std::vector<std::vector<Int>> gram, std::vector<Int> canonical,
                   Int chi);

    std::size_t rank() const { return rank_; }
    const std::vector<std::vector<Int>>& gram() const { return gram_; }
    const NumClass& canonical() const { return canonical_; }
    const Int& chi() const { return chi_; }

    Rat pair(const NumClass& x, const NumClass& y) const;
    Rat square(const NumClass& x) const { return pair(x, x); }
    Rat k_dot(const NumClass& x) const { return pair(canonical_, x); }

    // Accepts iff the gram matrix is symmetric, nondegenerate and of signature
    // (1, rho-1); returns the diagonalizing congruence used as evidence.
    DiagonalCongruence validate() const;

private:
    std::size_t rank_;
    std::vector<std::vector<Int>> gram_;
    NumClass canonical_;
    Int chi_;
};

// Positive definite form q(x) = 2(x.H0)^2/H0^2 - x^2 attached to a class of
// positive square; it dominates -x^2 on the orthogonal complement of H0.
struct MajorantForm {
    NumClass base_point;
    std::vector<std::vector<Rat>> gram_q;

    Rat eval(const NumClass& x) const;
};

MajorantForm majorant(const SurfaceLattice& lat, const NumClass& h0);

// All x in shift + Z^rho with q(x) <= bound, lexicographically sorted.
// `denom` names the refinement of the ambient lattice: shift must have
// denominators dividing denom, so the output lives in (1/denom) Z^rho.
std::vector<NumClass> enumerate_ellipsoid(const MajorantForm& q, const NumClass& shift, const Int& denom,
                                          const Rat& bound);

// Fincke-Pohst on an arbitrary positive definite rational form: integral
// offsets z with (shift+z)^T G (shift+z) <= bound, emitted as shift+z.
std::vector<NumClass> fincke_pohst(const std::vector<std::vector<Rat>>& gram, const NumClass& shift,
                                   const Rat& bound);

}  // namespace wallflip
