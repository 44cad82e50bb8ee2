#pragma once

#include <utility>
#include <vector>

#include "boundary.hpp"
#include "polynomial.hpp"

namespace qts {

/// 2x2 matrix over a (possibly non-commutative) ring. Products never
/// reorder factors across entries.
template <class Ring>
struct Mat2 {
    Ring e11, e12, e21, e22;

    static Mat2 identity(Ring one) {
        Ring zero{};
        return {one, zero, zero, one};
    }

    friend Mat2 operator*(const Mat2& a, const Mat2& b) {
        return {a.e11 * b.e11 + a.e12 * b.e21, a.e11 * b.e12 + a.e12 * b.e22,
                a.e21 * b.e11 + a.e22 * b.e21, a.e21 * b.e12 + a.e22 * b.e22};
    }

    bool operator==(const Mat2& o) const = default;
};

using Matrix2 = Mat2<Polynomial>;

enum class ChipKind { U, V };

/// Elementary transfer matrix over the quantum torus:
///   U(a,b) = [[1, 0], [q^-1 b^-1, a b^-1]]   (up step)
///   V(a,b) = [[a b^-1, b^-1], [0, 1]]        (down step)
/// Entries as monomials; the Matrix2 form wraps them as polynomials.
struct Chip {
    ChipKind kind;
    LatticePoint a, b;

    /// entry (r, c) in {1,2}x{1,2}; zero entries reported via is_zero
    Monomial entry(int r, int c, bool& is_zero) const;
    Matrix2 matrix() const;
};

Chip chip(ChipKind kind, LatticePoint a, LatticePoint b);

/// Chips along a projection path: V for down steps, U for up steps, face
/// labels chained along the boundary.
std::vector<Chip> path_chips(const Boundary& b, const ProjectionPath& p);

/// Ordered product of the path's chips; the identity for the empty path.
Matrix2 weight_matrix(const Boundary& b, const ProjectionPath& p);

/// T_{i,j} = M(p)_{1,1} T_{i1,j1} for a point on or above the boundary.
Polynomial solve_above(const Boundary& b, LatticePoint p);

/// The reflected point (k,l) under the boundary and its value
/// M(p)_{2,2} T_{i1,j1}, where p is the projection of p_above.
std::pair<LatticePoint, Polynomial> solve_below(const Boundary& b, LatticePoint p_above);

/// Value of T at any resolvable point: solve_above when on/above the
/// boundary, otherwise the below-boundary value through the reflected
/// construction.
Polynomial solve_at(const Boundary& b, LatticePoint p);

/// One monomial per connector path from entry to exit through the chip
/// concatenation, weights multiplied in traversal order. Lexicographic in
/// the intermediate connector sequence.
std::vector<Monomial> enumerate_paths(const Boundary& b, const ProjectionPath& p,
                                      int entry, int exit);

/// Number of connector paths, from the 0/1 indicator product.
long long count_paths(const ProjectionPath& p, int entry, int exit);

/// Checks V^(a-1) U^(a) = U^(a-1) V^(a) across the mutation at a local
/// minimum a, with the mutated variable expressed over the original
/// cluster. The (2,2) entry is compared in cleared form (right-multiplied
/// by the mutated variable), since that variable has no inverse in the
/// Laurent ring.
bool verify_chip_exchange(const Boundary& b, int a);

/// q T_{i,j+1} T_{i,j-1} - T_{i+1,j} T_{i-1,j} - 1 == 0 at the given
/// center (i + j odd), values resolved above or below the boundary.
bool verify_tsys_point(const Boundary& b, LatticePoint center);

/// Exact rational value at q=1 by the classical recursion, from the
/// boundary's value assignment.
Rational classical_value(const Boundary& b, LatticePoint p);

} // namespace qts
