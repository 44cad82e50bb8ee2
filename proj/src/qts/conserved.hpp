#pragma once

#include "network.hpp"
#include "skewword.hpp"

namespace qts {

enum class ConservedKind { c, d };

/// Two-term conserved combination anchored at a boundary point, where both
/// terms are honest Laurent polynomials:
///   c_{i,j} = T_{i-1,j+1} T_{i,j}^-1 + T_{i,j}^-1 T_{i+1,j-1}
///   d_{i,j} = T_{i-1,j-1} T_{i,j}^-1 + T_{i,j}^-1 T_{i+1,j+1}
/// The off-boundary neighbor is resolved through the network.
Polynomial conserved_value(const Boundary& b, ConservedKind kind, LatticePoint anchor);

/// Same combination as a two-word skew sum (used by the word-calculus
/// cross-check).
SkewSum conserved_words(const Boundary& b, ConservedKind kind, LatticePoint anchor);

/// c instance: value at (m+1, 1) equals value at (m, 0); d instance:
/// value at (m-1, 1) equals value at (m, 0). Anchors must be boundary
/// points (m even on the fundamental staircase).
bool verify_conservation(const Boundary& b, ConservedKind kind, int m);

/// c_m and d_m anchored at height 0 / height 1 boundary points of the
/// fundamental staircase.
Polynomial conserved_c(const Boundary& b, int m);
Polynomial conserved_d(const Boundary& b, int m);

enum class PhiThetaKind { phi, theta };

/// phi^(p)_m = phi^(p-1)_m c_{m+2p-2} - q phi^(p-2)_m, with phi^(-1) = 0,
/// phi^(0) = 1; theta^(p)_m = d_{m+2-2p} theta^(p-1)_m - q^-1 theta^(p-2)_m.
/// Multiplication order exactly as written: the conserved factors do not
/// commute among themselves.
Polynomial phi_theta(const Boundary& b, PhiThetaKind kind, int p, int m);

/// On the fundamental staircase, for the projection of p_above with
/// endpoints at height 1 and length 2n:
///   M(p)_{1,2} T_{i1,1} = phi^(n-1)_{i-j+2}
///   M(p)_{2,1} T_{i1,1} = q^-1 theta^(n-1)_{i+j-2}
bool verify_offdiagonal(const Boundary& b, LatticePoint p_above);

} // namespace qts
