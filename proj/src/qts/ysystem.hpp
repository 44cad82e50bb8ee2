#pragma once

#include <optional>

#include "boundary.hpp"
#include "skewword.hpp"

namespace qts {

/// chi_{i,j} = (T_{i+1,j} T_{i-1,j})^-1, stored as the two-atom inverse
/// word T_{i-1,j}^-1 T_{i+1,j}^-1 with network-computed values. Centers
/// have i + j odd.
SkewWord chi(const Boundary& b, LatticePoint center);

/// Certificate of the defining products of two chi's: with
/// A = T_{a+1,ja} T_{a-1,ja} and B likewise for the second center, returns
/// c with A B = q^c B A. The chi relation itself follows by inverting both
/// words.
std::optional<long long> chi_pair_certificate(const Boundary& b, LatticePoint center_a,
                                              LatticePoint center_b);

/// Local commutation: the lower product against the raised one,
/// certificate(T_{k+1,l} T_{k-1,l}, T_{k+s+1,l+1} T_{k+s-1,l+1}) = 2 for
/// s = +1 or -1.
bool verify_chi_commutation(const Boundary& b, int k, int l, int side);

/// Cleared quantum Y-identity at an even center (i,j): the word
/// T_{i-1,j-1}^-1 T_{i+1,j-1}^-1 T_{i-1,j+1}^-1 T_{i+1,j+1}^-1 equals the
/// word obtained from q^2 chi_{i+1,j} (1+chi_{i+1,j})^-1 chi_{i-1,j}
/// (1+chi_{i-1,j})^-1 after rewriting each (1+chi) through the three-term
/// relation at (i+-1, j), so that every atom is a single network value.
bool verify_quantum_y(const Boundary& b, int i, int j);

/// q=1 rational form at the same centers:
/// chi_{i,j-1} chi_{i,j+1} (1 + chi_{i+1,j}) (1 + chi_{i-1,j}) =
/// chi_{i+1,j} chi_{i-1,j}, exact in rationals.
bool verify_classical_y(const Boundary& b, int i, int j);

} // namespace qts
