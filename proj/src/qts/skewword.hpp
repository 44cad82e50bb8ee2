#pragma once

#include <vector>

#include "polynomial.hpp"

namespace qts {

/// One factor of a localized word: a network value T at a point, or its
/// formal inverse. The inverse of a composite value is never materialized;
/// it only cancels against the matching direct atom.
struct Atom {
    LatticePoint point;
    int sign = 1; // +1 or -1
    Polynomial value;

    bool same_slot(const Atom& o) const { return point == o.point; }
};

/// Scalar q-power times an ordered product of atoms. Multiplication
/// concatenates; no implicit reordering.
struct SkewWord {
    long long qpow = 0;
    std::vector<Atom> atoms;

    static SkewWord one() { return {}; }
    static SkewWord atom(LatticePoint p, int sign, Polynomial value);

    SkewWord& operator*=(const SkewWord& o);
    friend SkewWord operator*(SkewWord a, const SkewWord& b) { return a *= b; }

    SkewWord inverted() const; // reverse, flip signs, negate qpow
};

/// Integer-combination of skew words.
struct SkewSum {
    std::vector<std::pair<BigInt, SkewWord>> terms;

    static SkewSum of(SkewWord w, BigInt c = BigInt(1));
    SkewSum& add(SkewWord w, BigInt c = BigInt(1));
    friend SkewSum operator+(SkewSum a, const SkewSum& b);
    friend SkewSum operator*(const SkewSum& a, const SkewSum& b);
};

/// Fixed point of: cancel adjacent inverse pairs, then sort atoms into
/// column-ascending order using only certificate-backed swaps (same-column
/// atoms are never reordered). Fails with UncertifiedSwap when a required
/// cross-column swap has no certificate.
SkewWord word_normalize(SkewWord w);

bool word_equals(const SkewWord& a, const SkewWord& b);
bool word_equals(const SkewSum& a, const SkewSum& b);

/// q = 1 evaluation; inverse atoms evaluate as rational inverses.
Rational word_eval_q1(const SkewWord& w, const ValueMap& values);
Rational word_eval_q1(const SkewSum& s, const ValueMap& values);

/// Expands a word into a Polynomial when every inverse atom carries a
/// monomial value; NonInvertible otherwise.
Polynomial word_expand(const SkewWord& w);
Polynomial word_expand(const SkewSum& s);

} // namespace qts
