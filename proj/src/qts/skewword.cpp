#include "skewword.hpp"

#include <map>

namespace qts {

SkewWord SkewWord::atom(LatticePoint p, int sign, Polynomial value) {
    if (sign != 1 && sign != -1)
        fail(Errc::bad_argument, "skew atom: sign must be +1 or -1");
    if (value.is_zero())
        fail(Errc::bad_argument, "skew atom: zero value at " + point_text(p));
    SkewWord w;
    w.atoms.push_back(Atom{p, sign, std::move(value)});
    return w;
}

SkewWord& SkewWord::operator*=(const SkewWord& o) {
    qpow += o.qpow;
    atoms.insert(atoms.end(), o.atoms.begin(), o.atoms.end());
    return *this;
}

SkewWord SkewWord::inverted() const {
    SkewWord r;
    r.qpow = -qpow;
    for (auto it = atoms.rbegin(); it != atoms.rend(); ++it)
        r.atoms.push_back(Atom{it->point, -it->sign, it->value});
    return r;
}

SkewSum SkewSum::of(SkewWord w, BigInt c) {
    SkewSum s;
    s.add(std::move(w), std::move(c));
    return s;
}

SkewSum& SkewSum::add(SkewWord w, BigInt c) {
    if (c != 0)
        terms.emplace_back(std::move(c), std::move(w));
    return *this;
}

SkewSum operator+(SkewSum a, const SkewSum& b) {
    for (const auto& [c, w] : b.terms)
        a.add(w, c);
    return a;
}

SkewSum operator*(const SkewSum& a, const SkewSum& b) {
    SkewSum r;
    for (const auto& [ca, wa] : a.terms)
        for (const auto& [cb, wb] : b.terms)
            r.add(wa * wb, ca * cb);
    return r;
}

namespace {

/// Removes adjacent T_P^{-1} T_P and T_P T_P^{-1}; returns true if anything
/// was cancelled.
bool cancel_adjacent(SkewWord& w) {
    bool changed = false;
    for (std::size_t k = 0; k + 1 < w.atoms.size();) {
        if (w.atoms[k].same_slot(w.atoms[k + 1]) &&
            w.atoms[k].sign == -w.atoms[k + 1].sign) {
            w.atoms.erase(w.atoms.begin() + k, w.atoms.begin() + k + 2);
            changed = true;
            if (k > 0)
                --k;
        } else {
            ++k;
        }
    }
    return changed;
}

/// One bubble pass toward column-ascending order; swaps only distinct
/// columns, with exponents certified on the atom values.
bool sort_pass(SkewWord& w) {
    bool changed = false;
    for (std::size_t k = 0; k + 1 < w.atoms.size(); ++k) {
        Atom& x = w.atoms[k];
        Atom& y = w.atoms[k + 1];
        if (x.point.i <= y.point.i)
            continue;
        auto cert = commutation_certificate(x.value, y.value);
        if (!cert)
            fail(Errc::uncertified_swap,
                 "word_normalize: no certificate for swapping " + point_text(x.point) +
                     " past " + point_text(y.point));
        w.qpow += *cert * x.sign * y.sign;
        std::swap(x, y);
        changed = true;
    }
    return changed;
}

} // namespace

SkewWord word_normalize(SkewWord w) {
    bool changed = true;
    while (changed) {
        changed = cancel_adjacent(w);
        changed = sort_pass(w) || changed;
    }
    return w;
}

namespace {

using WordKey = std::vector<std::pair<LatticePoint, int>>;

WordKey key_of(const SkewWord& w) {
    WordKey k;
    k.reserve(w.atoms.size());
    for (const Atom& a : w.atoms)
        k.emplace_back(a.point, a.sign);
    return k;
}

std::map<WordKey, QCoeff> canonical_map(const SkewSum& s) {
    std::map<WordKey, QCoeff> m;
    for (const auto& [c, w] : s.terms) {
        SkewWord n = word_normalize(w);
        auto& slot = m[key_of(n)];
        slot += QCoeff::q_power(n.qpow, c);
        if (slot.is_zero())
            m.erase(key_of(n));
    }
    return m;
}

} // namespace

bool word_equals(const SkewWord& a, const SkewWord& b) {
    SkewWord na = word_normalize(a);
    SkewWord nb = word_normalize(b);
    if (na.qpow == nb.qpow && key_of(na) == key_of(nb))
        return true;
    // formal normal forms differ; fall back to expansion when the words
    // are honest Laurent polynomials
    try {
        return word_expand(na) == word_expand(nb);
    } catch (const Error& e) {
        if (e.code() == Errc::non_invertible)
            return false;
        throw;
    }
}

bool word_equals(const SkewSum& a, const SkewSum& b) {
    if (canonical_map(a) == canonical_map(b))
        return true;
    try {
        return word_expand(a) == word_expand(b);
    } catch (const Error& e) {
        if (e.code() == Errc::non_invertible)
            return false;
        throw;
    }
}

Rational word_eval_q1(const SkewWord& w, const ValueMap& values) {
    Rational r(1);
    for (const Atom& a : w.atoms) {
        Rational v = a.value.eval_q1(values);
        if (v == 0)
            fail(Errc::bad_argument, "word_eval_q1: atom vanishes at " + point_text(a.point));
        r *= (a.sign > 0) ? v : Rational(1) / v;
    }
    return r;
}

Rational word_eval_q1(const SkewSum& s, const ValueMap& values) {
    Rational r(0);
    for (const auto& [c, w] : s.terms)
        r += Rational(c) * word_eval_q1(w, values);
    return r;
}

Polynomial word_expand(const SkewWord& w) {
    Polynomial r = Polynomial::one();
    r.shift_q(w.qpow);
    for (const Atom& a : w.atoms) {
        if (a.sign > 0) {
            r = r * a.value;
            continue;
        }
        if (a.value.term_count() != 1)
            fail(Errc::non_invertible,
                 "word_expand: inverse of composite value at " + point_text(a.point));
        const auto& [support, qc] = *a.value.terms().begin();
        if (qc.terms().size() != 1 || qc.terms().begin()->second != 1)
            fail(Errc::non_invertible,
                 "word_expand: inverse of non-unit coefficient at " + point_text(a.point));
        Monomial m = Monomial::q_power(qc.terms().begin()->first);
        for (const Factor& f : support)
            m = m * Monomial::generator(f.point, f.exp);
        r = r * Polynomial::from(m.inverse());
    }
    return r;
}

Polynomial word_expand(const SkewSum& s) {
    Polynomial r;
    for (const auto& [c, w] : s.terms) {
        Polynomial t = word_expand(w);
        t.scale(QCoeff::integer(c));
        r += t;
    }
    return r;
}

} // namespace qts
