#pragma once

#include <map>
#include <vector>

#include "lattice.hpp"

namespace qts {

/// One generator power inside a monomial.
struct Factor {
    LatticePoint point;
    int exp = 0;

    auto operator<=>(const Factor&) const = default;
};

/// Factor list in strictly ascending column order. Doubles as the term key
/// of Polynomial; std::vector's lexicographic order (with the shorter
/// prefix first) is the canonical term order of the text format.
using Support = std::vector<Factor>;

/// q^s * prod T_{P_c}^{e_c}, columns ascending, at most one generator per
/// column. Multiplication normal-orders via lambda_exponent; the q-power
/// picks up, for every transposed generator pair, the product of the
/// exponents times the pairwise commutation exponent.
class Monomial {
public:
    Monomial() = default;

    static Monomial one() { return Monomial(); }

    static Monomial generator(LatticePoint p, int exp = 1) {
        if (!parity_ok(p))
            fail(Errc::bad_argument, "generator: parity violated at " + point_text(p));
        Monomial m;
        if (exp != 0)
            m.factors_.emplace(p.i, Factor{p, exp});
        return m;
    }

    static Monomial q_power(long long k) {
        Monomial m;
        m.qpow_ = k;
        return m;
    }

    long long qpow() const { return qpow_; }
    Monomial& shift_q(long long k) { qpow_ += k; return *this; }

    bool is_scalar() const { return factors_.empty(); }
    bool is_one() const { return factors_.empty() && qpow_ == 0; }

    const std::map<int, Factor>& factors() const { return factors_; }

    Support support() const {
        Support s;
        s.reserve(factors_.size());
        for (const auto& [col, f] : factors_)
            s.push_back(f);
        return s;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b);

    /// Two-sided inverse: exponents negated, q-power solved so that the
    /// product with the original is exactly 1.
    Monomial inverse() const;

    bool operator==(const Monomial& o) const {
        return qpow_ == o.qpow_ && factors_ == o.factors_;
    }

private:
    long long qpow_ = 0;
    std::map<int, Factor> factors_;
};

inline Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.qpow_ = a.qpow_ + b.qpow_;
    for (const auto& [ca, fa] : a.factors_)
        for (const auto& [cb, fb] : b.factors_) {
            if (ca == cb) {
                if (fa.point != fb.point)
                    fail(Errc::column_clash,
                         "mono_mul: column " + std::to_string(ca) + " carries " +
                             point_text(fa.point) + " and " + point_text(fb.point));
                continue;
            }
            int lam = lambda_exponent(fa.point, fb.point);
            if (ca > cb) // fa gets transposed past fb in the stable merge
                r.qpow_ += static_cast<long long>(lam) * fa.exp * fb.exp;
        }
    r.factors_ = a.factors_;
    for (const auto& [col, fb] : b.factors_) {
        auto it = r.factors_.find(col);
        if (it == r.factors_.end()) {
            r.factors_.emplace(col, fb);
        } else {
            it->second.exp += fb.exp;
            if (it->second.exp == 0)
                r.factors_.erase(it);
        }
    }
    return r;
}

inline Monomial Monomial::inverse() const {
    Monomial neg;
    for (const auto& [col, f] : factors_)
        neg.factors_.emplace(col, Factor{f.point, -f.exp});
    // (neg * *this) is scalar q^t; pick neg.qpow so the product is 1
    Monomial probe = neg * *this;
    neg.qpow_ = -probe.qpow_;
    return neg;
}

} // namespace qts
