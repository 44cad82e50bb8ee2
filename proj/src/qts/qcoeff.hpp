#pragma once

#include <map>
#include <string>

#include "rational.hpp"

namespace qts {

/// An element of Z[q, q^-1]: map from q-exponent to nonzero integer
/// coefficient. The empty map is 0.
class QCoeff {
public:
    QCoeff() = default;

    static QCoeff zero() { return QCoeff(); }
    static QCoeff one() { return q_power(0); }

    static QCoeff q_power(long long k, BigInt c = BigInt(1)) {
        QCoeff r;
        if (c != 0)
            r.terms_[k] = std::move(c);
        return r;
    }

    static QCoeff integer(BigInt c) { return q_power(0, std::move(c)); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;

    const std::map<long long, BigInt>& terms() const { return terms_; }

    QCoeff& operator+=(const QCoeff& o);
    QCoeff& operator-=(const QCoeff& o);
    friend QCoeff operator+(QCoeff a, const QCoeff& b) { return a += b; }
    friend QCoeff operator-(QCoeff a, const QCoeff& b) { return a -= b; }
    friend QCoeff operator*(const QCoeff& a, const QCoeff& b);

    QCoeff& shift(long long k); // multiply by q^k
    QCoeff negated() const;

    /// q -> q^-1.
    QCoeff bar() const;

    /// true iff every integer coefficient is >= 0.
    bool is_nonneg() const;

    /// Value at q = 1 (sum of the integer coefficients).
    BigInt at_q1() const;

    bool operator==(const QCoeff& o) const { return terms_ == o.terms_; }

private:
    std::map<long long, BigInt> terms_;
};

inline bool QCoeff::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 &&
           terms_.begin()->second == 1;
}

inline QCoeff& QCoeff::operator+=(const QCoeff& o) {
    for (const auto& [k, c] : o.terms_) {
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }
    return *this;
}

inline QCoeff& QCoeff::operator-=(const QCoeff& o) {
    for (const auto& [k, c] : o.terms_) {
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, -c);
        } else {
            it->second -= c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }
    return *this;
}

inline QCoeff operator*(const QCoeff& a, const QCoeff& b) {
    QCoeff r;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) {
            auto& slot = r.terms_[ka + kb];
            slot += ca * cb;
            if (slot == 0)
                r.terms_.erase(ka + kb);
        }
    return r;
}

inline QCoeff& QCoeff::shift(long long k) {
    if (k == 0 || terms_.empty())
        return *this;
    std::map<long long, BigInt> shifted;
    for (auto& [e, c] : terms_)
        shifted.emplace(e + k, std::move(c));
    terms_ = std::move(shifted);
    return *this;
}

inline QCoeff QCoeff::negated() const {
    QCoeff r;
    for (const auto& [k, c] : terms_)
        r.terms_.emplace(k, -c);
    return r;
}

inline QCoeff QCoeff::bar() const {
    QCoeff r;
    for (const auto& [k, c] : terms_)
        r.terms_.emplace(-k, c);
    return r;
}

inline bool QCoeff::is_nonneg() const {
    for (const auto& [k, c] : terms_)
        if (c < 0)
            return false;
    return true;
}

inline BigInt QCoeff::at_q1() const {
    BigInt s = 0;
    for (const auto& [k, c] : terms_)
        s += c;
    return s;
}

} // namespace qts
