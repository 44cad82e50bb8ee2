#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>

#include "monomial.hpp"
#include "qcoeff.hpp"

namespace qts {

/// Generator name used by the text form. The default prints T[i,j]; the
/// Q-system context prints R0/R1 instead.
using GeneratorNamer = std::function<std::string(LatticePoint)>;

std::string default_namer(LatticePoint p);
std::string rseed_namer(LatticePoint p);

/// Canonically ordered sum of q-commuting Laurent monomials: map from
/// factor support to a Z[q,q^-1] coefficient, no zero coefficients stored.
/// Equality of the term maps is equality in the algebra.
class Polynomial {
public:
    Polynomial() = default;

    static Polynomial zero() { return Polynomial(); }
    static Polynomial one() { return constant(QCoeff::one()); }
    static Polynomial constant(QCoeff c);
    static Polynomial from(const Monomial& m);
    static Polynomial generator(LatticePoint p, int exp = 1) {
        return from(Monomial::generator(p, exp));
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Support, QCoeff>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    Polynomial& scale(const QCoeff& c);
    Polynomial& shift_q(long long k); // multiply by the central q^k

    /// The bar antiautomorphism: q -> q^-1, T_P -> q T_P on generators,
    /// factors reversed.
    Polynomial bar() const;

    /// Exact specialization q = 1, generators at the given column values.
    Rational eval_q1(const ValueMap& values) const;

    /// true iff all integer coefficients are >= 0.
    bool is_positive() const;

    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

    std::string to_text(const GeneratorNamer& namer = default_namer) const;
    static Polynomial parse(const std::string& text);

private:
    std::map<Support, QCoeff> terms_;

    void add_term(const Support& s, const QCoeff& c);
};

/// Returns c when P Q = q^c Q P holds exactly (decided by computing both
/// products), nothing otherwise.
std::optional<long long> commutation_certificate(const Polynomial& p,
                                                 const Polynomial& q);

} // namespace qts
