#include "polynomial.hpp"

#include <sstream>

namespace qts {

std::string default_namer(LatticePoint p) {
    return "T[" + std::to_string(p.i) + "," + std::to_string(p.j) + "]";
}

std::string rseed_namer(LatticePoint p) {
    if (p == LatticePoint{0, 0})
        return "R0";
    if (p == LatticePoint{1, 1})
        return "R1";
    return default_namer(p);
}

Polynomial Polynomial::constant(QCoeff c) {
    Polynomial r;
    if (!c.is_zero())
        r.terms_.emplace(Support{}, std::move(c));
    return r;
}

Polynomial Polynomial::from(const Monomial& m) {
    Polynomial r;
    r.terms_.emplace(m.support(), QCoeff::q_power(m.qpow()));
    return r;
}

void Polynomial::add_term(const Support& s, const QCoeff& c) {
    if (c.is_zero())
        return;
    auto it = terms_.find(s);
    if (it == terms_.end()) {
        terms_.emplace(s, c);
    } else {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [s, c] : o.terms_)
        add_term(s, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [s, c] : o.terms_)
        add_term(s, c.negated());
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    for (const auto& [sa, ca] : a.terms_) {
        Monomial ma;
        for (const Factor& f : sa)
            ma = ma * Monomial::generator(f.point, f.exp);
        for (const auto& [sb, cb] : b.terms_) {
            Monomial mb;
            for (const Factor& f : sb)
                mb = mb * Monomial::generator(f.point, f.exp);
            Monomial prod = ma * mb;
            QCoeff c = ca * cb;
            c.shift(prod.qpow());
            r.add_term(prod.support(), c);
        }
    }
    return r;
}

Polynomial& Polynomial::scale(const QCoeff& c) {
    Polynomial r;
    for (const auto& [s, qc] : terms_)
        r.add_term(s, qc * c);
    terms_ = std::move(r.terms_);
    return *this;
}

Polynomial& Polynomial::shift_q(long long k) {
    if (k == 0)
        return *this;
    std::map<Support, QCoeff> shifted;
    for (auto& [s, qc] : terms_) {
        QCoeff c = qc;
        c.shift(k);
        shifted.emplace(s, std::move(c));
    }
    terms_ = std::move(shifted);
    return *this;
}

Polynomial Polynomial::bar() const {
    Polynomial r;
    for (const auto& [s, qc] : terms_) {
        // reverse the factor word, send each T^e to q^e T^e, q to q^-1
        Monomial m;
        long long gen_q = 0;
        for (auto it = s.rbegin(); it != s.rend(); ++it) {
            m = m * Monomial::generator(it->point, it->exp);
            gen_q += it->exp;
        }
        QCoeff c = qc.bar();
        c.shift(m.qpow() + gen_q);
        r.add_term(m.support(), c);
    }
    return r;
}

Rational Polynomial::eval_q1(const ValueMap& values) const {
    Rational total(0);
    for (const auto& [s, qc] : terms_) {
        Rational term(qc.at_q1());
        for (const Factor& f : s) {
            auto it = values.find(f.point.i);
            if (it == values.end())
                fail(Errc::missing_value,
                     "eval_q1: no value assigned to column " + std::to_string(f.point.i));
            term *= rational_pow(it->second, f.exp);
        }
        total += term;
    }
    return total;
}

bool Polynomial::is_positive() const {
    for (const auto& [s, qc] : terms_)
        if (!qc.is_nonneg())
            return false;
    return true;
}

namespace {

void print_qcoeff_monomial(std::ostream& os, long long k, const BigInt& c,
                           const Support& s, const GeneratorNamer& namer) {
    bool lead = true;
    if (c != 1) {
        os << c.str();
        lead = false;
    }
    if (k != 0) {
        if (!lead)
            os << " * ";
        os << "q^" << k;
        lead = false;
    }
    for (const Factor& f : s) {
        if (!lead)
            os << " * ";
        os << namer(f.point);
        if (f.exp != 1)
            os << "^" << f.exp;
        lead = false;
    }
    if (lead)
        os << "1";
}

} // namespace

std::string Polynomial::to_text(const GeneratorNamer& namer) const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [s, qc] : terms_)
        for (const auto& [k, c] : qc.terms()) {
            if (!first)
                os << " + ";
            print_qcoeff_monomial(os, k, c, s, namer);
            first = false;
        }
    return os.str();
}

namespace {

bool parse_int(const std::string& tok, long long& out) {
    if (tok.empty())
        return false;
    std::size_t pos = 0;
    try {
        out = std::stoll(tok, &pos);
    } catch (...) {
        return false;
    }
    return pos == tok.size();
}

bool looks_integral(const std::string& tok) {
    if (tok.empty())
        return false;
    std::size_t at = (tok[0] == '-') ? 1 : 0;
    if (at == tok.size())
        return false;
    for (; at < tok.size(); ++at)
        if (tok[at] < '0' || tok[at] > '9')
            return false;
    return true;
}

std::vector<std::string> split(const std::string& text, const std::string& sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t at = text.find(sep, start);
        if (at == std::string::npos) {
            parts.push_back(text.substr(start));
            return parts;
        }
        parts.push_back(text.substr(start, at - start));
        start = at + sep.size();
    }
}

} // namespace

Polynomial Polynomial::parse(const std::string& text) {
    if (text == "0")
        return Polynomial::zero();
    Polynomial result;
    for (const std::string& term : split(text, " + ")) {
        if (term.empty())
            fail(Errc::parse_error, "polynomial: empty term");
        BigInt coeff = 1;
        long long qexp = 0;
        bool saw_coeff = false, saw_q = false, saw_factor = false, saw_one = false;
        Monomial m;
        for (const std::string& chunk : split(term, " * ")) {
            long long v = 0;
            if (chunk == "1" && !saw_factor && !saw_one && !saw_coeff && !saw_q) {
                saw_one = true;
            } else if (chunk.rfind("q^", 0) == 0) {
                if (saw_q || saw_factor)
                    fail(Errc::parse_error, "polynomial: misplaced q-power in '" + term + "'");
                if (!parse_int(chunk.substr(2), v))
                    fail(Errc::parse_error, "polynomial: bad q-power '" + chunk + "'");
                qexp = v;
                saw_q = true;
            } else if (!chunk.empty() && chunk.front() == 'T') {
                std::size_t close = chunk.find(']');
                if (chunk.size() < 6 || chunk[1] != '[' || close == std::string::npos)
                    fail(Errc::parse_error, "polynomial: bad generator '" + chunk + "'");
                std::string inside = chunk.substr(2, close - 2);
                auto coords = split(inside, ",");
                long long gi = 0, gj = 0;
                if (coords.size() != 2 || !parse_int(coords[0], gi) || !parse_int(coords[1], gj))
                    fail(Errc::parse_error, "polynomial: bad generator '" + chunk + "'");
                long long ge = 1;
                std::string rest = chunk.substr(close + 1);
                if (!rest.empty()) {
                    if (rest[0] != '^' || !parse_int(rest.substr(1), ge) || ge == 0)
                        fail(Errc::parse_error, "polynomial: bad exponent '" + chunk + "'");
                }
                Monomial merged;
                try {
                    Monomial g = Monomial::generator(
                        LatticePoint{static_cast<int>(gi), static_cast<int>(gj)},
                        static_cast<int>(ge));
                    merged = m * g;
                } catch (const Error& e) {
                    fail(Errc::parse_error, std::string("polynomial: ") + e.what());
                }
                if (merged.factors().size() != m.factors().size() + 1)
                    fail(Errc::parse_error,
                         "polynomial: factor columns not strictly ascending in '" + term + "'");
                if (merged.qpow() != m.qpow())
                    fail(Errc::parse_error,
                         "polynomial: factors out of canonical order in '" + term + "'");
                m = merged;
                saw_factor = true;
            } else if (looks_integral(chunk)) {
                if (saw_coeff || saw_q || saw_factor)
                    fail(Errc::parse_error, "polynomial: misplaced coefficient in '" + term + "'");
                coeff = BigInt(chunk);
                saw_coeff = true;
            } else {
                fail(Errc::parse_error, "polynomial: unrecognized token '" + chunk + "'");
            }
        }
        if (!saw_factor && !saw_q && !saw_coeff && !saw_one)
            fail(Errc::parse_error, "polynomial: empty term in '" + text + "'");
        Polynomial t = Polynomial::from(m);
        t.scale(QCoeff::q_power(qexp, coeff));
        result += t;
    }
    return result;
}

std::optional<long long> commutation_certificate(const Polynomial& p,
                                                 const Polynomial& q) {
    Polynomial pq = p * q;
    Polynomial qp = q * p;
    if (pq.is_zero() && qp.is_zero())
        return 0;
    if (pq.is_zero() != qp.is_zero())
        return std::nullopt;
    if (pq.terms().size() != qp.terms().size())
        return std::nullopt;
    // candidate shift from the first term pair, then exact verification
    auto ita = pq.terms().begin();
    auto itb = qp.terms().begin();
    if (ita->first != itb->first)
        return std::nullopt;
    long long c = ita->second.terms().begin()->first - itb->second.terms().begin()->first;
    Polynomial shifted = qp;
    shifted.shift_q(c);
    if (pq == shifted)
        return c;
    return std::nullopt;
}

} // namespace qts
