#include "qsystem.hpp"

#include <sstream>

namespace qts {

Polynomial rgen(int which, int exp) {
    return Polynomial::generator(rseed_point(which), exp);
}

Polynomial qq_weight(int which) {
    switch (which) {
    case 1: return rgen(1) * rgen(0, -1);
    case 2: return rgen(1, -1) * rgen(0, -1);
    case 3: return rgen(1, -1) * rgen(0);
    }
    fail(Errc::bad_argument, "qq_weight: weights are y1, y2, y3");
}

Matrix2 qq_transfer() {
    Polynomial y1 = qq_weight(1), y2 = qq_weight(2), y3 = qq_weight(3);
    return {y1, Polynomial::one(), y2 * y1, y2 + y3};
}

Polynomial qq_solve(int j) {
    if (j < 0)
        fail(Errc::bad_argument, "qq_solve: j must be >= 0");
    Matrix2 t = qq_transfer();
    Matrix2 power = Matrix2::identity(Polynomial::one());
    for (int k = 0; k < j; ++k)
        power = power * t;
    return power.e11 * rgen(0);
}

namespace {

Matrix2 qq_chip_u() {
    // U(R0, R1)
    Polynomial r1_inv = rgen(1, -1);
    Polynomial e21 = r1_inv;
    e21.shift_q(-1);
    return {Polynomial::one(), Polynomial::zero(), e21, rgen(0) * r1_inv};
}

Matrix2 qq_chip_v() {
    // V(R1, R0)
    return {rgen(1) * rgen(0, -1), rgen(0, -1), Polynomial::zero(), Polynomial::one()};
}

} // namespace

Polynomial qq_network_uv(int j) {
    if (j < 0)
        fail(Errc::bad_argument, "qq_network_uv: j must be >= 0");
    Matrix2 uv = qq_chip_u() * qq_chip_v();
    Matrix2 power = Matrix2::identity(Polynomial::one());
    for (int k = 0; k < j; ++k)
        power = power * uv;
    return power.e11 * rgen(0);
}

Polynomial qq_network_vu(int j) {
    if (j < 1)
        fail(Errc::bad_argument, "qq_network_vu: j must be >= 1");
    Matrix2 vu = qq_chip_v() * qq_chip_u();
    Matrix2 power = Matrix2::identity(Polynomial::one());
    for (int k = 0; k < j - 1; ++k)
        power = power * vu;
    return power.e11 * rgen(1);
}

bool qq_verify_conjugation() {
    Matrix2 uv = qq_chip_u() * qq_chip_v();
    Matrix2 t = qq_transfer();
    Polynomial r0 = rgen(0), r0_inv = rgen(0, -1);
    Matrix2 conj = {t.e11, t.e12 * r0_inv, r0 * t.e21, r0 * t.e22 * r0_inv};
    return uv == conj;
}

// ---------------------------------------------------------------------------
// free group algebra
// ---------------------------------------------------------------------------

void FreeWord::push(FreeLetter l) {
    if (l.exp == 0)
        return;
    if (!letters_.empty() && letters_.back().gen == l.gen) {
        letters_.back().exp += l.exp;
        if (letters_.back().exp == 0)
            letters_.pop_back();
        return;
    }
    letters_.push_back(l);
}

FreeWord FreeWord::generator(int gen, int exp) {
    if (gen != 0 && gen != 1)
        fail(Errc::bad_argument, "free word: generators are R0 and R1");
    FreeWord w;
    w.push(FreeLetter{gen, exp});
    return w;
}

FreeWord operator*(const FreeWord& a, const FreeWord& b) {
    FreeWord r = a;
    for (const FreeLetter& l : b.letters_)
        r.push(l);
    return r;
}

FreeWord FreeWord::inverse() const {
    FreeWord r;
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        r.push(FreeLetter{it->gen, -it->exp});
    return r;
}

std::string FreeWord::to_text() const {
    if (letters_.empty())
        return "1";
    std::ostringstream os;
    bool first = true;
    for (const FreeLetter& l : letters_) {
        if (!first)
            os << " * ";
        os << "R" << l.gen;
        if (l.exp != 1)
            os << "^" << l.exp;
        first = false;
    }
    return os.str();
}

FreeElement FreeElement::of(FreeWord w, BigInt c) {
    FreeElement e;
    if (c != 0)
        e.terms_.emplace(std::move(w), std::move(c));
    return e;
}

FreeElement& FreeElement::operator+=(const FreeElement& o) {
    for (const auto& [w, c] : o.terms_) {
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            terms_.emplace(w, c);
        } else {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }
    return *this;
}

FreeElement operator-(FreeElement a, const FreeElement& b) {
    for (const auto& [w, c] : b.terms_) {
        auto it = a.terms_.find(w);
        if (it == a.terms_.end()) {
            a.terms_.emplace(w, -c);
        } else {
            it->second -= c;
            if (it->second == 0)
                a.terms_.erase(it);
        }
    }
    return a;
}

FreeElement operator*(const FreeElement& a, const FreeElement& b) {
    FreeElement r;
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_)
            r += FreeElement::of(wa * wb, ca * cb);
    return r;
}

std::string FreeElement::to_text() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first)
            os << " + ";
        if (c != 1)
            os << c.str() << " * ";
        os << w.to_text();
        first = false;
    }
    return os.str();
}

Polynomial FreeElement::to_qseed() const {
    Polynomial r;
    for (const auto& [w, c] : terms_) {
        Polynomial t = Polynomial::one();
        for (const FreeLetter& l : w.letters())
            t = t * rgen(l.gen, l.exp);
        t.scale(QCoeff::integer(c));
        r += t;
    }
    return r;
}

FreeWord nc_comm_word() {
    return FreeWord::generator(1, -1) * FreeWord::generator(0) *
           FreeWord::generator(1) * FreeWord::generator(0, -1);
}

Mat2<FreeElement> nc_chip_u0() {
    FreeElement c_inv = FreeElement::of(nc_comm_word().inverse());
    FreeElement r0 = FreeElement::generator(0);
    FreeElement r1_inv = FreeElement::generator(1, -1);
    return {FreeElement::one(), FreeElement::zero(), c_inv * r1_inv, r0 * r1_inv};
}

Mat2<FreeElement> nc_chip_v0() {
    return {FreeElement::generator(1) * FreeElement::generator(0, -1),
            FreeElement::generator(0, -1), FreeElement::zero(), FreeElement::one()};
}

FreeElement nc_sequence(int n) {
    if (n < 0)
        fail(Errc::bad_argument, "nc_sequence: n must be >= 0");
    Mat2<FreeElement> uv = nc_chip_u0() * nc_chip_v0();
    Mat2<FreeElement> power = Mat2<FreeElement>::identity(FreeElement::one());
    for (int k = 0; k < n; ++k)
        power = power * uv;
    return power.e11 * FreeElement::generator(0);
}

int NcReport::failures() const {
    int f = 0;
    for (const NcCheck& c : checks)
        if (!c.pass)
            ++f;
    return f;
}

namespace {

void record(NcReport& rep, const std::string& id, const FreeElement& lhs,
            const FreeElement& rhs) {
    NcCheck chk;
    chk.id = id;
    chk.pass = lhs == rhs;
    if (!chk.pass)
        chk.detail = "lhs = " + lhs.to_text() + " ; rhs = " + rhs.to_text();
    rep.checks.push_back(std::move(chk));
}

void record_poly(NcReport& rep, const std::string& id, const Polynomial& lhs,
                 const Polynomial& rhs) {
    NcCheck chk;
    chk.id = id;
    chk.pass = lhs == rhs;
    if (!chk.pass)
        chk.detail = "lhs = " + lhs.to_text(rseed_namer) + " ; rhs = " + rhs.to_text(rseed_namer);
    rep.checks.push_back(std::move(chk));
}

} // namespace

NcReport nc_verify(int n_max) {
    if (n_max < 1)
        fail(Errc::bad_argument, "nc_verify: n_max must be >= 1");
    NcReport rep;

    FreeElement c_elem = FreeElement::of(nc_comm_word());
    FreeElement c_inv = FreeElement::of(nc_comm_word().inverse());
    std::vector<FreeElement> r(n_max + 2);
    for (int n = 0; n <= n_max + 1; ++n)
        r[n] = nc_sequence(n);
    for (int n = 0; n <= n_max; ++n)
        rep.values.push_back(r[n].to_text());

    // transfer-matrix form of the same solution
    FreeElement y1 = FreeElement::generator(1) * FreeElement::generator(0, -1);
    FreeElement y2 = FreeElement::generator(1, -1) * FreeElement::generator(0, -1);
    FreeElement y3 = FreeElement::generator(1, -1) * FreeElement::generator(0);
    Mat2<FreeElement> transfer{y1, FreeElement::one(), y2 * y1, y2 + y3};
    Mat2<FreeElement> tpow = Mat2<FreeElement>::identity(FreeElement::one());
    Mat2<FreeElement> vu = nc_chip_v0() * nc_chip_u0();
    Mat2<FreeElement> vupow = Mat2<FreeElement>::identity(FreeElement::one());

    for (int n = 1; n <= n_max; ++n) {
        record(rep, "quasi-commutation n=" + std::to_string(n), r[n] * r[n + 1],
               r[n + 1] * c_elem * r[n]);
        record(rep, "recurrence n=" + std::to_string(n), r[n + 1] * c_elem * r[n - 1],
               r[n] * r[n] + FreeElement::one());
    }
    for (int n = 1; n <= n_max; ++n) {
        tpow = tpow * transfer;
        record(rep, "transfer n=" + std::to_string(n), tpow.e11 * FreeElement::generator(0),
               r[n]);
        record(rep, "network-vu n=" + std::to_string(n),
               vupow.e11 * FreeElement::generator(1), r[n]);
        vupow = vupow * vu;
    }

    // division-free recursion at n = 1: R2 = (R1 + R1^-1) R0^-1 R1
    record(rep, "division-free n=1",
           (FreeElement::generator(1) + FreeElement::generator(1, -1)) *
               FreeElement::generator(0, -1) * FreeElement::generator(1),
           r[2]);
    // cleared recursion solved at n = 1: R2 = (R1^2 + 1) R0^-1 C^-1
    record(rep, "recurrence-solved n=1",
           (FreeElement::generator(1) * FreeElement::generator(1) + FreeElement::one()) *
               FreeElement::generator(0, -1) * c_inv,
           r[2]);

    // chip exchange V(a,b) U(b,c) = U(a,b') V(b',c) with
    // (a,b,c) = (R_{p+1}, R_p, R_{p+1}) and b' = R_{p+2}; entries that
    // contain b'^-1 are compared in right-cleared form.
    for (int p = 0; p <= 2 && p + 2 <= n_max + 1; ++p) {
        const FreeElement& a = r[p + 1];
        const FreeElement& bb = r[p];
        const FreeElement& c = r[p + 1];
        const FreeElement& bp = r[p + 2];
        std::string tag = " p=" + std::to_string(p);
        // quasi-commutation premise at this index
        record(rep, "exchange-premise ba=aCb" + tag, bb * a, a * c_elem * bb);
        // derived relations (d): a b' = b' C a and c b' = b' C c
        record(rep, "exchange-derived ab'=b'Ca" + tag, a * bp, bp * c_elem * a);
        // (1,1) cleared by b (uses bc = cCb): b' C b = a c + 1
        record(rep, "exchange-11 b'Cb=ac+1" + tag, bp * c_elem * bb,
               a * c + FreeElement::one());
        // (2,2) cleared by b': b c^-1 b' = C^-1 c^-1 C^-1 + a. Only at
        // p = 0 is c a generator, so only there does c^-1 exist.
        if (p == 0) {
            FreeElement c_gen_inv = FreeElement::generator(1, -1);
            record(rep, "exchange-22 bc^-1b'=C^-1c^-1C^-1+a" + tag,
                   bb * c_gen_inv * bp, c_inv * c_gen_inv * c_inv + a);
        }
    }

    // C -> q specialization: the free solution maps onto the quantum one
    for (int n = 1; n <= n_max && n <= 5; ++n) {
        record_poly(rep, "specialize n=" + std::to_string(n), r[n].to_qseed(), qq_solve(n));
        Polynomial lhs = r[n].to_qseed() * r[n + 1].to_qseed();
        Polynomial rhs = r[n + 1].to_qseed() * r[n].to_qseed();
        rhs.shift_q(1);
        record_poly(rep, "specialize-qcom n=" + std::to_string(n), lhs, rhs);
    }
    return rep;
}

} // namespace qts
