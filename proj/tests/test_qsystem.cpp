#include <doctest.h>

#include "qts/qsystem.hpp"

using namespace qts;

namespace {

// independent oracle: the rational recursion R_{j+1} = (R_j^2 + 1) / R_{j-1}
// with R_0 = R_1 = 1
Rational classical_r(int j) {
    Rational prev(1), cur(1);
    for (int k = 2; k <= j; ++k) {
        Rational next = (cur * cur + Rational(1)) / prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

} // namespace

TEST_CASE("transfer matrix entries and weight relations") {
    Matrix2 t = qq_transfer();
    CHECK(t.e11 * rgen(0) == rgen(1));
    // y2 y1 = q^-1 R0^-2
    Polynomial expect = rgen(0, -2);
    expect.shift_q(-1);
    CHECK(t.e21 == expect);
    CHECK(t.e21.to_text(rseed_namer) == "q^-1 * R0^-2");

    Polynomial y1 = qq_weight(1), y2 = qq_weight(2), y3 = qq_weight(3);
    Polynomial q_const = Polynomial::constant(QCoeff::q_power(1));
    CHECK(y1 * y3 == q_const);
    CHECK(y3 * y1 == q_const);
    Polynomial r12 = y2 * y1;
    r12.shift_q(2);
    CHECK(y1 * y2 == r12);
    Polynomial r23 = y3 * y2;
    r23.shift_q(2);
    CHECK(y2 * y3 == r23);
}

TEST_CASE("qq_solve values and the quantum Q-system relation") {
    CHECK(qq_solve(0) == rgen(0));
    CHECK(qq_solve(1) == rgen(1));
    CHECK(qq_solve(2).to_text(rseed_namer) == "q^-1 * R0^-1 + q^1 * R0^-1 * R1^2");

    ValueMap ones{{0, Rational(1)}, {1, Rational(1)}};
    CHECK(qq_solve(3).eval_q1(ones) == classical_r(3)); // 5
    CHECK(qq_solve(4).eval_q1(ones) == classical_r(4)); // 13
    CHECK(classical_r(3) == Rational(5));
    CHECK(classical_r(4) == Rational(13));

    for (int j = 1; j <= 10; ++j) {
        Polynomial lhs = qq_solve(j + 1) * qq_solve(j - 1);
        lhs.shift_q(1);
        Polynomial rhs = qq_solve(j) * qq_solve(j) + Polynomial::one();
        CHECK(lhs == rhs);
    }
    CHECK_THROWS_AS(qq_solve(-1), Error);
}

TEST_CASE("network forms agree with the transfer form") {
    for (int j = 1; j <= 8; ++j) {
        CHECK(qq_network_uv(j) == qq_solve(j));
        CHECK(qq_network_vu(j) == qq_solve(j));
    }
    CHECK(qq_network_uv(0) == rgen(0));
}

TEST_CASE("conjugation between UV and the transfer matrix") {
    CHECK(qq_verify_conjugation());
    // entrywise content: (2,2) conjugates as R0 (y2+y3) R0^-1 = q^-1 (y2+y3)
    Polynomial y23 = qq_weight(2) + qq_weight(3);
    Polynomial lhs = rgen(0) * y23 * rgen(0, -1);
    Polynomial rhs = y23;
    rhs.shift_q(-1);
    CHECK(lhs == rhs);
}

TEST_CASE("free group algebra arithmetic") {
    FreeElement r0 = FreeElement::generator(0);
    FreeElement r0i = FreeElement::generator(0, -1);
    CHECK(r0 * r0i == FreeElement::one());

    FreeElement r1 = FreeElement::generator(1);
    FreeElement r1i = FreeElement::generator(1, -1);
    FreeElement lhs = (r1 + r1i) * (r0i * r1);
    FreeElement expect = r1 * r0i * r1 + r1i * r0i * r1;
    CHECK(lhs == expect);

    FreeElement c = FreeElement::of(nc_comm_word());
    FreeElement ci = FreeElement::of(nc_comm_word().inverse());
    CHECK(c * ci == FreeElement::one());
    CHECK(ci * c == FreeElement::one());

    // associativity on mixed sums
    FreeElement a = r1 + ci, b = r0 * r1i + FreeElement::one(), d = c + r0i;
    CHECK((a * b) * d == a * (b * d));
}

TEST_CASE("nc_sequence base values") {
    CHECK(nc_sequence(0) == FreeElement::generator(0));
    CHECK(nc_sequence(1) == FreeElement::generator(1));
    FreeElement expect = FreeElement::generator(1) * FreeElement::generator(0, -1) *
                             FreeElement::generator(1) +
                         FreeElement::generator(1, -1) * FreeElement::generator(0, -1) *
                             FreeElement::generator(1);
    CHECK(nc_sequence(2) == expect);
    // division-free route: R2 = (R1 + R1^-1) R0^-1 R1
    FreeElement divfree = (FreeElement::generator(1) + FreeElement::generator(1, -1)) *
                        FreeElement::generator(0, -1) * FreeElement::generator(1);
    CHECK(divfree == expect);
    // cleared route: R2 = (R1^2 + 1) R0^-1 C^-1
    FreeElement cleared = (FreeElement::generator(1) * FreeElement::generator(1) +
                       FreeElement::one()) *
                      FreeElement::generator(0, -1) *
                      FreeElement::of(nc_comm_word().inverse());
    CHECK(cleared == expect);
}

TEST_CASE("nc_verify runs clean through n = 8") {
    NcReport rep = nc_verify(8);
    for (const NcCheck& c : rep.checks) {
        INFO(c.id, ": ", c.detail);
        CHECK(c.pass);
    }
    CHECK(rep.failures() == 0);
    CHECK(rep.values.size() == 9);
    // term counts follow the odd-index Fibonacci pattern 1,1,2,5,13,...
    FreeElement r5 = nc_sequence(5);
    CHECK(r5.terms().size() == 34);
    CHECK_THROWS_AS(nc_verify(0), Error);
}

TEST_CASE("specialization C -> q sends the free solution to the quantum one") {
    for (int n = 0; n <= 5; ++n)
        CHECK(nc_sequence(n).to_qseed() == qq_solve(n));
    CHECK(FreeElement::of(nc_comm_word()).to_qseed() ==
          Polynomial::constant(QCoeff::q_power(1)));
}
