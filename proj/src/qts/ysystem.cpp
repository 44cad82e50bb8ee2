#include "ysystem.hpp"

#include "network.hpp"

namespace qts {

namespace {

int mod2(int x) { return ((x % 2) + 2) % 2; }

Polynomial defining_product(const Boundary& b, LatticePoint center) {
    return solve_at(b, {center.i + 1, center.j}) * solve_at(b, {center.i - 1, center.j});
}

} // namespace

SkewWord chi(const Boundary& b, LatticePoint center) {
    if (mod2(center.i + center.j) != 1)
        fail(Errc::bad_argument,
             "chi: center " + point_text(center) + " must have i+j odd");
    LatticePoint left{center.i - 1, center.j};
    LatticePoint right{center.i + 1, center.j};
    return SkewWord::atom(left, -1, solve_at(b, left)) *
           SkewWord::atom(right, -1, solve_at(b, right));
}

std::optional<long long> chi_pair_certificate(const Boundary& b, LatticePoint center_a,
                                              LatticePoint center_b) {
    return commutation_certificate(defining_product(b, center_a),
                                   defining_product(b, center_b));
}

bool verify_chi_commutation(const Boundary& b, int k, int l, int side) {
    if (side != 1 && side != -1)
        fail(Errc::bad_argument, "verify_chi_commutation: side must be +1 or -1");
    auto cert = chi_pair_certificate(b, {k, l}, {k + side, l + 1});
    return cert && *cert == 2;
}

bool verify_quantum_y(const Boundary& bnd, int i, int j) {
    if (mod2(i + j) != 0)
        fail(Errc::bad_argument, "verify_quantum_y: center (" + std::to_string(i) + "," +
                                     std::to_string(j) + ") must have i+j even");
    auto t = [&](int a, int c) {
        LatticePoint p{a, c};
        return SkewWord::atom(p, +1, solve_at(bnd, p));
    };
    auto tinv = [&](int a, int c) {
        LatticePoint p{a, c};
        return SkewWord::atom(p, -1, solve_at(bnd, p));
    };

    // chi_{i,j-1} chi_{i,j+1}
    SkewWord lhs = tinv(i - 1, j - 1) * tinv(i + 1, j - 1) * tinv(i - 1, j + 1) *
                   tinv(i + 1, j + 1);

    // (1 + chi_{i+s,j})^-1 = q^-1 T_{i+s,j-1}^-1 T_{i+s,j+1}^-1 T_{i+s+s,j} T_{i,j}
    // hmm: from q T_{i+s,j+1} T_{i+s,j-1} = T_{i+s+1,j} T_{i+s-1,j} + 1,
    // left-multiplied by chi: (1 + chi) = q chi T_{i+s,j+1} T_{i+s,j-1}
    auto one_plus_chi_inverse = [&](int s) {
        // chi_{i+s,j} = T_{i+s-1,j}^-1 T_{i+s+1,j}^-1
        SkewWord w = tinv(i + s - 1, j) * tinv(i + s + 1, j) * t(i + s, j + 1) *
                     t(i + s, j - 1);
        w.qpow += 1;
        return w.inverted();
    };

    SkewWord rhs = chi(bnd, {i + 1, j}) * one_plus_chi_inverse(+1) *
                   chi(bnd, {i - 1, j}) * one_plus_chi_inverse(-1);
    rhs.qpow += 2;

    SkewWord nl = word_normalize(lhs);
    SkewWord nr = word_normalize(rhs);
    return word_equals(nl, nr);
}

bool verify_classical_y(const Boundary& b, int i, int j) {
    if (mod2(i + j) != 0)
        fail(Errc::bad_argument, "verify_classical_y: center must have i+j even");
    auto chi1 = [&](int a, int c) {
        return Rational(1) / (classical_value(b, {a + 1, c}) * classical_value(b, {a - 1, c}));
    };
    Rational lhs = chi1(i, j - 1) * chi1(i, j + 1) * (Rational(1) + chi1(i + 1, j)) *
                   (Rational(1) + chi1(i - 1, j));
    Rational rhs = chi1(i + 1, j) * chi1(i - 1, j);
    return lhs == rhs;
}

} // namespace qts
