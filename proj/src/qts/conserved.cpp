#include "conserved.hpp"

namespace qts {

namespace {

LatticePoint upper_neighbor(ConservedKind kind, LatticePoint a) {
    return kind == ConservedKind::c ? LatticePoint{a.i - 1, a.j + 1}
                                    : LatticePoint{a.i - 1, a.j - 1};
}

LatticePoint lower_neighbor(ConservedKind kind, LatticePoint a) {
    return kind == ConservedKind::c ? LatticePoint{a.i + 1, a.j - 1}
                                    : LatticePoint{a.i + 1, a.j + 1};
}

} // namespace

Polynomial conserved_value(const Boundary& b, ConservedKind kind, LatticePoint anchor) {
    if (!b.on_boundary(anchor))
        fail(Errc::bad_argument,
             "conserved_value: anchor " + point_text(anchor) + " is not a boundary point");
    Polynomial inv = Polynomial::from(Monomial::generator(anchor).inverse());
    Polynomial left = solve_at(b, upper_neighbor(kind, anchor));
    Polynomial right = solve_at(b, lower_neighbor(kind, anchor));
    return left * inv + inv * right;
}

SkewSum conserved_words(const Boundary& b, ConservedKind kind, LatticePoint anchor) {
    if (!b.on_boundary(anchor))
        fail(Errc::bad_argument,
             "conserved_words: anchor " + point_text(anchor) + " is not a boundary point");
    LatticePoint up = upper_neighbor(kind, anchor);
    LatticePoint lo = lower_neighbor(kind, anchor);
    SkewWord t_anchor_inv = SkewWord::atom(anchor, -1, Polynomial::generator(anchor));
    SkewWord w1 = SkewWord::atom(up, +1, solve_at(b, up)) * t_anchor_inv;
    SkewWord w2 = t_anchor_inv * SkewWord::atom(lo, +1, solve_at(b, lo));
    return SkewSum::of(w1) + SkewSum::of(w2);
}

bool verify_conservation(const Boundary& b, ConservedKind kind, int m) {
    LatticePoint high = kind == ConservedKind::c ? LatticePoint{m + 1, 1}
                                                 : LatticePoint{m - 1, 1};
    LatticePoint low{m, 0};
    return conserved_value(b, kind, high) == conserved_value(b, kind, low);
}

Polynomial conserved_c(const Boundary& b, int m) {
    if (((m % 2) + 2) % 2 != 0)
        fail(Errc::bad_argument, "conserved_c: index m must be even");
    return conserved_value(b, ConservedKind::c, {m, 0});
}

Polynomial conserved_d(const Boundary& b, int m) {
    if (((m % 2) + 2) % 2 != 0)
        fail(Errc::bad_argument, "conserved_d: index m must be even");
    return conserved_value(b, ConservedKind::d, {m, 0});
}

Polynomial phi_theta(const Boundary& b, PhiThetaKind kind, int p, int m) {
    if (p < -1)
        fail(Errc::bad_argument, "phi_theta: order p must be >= -1");
    Polynomial prev2 = Polynomial::zero(); // order -1
    Polynomial prev1 = Polynomial::one();  // order 0
    if (p == -1)
        return prev2;
    for (int t = 1; t <= p; ++t) {
        Polynomial next;
        if (kind == PhiThetaKind::phi) {
            next = prev1 * conserved_c(b, m + 2 * t - 2);
            Polynomial corr = prev2;
            corr.shift_q(1);
            next -= corr;
        } else {
            next = conserved_d(b, m + 2 - 2 * t) * prev1;
            Polynomial corr = prev2;
            corr.shift_q(-1);
            next -= corr;
        }
        prev2 = std::move(prev1);
        prev1 = std::move(next);
    }
    return prev1;
}

bool verify_offdiagonal(const Boundary& b, LatticePoint p_above) {
    ProjectionPath path = projection(b, p_above);
    if (path.empty())
        fail(Errc::bad_argument, "verify_offdiagonal: point lies on the boundary");
    if (path.start.j != 1 || path.end.j != 1)
        fail(Errc::bad_argument,
             "verify_offdiagonal: projection endpoints must sit at height 1");
    int n = static_cast<int>(path.size()) / 2;
    Matrix2 m = weight_matrix(b, path);
    Polynomial t_end = Polynomial::generator(path.end);

    Polynomial lhs12 = m.e12 * t_end;
    Polynomial rhs12 = phi_theta(b, PhiThetaKind::phi, n - 1, p_above.i - p_above.j + 2);
    if (!(lhs12 == rhs12))
        return false;

    Polynomial lhs21 = m.e21 * t_end;
    Polynomial rhs21 = phi_theta(b, PhiThetaKind::theta, n - 1, p_above.i + p_above.j - 2);
    rhs21.shift_q(-1);
    return lhs21 == rhs21;
}

} // namespace qts
