#include "network.hpp"

#include <map>

namespace qts {

Chip chip(ChipKind kind, LatticePoint a, LatticePoint b) {
    if (std::abs(a.i - b.i) != 1 || std::abs(a.j - b.j) != 1)
        fail(Errc::bad_argument, "chip: " + point_text(a) + " and " + point_text(b) +
                                     " are not adjacent boundary points");
    if (kind == ChipKind::V && b.j != a.j - 1)
        fail(Errc::bad_argument, "chip: V wants a down step at " + point_text(a));
    if (kind == ChipKind::U && b.j != a.j + 1)
        fail(Errc::bad_argument, "chip: U wants an up step at " + point_text(a));
    return Chip{kind, a, b};
}

Monomial Chip::entry(int r, int c, bool& is_zero) const {
    is_zero = false;
    Monomial ga = Monomial::generator(a);
    Monomial gb_inv = Monomial::generator(b).inverse();
    if (kind == ChipKind::U) {
        if (r == 1 && c == 1)
            return Monomial::one();
        if (r == 1 && c == 2) {
            is_zero = true;
            return Monomial::one();
        }
        if (r == 2 && c == 1)
            return Monomial(gb_inv).shift_q(-1);
        return ga * gb_inv;
    }
    if (r == 1 && c == 1)
        return ga * gb_inv;
    if (r == 1 && c == 2)
        return gb_inv;
    if (r == 2 && c == 1) {
        is_zero = true;
        return Monomial::one();
    }
    return Monomial::one();
}

Matrix2 Chip::matrix() const {
    Matrix2 m;
    Polynomial* slots[2][2] = {{&m.e11, &m.e12}, {&m.e21, &m.e22}};
    for (int r = 1; r <= 2; ++r)
        for (int c = 1; c <= 2; ++c) {
            bool zero = false;
            Monomial w = entry(r, c, zero);
            *slots[r - 1][c - 1] = zero ? Polynomial::zero() : Polynomial::from(w);
        }
    return m;
}

std::vector<Chip> path_chips(const Boundary& b, const ProjectionPath& p) {
    std::vector<Chip> chips;
    int col = p.start.i;
    for (Step s : p.steps) {
        LatticePoint from = b.point_at(col);
        LatticePoint to = b.point_at(col + 1);
        if ((s == Step::down) != (to.j == from.j - 1))
            fail(Errc::bad_argument, "path_chips: step does not trace the boundary at column " +
                                         std::to_string(col));
        chips.push_back(chip(s == Step::down ? ChipKind::V : ChipKind::U, from, to));
        ++col;
    }
    if (col != p.end.i)
        fail(Errc::bad_argument, "path_chips: path does not reach its end column");
    return chips;
}

Matrix2 weight_matrix(const Boundary& b, const ProjectionPath& p) {
    Matrix2 m = Matrix2::identity(Polynomial::one());
    for (const Chip& c : path_chips(b, p))
        m = m * c.matrix();
    return m;
}

Polynomial solve_above(const Boundary& b, LatticePoint p) {
    ProjectionPath path = projection(b, p);
    if (path.empty())
        return Polynomial::generator(p);
    Matrix2 m = weight_matrix(b, path);
    return m.e11 * Polynomial::generator(path.end);
}

std::pair<LatticePoint, Polynomial> solve_below(const Boundary& b, LatticePoint p_above) {
    ProjectionPath path = projection(b, p_above);
    LatticePoint p0 = path.start, p1 = path.end;
    LatticePoint kl{(p0.i + p1.i + p0.j - p1.j) / 2, (p0.j + p1.j + p0.i - p1.i) / 2};
    if (path.empty())
        return {p_above, Polynomial::generator(p_above)};
    Matrix2 m = weight_matrix(b, path);
    return {kl, m.e22 * Polynomial::generator(path.end)};
}

namespace {

/// Above point whose reflected partner is the given below point. The
/// projection runs from the topmost boundary point on the line x+y = k+l
/// to the topmost one on x-y = k-l.
LatticePoint below_partner(const Boundary& b, LatticePoint p) {
    int i0 = p.i;
    while (b.height(i0) + i0 != p.i + p.j) {
        --i0;
        if (i0 < b.imin())
            fail(Errc::window_exhausted,
                 "solve_at: left diagonal of " + point_text(p) + " escapes the window");
    }
    while (i0 - 1 >= b.imin() && b.height(i0 - 1) + (i0 - 1) == p.i + p.j)
        --i0;
    int i1 = p.i;
    while (b.height(i1) - i1 != p.j - p.i) {
        ++i1;
        if (i1 > b.imax())
            fail(Errc::window_exhausted,
                 "solve_at: right diagonal of " + point_text(p) + " escapes the window");
    }
    while (i1 + 1 <= b.imax() && b.height(i1 + 1) - (i1 + 1) == p.j - p.i)
        ++i1;
    if (b.height(i0 + 1) != b.height(i0) - 1) {
        // i0 at the window edge: the descent may continue outside
        if (i0 == b.imin())
            fail(Errc::window_exhausted,
                 "solve_at: partner projection of " + point_text(p) + " escapes the window");
        fail(Errc::below_boundary,
             "solve_at: " + point_text(p) + " has no network partner above this boundary");
    }
    if (b.height(i1 - 1) != b.height(i1) - 1) {
        if (i1 == b.imax())
            fail(Errc::window_exhausted,
                 "solve_at: partner projection of " + point_text(p) + " escapes the window");
        fail(Errc::below_boundary,
             "solve_at: " + point_text(p) + " has no network partner above this boundary");
    }
    if (i0 >= i1)
        fail(Errc::below_boundary,
             "solve_at: " + point_text(p) + " has no network partner above this boundary");
    LatticePoint p0 = b.point_at(i0), p1 = b.point_at(i1);
    return {(p0.i + p1.i + p1.j - p0.j) / 2, (p0.j + p1.j + p1.i - p0.i) / 2};
}

} // namespace

Polynomial solve_at(const Boundary& b, LatticePoint p) {
    if (!parity_ok(p))
        fail(Errc::bad_argument, "solve_at: parity violated at " + point_text(p));
    if (b.above_or_on(p))
        return solve_above(b, p);
    auto [kl, value] = solve_below(b, below_partner(b, p));
    if (kl != p)
        fail(Errc::below_boundary,
             "solve_at: partner projection of " + point_text(p) + " reflects to " +
                 point_text(kl));
    return value;
}

std::vector<Monomial> enumerate_paths(const Boundary& b, const ProjectionPath& p,
                                      int entry, int exit) {
    if ((entry != 1 && entry != 2) || (exit != 1 && exit != 2))
        fail(Errc::bad_argument, "enumerate_paths: connectors are 1 or 2");
    std::vector<Chip> chips = path_chips(b, p);
    std::vector<Monomial> out;
    // depth-first in connector order, so the list is lexicographic in the
    // connector sequence
    struct FrameLess {
        std::vector<Chip>* chips;
        int exit;
        std::vector<Monomial>* out;
        void walk(std::size_t k, int at, const Monomial& acc) {
            if (k == chips->size()) {
                if (at == exit)
                    out->push_back(acc);
                return;
            }
            for (int nxt = 1; nxt <= 2; ++nxt) {
                bool zero = false;
                Monomial w = (*chips)[k].entry(at, nxt, zero);
                if (zero)
                    continue;
                walk(k + 1, nxt, acc * w);
            }
        }
    } dfs{&chips, exit, &out};
    dfs.walk(0, entry, Monomial::one());
    return out;
}

long long count_paths(const ProjectionPath& p, int entry, int exit) {
    long long m[2][2] = {{1, 0}, {0, 1}};
    for (Step s : p.steps) {
        // U indicator [[1,0],[1,1]], V indicator [[1,1],[0,1]]
        long long u[2][2];
        if (s == Step::up) {
            u[0][0] = 1; u[0][1] = 0; u[1][0] = 1; u[1][1] = 1;
        } else {
            u[0][0] = 1; u[0][1] = 1; u[1][0] = 0; u[1][1] = 1;
        }
        long long r[2][2];
        for (int a = 0; a < 2; ++a)
            for (int c = 0; c < 2; ++c)
                r[a][c] = m[a][0] * u[0][c] + m[a][1] * u[1][c];
        for (int a = 0; a < 2; ++a)
            for (int c = 0; c < 2; ++c)
                m[a][c] = r[a][c];
    }
    return m[entry - 1][exit - 1];
}

bool verify_chip_exchange(const Boundary& bnd, int col) {
    if (col <= bnd.imin() || col >= bnd.imax())
        fail(Errc::edge_column, "verify_chip_exchange: column at window edge");
    int ja = bnd.height(col);
    if (bnd.height(col - 1) != ja + 1 || bnd.height(col + 1) != ja + 1)
        fail(Errc::not_mutable,
             "verify_chip_exchange: column " + std::to_string(col) + " is not a local minimum");

    Polynomial a = Polynomial::generator(bnd.point_at(col - 1));
    Polynomial c = Polynomial::generator(bnd.point_at(col + 1));
    Monomial b_gen = Monomial::generator(bnd.point_at(col));
    Polynomial b_inv = Polynomial::from(b_gen.inverse());
    Polynomial c_inv = Polynomial::from(Monomial::generator(bnd.point_at(col + 1)).inverse());

    // mutated variable over the original cluster: b' = q^-1 (a c + 1) b^-1
    Polynomial b_prime = (a * c + Polynomial::one()) * b_inv;
    b_prime.shift_q(-1);

    Matrix2 lhs = chip(ChipKind::V, bnd.point_at(col - 1), bnd.point_at(col)).matrix() *
                  chip(ChipKind::U, bnd.point_at(col), bnd.point_at(col + 1)).matrix();

    // U(a,b') V(b',c) without inverting b': entries (1,1),(1,2),(2,1)
    // directly, the (2,2) entry right-cleared by b'
    Polynomial rhs11 = b_prime * c_inv;
    Polynomial rhs12 = c_inv;
    Polynomial rhs21 = c_inv;
    rhs21.shift_q(-1);
    if (!(lhs.e11 == rhs11 && lhs.e12 == rhs12 && lhs.e21 == rhs21))
        return false;

    // derived commutations a b' = q b' a and c b' = q b' c
    Polynomial ab = a * b_prime;
    Polynomial ba = b_prime * a;
    ba.shift_q(1);
    Polynomial cb = c * b_prime;
    Polynomial bc = b_prime * c;
    bc.shift_q(1);
    if (!(ab == ba && cb == bc))
        return false;

    // (2,2): b c^-1 b' = q^-2 c^-1 + a, the cleared form of
    // q^-1 b'^-1 c^-1 + a b'^-1
    Polynomial lhs22 = Polynomial::from(b_gen) * c_inv * b_prime;
    Polynomial rhs22 = c_inv;
    rhs22.shift_q(-2);
    rhs22 += a;
    return lhs22 == rhs22;
}

bool verify_tsys_point(const Boundary& b, LatticePoint center) {
    if (((center.i + center.j) % 2 + 2) % 2 != 1)
        fail(Errc::bad_argument,
             "verify_tsys_point: center " + point_text(center) + " must have i+j odd");
    Polynomial up = solve_at(b, {center.i, center.j + 1});
    Polynomial down = solve_at(b, {center.i, center.j - 1});
    Polynomial right = solve_at(b, {center.i + 1, center.j});
    Polynomial left = solve_at(b, {center.i - 1, center.j});
    Polynomial lhs = up * down;
    lhs.shift_q(1);
    Polynomial rhs = right * left + Polynomial::one();
    return lhs == rhs;
}

namespace {

Rational classical_rec(const Boundary& b, LatticePoint p,
                       std::map<LatticePoint, Rational>& memo) {
    if (!parity_ok(p))
        fail(Errc::bad_argument, "classical oracle: parity violated at " + point_text(p));
    auto it = memo.find(p);
    if (it != memo.end())
        return it->second;
    Rational v;
    int jb = b.height(p.i);
    if (p.j == jb) {
        auto vt = b.values().find(p.i);
        if (vt == b.values().end())
            fail(Errc::missing_value,
                 "classical oracle: no value at column " + std::to_string(p.i));
        v = vt->second;
    } else if (p.j > jb) {
        Rational num = classical_rec(b, {p.i + 1, p.j - 1}, memo) *
                           classical_rec(b, {p.i - 1, p.j - 1}, memo) +
                       Rational(1);
        v = num / classical_rec(b, {p.i, p.j - 2}, memo);
    } else {
        Rational num = classical_rec(b, {p.i + 1, p.j + 1}, memo) *
                           classical_rec(b, {p.i - 1, p.j + 1}, memo) +
                       Rational(1);
        v = num / classical_rec(b, {p.i, p.j + 2}, memo);
    }
    memo.emplace(p, v);
    return v;
}

} // namespace

Rational classical_value(const Boundary& b, LatticePoint p) {
    std::map<LatticePoint, Rational> memo;
    return classical_rec(b, p, memo);
}

} // namespace qts
