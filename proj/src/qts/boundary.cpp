#include "boundary.hpp"

#include <sstream>

namespace qts {

namespace {

int mod2(int x) { return ((x % 2) + 2) % 2; }

void validate_heights(int imin, const std::vector<int>& heights) {
    for (std::size_t k = 0; k < heights.size(); ++k) {
        int col = imin + static_cast<int>(k);
        if (mod2(col + heights[k]) != 0)
            fail(Errc::parse_error, "boundary: parity violated at column " +
                                        std::to_string(col));
        if (k > 0 && std::abs(heights[k] - heights[k - 1]) != 1)
            fail(Errc::parse_error,
                 "boundary: |j_i - j_{i+1}| != 1 between columns " +
                     std::to_string(col - 1) + " and " + std::to_string(col));
    }
}

} // namespace

Boundary Boundary::fundamental(int imin, int imax) {
    if (imin > imax)
        fail(Errc::bad_window, "fundamental: imin " + std::to_string(imin) +
                                   " > imax " + std::to_string(imax));
    Boundary b;
    b.imin_ = imin;
    b.imax_ = imax;
    b.heights_.reserve(imax - imin + 1);
    for (int i = imin; i <= imax; ++i)
        b.heights_.push_back(mod2(i));
    return b;
}

Boundary Boundary::from_heights(int imin, std::vector<int> heights) {
    if (heights.empty())
        fail(Errc::bad_window, "boundary: empty height list");
    validate_heights(imin, heights);
    Boundary b;
    b.imin_ = imin;
    b.imax_ = imin + static_cast<int>(heights.size()) - 1;
    b.heights_ = std::move(heights);
    return b;
}

int Boundary::height(int col) const {
    if (!in_window(col))
        fail(Errc::window_exhausted,
             "boundary: column " + std::to_string(col) + " outside window [" +
                 std::to_string(imin_) + ", " + std::to_string(imax_) + "]");
    return heights_[col - imin_];
}

Boundary Boundary::mutated(int a, int dir) const {
    if (dir != 1 && dir != -1)
        fail(Errc::bad_argument, "mutate: dir must be +1 or -1");
    if (!in_window(a))
        fail(Errc::window_exhausted, "mutate: column " + std::to_string(a) + " outside window");
    if (a == imin_ || a == imax_)
        fail(Errc::edge_column, "mutate: column " + std::to_string(a) + " at window edge");
    int ja = height(a);
    if (height(a - 1) != ja + dir || height(a + 1) != ja + dir)
        fail(Errc::not_mutable,
             "mutate: column " + std::to_string(a) + " is not a local " +
                 (dir > 0 ? "minimum" : "maximum"));
    Boundary b = *this;
    b.heights_[a - imin_] = ja + 2 * dir;
    // induced q=1 exchange: the value at the mutated column follows the
    // classical relation; neighbors keep theirs
    auto va = values_.find(a);
    auto vl = values_.find(a - 1);
    auto vr = values_.find(a + 1);
    if (va != values_.end()) {
        if (vl != values_.end() && vr != values_.end())
            b.values_[a] = (vl->second * vr->second + Rational(1)) / va->second;
        else
            b.values_.erase(a);
    }
    return b;
}

std::vector<int> Boundary::mutable_columns(int dir) const {
    std::vector<int> cols;
    for (int a = imin_ + 1; a < imax_; ++a) {
        int ja = heights_[a - imin_];
        if (heights_[a - 1 - imin_] == ja + dir && heights_[a + 1 - imin_] == ja + dir)
            cols.push_back(a);
    }
    return cols;
}

bool Boundary::has_values() const {
    if (values_.size() != heights_.size())
        return false;
    return true;
}

void Boundary::set_value(int col, Rational v) {
    if (!in_window(col))
        fail(Errc::window_exhausted, "value: column " + std::to_string(col) + " outside window");
    if (v <= 0)
        fail(Errc::parse_error, "value: column " + std::to_string(col) + " must be positive");
    if (values_.count(col))
        fail(Errc::parse_error, "value: duplicate column " + std::to_string(col));
    values_[col] = std::move(v);
}

void Boundary::assign_random_values(Rng& rng) {
    values_.clear();
    for (int i = imin_; i <= imax_; ++i)
        values_[i] = rng.positive_rational();
}

Boundary Boundary::parse(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int imin = 0, imax = 0;
    std::vector<int> heights;
    bool saw_window = false, saw_heights = false;
    Boundary parsed;
    std::vector<std::pair<int, Rational>> values;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word))
            continue; // blank line
        if (word == "window") {
            if (saw_window)
                fail(Errc::parse_error, "boundary: duplicate window line");
            if (!(ls >> imin >> imax))
                fail(Errc::parse_error, "boundary: bad window line");
            if (imin > imax)
                fail(Errc::bad_window, "boundary: imin > imax");
            saw_window = true;
        } else if (word == "heights") {
            if (!saw_window)
                fail(Errc::parse_error, "boundary: heights before window");
            if (saw_heights)
                fail(Errc::parse_error, "boundary: duplicate heights line");
            int h;
            while (ls >> h)
                heights.push_back(h);
            if (!ls.eof())
                fail(Errc::parse_error, "boundary: bad heights line");
            if (static_cast<int>(heights.size()) != imax - imin + 1)
                fail(Errc::parse_error,
                     "boundary: expected " + std::to_string(imax - imin + 1) +
                         " heights, got " + std::to_string(heights.size()));
            saw_heights = true;
        } else if (word == "value") {
            int col;
            std::string frac;
            if (!(ls >> col >> frac))
                fail(Errc::parse_error, "boundary: bad value line");
            std::size_t slash = frac.find('/');
            try {
                BigInt num(slash == std::string::npos ? frac : frac.substr(0, slash));
                BigInt den(slash == std::string::npos ? std::string("1")
                                                      : frac.substr(slash + 1));
                if (den == 0)
                    fail(Errc::parse_error, "boundary: zero denominator");
                values.emplace_back(col, Rational(num, den));
            } catch (const Error&) {
                throw;
            } catch (...) {
                fail(Errc::parse_error, "boundary: bad rational '" + frac + "'");
            }
        } else {
            fail(Errc::parse_error, "boundary: unrecognized line '" + line + "'");
        }
    }
    if (!saw_window || !saw_heights)
        fail(Errc::parse_error, "boundary: window and heights lines required");
    Boundary b = from_heights(imin, std::move(heights));
    for (auto& [col, v] : values)
        b.set_value(col, std::move(v));
    return b;
}

std::string Boundary::to_text() const {
    std::ostringstream os;
    os << "window " << imin_ << " " << imax_ << "\n";
    os << "heights";
    for (int h : heights_)
        os << " " << h;
    os << "\n";
    for (const auto& [col, v] : values_)
        os << "value " << col << " " << rational_text(v) << "\n";
    return os.str();
}

ProjectionPath projection(const Boundary& b, LatticePoint p) {
    if (!parity_ok(p))
        fail(Errc::bad_argument, "projection: parity violated at " + point_text(p));
    if (!b.in_window(p.i))
        fail(Errc::window_exhausted,
             "projection: column " + std::to_string(p.i) + " outside window");
    if (p.j < b.height(p.i))
        fail(Errc::below_boundary, "projection: " + point_text(p) + " lies below the boundary");

    ProjectionPath path;
    if (p.j == b.height(p.i)) {
        path.start = path.end = p;
        return path;
    }
    // left endpoint: maximal i0 with j_{i0} - i0 = j - i
    int target_left = p.j - p.i;
    int i0 = p.i;
    while (true) {
        if (b.height(i0) - i0 == target_left)
            break;
        --i0;
        if (i0 < b.imin())
            fail(Errc::window_exhausted,
                 "projection: left endpoint of " + point_text(p) + " escapes the window");
    }
    // right endpoint: minimal i1 with j_{i1} + i1 = j + i
    int target_right = p.j + p.i;
    int i1 = p.i;
    while (true) {
        if (b.height(i1) + i1 == target_right)
            break;
        ++i1;
        if (i1 > b.imax())
            fail(Errc::window_exhausted,
                 "projection: right endpoint of " + point_text(p) + " escapes the window");
    }
    path.start = b.point_at(i0);
    path.end = b.point_at(i1);
    for (int a = i0; a < i1; ++a)
        path.steps.push_back(b.height(a + 1) > b.height(a) ? Step::up : Step::down);
    return path;
}

Boundary random_boundary(Rng& rng, int imin, int imax) {
    if (imin > imax)
        fail(Errc::bad_window, "random_boundary: imin > imax");
    // start height of the right parity, small offset, then a +-1 walk
    int base = 2 * rng.range(-2, 2);
    int h = base + mod2(imin);
    std::vector<int> heights;
    heights.push_back(h);
    for (int i = imin + 1; i <= imax; ++i) {
        h += rng.coin() ? 1 : -1;
        heights.push_back(h);
    }
    return Boundary::from_heights(imin, std::move(heights));
}

Boundary random_mutation(Rng& rng, const Boundary& b) {
    std::vector<std::pair<int, int>> moves;
    for (int a : b.mutable_columns(+1))
        moves.emplace_back(a, +1);
    for (int a : b.mutable_columns(-1))
        moves.emplace_back(a, -1);
    if (moves.empty())
        return b;
    auto [a, dir] = moves[rng.below(moves.size())];
    return b.mutated(a, dir);
}

} // namespace qts
