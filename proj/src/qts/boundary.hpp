#pragma once

#include <string>
#include <vector>

#include "lattice.hpp"
#include "rational.hpp"
#include "rng.hpp"

namespace qts {

/// Admissible initial data on a finite window: heights j_i with
/// |j_i - j_{i+1}| = 1 and i + j_i even. The boundary point (i, j_i)
/// carries the generator T_{i, j_i}. Anything that would need data outside
/// the window fails with WindowExhausted rather than padding.
class Boundary {
public:
    static Boundary fundamental(int imin, int imax);
    static Boundary from_heights(int imin, std::vector<int> heights);

    int imin() const { return imin_; }
    int imax() const { return imax_; }
    int width() const { return static_cast<int>(heights_.size()); }

    int height(int col) const; // throws WindowExhausted outside the window
    bool in_window(int col) const { return col >= imin_ && col <= imax_; }
    LatticePoint point_at(int col) const { return {col, height(col)}; }
    bool on_boundary(LatticePoint p) const {
        return in_window(p.i) && height(p.i) == p.j;
    }

    /// Height comparison for a lattice point with matching parity.
    bool above_or_on(LatticePoint p) const { return in_window(p.i) && p.j >= height(p.i); }

    /// Heights unchanged except j_a -> j_a +- 2; dir=+1 needs a local
    /// minimum at a, dir=-1 a local maximum, a interior to the window.
    Boundary mutated(int a, int dir) const;
    std::vector<int> mutable_columns(int dir) const;

    /// q=1 oracle data attached to the window columns.
    const ValueMap& values() const { return values_; }
    bool has_values() const;
    void set_value(int col, Rational v);
    void assign_random_values(Rng& rng);

    /// Text format: "window <imin> <imax>" / "heights <...>" / optional
    /// "value <i> <p>/<q>" lines.
    static Boundary parse(const std::string& text);
    std::string to_text() const;

    bool operator==(const Boundary& o) const {
        return imin_ == o.imin_ && heights_ == o.heights_;
    }

private:
    Boundary() = default;

    int imin_ = 0;
    int imax_ = -1;
    std::vector<int> heights_;
    ValueMap values_;
};

enum class Step { down, up };

/// The boundary segment cut out by the two diagonals through a point above
/// the boundary; empty exactly when the point lies on the boundary.
struct ProjectionPath {
    LatticePoint start;
    LatticePoint end;
    std::vector<Step> steps;

    bool empty() const { return steps.empty(); }
    std::size_t size() const { return steps.size(); }
};

/// Projection of p onto b. Endpoints satisfy j0 - i0 = j - i with i0
/// maximal and j1 + i1 = j + i with i1 minimal.
ProjectionPath projection(const Boundary& b, LatticePoint p);

/// Random admissible boundary over [imin, imax], heights near the window.
Boundary random_boundary(Rng& rng, int imin, int imax);

/// One random legal mutation (any direction); boundary returned unchanged
/// when no column is mutable.
Boundary random_mutation(Rng& rng, const Boundary& b);

} // namespace qts
