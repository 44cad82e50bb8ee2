#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "boundary.hpp"

namespace qts {

struct CheckResult {
    std::string id;
    bool pass = false;
    std::string detail; // canonical forms of both sides on failure
};

/// Deterministic given the same inputs and seed. Timing never enters the
/// report text; the CLI prints it to stderr.
struct RunReport {
    std::string command;
    std::vector<CheckResult> checks;

    int failures() const;
    int instances() const { return static_cast<int>(checks.size()); }
    std::string to_text() const;
};

/// Named property sweeps over a boundary, the same boundary after
/// 1..mutations random mutations, points limited to heights |j| <= range.
/// Suites: tsys, qcomm, positivity, bar, exchange, conserved, ysys.
RunReport run_suite(const std::string& suite, const Boundary& b, int range,
                    std::uint64_t seed, int mutations);

/// Quantum Q-system checks up to R_n (or the non-commutative report);
/// values holds the canonical R_j forms.
RunReport run_qsystem(int n, bool noncommutative, std::vector<std::string>& values);

bool valid_suite(const std::string& suite);

} // namespace qts
