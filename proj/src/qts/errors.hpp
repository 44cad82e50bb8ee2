#pragma once

#include <stdexcept>
#include <string>

namespace qts {

/// Error categories shared by the C++ core and the C API.
enum class Errc {
    ok = 0,
    bad_window,
    not_mutable,
    edge_column,
    below_boundary,
    window_exhausted,
    cone_violation,
    column_clash,
    missing_value,
    uncertified_swap,
    non_invertible,
    parse_error,
    bad_argument,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg)
        : std::runtime_error(msg), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) {
    throw Error(code, msg);
}

inline const char* errc_name(Errc c) {
    switch (c) {
    case Errc::ok: return "ok";
    case Errc::bad_window: return "BadWindow";
    case Errc::not_mutable: return "NotMutable";
    case Errc::edge_column: return "EdgeColumn";
    case Errc::below_boundary: return "BelowBoundary";
    case Errc::window_exhausted: return "WindowExhausted";
    case Errc::cone_violation: return "ConeViolation";
    case Errc::column_clash: return "ColumnClash";
    case Errc::missing_value: return "MissingValue";
    case Errc::uncertified_swap: return "UncertifiedSwap";
    case Errc::non_invertible: return "NonInvertible";
    case Errc::parse_error: return "ParseError";
    case Errc::bad_argument: return "BadArgument";
    }
    return "unknown";
}

} // namespace qts
