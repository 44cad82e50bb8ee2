#include "qtsys.h"

#include <cstdlib>
#include <cstring>
#include <sstream>

#include "qts/network.hpp"
#include "qts/verify.hpp"

using namespace qts;

struct qts_boundary {
    Boundary impl;
};

struct qts_poly {
    Polynomial impl;
};

namespace {

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out)
        std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void set_errmsg(char** errmsg, const std::string& msg) {
    if (errmsg)
        *errmsg = dup_string(msg);
}

qts_status status_of(Errc c) {
    switch (c) {
    case Errc::ok: return QTS_OK;
    case Errc::bad_window: return QTS_E_BAD_WINDOW;
    case Errc::not_mutable: return QTS_E_NOT_MUTABLE;
    case Errc::edge_column: return QTS_E_EDGE_COLUMN;
    case Errc::below_boundary: return QTS_E_BELOW_BOUNDARY;
    case Errc::window_exhausted: return QTS_E_WINDOW_EXHAUSTED;
    case Errc::cone_violation: return QTS_E_CONE_VIOLATION;
    case Errc::column_clash: return QTS_E_COLUMN_CLASH;
    case Errc::missing_value: return QTS_E_MISSING_VALUE;
    case Errc::uncertified_swap: return QTS_E_UNCERTIFIED_SWAP;
    case Errc::non_invertible: return QTS_E_NON_INVERTIBLE;
    case Errc::parse_error: return QTS_E_PARSE;
    case Errc::bad_argument: return QTS_E_BAD_ARGUMENT;
    }
    return QTS_E_INTERNAL;
}

template <class Fn>
qts_status guarded(char** errmsg, Fn&& fn) {
    try {
        fn();
        return QTS_OK;
    } catch (const Error& e) {
        set_errmsg(errmsg, e.what());
        return status_of(e.code());
    } catch (const std::exception& e) {
        set_errmsg(errmsg, e.what());
        return QTS_E_INTERNAL;
    } catch (...) {
        set_errmsg(errmsg, "unknown error");
        return QTS_E_INTERNAL;
    }
}

} // namespace

extern "C" {

const char* qts_status_name(qts_status s) {
    switch (s) {
    case QTS_OK: return "ok";
    case QTS_E_BAD_WINDOW: return "BadWindow";
    case QTS_E_NOT_MUTABLE: return "NotMutable";
    case QTS_E_EDGE_COLUMN: return "EdgeColumn";
    case QTS_E_BELOW_BOUNDARY: return "BelowBoundary";
    case QTS_E_WINDOW_EXHAUSTED: return "WindowExhausted";
    case QTS_E_CONE_VIOLATION: return "ConeViolation";
    case QTS_E_COLUMN_CLASH: return "ColumnClash";
    case QTS_E_MISSING_VALUE: return "MissingValue";
    case QTS_E_UNCERTIFIED_SWAP: return "UncertifiedSwap";
    case QTS_E_NON_INVERTIBLE: return "NonInvertible";
    case QTS_E_PARSE: return "ParseError";
    case QTS_E_BAD_ARGUMENT: return "BadArgument";
    case QTS_E_INTERNAL: return "InternalError";
    }
    return "unknown";
}

void qts_string_free(char* s) { std::free(s); }

qts_status qts_boundary_parse(const char* text, qts_boundary** out, char** errmsg) {
    if (!text || !out)
        return QTS_E_BAD_ARGUMENT;
    return guarded(errmsg, [&] { *out = new qts_boundary{Boundary::parse(text)}; });
}

qts_status qts_boundary_fundamental(int imin, int imax, qts_boundary** out,
                                    char** errmsg) {
    if (!out)
        return QTS_E_BAD_ARGUMENT;
    return guarded(errmsg,
                   [&] { *out = new qts_boundary{Boundary::fundamental(imin, imax)}; });
}

qts_status qts_boundary_text(const qts_boundary* b, char** out) {
    if (!b || !out)
        return QTS_E_BAD_ARGUMENT;
    return guarded(nullptr, [&] { *out = dup_string(b->impl.to_text()); });
}

qts_status qts_boundary_mutate(const qts_boundary* b, int column, int dir,
                               qts_boundary** out, char** errmsg) {
    if (!b || !out)
        return QTS_E_BAD_ARGUMENT;
    return guarded(errmsg,
                   [&] { *out = new qts_boundary{b->impl.mutated(column, dir)}; });
}

void qts_boundary_free(qts_boundary* b) { delete b; }

qts_status qts_solve_above(const qts_boundary* b, int i, int j, qts_poly** out,
                           char** errmsg) {
    if (!b || !out)
        return QTS_E_BAD_ARGUMENT;
    return guarded(errmsg, [&] {
        if (!parity_ok({i, j}))
            fail(Errc::parse_error,
                 "point " + point_text({i, j}) + " violates the parity i+j even");
        *out = new qts_poly{solve_above(b->impl, {i, j})};
    });
}

qts_status qts_solve_below(const qts_boundary* b, int i, int j, int* k, int* l,
                           qts_poly** out, char** errmsg) {
    if (!b || !out || !k || !l)
        return QTS_E_BAD_ARGUMENT;
    return guarded(errmsg, [&] {
        if (!parity_ok({i, j}))
            fail(Errc::parse_error,
                 "point " + point_text({i, j}) + " violates the parity i+j even");
        auto [kl, value] = solve_below(b->impl, {i, j});
        *k = kl.i;
        *l = kl.j;
        *out = new qts_poly{std::move(value)};
    });
}

qts_status qts_poly_text(const qts_poly* p, char** out) {
    if (!p || !out)
        return QTS_E_BAD_ARGUMENT;
    return guarded(nullptr, [&] { *out = dup_string(p->impl.to_text()); });
}

qts_status qts_poly_parse(const char* text, qts_poly** out, char** errmsg) {
    if (!text || !out)
        return QTS_E_BAD_ARGUMENT;
    return guarded(errmsg, [&] { *out = new qts_poly{Polynomial::parse(text)}; });
}

int qts_poly_equal(const qts_poly* a, const qts_poly* b) {
    if (!a || !b)
        return 0;
    return a->impl == b->impl ? 1 : 0;
}

void qts_poly_free(qts_poly* p) { delete p; }

qts_status qts_poly_eval_q1(const qts_boundary* b, const qts_poly* p, char** out,
                            char** errmsg) {
    if (!b || !p || !out)
        return QTS_E_BAD_ARGUMENT;
    return guarded(errmsg, [&] {
        *out = dup_string(rational_text(p->impl.eval_q1(b->impl.values())));
    });
}

qts_status qts_oracle(const qts_boundary* b, int i, int j, char** out, char** errmsg) {
    if (!b || !out)
        return QTS_E_BAD_ARGUMENT;
    return guarded(errmsg, [&] {
        if (!parity_ok({i, j}))
            fail(Errc::parse_error,
                 "point " + point_text({i, j}) + " violates the parity i+j even");
        *out = dup_string(rational_text(classical_value(b->impl, {i, j})));
    });
}

qts_status qts_paths(const qts_boundary* b, int i, int j, int entry, int exit_,
                     char** out, size_t* count, char** errmsg) {
    if (!b || !out || !count)
        return QTS_E_BAD_ARGUMENT;
    return guarded(errmsg, [&] {
        if (!parity_ok({i, j}))
            fail(Errc::parse_error,
                 "point " + point_text({i, j}) + " violates the parity i+j even");
        ProjectionPath path = projection(b->impl, {i, j});
        auto monomials = enumerate_paths(b->impl, path, entry, exit_);
        std::ostringstream os;
        for (const Monomial& m : monomials)
            os << Polynomial::from(m).to_text() << "\n";
        *count = monomials.size();
        *out = dup_string(os.str());
    });
}

qts_status qts_verify(const qts_boundary* b, const char* suite, int range,
                      uint64_t seed, int mutations, char** report, int* failures,
                      char** errmsg) {
    if (!b || !suite || !report || !failures)
        return QTS_E_BAD_ARGUMENT;
    return guarded(errmsg, [&] {
        RunReport rep = run_suite(suite, b->impl, range, seed, mutations);
        *report = dup_string(rep.to_text());
        *failures = rep.failures();
    });
}

qts_status qts_qsystem(int n, int noncommutative, char** report, int* failures,
                       char** errmsg) {
    if (!report || !failures)
        return QTS_E_BAD_ARGUMENT;
    return guarded(errmsg, [&] {
        std::vector<std::string> values;
        RunReport rep = run_qsystem(n, noncommutative != 0, values);
        std::ostringstream os;
        os << "# " << rep.command << "\n";
        for (const std::string& v : values)
            os << v << "\n";
        for (const CheckResult& c : rep.checks) {
            os << (c.pass ? "PASS" : "FAIL") << " " << c.id << "\n";
            if (!c.pass && !c.detail.empty())
                os << "# " << c.detail << "\n";
        }
        os << "# checked " << rep.checks.size() << " failed " << rep.failures() << "\n";
        *report = dup_string(os.str());
        *failures = rep.failures();
    });
}

} // extern "C"
