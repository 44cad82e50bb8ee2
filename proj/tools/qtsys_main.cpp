// Command-line front end for the quantum T-system engine. Talks to the
// engine exclusively through the C API in qtsys.h.
//
// Exit codes: 0 success, 1 verification failure, 2 parse/usage error,
// 3 below-boundary or cone violation, 4 window exhausted, 5 other engine
// error. Reports go to stdout and are byte-reproducible for a fixed seed;
// timing goes to stderr.

#include "qtsys.h"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

int exit_code_for(qts_status s) {
    switch (s) {
    case QTS_OK:
        return 0;
    case QTS_E_BELOW_BOUNDARY:
    case QTS_E_CONE_VIOLATION:
        return 3;
    case QTS_E_WINDOW_EXHAUSTED:
        return 4;
    case QTS_E_PARSE:
    case QTS_E_BAD_ARGUMENT:
    case QTS_E_BAD_WINDOW:
    case QTS_E_MISSING_VALUE:
        return 2;
    default:
        return 5;
    }
}

struct StringOut {
    char* s = nullptr;
    ~StringOut() { qts_string_free(s); }
    std::string str() const { return s ? std::string(s) : std::string(); }
};

int complain(qts_status st, const StringOut& msg) {
    std::cerr << "error: " << qts_status_name(st);
    if (msg.s)
        std::cerr << ": " << msg.str();
    std::cerr << "\n";
    return exit_code_for(st);
}

bool read_file(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        return false;
    std::ostringstream ss;
    ss << in.rdbuf();
    out = ss.str();
    return true;
}

bool parse_point(const std::string& text, int& i, int& j) {
    std::size_t comma = text.find(',');
    if (comma == std::string::npos)
        return false;
    try {
        std::size_t p1 = 0, p2 = 0;
        std::string a = text.substr(0, comma), b = text.substr(comma + 1);
        i = std::stoi(a, &p1);
        j = std::stoi(b, &p2);
        return p1 == a.size() && p2 == b.size();
    } catch (...) {
        return false;
    }
}

struct BoundaryHandle {
    qts_boundary* b = nullptr;
    ~BoundaryHandle() { qts_boundary_free(b); }
};

int load_boundary(const std::string& path, BoundaryHandle& h) {
    std::string text;
    if (!read_file(path, text)) {
        std::cerr << "error: cannot read boundary file '" << path << "'\n";
        return 2;
    }
    StringOut err;
    qts_status st = qts_boundary_parse(text.c_str(), &h.b, &err.s);
    if (st != QTS_OK)
        return complain(st, err);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact solver and verifier for the quantum A1 T-system"};
    app.require_subcommand(1);

    std::string boundary_file, point_text, suite;
    bool flag_below = false, flag_paths = false, flag_q1 = false, flag_nc = false;
    int range = 4, mutations = 0, qn = 4;
    std::uint64_t seed = 0;

    CLI::App* solve = app.add_subcommand("solve", "solve for T at a lattice point");
    solve->add_option("boundary", boundary_file, "boundary file")->required();
    solve->add_option("point", point_text, "target point i,j")->required();
    solve->add_flag("--below", flag_below, "solve under the boundary (point is the partner above)");
    solve->add_flag("--paths", flag_paths, "list the connector-path monomials");
    solve->add_flag("--q1", flag_q1, "also print the q=1 value (needs value lines)");

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite, "tsys|qcomm|positivity|bar|exchange|conserved|ysys")
        ->required();
    verify->add_option("boundary", boundary_file, "boundary file")->required();
    verify->add_option("--range", range, "height range for sweep points (default 4)");
    verify->add_option("--seed", seed, "random seed (default 0)");
    verify->add_option("--mutations", mutations, "also sweep this many random mutations");

    CLI::App* qsystem = app.add_subcommand("qsystem", "Q-system solutions and checks");
    qsystem->add_option("--n", qn, "verify up to R_n (default 4)");
    qsystem->add_flag("--noncommutative", flag_nc, "free-group-algebra version");

    CLI::App* oracle = app.add_subcommand("oracle", "exact classical value at q=1");
    oracle->add_option("boundary", boundary_file, "boundary file (needs value lines)")
        ->required();
    oracle->add_option("point", point_text, "target point i,j")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    auto started = std::chrono::steady_clock::now();
    auto report_time = [&] {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - started)
                      .count();
        std::cerr << "elapsed_ms " << ms << "\n";
    };

    if (solve->parsed()) {
        BoundaryHandle b;
        if (int rc = load_boundary(boundary_file, b))
            return rc;
        int i = 0, j = 0;
        if (!parse_point(point_text, i, j)) {
            std::cerr << "error: bad point '" << point_text << "' (expected i,j)\n";
            return 2;
        }
        StringOut err;
        qts_poly* poly = nullptr;
        qts_status st;
        if (flag_below) {
            int k = 0, l = 0;
            st = qts_solve_below(b.b, i, j, &k, &l, &poly, &err.s);
            if (st != QTS_OK)
                return complain(st, err);
            std::cout << "below " << k << " " << l << "\n";
        } else {
            st = qts_solve_above(b.b, i, j, &poly, &err.s);
            if (st != QTS_OK)
                return complain(st, err);
        }
        StringOut text;
        qts_poly_text(poly, &text.s);
        std::cout << text.str() << "\n";
        if (flag_paths) {
            StringOut lines;
            size_t count = 0;
            st = qts_paths(b.b, i, j, 1, 1, &lines.s, &count, &err.s);
            if (st != QTS_OK) {
                qts_poly_free(poly);
                return complain(st, err);
            }
            std::istringstream ls(lines.str());
            std::string one;
            while (std::getline(ls, one))
                std::cout << "path " << one << "\n";
            std::cout << "paths " << count << "\n";
        }
        if (flag_q1) {
            StringOut value;
            st = qts_poly_eval_q1(b.b, poly, &value.s, &err.s);
            if (st != QTS_OK) {
                qts_poly_free(poly);
                return complain(st, err);
            }
            std::cout << "q1 " << value.str() << "\n";
        }
        qts_poly_free(poly);
        report_time();
        return 0;
    }

    if (verify->parsed()) {
        BoundaryHandle b;
        if (int rc = load_boundary(boundary_file, b))
            return rc;
        StringOut err, report;
        int failures = 0;
        qts_status st = qts_verify(b.b, suite.c_str(), range, seed, mutations,
                                   &report.s, &failures, &err.s);
        if (st != QTS_OK)
            return complain(st, err);
        std::cout << report.str();
        report_time();
        return failures == 0 ? 0 : 1;
    }

    if (qsystem->parsed()) {
        if (qn < 1) {
            std::cerr << "error: --n must be >= 1\n";
            return 2;
        }
        StringOut err, report;
        int failures = 0;
        qts_status st = qts_qsystem(qn, flag_nc ? 1 : 0, &report.s, &failures, &err.s);
        if (st != QTS_OK)
            return complain(st, err);
        std::cout << report.str();
        report_time();
        return failures == 0 ? 0 : 1;
    }

    // oracle
    BoundaryHandle b;
    if (int rc = load_boundary(boundary_file, b))
        return rc;
    int i = 0, j = 0;
    if (!parse_point(point_text, i, j)) {
        std::cerr << "error: bad point '" << point_text << "' (expected i,j)\n";
        return 2;
    }
    StringOut err, value;
    qts_status st = qts_oracle(b.b, i, j, &value.s, &err.s);
    if (st != QTS_OK)
        return complain(st, err);
    std::cout << value.str() << "\n";
    report_time();
    return 0;
}
