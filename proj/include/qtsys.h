#ifndef QTSYS_H
#define QTSYS_H

/* C interface to the quantum T-system engine. All functions return a
 * qts_status; results come back through out-parameters. Strings returned
 * through char** are heap-allocated and must be released with
 * qts_string_free. Handles are opaque and freed with their _free call.
 * On failure, *errmsg (when the parameter is present and non-NULL) receives
 * a human-readable message. */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qts_status {
    QTS_OK = 0,
    QTS_E_BAD_WINDOW,
    QTS_E_NOT_MUTABLE,
    QTS_E_EDGE_COLUMN,
    QTS_E_BELOW_BOUNDARY,
    QTS_E_WINDOW_EXHAUSTED,
    QTS_E_CONE_VIOLATION,
    QTS_E_COLUMN_CLASH,
    QTS_E_MISSING_VALUE,
    QTS_E_UNCERTIFIED_SWAP,
    QTS_E_NON_INVERTIBLE,
    QTS_E_PARSE,
    QTS_E_BAD_ARGUMENT,
    QTS_E_INTERNAL
} qts_status;

typedef struct qts_boundary qts_boundary;
typedef struct qts_poly qts_poly;

const char* qts_status_name(qts_status s);
void qts_string_free(char* s);

/* ---- boundaries ------------------------------------------------------- */

/* Text format: "window <imin> <imax>", "heights <j_imin> ... <j_imax>",
 * optional "value <i> <p>/<q>" lines. */
qts_status qts_boundary_parse(const char* text, qts_boundary** out, char** errmsg);
qts_status qts_boundary_fundamental(int imin, int imax, qts_boundary** out,
                                    char** errmsg);
qts_status qts_boundary_text(const qts_boundary* b, char** out);
qts_status qts_boundary_mutate(const qts_boundary* b, int column, int dir,
                               qts_boundary** out, char** errmsg);
void qts_boundary_free(qts_boundary* b);

/* ---- solving ---------------------------------------------------------- */

qts_status qts_solve_above(const qts_boundary* b, int i, int j, qts_poly** out,
                           char** errmsg);
/* (i,j) is the point above the boundary; *k,*l receive the reflected point
 * whose value is returned. */
qts_status qts_solve_below(const qts_boundary* b, int i, int j, int* k, int* l,
                           qts_poly** out, char** errmsg);
qts_status qts_poly_text(const qts_poly* p, char** out);
qts_status qts_poly_parse(const char* text, qts_poly** out, char** errmsg);
int qts_poly_equal(const qts_poly* a, const qts_poly* b);
void qts_poly_free(qts_poly* p);

/* q = 1 specialization of a polynomial at the boundary's value lines;
 * *out receives "p" or "p/q". */
qts_status qts_poly_eval_q1(const qts_boundary* b, const qts_poly* p, char** out,
                            char** errmsg);

/* Exact classical recursion value at (i,j); *out as above. */
qts_status qts_oracle(const qts_boundary* b, int i, int j, char** out, char** errmsg);

/* Connector-path monomials for the projection of (i,j), newline-separated,
 * in lexicographic connector order; *count receives the path count. */
qts_status qts_paths(const qts_boundary* b, int i, int j, int entry, int exit_,
                     char** out, size_t* count, char** errmsg);

/* ---- verification ----------------------------------------------------- */

/* suite: tsys | qcomm | positivity | bar | exchange | conserved | ysys.
 * The report is the deterministic PASS/FAIL text; *failures the number of
 * failed checks. */
qts_status qts_verify(const qts_boundary* b, const char* suite, int range,
                      uint64_t seed, int mutations, char** report, int* failures,
                      char** errmsg);

/* Quantum Q-system (noncommutative = 0) or free-group-algebra checks
 * (noncommutative = 1) up to n; report text includes R_j values. */
qts_status qts_qsystem(int n, int noncommutative, char** report, int* failures,
                       char** errmsg);

#ifdef __cplusplus
}
#endif

#endif /* QTSYS_H */
