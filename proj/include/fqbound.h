/*
 * fqbound: exact verification toolkit for rational-point bounds on projective
 * curves over small finite fields.
 *
 * All functions return a status code; results travel through out-parameters.
 * Reports are heap-allocated JSON strings released with fqb_string_free.
 * On any non-OK status, fqb_last_error() describes the failure (thread-local).
 *
 * Status semantics: FQB_E_MATH means the inputs were fine but a checked
 * mathematical statement failed, which signals either an implementation bug
 * or a hypothesis violation; report-producing calls still write their report
 * in that case.  FQB_E_INPUT and FQB_E_LIMIT never write a report.
 */

#ifndef FQBOUND_H
#define FQBOUND_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fqb_status {
    FQB_OK = 0,
    FQB_E_MATH = 1,
    FQB_E_INPUT = 2,
    FQB_E_LIMIT = 3
} fqb_status;

typedef struct fqb_field fqb_field;
typedef struct fqb_curve fqb_curve;
typedef struct fqb_pointset fqb_pointset;
typedef struct fqb_branch fqb_branch;

const char* fqb_version(void);
const char* fqb_last_error(void);
void fqb_string_free(char* s);

/* ---- finite fields ------------------------------------------------- */

/* GF(p^e) with the default modulus. */
fqb_status fqb_field_new(int p, int e, fqb_field** out);
/* Factors q as p^e first; q must be a prime power <= 65536. */
fqb_status fqb_field_new_q(long long q, fqb_field** out);
/* modulus: e+1 coefficients, constant term first, monic. */
fqb_status fqb_field_new_modulus(int p, int e, const int* modulus, int len, fqb_field** out);
void fqb_field_free(fqb_field* f);

long long fqb_field_order(const fqb_field* f);
/* {"p":..., "e":..., "modulus":[...]} */
fqb_status fqb_field_describe(const fqb_field* f, char** out_json);

/* Elements are indices in [0, q); see the library documentation. */
fqb_status fqb_field_add(const fqb_field* f, long long a, long long b, long long* out);
fqb_status fqb_field_mul(const fqb_field* f, long long a, long long b, long long* out);
fqb_status fqb_field_inv(const fqb_field* f, long long a, long long* out);

/* ---- curves --------------------------------------------------------- */

fqb_status fqb_curve_from_json(const char* json, fqb_curve** out);
fqb_status fqb_curve_from_file(const char* path, fqb_curve** out);
fqb_status fqb_curve_catalog(const char* name, fqb_curve** out);
void fqb_curve_free(fqb_curve* c);
fqb_status fqb_curve_to_json(const fqb_curve* c, char** out_json);

/* JSON array of {name, q, ambient_dim, degree} for every built-in curve. */
fqb_status fqb_catalog_list(char** out_json);

/* Coordinate change x_i <- sum_j m[i*(r+1)+j] x_j; m is the row-major
 * (r+1)x(r+1) matrix of element indices, n its total length. */
fqb_status fqb_curve_transform(const fqb_curve* c, const long long* m, int n, fqb_curve** out);

/* Rational points over GF(q^ext); ext = 1 for the base field.
 * with_points != 0 keeps the coordinate list in the report (when small). */
fqb_status fqb_count(const fqb_curve* c, int ext, int with_points, char** out_json);

/* Every applicable bound, the combinatorial bound at the observed s-degree,
 * and the known-exception flag.  FQB_E_MATH when the headline bound fails
 * on a curve that is not the flagged exception. */
fqb_status fqb_verify(const fqb_curve* c, char** out_json);

/* Hyperplane-containment probe over extensions up to mmax. */
fqb_status fqb_nondeg(const fqb_curve* c, int mmax, char** out_json);

/* ---- bound formulas (no curve required) ------------------------------ */

/* Exact values of all bounds at (q, r, d), with the two refined bounds
 * cross-checked as rationals. */
fqb_status fqb_bounds_eval(long long q, int r, long long d, char** out_json);

/* Identity / inequality sweep behind the bound comparisons, d in
 * [d_lo, d_hi].  FQB_E_MATH on any counterexample. */
fqb_status fqb_proof_inequalities(long long q, int r, long long d_lo, long long d_hi,
                                  char** out_json);

/* ---- point sets ------------------------------------------------------ */

fqb_status fqb_pointset_from_json(const char* json, fqb_pointset** out);
fqb_status fqb_pointset_from_file(const char* path, fqb_pointset** out);
void fqb_pointset_free(fqb_pointset* ps);

/* s-degree plus the cardinality bound it implies. */
fqb_status fqb_sdeg(const fqb_pointset* ps, char** out_json);

/* Pseudorandom subsets of PG(r,q): cardinality bound and hyperplane
 * double-count identity per subset.  sizes may be NULL (built-in default). */
fqb_status fqb_arc_suite(int r, long long q, const long long* sizes, int nsizes, int trials,
                         uint64_t seed, char** out_json);

/* ---- branches and order sequences ------------------------------------ */

fqb_status fqb_branch_from_json(const char* json, fqb_branch** out);
fqb_status fqb_branch_from_file(const char* path, fqb_branch** out);
void fqb_branch_free(fqb_branch* b);
fqb_status fqb_branch_to_json(const fqb_branch* b, char** out_json);

fqb_status fqb_branch_transform(const fqb_branch* b, const long long* m, int n, fqb_branch** out);

/* Order sequence, the hyperplane excess sum, and the exact threshold it is
 * measured against.  Multiple branches are treated as one singular center. */
fqb_status fqb_lemma(const fqb_branch* const* branches, int n, char** out_json);

/* ---- sweeps ---------------------------------------------------------- */

/* Every scalar class of degree-d plane forms over GF(q) without a linear
 * component; reports the maximum point count and the attaining forms. */
fqb_status fqb_scan_plane(long long q, int d, int allow_large, char** out_json);

/* Composite deterministic verification run; q = 0 or r = 0 mean "all". */
fqb_status fqb_suite(uint64_t seed, long long q, int r, int trials, int precision,
                     char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* FQBOUND_H */
