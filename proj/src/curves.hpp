// Curve descriptions over GF(q), rational-point counting over the base field
// and its extensions, span and nondegeneracy checks, and the built-in catalog.

#ifndef FQ_CURVES_HPP
#define FQ_CURVES_HPP

#include <optional>
#include <string>
#include <vector>

#include "poly.hpp"

namespace fq {

struct CurveDef {
    Field field;
    int r = 2; // ambient projective dimension
    std::vector<HomogeneousPoly> equations;
    int degree = 1; // declared; overridden by the form degree for plane curves
    std::string name;
};

CurveDef make_curve(Field field, int r, std::vector<HomogeneousPoly> equations, int degree,
                    std::string name = {});

struct CountOptions {
    long long retain_cap = 100000; // keep the point list up to this many points
    int threads = 0;               // 0 = auto
    bool retain = true;
};

struct PointCount {
    int m = 1;          // extension degree counted over
    long long count = 0;
    std::optional<std::vector<ProjPoint>> points; // retained unless over cap
    Field counting_field; // GF(q^m) the points live in
};

PointCount count_points(const CurveDef& c, const CountOptions& opt = {});
PointCount count_points_ext(const CurveDef& c, int m, const CountOptions& opt = {});

// Span of C(F_q); requires the point list to be retainable.
int rational_points_span(const CurveDef& c);

enum class Nondeg { degenerate, undetermined, likely_nondegenerate };

struct NondegReport {
    Nondeg verdict = Nondeg::undetermined;
    std::optional<Hyperplane> witness; // containing hyperplane (candidate or proven)
    int mmax = 1;
    long long witness_points = 0; // points on the witness over GF(q^mmax)
};

// Heuristic: tests whether some GF(q)-hyperplane contains every GF(q^m)-point
// for all m <= mmax.  "degenerate" is a proof (more than degree-many points on
// one hyperplane); "likely_nondegenerate" is only evidence.
NondegReport nondegeneracy_heuristic(const CurveDef& c, int mmax);

// Built-in curves: sziklai-K, hermitian(q), twisted-cubic(q),
// rational-normal(r,q), elliptic-quartic-example(q).
CurveDef catalog(const std::string& name);

// The concrete instances exercised by the verification suites.
std::vector<std::string> catalog_names();

// x_i <- sum_j M[i][j] x_j on every equation; M must be invertible.
CurveDef transform_curve(const CurveDef& c, const std::vector<std::vector<Elem>>& M);

} // namespace fq

#endif
