// Sparse multivariate homogeneous polynomials over GF(q) and truncated
// univariate power series.  Arithmetic is limited to what the point counting
// and order-sequence machinery needs: exact evaluation, trial division by
// linear forms, linear substitution, and series composition.

#ifndef FQ_POLY_HPP
#define FQ_POLY_HPP

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "gf.hpp"
#include "projspace.hpp"

namespace fq {

struct Monomial {
    std::vector<int> e; // exponents, one per variable
    int degree() const;
    bool operator==(const Monomial& o) const = default;
    auto operator<=>(const Monomial& o) const = default;
};

class HomogeneousPoly {
public:
    // Validates: all terms of total degree exactly `degree`, coefficients in
    // the field, nonzero after merging.  The zero polynomial is rejected.
    static HomogeneousPoly make(const Field& F, int nvars, int degree,
                                std::vector<std::pair<Monomial, Elem>> terms);

    int nvars() const { return nvars_; }
    int degree() const { return degree_; }
    const std::map<Monomial, Elem>& terms() const { return terms_; }

    bool operator==(const HomogeneousPoly& o) const = default;

    // True when o equals a nonzero scalar multiple of *this.
    bool proportional_to(const Field& F, const HomogeneousPoly& o) const;

private:
    int nvars_ = 0;
    int degree_ = 0;
    std::map<Monomial, Elem> terms_;
};

Elem poly_eval(const Field& F, const HomogeneousPoly& f, std::span<const Elem> coords);
Elem poly_eval(const Field& F, const HomogeneousPoly& f, const ProjPoint& P);

// Exact trial division by a linear form.
bool divides_linear(const Field& F, const HomogeneousPoly& f, const HomogeneousPoly& lin);

// First (hyperplane enumeration order) GF(q)-linear form dividing f, if any.
// Plane curves only (nvars = 3).
std::optional<HomogeneousPoly> has_linear_component(const Field& F, const HomogeneousPoly& f);

// Substitute x_i <- sum_j M[i][j] x_j (M given row-major, nvars x nvars).
// Used by the projective change-of-coordinates helper.
HomogeneousPoly substitute_linear(const Field& F, const HomogeneousPoly& f,
                                  const std::vector<std::vector<Elem>>& M);

// Truncated power series with zero constant term: coeffs[k] is the
// coefficient of t^(k+1), k in [0, T).
struct TruncatedSeries {
    int T = 0;
    std::vector<Elem> coeffs;
    bool operator==(const TruncatedSeries& o) const = default;
};

TruncatedSeries series_make(int T, std::vector<Elem> coeffs);

TruncatedSeries series_compose_linear(const Field& F, std::span<const Elem> coeff,
                                      std::span<const TruncatedSeries> branch);

// Smallest k with a nonzero t^k coefficient; nullopt when the stored window
// is identically zero ("exceeds truncation").
std::optional<int> ord(const TruncatedSeries& s);

} // namespace fq

#endif
