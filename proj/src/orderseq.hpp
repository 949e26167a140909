// Branches of a curve at a rational center and their order sequences.  A
// branch is a user-supplied local parametrization x_i(t), i = 1..r, in the
// affine chart where the center sits at the origin; the order sequence falls
// out of row-reducing the coefficient matrix over GF(q).

#ifndef FQ_ORDERSEQ_HPP
#define FQ_ORDERSEQ_HPP

#include <optional>
#include <span>
#include <vector>

#include "poly.hpp"

namespace fq {

struct Branch {
    Field field;
    int r = 0;
    int T = 0;
    std::vector<TruncatedSeries> series; // x_1(t) ... x_r(t)
};

// Validates: r >= 1, T >= 1, exactly r series all truncated at T, at least
// one nonzero through t^T.
Branch make_branch(const Field& F, int r, int T, std::vector<TruncatedSeries> series);

struct OrderSequence {
    std::vector<int> j; // strictly increasing, j[0] >= 1
    bool complete = false; // all r values visible within the truncation
};

OrderSequence order_sequence(const Branch& b);

// Intersection order of the hyperplane with affine part alpha.x along the
// branch: ord of alpha_1 x_1(t) + ... + alpha_r x_r(t).  nullopt when the
// composite vanishes through t^T.
std::optional<int> mult_at(const Branch& b, std::span<const Elem> alpha);

// Sum of (mult_at(alpha) - 1) over all covectors alpha in PG(r-1, q);
// nullopt as soon as one multiplicity is unresolved.
std::optional<long long> excess_sum(const Branch& b);

// (q^(r-1)+...+1-r)/(q-1), returned as an exact integer; internally also
// evaluated as sum_{i=1..r} (i-1) q^(r-i) and the two forms are checked
// against each other.
long long lemma_rhs(long long q, int r);

struct LemmaReport {
    long long excess = 0;
    long long rhs = 0;
    bool ok = false;
    bool equality = false;
    int branches = 1;
};

// Multi-branch form: the multiplicity per hyperplane is the sum of the
// branch orders, which is exact when the caller supplies every branch at the
// center.  Throws InsufficientPrecision when any order is unresolved.
LemmaReport check_lemma(std::span<const Branch> branches);
LemmaReport check_lemma(const Branch& b);

// Applies an invertible (r+1)x(r+1) matrix over GF(q) to the projective
// parametrization (1, x_1(t), ..., x_r(t)) and renormalizes back into the
// x_0 = 1 chart.  The transformed center must again be (1, 0, ..., 0).
Branch transform_branch(const Branch& b, const std::vector<std::vector<Elem>>& M);

// The branch x_i(t) = t^i: order sequence (1, 2, ..., r).
Branch rational_normal_branch(const Field& F, int r, int T);

} // namespace fq

#endif
