// s-degrees of finite point sets in PG(r,q), the combinatorial cardinality
// bound they satisfy, and the hyperplane double-counting identity, plus a
// seeded property harness over pseudorandom subsets.

#ifndef FQ_ARCS_HPP
#define FQ_ARCS_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "projspace.hpp"

namespace fq {

struct PointSet {
    Field field;
    int r = 0;
    std::vector<ProjPoint> points; // normalized, deduplicated
};

// Normalizes and deduplicates; rejects vectors of the wrong length.
PointSet make_point_set(const Field& F, int r, const std::vector<std::vector<Elem>>& raw);

// Maximum number of points on one hyperplane.  Exhaustive over all
// hyperplanes when there are at most 10^6 of them; otherwise accumulates
// counts only over hyperplanes through some point of the set.
long long s_degree(const PointSet& X);

struct ArcReport {
    long long N = 0;
    long long sdeg = 0;
    long long bound = 0; // (d'-1)q + 1 + floor((d'-1)/(q^(r-2)+...+1))
    bool ok = false;
};

ArcReport check_arc_bound(const PointSet& X);

// (direct, formula): direct counts pairs (P, H) with P in X minus {P0} and H
// a hyperplane through both P0 and P; formula = (N-1)(q^(r-2)+...+1).
std::pair<long long, long long> double_count(const PointSet& X, const ProjPoint& P0);

struct ArcSuiteReport {
    int r = 0;
    long long q = 0;
    std::uint64_t seed = 0;
    int trials = 0;
    std::vector<long long> sizes;
    long long checks = 0;
    bool ok = true;
    std::string first_failure; // empty when ok
};

// For each requested size and trial, draws a pseudorandom subset of PG(r,q)
// and verifies both the cardinality bound and the double-counting identity.
// Fully deterministic under the seed.
ArcSuiteReport random_subset_suite(int r, const Field& F, const std::vector<long long>& sizes,
                                   int trials, std::uint64_t seed);

} // namespace fq

#endif
