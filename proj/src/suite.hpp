// Composite verification run: the exact inequality sweep, the pseudorandom
// arc suites, order-sequence checks on built-in and random branches, and the
// incidence double count on every catalog curve.

#ifndef FQ_SUITE_HPP
#define FQ_SUITE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "orderseq.hpp"

namespace fq {

struct SuiteOptions {
    std::uint64_t seed = 1;
    long long q = 0; // 0 = all built-in values
    int r = 0;       // 0 = all built-in values
    int trials = 20;
    int precision = 0; // 0 = default 4r per branch
};

struct SuiteSection {
    std::string name;
    long long checks = 0;
    bool ok = true;
    std::string detail; // first failure, or a short summary
};

struct SuiteReport {
    SuiteOptions options;
    std::vector<SuiteSection> sections;
    bool ok = true;
    std::string first_failure;
};

SuiteReport run_suite(const SuiteOptions& opt = {});

struct LemmaSweepReport {
    int r = 0;
    long long q = 0;
    int T = 0;
    int trials = 0;
    std::uint64_t seed = 0;
    long long equality_excess = 0; // the built-in branch's excess, = rhs
    long long rhs = 0;
    bool ok = true;
    std::string first_failure;
};

// The built-in branch with order sequence (1..r) must meet the excess target
// exactly; `trials` random full-rank branches must meet or exceed it.
LemmaSweepReport lemma_random_sweep(const Field& F, int r, int T, int trials, std::uint64_t seed);

} // namespace fq

#endif
