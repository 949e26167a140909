// Exhaustive sweep over plane curves of fixed degree: every nonzero
// homogeneous degree-d form in three variables over GF(q), up to scalar,
// minus those with a GF(q)-linear component.  Records the maximum point
// count and which forms attain it.

#ifndef FQ_SCAN_HPP
#define FQ_SCAN_HPP

#include <vector>

#include "poly.hpp"

namespace fq {

struct ScanOptions {
    long long cap = 10000000;        // refuse larger enumerations unless allow_large
    long long hard_cap = 1000000000; // refuse these even with allow_large
    bool allow_large = false;
    int threads = 0;
    int argmax_keep = 25; // forms retained in the report
};

struct ScanReport {
    long long q = 0;
    int d = 0;
    int monomials = 0;
    long long classes = 0; // scalar classes enumerated
    long long bound = 0;   // (d-1)q + 1
    long long max_count = -1; // -1 when every form had a linear component
    long long argmax_total = 0;
    std::vector<HomogeneousPoly> argmax; // capped at argmax_keep
    bool ok = false; // max_count <= bound (vacuously true when max_count < 0)
};

ScanReport scan_plane(const Field& F, int d, const ScanOptions& opt = {});

} // namespace fq

#endif
