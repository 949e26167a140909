#include "arcs.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "bounds.hpp"
#include "gauss.hpp"
#include "parallel.hpp"
#include "rng.hpp"

namespace fq {

PointSet make_point_set(const Field& F, int r, const std::vector<std::vector<Elem>>& raw) {
    if (r < 2) throw Error(Err::unsupported_ambient, "point sets need ambient dimension >= 2");
    std::vector<ProjPoint> pts;
    pts.reserve(raw.size());
    for (const auto& v : raw) {
        if (static_cast<int>(v.size()) != r + 1)
            throw Error(Err::dimension_mismatch, "coordinate vector has the wrong length");
        pts.push_back(normalize(F, v));
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return PointSet{F, r, std::move(pts)};
}

namespace {

constexpr long long kDenseHyperplaneCap = 1000000;

// Hyperplanes through P, found directly from the nullspace of (P) rather
// than by filtering the full dual space.
std::vector<Hyperplane> hyperplanes_through_direct(const Field& F, int r, const ProjPoint& P) {
    std::vector<std::vector<Elem>> m{P.c};
    auto basis = nullspace(F, std::move(m)); // r rows of length r+1
    auto combos = enum_points(r - 1, F);
    std::vector<Hyperplane> out;
    out.reserve(combos.size());
    std::vector<Elem> v(static_cast<size_t>(r) + 1);
    for (const auto& lam : combos) {
        std::fill(v.begin(), v.end(), 0);
        for (int i = 0; i < r; ++i) {
            if (lam.c[static_cast<size_t>(i)] == 0) continue;
            for (int k = 0; k <= r; ++k)
                v[static_cast<size_t>(k)] =
                    F.add(v[static_cast<size_t>(k)],
                          F.mul(lam.c[static_cast<size_t>(i)], basis[static_cast<size_t>(i)][static_cast<size_t>(k)]));
        }
        out.push_back(Hyperplane{normalize(F, v).c});
    }
    return out;
}

long long s_degree_sparse(const PointSet& X) {
    std::unordered_map<long long, long long> hits;
    for (const auto& P : X.points)
        for (const auto& H : hyperplanes_through_direct(X.field, X.r, P))
            ++hits[enum_index(X.field, H.c)];
    long long best = 0;
    for (const auto& [idx, n] : hits) {
        (void)idx;
        best = std::max(best, n);
    }
    return best;
}

} // namespace

long long s_degree(const PointSet& X) {
    if (X.points.empty()) throw Error(Err::empty_set, "s-degree of an empty set");
    const Field& F = X.field;
    const long long hyps = geom_sum(F.q(), X.r);
    if (hyps > kDenseHyperplaneCap) return s_degree_sparse(X);
    auto all = enum_hyperplanes(X.r, F);
    std::vector<long long> best(static_cast<size_t>(effective_threads(0)) + 1, 0);
    parallel_chunks(static_cast<long long>(all.size()), 0, [&](int w, long long lo, long long hi) {
        long long b = 0;
        for (long long i = lo; i < hi; ++i) {
            long long n = 0;
            for (const auto& P : X.points)
                if (incident(F, P, all[static_cast<size_t>(i)])) ++n;
            b = std::max(b, n);
        }
        best[static_cast<size_t>(w)] = b;
    });
    return *std::max_element(best.begin(), best.end());
}

ArcReport check_arc_bound(const PointSet& X) {
    ArcReport rep;
    rep.N = static_cast<long long>(X.points.size());
    rep.sdeg = s_degree(X);
    Int b = comb_bound(to_int(rep.sdeg), to_int(X.field.q()), X.r);
    rep.bound = static_cast<long long>(b.get_si());
    rep.ok = rep.N <= rep.bound;
    return rep;
}

std::pair<long long, long long> double_count(const PointSet& X, const ProjPoint& P0) {
    const Field& F = X.field;
    ProjPoint P0n = normalize(F, P0.c);
    if (!std::binary_search(X.points.begin(), X.points.end(), P0n))
        throw Error(Err::point_not_in_set, "base point is not in the set");
    auto through = hyperplanes_through_direct(F, X.r, P0n);
    long long lhs = 0;
    for (const auto& H : through)
        for (const auto& P : X.points) {
            if (P == P0n) continue;
            if (incident(F, P, H)) ++lhs;
        }
    long long rhs = (static_cast<long long>(X.points.size()) - 1) * geom_sum(F.q(), X.r - 2);
    return {lhs, rhs};
}

ArcSuiteReport random_subset_suite(int r, const Field& F, const std::vector<long long>& sizes,
                                   int trials, std::uint64_t seed) {
    if (r < 2) throw Error(Err::unsupported_ambient, "subset suite needs ambient dimension >= 2");
    if (trials < 0) throw Error(Err::invalid_argument, "negative trial count");
    auto universe = enum_points(r, F);
    const long long M = static_cast<long long>(universe.size());
    for (long long s : sizes)
        if (s < 1 || s > M) throw Error(Err::invalid_argument, "subset size outside [1, #PG(r,q)]");

    ArcSuiteReport rep;
    rep.r = r;
    rep.q = F.q();
    rep.seed = seed;
    rep.trials = trials;
    rep.sizes = sizes;

    std::mt19937_64 rng(seed);
    std::vector<long long> idx(static_cast<size_t>(M));
    for (long long i = 0; i < M; ++i) idx[static_cast<size_t>(i)] = i;

    auto fail = [&](const std::string& what) {
        if (rep.ok) {
            rep.ok = false;
            rep.first_failure = what;
        }
    };

    for (long long s : sizes) {
        for (int t = 0; t < trials; ++t) {
            // Partial Fisher-Yates: the first s entries become the sample.
            for (long long i = 0; i < s; ++i) {
                long long j = i + static_cast<long long>(uniform_below(rng, static_cast<std::uint64_t>(M - i)));
                std::swap(idx[static_cast<size_t>(i)], idx[static_cast<size_t>(j)]);
            }
            std::vector<std::vector<Elem>> raw;
            raw.reserve(static_cast<size_t>(s));
            for (long long i = 0; i < s; ++i) raw.push_back(universe[static_cast<size_t>(idx[static_cast<size_t>(i)])].c);
            PointSet X = make_point_set(F, r, raw);

            ArcReport arc = check_arc_bound(X);
            ++rep.checks;
            if (!arc.ok) {
                std::ostringstream os;
                os << "cardinality bound failed at size " << s << " trial " << t << " (N=" << arc.N
                   << " bound=" << arc.bound << ")";
                fail(os.str());
            }
            auto [lhs, rhs] = double_count(X, X.points.front());
            ++rep.checks;
            if (lhs != rhs) {
                std::ostringstream os;
                os << "double count mismatch at size " << s << " trial " << t << " (" << lhs << " != " << rhs
                   << ")";
                fail(os.str());
            }
        }
    }
    return rep;
}

} // namespace fq
