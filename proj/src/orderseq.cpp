#include "orderseq.hpp"

#include <cassert>

#include "gauss.hpp"
#include "parallel.hpp"

namespace fq {

Branch make_branch(const Field& F, int r, int T, std::vector<TruncatedSeries> series) {
    if (r < 1) throw Error(Err::invalid_argument, "branch needs at least one coordinate");
    if (T < 1) throw Error(Err::invalid_argument, "truncation must be positive");
    if (static_cast<int>(series.size()) != r)
        throw Error(Err::dimension_mismatch, "branch needs exactly r coordinate series");
    bool any = false;
    for (const auto& s : series) {
        if (s.T != T) throw Error(Err::truncation_mismatch, "coordinate series disagree on truncation");
        for (Elem c : s.coeffs) {
            if (c >= F.q()) throw Error(Err::parse_error, "series coefficient outside the field");
            if (c != 0) any = true;
        }
    }
    if (!any) throw Error(Err::all_series_zero, "every coordinate series vanishes through the truncation");
    return Branch{F, r, T, std::move(series)};
}

OrderSequence order_sequence(const Branch& b) {
    // r x T matrix; column k holds the t^(k+1) coefficients.
    std::vector<std::vector<Elem>> m(b.r);
    for (int i = 0; i < b.r; ++i) m[i] = b.series[i].coeffs;
    Echelon ech = row_reduce(b.field, m);
    if (ech.rank == 0) throw Error(Err::all_series_zero, "coefficient matrix has rank zero");
    OrderSequence out;
    out.j.reserve(ech.pivots.size());
    for (int col : ech.pivots) out.j.push_back(col + 1); // t-exponent, not column index
    out.complete = ech.rank == b.r;
    return out;
}

std::optional<int> mult_at(const Branch& b, std::span<const Elem> alpha) {
    if (static_cast<int>(alpha.size()) != b.r)
        throw Error(Err::dimension_mismatch, "covector length does not match the ambient dimension");
    bool nonzero = false;
    for (Elem a : alpha) nonzero = nonzero || a != 0;
    if (!nonzero) throw Error(Err::zero_covector, "covector is identically zero");
    TruncatedSeries h = series_compose_linear(b.field, alpha, b.series);
    return ord(h);
}

std::optional<long long> excess_sum(const Branch& b) {
    auto covectors = enum_points(b.r - 1, b.field);
    const long long n = static_cast<long long>(covectors.size());
    std::vector<long long> partial(static_cast<size_t>(effective_threads(0)) + 1, 0);
    std::vector<char> unresolved(partial.size(), 0);
    parallel_chunks(n, 0, [&](int w, long long lo, long long hi) {
        long long acc = 0;
        for (long long i = lo; i < hi; ++i) {
            auto m = mult_at(b, covectors[static_cast<size_t>(i)].c);
            if (!m) {
                unresolved[static_cast<size_t>(w)] = 1;
                return;
            }
            acc += *m - 1;
        }
        partial[static_cast<size_t>(w)] = acc;
    });
    long long total = 0;
    for (size_t w = 0; w < partial.size(); ++w) {
        if (unresolved[w]) return std::nullopt;
        total += partial[w];
    }
    return total;
}

long long lemma_rhs(long long q, int r) {
    if (q < 2 || r < 1) throw Error(Err::invalid_argument, "lemma threshold needs q >= 2, r >= 1");
    long long num = geom_sum(q, r - 1) - r;
    assert(num % (q - 1) == 0);
    long long closed = num / (q - 1);
    long long weighted = 0, pw = 1;
    for (int i = r; i >= 1; --i) {
        weighted += (i - 1) * pw;
        pw *= q;
    }
    assert(closed == weighted);
    return closed;
}

LemmaReport check_lemma(std::span<const Branch> branches) {
    if (branches.empty()) throw Error(Err::empty_set, "no branches supplied");
    const Field& F = branches[0].field;
    const int r = branches[0].r;
    for (const auto& b : branches) {
        if (!(b.field == F)) throw Error(Err::incompatible_fields, "branches live over different fields");
        if (b.r != r) throw Error(Err::dimension_mismatch, "branches disagree on the ambient dimension");
    }
    auto covectors = enum_points(r - 1, F);
    long long excess = 0;
    for (const auto& alpha : covectors) {
        long long mult = 0;
        for (const auto& b : branches) {
            auto m = mult_at(b, alpha.c);
            if (!m)
                throw Error(Err::insufficient_precision,
                            "a hyperplane order exceeds the truncation; raise the precision");
            mult += *m;
        }
        excess += mult - 1;
    }
    LemmaReport rep;
    rep.excess = excess;
    rep.rhs = lemma_rhs(F.q(), r);
    rep.ok = rep.excess >= rep.rhs;
    rep.equality = rep.excess == rep.rhs;
    rep.branches = static_cast<int>(branches.size());
    return rep;
}

LemmaReport check_lemma(const Branch& b) { return check_lemma(std::span<const Branch>(&b, 1)); }

Branch rational_normal_branch(const Field& F, int r, int T) {
    if (T < r) throw Error(Err::invalid_argument, "truncation below the ambient dimension");
    std::vector<TruncatedSeries> series;
    series.reserve(static_cast<size_t>(r));
    for (int i = 1; i <= r; ++i) {
        std::vector<Elem> c(static_cast<size_t>(T), 0);
        c[static_cast<size_t>(i) - 1] = 1;
        series.push_back(series_make(T, std::move(c)));
    }
    return make_branch(F, r, T, std::move(series));
}

namespace {

// Dense series with constant term, length T+1, for the chart renormalization.
using Full = std::vector<Elem>;

Full mul_full(const Field& F, const Full& a, const Full& b) {
    Full out(a.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t k = 0; i + k < out.size() && k < b.size(); ++k)
            out[i + k] = F.add(out[i + k], F.mul(a[i], b[k]));
    }
    return out;
}

Full inv_full(const Field& F, const Full& a) {
    // Standard recurrence for the reciprocal of a unit power series.
    Full out(a.size(), 0);
    Elem u = F.inv(a[0]);
    out[0] = u;
    for (size_t k = 1; k < a.size(); ++k) {
        Elem acc = 0;
        for (size_t i = 1; i <= k && i < a.size(); ++i)
            acc = F.add(acc, F.mul(a[i], out[k - i]));
        out[k] = F.neg(F.mul(u, acc));
    }
    return out;
}

} // namespace

Branch transform_branch(const Branch& b, const std::vector<std::vector<Elem>>& M) {
    const Field& F = b.field;
    const int n = b.r + 1;
    if (static_cast<int>(M.size()) != n)
        throw Error(Err::dimension_mismatch, "matrix must be (r+1) x (r+1)");
    for (const auto& row : M)
        if (static_cast<int>(row.size()) != n)
            throw Error(Err::dimension_mismatch, "matrix must be (r+1) x (r+1)");
    if (rank_of(F, M) != n) throw Error(Err::invalid_argument, "matrix is singular");

    // y_j = M[j][0] * 1 + sum_i M[j][i] x_i, as full series.
    std::vector<Full> y(static_cast<size_t>(n), Full(static_cast<size_t>(b.T) + 1, 0));
    for (int j = 0; j < n; ++j) {
        y[static_cast<size_t>(j)][0] = M[static_cast<size_t>(j)][0];
        for (int i = 1; i < n; ++i) {
            Elem c = M[static_cast<size_t>(j)][static_cast<size_t>(i)];
            if (c == 0) continue;
            const auto& xi = b.series[static_cast<size_t>(i - 1)].coeffs;
            for (int k = 0; k < b.T; ++k)
                y[static_cast<size_t>(j)][static_cast<size_t>(k) + 1] =
                    F.add(y[static_cast<size_t>(j)][static_cast<size_t>(k) + 1], F.mul(c, xi[static_cast<size_t>(k)]));
        }
    }
    if (y[0][0] == 0)
        throw Error(Err::chart_degenerate, "transformed branch leaves the x0 = 1 chart");
    for (int j = 1; j < n; ++j)
        if (y[static_cast<size_t>(j)][0] != 0)
            throw Error(Err::invalid_argument, "transformed center is not (1, 0, ..., 0)");

    Full y0inv = inv_full(F, y[0]);
    std::vector<TruncatedSeries> out;
    out.reserve(static_cast<size_t>(b.r));
    for (int j = 1; j < n; ++j) {
        Full prod = mul_full(F, y[static_cast<size_t>(j)], y0inv);
        std::vector<Elem> tail(prod.begin() + 1, prod.end());
        out.push_back(series_make(b.T, std::move(tail)));
    }
    return make_branch(F, b.r, b.T, std::move(out));
}

} // namespace fq
