#include "scan.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "parallel.hpp"

namespace fq {

namespace {

std::vector<Monomial> degree_monomials(int d) {
    std::vector<Monomial> out;
    for (int e0 = 0; e0 <= d; ++e0)
        for (int e1 = 0; e1 + e0 <= d; ++e1) out.push_back(Monomial{{e0, e1, d - e0 - e1}});
    std::sort(out.begin(), out.end());
    return out;
}

struct WorkerState {
    long long max = -1;
    long long total = 0; // forms attaining max
    std::vector<std::vector<Elem>> kept;
};

// Odometer step through normalized coefficient vectors (first nonzero = 1,
// later coordinates fastest).  Returns false once the enumeration wraps.
bool advance(std::vector<Elem>& c, int& lead, int M, long long q) {
    for (int j = M - 1; j > lead; --j) {
        if (c[static_cast<size_t>(j)] + 1 < q) {
            ++c[static_cast<size_t>(j)];
            return true;
        }
        c[static_cast<size_t>(j)] = 0;
    }
    c[static_cast<size_t>(lead)] = 0;
    if (++lead >= M) return false;
    c[static_cast<size_t>(lead)] = 1;
    return true;
}

} // namespace

ScanReport scan_plane(const Field& F, int d, const ScanOptions& opt) {
    if (d < 2) throw Error(Err::invalid_argument, "plane scan needs degree >= 2");
    const long long q = F.q();
    auto monos = degree_monomials(d);
    const int M = static_cast<int>(monos.size());

    // (q^M - 1)/(q - 1) scalar classes; bail before overflow.
    if (static_cast<double>(M - 1) * std::log2(static_cast<double>(q)) > 62.0)
        throw Error(Err::scan_too_large, "enumeration size exceeds 2^62 forms");
    long long classes = 0, pw = 1;
    for (int i = 0; i < M; ++i) {
        classes += pw;
        pw *= q;
    }
    if (classes > opt.hard_cap || (classes > opt.cap && !opt.allow_large)) {
        std::ostringstream os;
        os << "scan would enumerate " << classes << " forms (cap "
           << (opt.allow_large ? opt.hard_cap : opt.cap) << ")";
        throw Error(Err::scan_too_large, os.str());
    }

    auto points = enum_points(2, F);
    const int npts = static_cast<int>(points.size());
    // value[i][m] = m-th monomial evaluated at the i-th point
    std::vector<std::vector<Elem>> value(static_cast<size_t>(npts), std::vector<Elem>(static_cast<size_t>(M)));
    for (int i = 0; i < npts; ++i)
        for (int m = 0; m < M; ++m) {
            Elem acc = 1;
            for (int v = 0; v < 3; ++v)
                acc = F.mul(acc, F.pow(points[static_cast<size_t>(i)].c[static_cast<size_t>(v)],
                                       monos[static_cast<size_t>(m)].e[static_cast<size_t>(v)]));
            value[static_cast<size_t>(i)][static_cast<size_t>(m)] = acc;
        }

    // Offsets of each leading-position class, for mid-stream decoding.
    std::vector<long long> offset(static_cast<size_t>(M) + 1, 0);
    {
        long long sz = 1;
        for (int i = 1; i <= M; ++i) sz *= q; // q^M
        long long acc = 0;
        for (int lead = 0; lead < M; ++lead) {
            offset[static_cast<size_t>(lead)] = acc;
            sz /= q; // q^(M-1-lead)
            acc += sz;
        }
        offset[static_cast<size_t>(M)] = acc;
    }

    auto decode = [&](long long idx, std::vector<Elem>& c, int& lead) {
        int l = 0;
        while (idx >= offset[static_cast<size_t>(l) + 1]) ++l;
        long long tail = idx - offset[static_cast<size_t>(l)];
        std::fill(c.begin(), c.end(), 0);
        c[static_cast<size_t>(l)] = 1;
        for (int j = M - 1; j > l; --j) {
            c[static_cast<size_t>(j)] = static_cast<Elem>(tail % q);
            tail /= q;
        }
        lead = l;
    };

    auto as_poly = [&](const std::vector<Elem>& c) {
        std::vector<std::pair<Monomial, Elem>> terms;
        for (int m = 0; m < M; ++m)
            if (c[static_cast<size_t>(m)] != 0) terms.emplace_back(monos[static_cast<size_t>(m)], c[static_cast<size_t>(m)]);
        return HomogeneousPoly::make(F, 3, d, std::move(terms));
    };

    std::vector<WorkerState> state(static_cast<size_t>(effective_threads(opt.threads)) + 1);
    parallel_chunks(classes, opt.threads, [&](int w, long long lo, long long hi) {
        WorkerState& st = state[static_cast<size_t>(w)];
        std::vector<Elem> c(static_cast<size_t>(M));
        int lead = 0;
        decode(lo, c, lead);
        for (long long idx = lo; idx < hi; ++idx) {
            long long n = 0;
            for (int i = 0; i < npts; ++i) {
                Elem acc = 0;
                const auto& row = value[static_cast<size_t>(i)];
                for (int m = lead; m < M; ++m)
                    if (c[static_cast<size_t>(m)] != 0 && row[static_cast<size_t>(m)] != 0)
                        acc = F.add(acc, F.mul(c[static_cast<size_t>(m)], row[static_cast<size_t>(m)]));
                if (acc == 0) ++n;
            }
            // Testing for a linear component is far slower than counting, so
            // only argmax candidates are ever tested; the final maximum is
            // unaffected because the running maximum never decreases.
            if (n >= st.max) {
                HomogeneousPoly f = as_poly(c);
                if (!has_linear_component(F, f)) {
                    if (n > st.max) {
                        st.max = n;
                        st.total = 0;
                        st.kept.clear();
                    }
                    ++st.total;
                    if (static_cast<int>(st.kept.size()) < opt.argmax_keep) st.kept.push_back(c);
                }
            }
            if (idx + 1 < hi) advance(c, lead, M, q);
        }
    });

    ScanReport rep;
    rep.q = q;
    rep.d = d;
    rep.monomials = M;
    rep.classes = classes;
    rep.bound = (static_cast<long long>(d) - 1) * q + 1;
    for (const auto& st : state) rep.max_count = std::max(rep.max_count, st.max);
    for (const auto& st : state) {
        if (st.max != rep.max_count) continue;
        rep.argmax_total += st.total;
        for (const auto& c : st.kept)
            if (static_cast<int>(rep.argmax.size()) < opt.argmax_keep) rep.argmax.push_back(as_poly(c));
    }
    rep.ok = rep.max_count <= rep.bound;
    return rep;
}

} // namespace fq
