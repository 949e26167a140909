#include "curves.hpp"

#include <algorithm>
#include <charconv>

#include "gauss.hpp"
#include "parallel.hpp"

namespace fq {

CurveDef make_curve(Field field, int r, std::vector<HomogeneousPoly> equations, int degree,
                    std::string name) {
    if (r < 2) throw Error(Err::invalid_argument, "ambient dimension must be >= 2");
    if (equations.empty()) throw Error(Err::invalid_argument, "a curve needs at least one equation");
    for (const auto& f : equations)
        if (f.nvars() != r + 1)
            throw Error(Err::dimension_mismatch, "equation variable count must be r+1");
    if (degree < 1) throw Error(Err::invalid_argument, "declared degree must be >= 1");
    // For plane curves the form degree is authoritative.
    if (r == 2 && equations.size() == 1) degree = equations[0].degree();
    return CurveDef{std::move(field), r, std::move(equations), degree, std::move(name)};
}

namespace {

// Points of PG(r,q) in enumeration order, generated directly from a position
// index so disjoint ranges can be handled by different workers.
struct PointRange {
    const Field& F;
    int r;
    std::vector<long long> class_start; // enum index where leading position k starts

    PointRange(const Field& F_, int r_) : F(F_), r(r_) {
        long long acc = 0;
        for (int k = 0; k <= r; ++k) {
            class_start.push_back(acc);
            long long pw = 1;
            for (int i = 0; i < r - k; ++i) pw *= F.q();
            acc += pw;
        }
        class_start.push_back(acc);
    }

    long long total() const { return class_start.back(); }

    std::vector<Elem> at(long long idx) const {
        int lead = 0;
        while (idx >= class_start[lead + 1]) ++lead;
        long long off = idx - class_start[lead];
        std::vector<Elem> v(r + 1, 0);
        v[lead] = 1;
        for (int i = r; i > lead; --i) {
            v[i] = static_cast<Elem>(off % F.q());
            off /= F.q();
        }
        return v;
    }
};

bool on_curve(const Field& F, const std::vector<HomogeneousPoly>& eqs,
              std::span<const Elem> coords) {
    for (const auto& f : eqs)
        if (poly_eval(F, f, coords) != 0) return false;
    return true;
}

PointCount count_over(const Field& F, int r, const std::vector<HomogeneousPoly>& eqs, int m,
                      const CountOptions& opt) {
    PointRange range(F, r);
    const long long n = range.total();
    const int workers = effective_threads(opt.threads);
    std::vector<long long> counts(static_cast<size_t>(std::min<long long>(workers, std::max(1LL, n))), 0);
    std::vector<std::vector<ProjPoint>> lists(counts.size());
    parallel_chunks(n, workers, [&](int w, long long lo, long long hi) {
        for (long long i = lo; i < hi; ++i) {
            auto v = range.at(i);
            if (on_curve(F, eqs, v)) {
                ++counts[w];
                if (opt.retain) lists[w].push_back(ProjPoint{std::move(v)});
            }
        }
    });
    PointCount pc{m, 0, std::nullopt, F};
    for (long long c : counts) pc.count += c;
    if (opt.retain && pc.count <= opt.retain_cap) {
        std::vector<ProjPoint> all;
        all.reserve(static_cast<size_t>(pc.count));
        for (auto& l : lists)
            for (auto& P : l) all.push_back(std::move(P));
        pc.points = std::move(all);
    }
    return pc;
}

} // namespace

PointCount count_points(const CurveDef& c, const CountOptions& opt) {
    return count_over(c.field, c.r, c.equations, 1, opt);
}

PointCount count_points_ext(const CurveDef& c, int m, const CountOptions& opt) {
    if (m < 1) throw Error(Err::invalid_argument, "extension degree must be >= 1");
    if (m == 1) return count_points(c, opt);
    long long qm = 1;
    for (int i = 0; i < m; ++i) {
        qm *= c.field.q();
        if (qm > kMaxFieldSize) throw Error(Err::field_too_large, "q^m exceeds 2^16");
    }
    const Field ext(c.field.p(), c.field.e() * m);
    const Embedding phi(c.field, ext);
    std::vector<HomogeneousPoly> eqs;
    for (const auto& f : c.equations) {
        std::vector<std::pair<Monomial, Elem>> terms;
        for (const auto& [mono, coeff] : f.terms()) terms.emplace_back(mono, phi(coeff));
        eqs.push_back(HomogeneousPoly::make(ext, f.nvars(), f.degree(), std::move(terms)));
    }
    return count_over(ext, c.r, eqs, m, opt);
}

int rational_points_span(const CurveDef& c) {
    const PointCount pc = count_points(c);
    if (!pc.points) throw Error(Err::no_points_retained, "point list exceeds the retention cap");
    if (pc.points->empty()) throw Error(Err::empty_set, "curve has no rational points");
    return span_dim(c.field, *pc.points);
}

NondegReport nondegeneracy_heuristic(const CurveDef& c, int mmax) {
    if (mmax < 1) throw Error(Err::invalid_argument, "mmax must be >= 1");
    NondegReport rep;
    rep.mmax = mmax;
    // Per-extension point lists; FieldTooLarge propagates from the counting.
    std::vector<PointCount> layers;
    bool any_point = false;
    for (int m = 1; m <= mmax; ++m) {
        CountOptions opt;
        opt.retain_cap = 1 << 22;
        layers.push_back(count_points_ext(c, m, opt));
        if (!layers.back().points)
            throw Error(Err::no_points_retained, "extension point list exceeds the retention cap");
        any_point = any_point || layers.back().count > 0;
    }
    if (!any_point) {
        rep.verdict = Nondeg::undetermined;
        return rep;
    }
    for (const auto& H : enum_hyperplanes(c.r, c.field)) {
        bool contains_all = true;
        long long pts_on_H_top = 0;
        for (int m = 1; m <= mmax && contains_all; ++m) {
            const Field& Fm = layers[m - 1].counting_field;
            std::vector<Elem> hm(H.c.size());
            if (m == 1) {
                hm.assign(H.c.begin(), H.c.end());
            } else {
                const Embedding phi(c.field, Fm);
                for (size_t i = 0; i < H.c.size(); ++i) hm[i] = phi(H.c[i]);
            }
            long long on_h = 0;
            for (const auto& P : *layers[m - 1].points) {
                Elem acc = 0;
                for (size_t i = 0; i < hm.size(); ++i) acc = Fm.add(acc, Fm.mul(hm[i], P.c[i]));
                if (acc == 0) ++on_h;
                else contains_all = false;
            }
            if (m == mmax) pts_on_H_top = on_h;
        }
        if (contains_all) {
            rep.witness = H;
            rep.witness_points = pts_on_H_top;
            rep.verdict = pts_on_H_top > c.degree ? Nondeg::degenerate : Nondeg::undetermined;
            return rep;
        }
    }
    rep.verdict = Nondeg::likely_nondegenerate;
    return rep;
}

namespace {

Monomial mono(std::vector<int> e) { return Monomial{std::move(e)}; }

HomogeneousPoly quadric_minor(const Field& F, int nvars, int a, int b, int c, int d) {
    // x_a x_b - x_c x_d
    std::vector<int> e1(nvars, 0), e2(nvars, 0);
    ++e1[a]; ++e1[b];
    ++e2[c]; ++e2[d];
    return HomogeneousPoly::make(F, nvars, 2,
                                 {{mono(e1), 1}, {mono(e2), F.neg(1)}});
}

Field field_of_order(long long q) {
    for (int p = 2; p <= q; ++p) {
        if (q % p == 0) {
            int e = 0;
            long long t = q;
            while (t % p == 0) { t /= p; ++e; }
            long long pe = 1;
            for (int i = 0; i < e; ++i) pe *= p;
            if (pe != q)
                throw Error(Err::invalid_argument, std::to_string(q) + " is not a prime power");
            return Field(p, e);
        }
    }
    throw Error(Err::invalid_argument, "invalid field order");
}

std::vector<long long> parse_args(const std::string& name, const std::string& stem) {
    // "stem(a)" or "stem(a,b)"
    if (name.size() <= stem.size() + 2 || name.compare(0, stem.size(), stem) != 0 ||
        name[stem.size()] != '(' || name.back() != ')')
        throw Error(Err::unknown_catalog_entry, "unknown catalog entry: " + name);
    std::vector<long long> args;
    size_t pos = stem.size() + 1;
    while (pos < name.size() - 1) {
        size_t comma = name.find(',', pos);
        if (comma == std::string::npos || comma > name.size() - 1) comma = name.size() - 1;
        long long v = 0;
        const auto res = std::from_chars(name.data() + pos, name.data() + comma, v);
        if (res.ec != std::errc() || res.ptr != name.data() + comma)
            throw Error(Err::unknown_catalog_entry, "bad catalog argument in: " + name);
        args.push_back(v);
        pos = comma + 1;
    }
    return args;
}

CurveDef catalog_sziklai_K() {
    // (X+Y+Z)^4 + (XY+YZ+ZX)^2 + XYZ(X+Y+Z) over GF(4), expanded in char 2.
    Field F(2, 2);
    std::vector<std::pair<Monomial, Elem>> terms;
    for (auto e : {std::vector<int>{4, 0, 0}, {0, 4, 0}, {0, 0, 4},
                   {2, 2, 0}, {0, 2, 2}, {2, 0, 2},
                   {2, 1, 1}, {1, 2, 1}, {1, 1, 2}})
        terms.emplace_back(mono(e), 1);
    auto f = HomogeneousPoly::make(F, 3, 4, std::move(terms));
    return make_curve(std::move(F), 2, {std::move(f)}, 4, "sziklai-K");
}

CurveDef catalog_hermitian(long long q0) {
    if (q0 < 2) throw Error(Err::unknown_catalog_entry, "hermitian parameter must be >= 2");
    if (q0 * q0 > kMaxFieldSize) throw Error(Err::field_too_large, "hermitian field exceeds 2^16");
    Field F = field_of_order(q0 * q0);
    const int d = static_cast<int>(q0) + 1;
    auto f = HomogeneousPoly::make(F, 3, d,
                                   {{mono({d, 0, 0}), 1}, {mono({0, d, 0}), 1}, {mono({0, 0, d}), 1}});
    return make_curve(std::move(F), 2, {std::move(f)}, d, "hermitian(" + std::to_string(q0) + ")");
}

CurveDef catalog_rational_normal(int r, long long q, std::string name) {
    Field F = field_of_order(q);
    std::vector<HomogeneousPoly> eqs;
    // 2x2 minors of [[x_0 ... x_{r-1}], [x_1 ... x_r]]
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j)
            eqs.push_back(quadric_minor(F, r + 1, i, j + 1, i + 1, j));
    return make_curve(std::move(F), r, std::move(eqs), r, std::move(name));
}

CurveDef catalog_elliptic_quartic(long long q) {
    // A fixed pair of quadrics in P^3 whose intersection behaves as a smooth
    // genus-1 quartic for every small q shipped in the catalog:
    //   Q1 = x0^2 + x2 x3 + x3^2
    //   Q2 = x0^2 + x0 x1 + x0 x2 + x1^2 + x1 x3
    Field F = field_of_order(q);
    auto q1 = HomogeneousPoly::make(
        F, 4, 2, {{mono({2, 0, 0, 0}), 1}, {mono({0, 0, 1, 1}), 1}, {mono({0, 0, 0, 2}), 1}});
    auto q2 = HomogeneousPoly::make(
        F, 4, 2,
        {{mono({2, 0, 0, 0}), 1}, {mono({1, 1, 0, 0}), 1}, {mono({1, 0, 1, 0}), 1},
         {mono({0, 2, 0, 0}), 1}, {mono({0, 1, 0, 1}), 1}});
    return make_curve(std::move(F), 3, {std::move(q1), std::move(q2)}, 4,
                      "elliptic-quartic-example(" + std::to_string(q) + ")");
}

} // namespace

CurveDef catalog(const std::string& name) {
    if (name == "sziklai-K") return catalog_sziklai_K();
    if (name.rfind("hermitian", 0) == 0)
        return catalog_hermitian(parse_args(name, "hermitian").at(0));
    if (name.rfind("twisted-cubic", 0) == 0)
        return catalog_rational_normal(3, parse_args(name, "twisted-cubic").at(0), name);
    if (name.rfind("rational-normal", 0) == 0) {
        auto args = parse_args(name, "rational-normal");
        if (args.size() != 2)
            throw Error(Err::unknown_catalog_entry, "rational-normal needs (r,q)");
        if (args[0] < 2) throw Error(Err::invalid_argument, "rational-normal needs r >= 2");
        return catalog_rational_normal(static_cast<int>(args[0]), args[1], name);
    }
    if (name.rfind("elliptic-quartic-example", 0) == 0)
        return catalog_elliptic_quartic(parse_args(name, "elliptic-quartic-example").at(0));
    throw Error(Err::unknown_catalog_entry, "unknown catalog entry: " + name);
}

std::vector<std::string> catalog_names() {
    std::vector<std::string> names{"sziklai-K", "hermitian(2)", "hermitian(3)", "hermitian(4)"};
    for (int q : {2, 3, 4, 5}) names.push_back("twisted-cubic(" + std::to_string(q) + ")");
    for (int q : {2, 3, 4, 5}) names.push_back("rational-normal(4," + std::to_string(q) + ")");
    for (int q : {2, 3, 4, 5}) names.push_back("elliptic-quartic-example(" + std::to_string(q) + ")");
    return names;
}

CurveDef transform_curve(const CurveDef& c, const std::vector<std::vector<Elem>>& M) {
    std::vector<std::vector<Elem>> copy = M;
    if (static_cast<int>(M.size()) != c.r + 1)
        throw Error(Err::dimension_mismatch, "matrix must be (r+1)x(r+1)");
    if (rank_of(c.field, copy) != c.r + 1)
        throw Error(Err::invalid_argument, "change-of-coordinates matrix is singular");
    std::vector<HomogeneousPoly> eqs;
    for (const auto& f : c.equations) eqs.push_back(substitute_linear(c.field, f, M));
    CurveDef out = c;
    out.equations = std::move(eqs);
    return out;
}

} // namespace fq
