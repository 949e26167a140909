#include "poly.hpp"

#include <algorithm>
#include <numeric>

namespace fq {

int Monomial::degree() const { return std::accumulate(e.begin(), e.end(), 0); }

HomogeneousPoly HomogeneousPoly::make(const Field& F, int nvars, int degree,
                                      std::vector<std::pair<Monomial, Elem>> terms) {
    if (nvars < 1 || degree < 1)
        throw Error(Err::invalid_argument, "polynomial needs nvars >= 1 and degree >= 1");
    HomogeneousPoly f;
    f.nvars_ = nvars;
    f.degree_ = degree;
    for (auto& [m, c] : terms) {
        if (static_cast<int>(m.e.size()) != nvars)
            throw Error(Err::dimension_mismatch, "monomial has wrong number of variables");
        for (int ei : m.e)
            if (ei < 0) throw Error(Err::parse_error, "negative exponent");
        if (m.degree() != degree)
            throw Error(Err::non_homogeneous, "monomial of total degree " +
                                                  std::to_string(m.degree()) + " in a degree-" +
                                                  std::to_string(degree) + " form");
        if (c >= F.q()) throw Error(Err::parse_error, "coefficient index out of range");
        if (c == 0) continue;
        auto it = f.terms_.find(m);
        if (it == f.terms_.end()) {
            f.terms_.emplace(std::move(m), c);
        } else {
            it->second = F.add(it->second, c);
            if (it->second == 0) f.terms_.erase(it);
        }
    }
    if (f.terms_.empty())
        throw Error(Err::non_homogeneous, "the zero polynomial is not a valid form");
    return f;
}

bool HomogeneousPoly::proportional_to(const Field& F, const HomogeneousPoly& o) const {
    if (nvars_ != o.nvars_ || degree_ != o.degree_ || terms_.size() != o.terms_.size())
        return false;
    const Elem scale = F.mul(o.terms_.begin()->second, F.inv(terms_.begin()->second));
    auto it = o.terms_.begin();
    for (const auto& [m, c] : terms_) {
        if (it->first != m || it->second != F.mul(scale, c)) return false;
        ++it;
    }
    return true;
}

Elem poly_eval(const Field& F, const HomogeneousPoly& f, std::span<const Elem> coords) {
    if (static_cast<int>(coords.size()) != f.nvars())
        throw Error(Err::dimension_mismatch, "coordinate count does not match nvars");
    Elem acc = 0;
    for (const auto& [m, c] : f.terms()) {
        Elem v = c;
        for (int i = 0; i < f.nvars() && v != 0; ++i)
            if (m.e[i] > 0) v = F.mul(v, F.pow(coords[i], m.e[i]));
        acc = F.add(acc, v);
    }
    return acc;
}

Elem poly_eval(const Field& F, const HomogeneousPoly& f, const ProjPoint& P) {
    return poly_eval(F, f, std::span<const Elem>(P.c));
}

bool divides_linear(const Field& F, const HomogeneousPoly& f, const HomogeneousPoly& lin) {
    if (lin.degree() != 1) throw Error(Err::not_linear, "divisor must be a linear form");
    if (lin.nvars() != f.nvars())
        throw Error(Err::dimension_mismatch, "divisor variable count differs");
    // pivot variable: first with a nonzero coefficient in lin
    int piv = -1;
    Elem piv_coeff = 0;
    std::vector<Elem> lc(f.nvars(), 0);
    for (const auto& [m, c] : lin.terms()) {
        const int var = static_cast<int>(std::find(m.e.begin(), m.e.end(), 1) - m.e.begin());
        lc[var] = c;
        if (piv < 0) { piv = var; piv_coeff = c; }
    }
    const Elem piv_inv = F.inv(piv_coeff);

    // Cancel pivot-variable occurrences one monomial at a time; the multiset
    // of pivot exponents strictly descends, so this terminates.
    std::map<Monomial, Elem> work(f.terms());
    while (true) {
        auto it = std::find_if(work.begin(), work.end(),
                               [&](const auto& t) { return t.first.e[piv] > 0; });
        if (it == work.end()) break;
        const Monomial m = it->first;
        const Elem c = it->second;
        const Elem u = F.mul(c, piv_inv); // quotient coefficient for m / x_piv
        // work -= u * (m / x_piv) * lin
        for (int var = 0; var < f.nvars(); ++var) {
            if (lc[var] == 0) continue;
            Monomial mm = m;
            --mm.e[piv];
            ++mm.e[var];
            const Elem delta = F.neg(F.mul(u, lc[var]));
            auto [pos, inserted] = work.emplace(std::move(mm), delta);
            if (!inserted) {
                pos->second = F.add(pos->second, delta);
                if (pos->second == 0) work.erase(pos);
            }
        }
    }
    return work.empty();
}

std::optional<HomogeneousPoly> has_linear_component(const Field& F, const HomogeneousPoly& f) {
    if (f.nvars() != 3)
        throw Error(Err::unsupported_ambient, "linear-component search handles plane curves only");
    for (const auto& H : enum_hyperplanes(2, F)) {
        std::vector<std::pair<Monomial, Elem>> terms;
        for (int i = 0; i < 3; ++i) {
            if (H.c[i] == 0) continue;
            Monomial m{std::vector<int>(3, 0)};
            m.e[i] = 1;
            terms.emplace_back(std::move(m), H.c[i]);
        }
        HomogeneousPoly lin = HomogeneousPoly::make(F, 3, 1, std::move(terms));
        if (divides_linear(F, f, lin)) return lin;
    }
    return std::nullopt;
}

namespace {

using TermMap = std::map<Monomial, Elem>;

void add_term(const Field& F, TermMap& m, Monomial mono, Elem c) {
    if (c == 0) return;
    auto [pos, inserted] = m.emplace(std::move(mono), c);
    if (!inserted) {
        pos->second = F.add(pos->second, c);
        if (pos->second == 0) m.erase(pos);
    }
}

// acc * (linear form with coefficients row[j] on x_j)
TermMap mul_linear(const Field& F, const TermMap& acc, const std::vector<Elem>& row) {
    TermMap out;
    for (const auto& [m, c] : acc) {
        for (size_t j = 0; j < row.size(); ++j) {
            if (row[j] == 0) continue;
            Monomial mm = m;
            ++mm.e[j];
            add_term(F, out, std::move(mm), F.mul(c, row[j]));
        }
    }
    return out;
}

} // namespace

HomogeneousPoly substitute_linear(const Field& F, const HomogeneousPoly& f,
                                  const std::vector<std::vector<Elem>>& M) {
    const int n = f.nvars();
    if (static_cast<int>(M.size()) != n)
        throw Error(Err::dimension_mismatch, "substitution matrix must be nvars x nvars");
    for (const auto& row : M)
        if (static_cast<int>(row.size()) != n)
            throw Error(Err::dimension_mismatch, "substitution matrix must be nvars x nvars");
    TermMap result;
    for (const auto& [m, c] : f.terms()) {
        TermMap acc{{Monomial{std::vector<int>(n, 0)}, c}};
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < m.e[i]; ++k) acc = mul_linear(F, acc, M[i]);
        for (auto& [mono, cc] : acc) add_term(F, result, mono, cc);
    }
    std::vector<std::pair<Monomial, Elem>> terms(result.begin(), result.end());
    return HomogeneousPoly::make(F, n, f.degree(), std::move(terms));
}

TruncatedSeries series_make(int T, std::vector<Elem> coeffs) {
    if (T < 1) throw Error(Err::invalid_argument, "truncation must be >= 1");
    if (static_cast<int>(coeffs.size()) != T)
        throw Error(Err::truncation_mismatch, "series length does not match truncation");
    return TruncatedSeries{T, std::move(coeffs)};
}

TruncatedSeries series_compose_linear(const Field& F, std::span<const Elem> coeff,
                                      std::span<const TruncatedSeries> branch) {
    if (coeff.size() != branch.size())
        throw Error(Err::dimension_mismatch, "coefficient/series count mismatch");
    if (branch.empty()) throw Error(Err::empty_set, "no series to combine");
    const int T = branch[0].T;
    for (const auto& s : branch)
        if (s.T != T) throw Error(Err::truncation_mismatch, "series share no common truncation");
    TruncatedSeries out{T, std::vector<Elem>(T, 0)};
    for (size_t i = 0; i < branch.size(); ++i) {
        if (coeff[i] == 0) continue;
        for (int k = 0; k < T; ++k)
            out.coeffs[k] = F.add(out.coeffs[k], F.mul(coeff[i], branch[i].coeffs[k]));
    }
    return out;
}

std::optional<int> ord(const TruncatedSeries& s) {
    for (int k = 0; k < s.T; ++k)
        if (s.coeffs[k] != 0) return k + 1;
    return std::nullopt;
}

} // namespace fq
