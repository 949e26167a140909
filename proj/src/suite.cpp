#include "suite.hpp"

#include <sstream>

#include "arcs.hpp"
#include "bounds.hpp"
#include "gauss.hpp"
#include "rng.hpp"

namespace fq {

LemmaSweepReport lemma_random_sweep(const Field& F, int r, int T, int trials, std::uint64_t seed) {
    LemmaSweepReport rep;
    rep.r = r;
    rep.q = F.q();
    rep.T = T;
    rep.trials = trials;
    rep.seed = seed;
    rep.rhs = lemma_rhs(F.q(), r);

    LemmaReport base = check_lemma(rational_normal_branch(F, r, T));
    rep.equality_excess = base.excess;
    if (!base.equality) {
        rep.ok = false;
        std::ostringstream os;
        os << "built-in branch misses the equality case (" << base.excess << " vs " << base.rhs << ")";
        rep.first_failure = os.str();
        return rep;
    }

    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        // Random coefficient matrices, redrawn until full rank; full rank
        // makes every covector order finite within T and the order sequence
        // complete, so the check cannot abort on precision.
        std::vector<TruncatedSeries> series;
        for (;;) {
            std::vector<std::vector<Elem>> m(static_cast<size_t>(r),
                                             std::vector<Elem>(static_cast<size_t>(T)));
            for (auto& row : m)
                for (auto& c : row) c = static_cast<Elem>(uniform_below(rng, static_cast<std::uint64_t>(F.q())));
            if (rank_of(F, m) != r) continue;
            series.clear();
            for (auto& row : m) series.push_back(series_make(T, std::move(row)));
            break;
        }
        Branch b = make_branch(F, r, T, std::move(series));
        LemmaReport lr = check_lemma(b);
        if (!lr.ok && rep.ok) {
            rep.ok = false;
            std::ostringstream os;
            os << "random branch at trial " << t << " fell below the threshold (" << lr.excess << " < "
               << lr.rhs << ")";
            rep.first_failure = os.str();
        }
    }
    return rep;
}

namespace {

void add_section(SuiteReport& rep, SuiteSection s) {
    if (!s.ok && rep.ok) {
        rep.ok = false;
        rep.first_failure = s.name + ": " + s.detail;
    }
    rep.sections.push_back(std::move(s));
}

bool keep_q(const SuiteOptions& opt, long long q) { return opt.q == 0 || opt.q == q; }
bool keep_r(const SuiteOptions& opt, int r) { return opt.r == 0 || opt.r == r; }

} // namespace

SuiteReport run_suite(const SuiteOptions& opt) {
    SuiteReport rep;
    rep.options = opt;

    {
        SuiteSection s{"inequalities", 0, true, ""};
        for (long long q : {2LL, 3LL, 4LL, 5LL, 7LL, 8LL, 9LL}) {
            if (!keep_q(opt, q)) continue;
            for (int r = 3; r <= 6; ++r) {
                if (!keep_r(opt, r)) continue;
                IneqReport ir = proof_ineq_suite(q, r, 1, 100);
                s.checks += ir.checks;
                if (!ir.ok && s.ok) {
                    s.ok = false;
                    s.detail = ir.first_failure;
                }
            }
        }
        add_section(rep, s);
    }

    {
        SuiteSection s{"arcs", 0, true, ""};
        struct Cfg {
            int r;
            long long q;
            std::vector<long long> sizes;
        };
        const std::vector<Cfg> cfgs = {{3, 2, {3, 4, 5, 6, 7, 8, 9, 10}}, {3, 3, {5, 13}}};
        for (const auto& cfg : cfgs) {
            if (!keep_q(opt, cfg.q) || !keep_r(opt, cfg.r)) continue;
            Field F(static_cast<int>(cfg.q), 1);
            ArcSuiteReport ar = random_subset_suite(cfg.r, F, cfg.sizes, opt.trials, opt.seed);
            s.checks += ar.checks;
            if (!ar.ok && s.ok) {
                s.ok = false;
                s.detail = ar.first_failure;
            }
        }
        add_section(rep, s);
    }

    {
        SuiteSection s{"order sequences", 0, true, ""};
        for (int r : {3, 4}) {
            if (!keep_r(opt, r)) continue;
            for (long long q : {2LL, 3LL, 4LL}) {
                if (!keep_q(opt, q)) continue;
                Field F = q == 4 ? Field(2, 2) : Field(static_cast<int>(q), 1);
                const int T = opt.precision > 0 ? opt.precision : 4 * r;
                LemmaSweepReport lr = lemma_random_sweep(F, r, T, opt.trials, opt.seed);
                s.checks += 1 + lr.trials;
                if (!lr.ok && s.ok) {
                    s.ok = false;
                    s.detail = lr.first_failure;
                }
            }
        }
        add_section(rep, s);
    }

    {
        SuiteSection s{"incidence", 0, true, ""};
        for (const auto& name : catalog_names()) {
            CurveDef c = catalog(name);
            if (!keep_q(opt, c.field.q()) || !keep_r(opt, c.r)) continue;
            auto [direct, formula] = incidence_count_Q(c);
            ++s.checks;
            if (direct != formula && s.ok) {
                s.ok = false;
                std::ostringstream os;
                os << name << ": incidence pairs " << direct << " != " << formula;
                s.detail = os.str();
            }
        }
        add_section(rep, s);
    }

    {
        SuiteSection s{"headline bound", 0, true, ""};
        for (const auto& name : catalog_names()) {
            CurveDef c = catalog(name);
            if (!keep_q(opt, c.field.q()) || !keep_r(opt, c.r)) continue;
            BoundReport br = verify_curve(c);
            ++s.checks;
            if (!br.ok && s.ok) {
                s.ok = false;
                std::ostringstream os;
                os << name << ": N=" << br.N << " exceeds " << br.sziklai.get_str();
                s.detail = os.str();
            }
        }
        add_section(rep, s);
    }

    return rep;
}

} // namespace fq
