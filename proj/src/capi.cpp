#include "fqbound.h"

#include <algorithm>
#include <cstring>
#include <new>
#include <string>

#include "bounds.hpp"
#include "scan.hpp"
#include "serialize.hpp"
#include "suite.hpp"
#include "version.hpp"

struct fqb_field {
    fq::Field f;
};
struct fqb_curve {
    fq::CurveDef c;
};
struct fqb_pointset {
    fq::PointSet ps;
};
struct fqb_branch {
    fq::Branch b;
};

namespace {

thread_local std::string g_error;

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

fqb_status map_err(fq::Err k) {
    switch (k) {
        case fq::Err::field_too_large:
        case fq::Err::scan_too_large:
            return FQB_E_LIMIT;
        case fq::Err::validation_failure:
            return FQB_E_MATH;
        default:
            return FQB_E_INPUT;
    }
}

template <class Fn>
fqb_status guarded(Fn&& fn) {
    try {
        g_error.clear();
        return fn();
    } catch (const fq::Error& e) {
        g_error = e.what();
        return map_err(e.kind);
    } catch (const std::bad_alloc&) {
        g_error = "out of memory";
        return FQB_E_LIMIT;
    } catch (const std::exception& e) {
        g_error = e.what();
        return FQB_E_INPUT;
    }
}

fqb_status need(bool cond, const char* msg) {
    if (cond) return FQB_OK;
    g_error = msg;
    return FQB_E_INPUT;
}

using fq::Json;

Json json_int(const fq::Int& z) {
    if (z.fits_slong_p()) return Json(z.get_si());
    return Json(z.get_str());
}

Json json_rat(const fq::Rat& x) { return Json(x.get_num().get_str() + "/" + x.get_den().get_str()); }

Json curve_stanza(const fq::CurveDef& c) {
    return Json{{"name", c.name},
                {"field", fq::field_to_json(c.field)},
                {"ambient_dim", c.r},
                {"degree", c.degree}};
}

fqb_status finish(char** out_json, const Json& j, fqb_status st = FQB_OK) {
    *out_json = dup_string(j.dump(2));
    return st;
}

fqb_status parse_matrix(const fq::Field& F, int r, const long long* m, int n,
                        std::vector<std::vector<fq::Elem>>& out) {
    const int side = r + 1;
    if (fqb_status st = need(m != nullptr && n == side * side, "matrix must have (r+1)^2 entries"); st != FQB_OK)
        return st;
    out.assign(static_cast<size_t>(side), std::vector<fq::Elem>(static_cast<size_t>(side)));
    for (int i = 0; i < side; ++i)
        for (int j = 0; j < side; ++j) {
            long long v = m[i * side + j];
            if (fqb_status st = need(v >= 0 && v < F.q(), "matrix entry outside the field"); st != FQB_OK)
                return st;
            out[static_cast<size_t>(i)][static_cast<size_t>(j)] = static_cast<fq::Elem>(v);
        }
    return FQB_OK;
}

bool factor_prime_power(long long q, int& p, int& e) {
    if (q < 2) return false;
    long long base = q;
    for (long long c = 2; c * c <= q; ++c)
        if (q % c == 0) {
            base = c;
            break;
        }
    int exp = 0;
    long long acc = 1;
    while (acc < q) {
        acc *= base;
        ++exp;
    }
    if (acc != q) return false;
    p = static_cast<int>(base);
    e = exp;
    return true;
}

} // namespace

extern "C" {

const char* fqb_version(void) { return FQBOUND_VERSION; }

const char* fqb_last_error(void) { return g_error.c_str(); }

void fqb_string_free(char* s) { delete[] s; }

/* ---- fields ---- */

fqb_status fqb_field_new(int p, int e, fqb_field** out) {
    return guarded([&]() -> fqb_status {
        if (fqb_status st = need(out != nullptr, "null out-parameter"); st != FQB_OK) return st;
        *out = new fqb_field{fq::Field(p, e)};
        return FQB_OK;
    });
}

fqb_status fqb_field_new_q(long long q, fqb_field** out) {
    return guarded([&]() -> fqb_status {
        if (fqb_status st = need(out != nullptr, "null out-parameter"); st != FQB_OK) return st;
        int p = 0, e = 0;
        if (fqb_status st = need(factor_prime_power(q, p, e), "order is not a prime power"); st != FQB_OK)
            return st;
        *out = new fqb_field{fq::Field(p, e)};
        return FQB_OK;
    });
}

fqb_status fqb_field_new_modulus(int p, int e, const int* modulus, int len, fqb_field** out) {
    return guarded([&]() -> fqb_status {
        if (fqb_status st = need(out != nullptr && modulus != nullptr, "null pointer argument"); st != FQB_OK)
            return st;
        std::vector<int> mod(modulus, modulus + len);
        *out = new fqb_field{fq::Field(p, e, mod)};
        return FQB_OK;
    });
}

void fqb_field_free(fqb_field* f) { delete f; }

long long fqb_field_order(const fqb_field* f) { return f ? f->f.q() : 0; }

fqb_status fqb_field_describe(const fqb_field* f, char** out_json) {
    return guarded([&]() -> fqb_status {
        if (fqb_status st = need(f != nullptr && out_json != nullptr, "null pointer argument"); st != FQB_OK)
            return st;
        return finish(out_json, fq::field_to_json(f->f));
    });
}

fqb_status fqb_field_add(const fqb_field* f, long long a, long long b, long long* out) {
    return guarded([&]() -> fqb_status {
        if (fqb_status st = need(f && out, "null pointer argument"); st != FQB_OK) return st;
        if (fqb_status st = need(a >= 0 && a < f->f.q() && b >= 0 && b < f->f.q(),
                                 "element index outside the field");
            st != FQB_OK)
            return st;
        *out = f->f.add(static_cast<fq::Elem>(a), static_cast<fq::Elem>(b));
        return FQB_OK;
    });
}

fqb_status fqb_field_mul(const fqb_field* f, long long a, long long b, long long* out) {
    return guarded([&]() -> fqb_status {
        if (fqb_status st = need(f && out, "null pointer argument"); st != FQB_OK) return st;
        if (fqb_status st = need(a >= 0 && a < f->f.q() && b >= 0 && b < f->f.q(),
                                 "element index outside the field");
            st != FQB_OK)
            return st;
        *out = f->f.mul(static_cast<fq::Elem>(a), static_cast<fq::Elem>(b));
        return FQB_OK;
    });
}

fqb_status fqb_field_inv(const fqb_field* f, long long a, long long* out) {
    return guarded([&]() -> fqb_status {
        if (fqb_status st = need(f && out, "null pointer argument"); st != FQB_OK) return st;
        if (fqb_status st = need(a >= 0 && a < f->f.q(), "element index outside the field"); st != FQB_OK)
            return st;
        *out = f->f.inv(static_cast<fq::Elem>(a));
        return FQB_OK;
    });
}

/* ---- curves ---- */

fqb_status fqb_curve_from_json(const char* json, fqb_curve** out) {
    return guarded([&]() -> fqb_status {
        if (fqb_status st = need(json && out, "null pointer argument"); st != FQB_OK) return st;
        *out = new fqb_curve{fq::curve_from_string(json)};
        return FQB_OK;
    });
}

fqb_status fqb_curve_from_file(const char* path, fqb_curve** out) {
    return guarded([&]() -> fqb_status {
        if (fqb_status st = need(path && out, "null pointer argument"); st != FQB_OK) return st;
        *out = new fqb_curve{fq::curve_from_file(path)};
        return FQB_OK;
    });
}

fqb_status fqb_curve_catalog(const char* name, fqb_curve** out) {
    return guarded([&]() -> fqb_status {
        if (fqb_status st = need(name && out, "null pointer argument"); st != FQB_OK) return st;
        *out = new fqb_curve{fq::catalog(name)};
        return FQB_OK;
    });
}

void fqb_curve_free(fqb_curve* c) { delete c; }

fqb_status fqb_curve_to_json(const fqb_curve* c, char** out_json) {
    return guarded([&]() -> fqb_status {
        if (fqb_status st = need(c && out_json, "null pointer argument"); st != FQB_OK) return st;
        return finish(out_json, fq::curve_to_json(c->c));
    });
}

fqb_status fqb_catalog_list(char** out_json) {
    return guarded([&]() -> fqb_status {
        if (fqb_status st = need(out_json != nullptr, "null out-parameter"); st != FQB_OK) return st;
        Json arr = Json::array();
        for (const auto& name : fq::catalog_names()) {
            fq::CurveDef c = fq::catalog(name);
            arr.push_back(Json{{"name", name},
                               {"q", c.field.q()},
                               {"ambient_dim", c.r},
                               {"degree", c.degree}});
        }
        return finish(out_json, Json{{"tool", fq::tool_stanza()}, {"catalog", arr}});
    });
}

fqb_status fqb_curve_transform(const fqb_curve* c, const long long* m, int n, fqb_curve** out) {
    return guarded([&]() -> fqb_status {
        if (fqb_status st = need(c && out, "null pointer argument"); st != FQB_OK) return st;
        std::vector<std::vector<fq::Elem>> mat;
        if (fqb_status st = parse_matrix(c->c.field, c->c.r, m, n, mat); st != FQB_OK) return st;
        *out = new fqb_curve{fq::transform_curve(c->c, mat)};
        return FQB_OK;
    });
}

fqb_status fqb_count(const fqb_curve* c, int ext, int with_points, char** out_json) {
    return guarded([&]() -> fqb_status {
        if (fqb_status st = need(c && out_json, "null pointer argument"); st != FQB_OK) return st;
        if (fqb_status st = need(ext >= 1, "extension degree must be >= 1"); st != FQB_OK) return st;
        fq::CountOptions opt;
        fq::PointCount pc = fq::count_points_ext(c->c, ext, opt);
        Json rep{{"tool", fq::tool_stanza()},
                 {"curve", curve_stanza(c->c)},
                 {"extension", pc.m},
                 {"order", pc.counting_field.q()},
                 {"count", pc.count}};
        if (with_points) {
            if (!pc.points) {
                g_error = "point list exceeds the retention cap";
                return FQB_E_LIMIT;
            }
            Json pts = Json::array();
            for (const auto& P : *pc.points) pts.push_back(fq::point_to_json(P));
            rep["points"] = pts;
            rep["counting_field"] = fq::field_to_json(pc.counting_field);
        }
        return finish(out_json, rep);
    });
}

fqb_status fqb_verify(const fqb_curve* c, char** out_json) {
    return guarded([&]() -> fqb_status {
        if (fqb_status st = need(c && out_json, "null pointer argument"); st != FQB_OK) return st;
        fq::BoundReport r = fq::verify_curve(c->c);
        Json rep{{"tool", fq::tool_stanza()},
                 {"curve", curve_stanza(c->c)},
                 {"count", r.N},
                 {"headline", Json{{"bound", json_int(r.sziklai)}, {"ok", r.sziklai_ok}}},
                 {"cases", Json{{"small_degree", r.case_i}, {"large_degree", r.case_ii}}},
                 {"exception", r.exception_K},
                 {"ok", r.ok}};
        if (r.refined)
            rep["refined"] = Json{{"exact", json_rat(r.refined->exact)},
                                  {"floor", json_int(r.refined->floor)},
                                  {"ok", r.refined_ok}};
        if (r.weighted)
            rep["weighted"] = Json{{"exact", json_rat(r.weighted->exact)},
                                   {"floor", json_int(r.weighted->floor)},
                                   {"S", json_int(r.weighted->S)},
                                   {"ok", r.weighted_ok}};
        if (r.sdeg_observed)
            rep["combinatorial"] = Json{{"sdeg", *r.sdeg_observed},
                                        {"bound", json_int(*r.comb)},
                                        {"ok", r.comb_ok}};
        if (!r.ok) {
            g_error = "headline bound violated and the curve is not the flagged exception";
            return finish(out_json, rep, FQB_E_MATH);
        }
        return finish(out_json, rep);
    });
}

fqb_status fqb_nondeg(const fqb_curve* c, int mmax, char** out_json) {
    return guarded([&]() -> fqb_status {
        if (fqb_status st = need(c && out_json, "null pointer argument"); st != FQB_OK) return st;
        if (fqb_status st = need(mmax >= 1, "mmax must be >= 1"); st != FQB_OK) return st;
        fq::NondegReport r = fq::nondegeneracy_heuristic(c->c, mmax);
        const char* verdict = r.verdict == fq::Nondeg::degenerate ? "degenerate"
                              : r.verdict == fq::Nondeg::undetermined ? "undetermined"
                                                                      : "likely_nondegenerate";
        Json rep{{"tool", fq::tool_stanza()},
                 {"curve", curve_stanza(c->c)},
                 {"mmax", r.mmax},
                 {"verdict", verdict}};
        if (r.witness) {
            rep["witness"] = r.witness->c;
            rep["witness_points"] = r.witness_points;
        }
        return finish(out_json, rep);
    });
}

/* ---- bound formulas ---- */

fqb_status fqb_bounds_eval(long long q, int r, long long d, char** out_json) {
    return guarded([&]() -> fqb_status {
        if (fqb_status st = need(out_json != nullptr, "null out-parameter"); st != FQB_OK) return st;
        if (fqb_status st = need(q >= 2 && d >= 1, "need q >= 2 and d >= 1"); st != FQB_OK) return st;
        fq::Int D = fq::to_int(d), Q = fq::to_int(q);
        Json rep{{"tool", fq::tool_stanza()},
                 {"q", q},
                 {"r", r},
                 {"d", d},
                 {"headline", json_int(fq::sziklai_bound(D, Q))}};
        if (r >= 2) rep["combinatorial"] = json_int(fq::comb_bound(D, Q, r));
        bool consistent = true;
        if (r >= 3) {
            auto t = fq::refined_bound(D, Q, r);
            auto c = fq::weighted_bound(D, Q, r);
            rep["refined"] = Json{{"exact", json_rat(t.exact)}, {"floor", json_int(t.floor)}};
            rep["weighted"] =
                Json{{"exact", json_rat(c.exact)}, {"floor", json_int(c.floor)}, {"S", json_int(c.S)}};
            consistent = t.exact == c.exact;
            rep["refined_equals_weighted"] = consistent;
        }
        if (!consistent) {
            g_error = "the two refined bound formulas disagree";
            return finish(out_json, rep, FQB_E_MATH);
        }
        return finish(out_json, rep);
    });
}

fqb_status fqb_proof_inequalities(long long q, int r, long long d_lo, long long d_hi,
                                  char** out_json) {
    return guarded([&]() -> fqb_status {
        if (fqb_status st = need(out_json != nullptr, "null out-parameter"); st != FQB_OK) return st;
        fq::IneqReport rep = fq::proof_ineq_suite(q, r, d_lo, d_hi);
        Json j{{"tool", fq::tool_stanza()}, {"q", q},      {"r", r},
               {"d_lo", d_lo},             {"d_hi", d_hi}, {"checks", rep.checks},
               {"ok", rep.ok}};
        if (!rep.ok) {
            j["first_failure"] = rep.first_failure;
            g_error = rep.first_failure;
            return finish(out_json, j, FQB_E_MATH);
        }
        return finish(out_json, j);
    });
}

/* ---- point sets ---- */

fqb_status fqb_pointset_from_json(const char* json, fqb_pointset** out) {
    return guarded([&]() -> fqb_status {
        if (fqb_status st = need(json && out, "null pointer argument"); st != FQB_OK) return st;
        Json j = Json::parse(json, nullptr, false);
        if (fqb_status st = need(!j.is_discarded(), "invalid JSON point set"); st != FQB_OK) return st;
        *out = new fqb_pointset{fq::pointset_from_json(j)};
        return FQB_OK;
    });
}

fqb_status fqb_pointset_from_file(const char* path, fqb_pointset** out) {
    return guarded([&]() -> fqb_status {
        if (fqb_status st = need(path && out, "null pointer argument"); st != FQB_OK) return st;
        *out = new fqb_pointset{fq::pointset_from_file(path)};
        return FQB_OK;
    });
}

void fqb_pointset_free(fqb_pointset* ps) { delete ps; }

fqb_status fqb_sdeg(const fqb_pointset* ps, char** out_json) {
    return guarded([&]() -> fqb_status {
        if (fqb_status st = need(ps && out_json, "null pointer argument"); st != FQB_OK) return st;
        fq::ArcReport r = fq::check_arc_bound(ps->ps);
        Json rep{{"tool", fq::tool_stanza()},
                 {"field", fq::field_to_json(ps->ps.field)},
                 {"r", ps->ps.r},
                 {"N", r.N},
                 {"sdeg", r.sdeg},
                 {"bound", r.bound},
                 {"ok", r.ok}};
        if (!r.ok) {
            g_error = "cardinality exceeds the bound implied by the s-degree";
            return finish(out_json, rep, FQB_E_MATH);
        }
        return finish(out_json, rep);
    });
}

fqb_status fqb_arc_suite(int r, long long q, const long long* sizes, int nsizes, int trials,
                         uint64_t seed, char** out_json) {
    return guarded([&]() -> fqb_status {
        if (fqb_status st = need(out_json != nullptr, "null out-parameter"); st != FQB_OK) return st;
        int p = 0, e = 0;
        if (fqb_status st = need(factor_prime_power(q, p, e), "order is not a prime power"); st != FQB_OK)
            return st;
        fq::Field F(p, e);
        std::vector<long long> sz;
        if (sizes != nullptr && nsizes > 0) {
            sz.assign(sizes, sizes + nsizes);
        } else {
            long long npts = fq::geom_sum(q, r);
            for (long long s = 3; s <= std::min<long long>(10, npts); ++s) sz.push_back(s);
        }
        fq::ArcSuiteReport rep = fq::random_subset_suite(r, F, sz, trials, seed);
        Json j{{"tool", fq::tool_stanza()},
               {"field", fq::field_to_json(F)},
               {"r", rep.r},
               {"q", rep.q},
               {"seed", rep.seed},
               {"trials", rep.trials},
               {"sizes", rep.sizes},
               {"checks", rep.checks},
               {"ok", rep.ok}};
        if (!rep.ok) {
            j["first_failure"] = rep.first_failure;
            g_error = rep.first_failure;
            return finish(out_json, j, FQB_E_MATH);
        }
        return finish(out_json, j);
    });
}

/* ---- branches ---- */

fqb_status fqb_branch_from_json(const char* json, fqb_branch** out) {
    return guarded([&]() -> fqb_status {
        if (fqb_status st = need(json && out, "null pointer argument"); st != FQB_OK) return st;
        Json j = Json::parse(json, nullptr, false);
        if (fqb_status st = need(!j.is_discarded(), "invalid JSON branch"); st != FQB_OK) return st;
        *out = new fqb_branch{fq::branch_from_json(j)};
        return FQB_OK;
    });
}

fqb_status fqb_branch_from_file(const char* path, fqb_branch** out) {
    return guarded([&]() -> fqb_status {
        if (fqb_status st = need(path && out, "null pointer argument"); st != FQB_OK) return st;
        *out = new fqb_branch{fq::branch_from_file(path)};
        return FQB_OK;
    });
}

void fqb_branch_free(fqb_branch* b) { delete b; }

fqb_status fqb_branch_to_json(const fqb_branch* b, char** out_json) {
    return guarded([&]() -> fqb_status {
        if (fqb_status st = need(b && out_json, "null pointer argument"); st != FQB_OK) return st;
        return finish(out_json, fq::branch_to_json(b->b));
    });
}

fqb_status fqb_branch_transform(const fqb_branch* b, const long long* m, int n, fqb_branch** out) {
    return guarded([&]() -> fqb_status {
        if (fqb_status st = need(b && out, "null pointer argument"); st != FQB_OK) return st;
        std::vector<std::vector<fq::Elem>> mat;
        if (fqb_status st = parse_matrix(b->b.field, b->b.r, m, n, mat); st != FQB_OK) return st;
        *out = new fqb_branch{fq::transform_branch(b->b, mat)};
        return FQB_OK;
    });
}

fqb_status fqb_lemma(const fqb_branch* const* branches, int n, char** out_json) {
    return guarded([&]() -> fqb_status {
        if (fqb_status st = need(branches != nullptr && out_json != nullptr && n >= 1,
                                 "need at least one branch");
            st != FQB_OK)
            return st;
        std::vector<fq::Branch> bs;
        bs.reserve(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) {
            if (fqb_status st = need(branches[i] != nullptr, "null branch handle"); st != FQB_OK) return st;
            bs.push_back(branches[i]->b);
        }
        fq::LemmaReport rep = fq::check_lemma(bs);
        Json seqs = Json::array();
        for (const auto& b : bs) {
            fq::OrderSequence os = fq::order_sequence(b);
            seqs.push_back(Json{{"orders", os.j}, {"complete", os.complete}, {"truncation", b.T}});
        }
        Json j{{"tool", fq::tool_stanza()},
               {"field", fq::field_to_json(bs[0].field)},
               {"r", bs[0].r},
               {"precision", bs[0].T},
               {"branches", rep.branches},
               {"order_sequences", seqs},
               {"excess", rep.excess},
               {"threshold", rep.rhs},
               {"equality", rep.equality},
               {"ok", rep.ok}};
        if (!rep.ok) {
            g_error = "hyperplane excess sum fell below the exact threshold";
            return finish(out_json, j, FQB_E_MATH);
        }
        return finish(out_json, j);
    });
}

/* ---- sweeps ---- */

fqb_status fqb_scan_plane(long long q, int d, int allow_large, char** out_json) {
    return guarded([&]() -> fqb_status {
        if (fqb_status st = need(out_json != nullptr, "null out-parameter"); st != FQB_OK) return st;
        int p = 0, e = 0;
        if (fqb_status st = need(factor_prime_power(q, p, e), "order is not a prime power"); st != FQB_OK)
            return st;
        fq::Field F(p, e);
        fq::ScanOptions opt;
        opt.allow_large = allow_large != 0;
        fq::ScanReport rep = fq::scan_plane(F, d, opt);
        Json arg = Json::array();
        for (const auto& f : rep.argmax) arg.push_back(fq::poly_to_json(f));
        Json j{{"tool", fq::tool_stanza()},
               {"field", fq::field_to_json(F)},
               {"q", rep.q},
               {"d", rep.d},
               {"monomials", rep.monomials},
               {"classes", rep.classes},
               {"bound", rep.bound},
               {"max_count", rep.max_count},
               {"argmax_total", rep.argmax_total},
               {"argmax", arg},
               {"ok", rep.ok}};
        // The one known exceptional configuration is reported, not asserted.
        if (!rep.ok && !(q == 4 && d == 4)) {
            g_error = "a linear-component-free form exceeded the headline bound";
            return finish(out_json, j, FQB_E_MATH);
        }
        return finish(out_json, j);
    });
}

fqb_status fqb_suite(uint64_t seed, long long q, int r, int trials, int precision,
                     char** out_json) {
    return guarded([&]() -> fqb_status {
        if (fqb_status st = need(out_json != nullptr, "null out-parameter"); st != FQB_OK) return st;
        if (fqb_status st = need(trials >= 0, "negative trial count"); st != FQB_OK) return st;
        fq::SuiteOptions opt;
        opt.seed = seed;
        opt.q = q;
        opt.r = r;
        if (trials > 0) opt.trials = trials;
        opt.precision = precision;
        fq::SuiteReport rep = fq::run_suite(opt);
        Json secs = Json::array();
        for (const auto& s : rep.sections)
            secs.push_back(Json{{"name", s.name}, {"checks", s.checks}, {"ok", s.ok}, {"detail", s.detail}});
        Json j{{"tool", fq::tool_stanza()},
               {"seed", opt.seed},
               {"q", opt.q},
               {"r", opt.r},
               {"trials", opt.trials},
               {"precision", opt.precision},
               {"sections", secs},
               {"ok", rep.ok}};
        if (!rep.ok) {
            j["first_failure"] = rep.first_failure;
            g_error = rep.first_failure;
            return finish(out_json, j, FQB_E_MATH);
        }
        return finish(out_json, j);
    });
}

} // extern "C"
