// Command-line front end.  All mathematics happens behind the C API in
// libfqbound; this file only parses arguments, moves JSON around, and
// renders reports as text.

#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fqbound.h"

namespace {

using Json = nlohmann::json;

struct StringOut {
    char* s = nullptr;
    ~StringOut() { fqb_string_free(s); }
};

int report_error(fqb_status st) {
    if (st != FQB_OK) std::cerr << "error: " << fqb_last_error() << "\n";
    return static_cast<int>(st);
}

Json parse_report(const char* s) { return Json::parse(s); }

std::string field_label(const Json& f) {
    long long q = 1;
    long long p = f.at("p").get<long long>();
    for (int i = 0; i < f.at("e").get<int>(); ++i) q *= p;
    std::ostringstream os;
    os << "GF(" << q << ")";
    return os.str();
}

std::string poly_text(const Json& pj) {
    std::ostringstream os;
    bool first = true;
    for (const auto& t : pj.at("terms")) {
        if (!first) os << " + ";
        first = false;
        long long c = t.at("coeff").get<long long>();
        const auto& m = t.at("monomial");
        bool printed = false;
        if (c != 1) {
            os << "[" << c << "]";
            printed = true;
        }
        for (size_t v = 0; v < m.size(); ++v) {
            int e = m[v].get<int>();
            if (e == 0) continue;
            os << "x" << v;
            if (e > 1) os << "^" << e;
            printed = true;
        }
        if (!printed) os << "1";
    }
    return os.str();
}

std::string curve_label(const Json& c) {
    std::ostringstream os;
    std::string name = c.value("name", std::string{});
    if (!name.empty()) os << name << ": ";
    os << "degree " << c.at("degree").get<long long>() << " curve in P^"
       << c.at("ambient_dim").get<int>() << " over " << field_label(c.at("field"));
    return os.str();
}

void print_count(const Json& r) {
    std::cout << curve_label(r.at("curve")) << "\n";
    std::cout << "extension degree " << r.at("extension").get<int>() << ", counting over GF("
              << r.at("order").get<long long>() << ")\n";
    std::cout << "rational points: " << r.at("count").get<long long>() << "\n";
    if (r.contains("points")) {
        for (const auto& p : r.at("points")) {
            std::cout << "  (";
            for (size_t i = 0; i < p.size(); ++i) std::cout << (i ? ":" : "") << p[i].get<long long>();
            std::cout << ")\n";
        }
    }
}

void print_verify(const Json& r) {
    std::cout << curve_label(r.at("curve")) << "\n";
    std::cout << "rational points: " << r.at("count").get<long long>() << "\n";
    const auto& h = r.at("headline");
    std::cout << "headline bound (d-1)q+1 = " << h.at("bound") << ": "
              << (h.at("ok").get<bool>() ? "holds" : "VIOLATED") << "\n";
    if (r.contains("refined"))
        std::cout << "refined bound " << r["refined"].at("exact").get<std::string>() << " (floor "
                  << r["refined"].at("floor") << "): "
                  << (r["refined"].at("ok").get<bool>() ? "holds" : "VIOLATED") << "\n";
    if (r.contains("weighted"))
        std::cout << "weighted bound " << r["weighted"].at("exact").get<std::string>() << " (floor "
                  << r["weighted"].at("floor") << "): "
                  << (r["weighted"].at("ok").get<bool>() ? "holds" : "VIOLATED") << "\n";
    if (r.contains("combinatorial"))
        std::cout << "combinatorial bound at s-degree " << r["combinatorial"].at("sdeg") << " = "
                  << r["combinatorial"].at("bound") << ": "
                  << (r["combinatorial"].at("ok").get<bool>() ? "holds" : "VIOLATED") << "\n";
    if (r.at("exception").get<bool>())
        std::cout << "known exceptional curve: headline violation is expected\n";
    if (r.contains("nondegeneracy")) {
        const auto& n = r["nondegeneracy"];
        std::cout << "nondegeneracy probe (m <= " << n.at("mmax") << "): "
                  << n.at("verdict").get<std::string>() << "\n";
    }
    std::cout << "overall: " << (r.at("ok").get<bool>() ? "ok" : "FAILED") << "\n";
}

void print_bounds(const Json& r) {
    std::cout << "q=" << r.at("q") << " r=" << r.at("r") << " d=" << r.at("d") << "\n";
    std::cout << "headline (d-1)q+1 = " << r.at("headline") << "\n";
    if (r.contains("combinatorial")) std::cout << "combinatorial = " << r.at("combinatorial") << "\n";
    if (r.contains("refined"))
        std::cout << "refined = " << r["refined"].at("exact").get<std::string>() << " (floor "
                  << r["refined"].at("floor") << ")\n";
    if (r.contains("weighted"))
        std::cout << "weighted = " << r["weighted"].at("exact").get<std::string>() << " (floor "
                  << r["weighted"].at("floor") << ", S = " << r["weighted"].at("S") << ")\n";
    if (r.contains("refined_equals_weighted"))
        std::cout << "refined == weighted as rationals: "
                  << (r.at("refined_equals_weighted").get<bool>() ? "yes" : "NO") << "\n";
}

void print_sdeg(const Json& r) {
    std::cout << r.at("N") << " points in P^" << r.at("r") << " over " << field_label(r.at("field"))
              << "\n";
    std::cout << "s-degree: " << r.at("sdeg") << "\n";
    std::cout << "cardinality bound from s-degree: " << r.at("bound") << " ("
              << (r.at("ok").get<bool>() ? "holds" : "VIOLATED") << ")\n";
}

void print_arcsuite(const Json& r) {
    std::cout << "PG(" << r.at("r") << "," << r.at("q") << "), seed " << r.at("seed") << ", "
              << r.at("trials") << " trials per size, sizes ";
    const auto& sz = r.at("sizes");
    for (size_t i = 0; i < sz.size(); ++i) std::cout << (i ? "," : "") << sz[i].get<long long>();
    std::cout << "\n" << r.at("checks") << " checks: " << (r.at("ok").get<bool>() ? "all passed" : "FAILED")
              << "\n";
    if (r.contains("first_failure")) std::cout << "first failure: " << r.at("first_failure").get<std::string>() << "\n";
}

void print_lemma(const Json& r) {
    std::cout << r.at("branches") << " branch(es) in P^" << r.at("r") << " over "
              << field_label(r.at("field")) << ", precision " << r.at("precision") << "\n";
    for (const auto& s : r.at("order_sequences")) {
        std::cout << "order sequence: (";
        const auto& js = s.at("orders");
        for (size_t i = 0; i < js.size(); ++i) std::cout << (i ? "," : "") << js[i].get<int>();
        std::cout << ")" << (s.at("complete").get<bool>() ? "" : " [incomplete]") << "\n";
    }
    std::cout << "hyperplane excess sum: " << r.at("excess") << "\n";
    std::cout << "threshold: " << r.at("threshold") << "\n";
    std::cout << "excess >= threshold: " << (r.at("ok").get<bool>() ? "yes" : "NO")
              << (r.at("equality").get<bool>() ? " (equality)" : "") << "\n";
}

void print_scan(const Json& r) {
    std::cout << "degree " << r.at("d") << " forms over GF(" << r.at("q") << "): " << r.at("classes")
              << " scalar classes, " << r.at("monomials") << " monomials\n";
    std::cout << "max points on a form without linear components: " << r.at("max_count") << " (bound "
              << r.at("bound") << ", attained by " << r.at("argmax_total") << " forms)\n";
    for (const auto& f : r.at("argmax")) std::cout << "  " << poly_text(f) << "\n";
    std::cout << "bound respected: " << (r.at("ok").get<bool>() ? "yes" : "NO") << "\n";
}

void print_suite(const Json& r) {
    std::cout << "seed " << r.at("seed") << ", trials " << r.at("trials") << "\n";
    for (const auto& s : r.at("sections")) {
        std::cout << "  " << s.at("name").get<std::string>() << ": " << s.at("checks") << " checks, "
                  << (s.at("ok").get<bool>() ? "ok" : "FAILED") << "\n";
        if (!s.at("ok").get<bool>()) std::cout << "    " << s.at("detail").get<std::string>() << "\n";
    }
    std::cout << "overall: " << (r.at("ok").get<bool>() ? "ok" : "FAILED") << "\n";
}

void print_catalog(const Json& r) {
    for (const auto& e : r.at("catalog"))
        std::cout << e.at("name").get<std::string>() << "  (q=" << e.at("q") << ", r="
                  << e.at("ambient_dim") << ", degree=" << e.at("degree") << ")\n";
}

// Shared flags

struct Common {
    bool json = false;
};

template <class Renderer>
int emit(fqb_status st, const StringOut& out, const Common& common, Renderer&& render) {
    if (out.s != nullptr) {
        if (common.json) {
            std::cout << out.s << "\n";
        } else {
            render(parse_report(out.s));
        }
    }
    return report_error(st);
}

struct CurveArgs {
    std::string catalog_name;
    std::string file;
};

void add_curve_flags(CLI::App* cmd, CurveArgs& args) {
    auto* cat = cmd->add_option("--catalog", args.catalog_name, "built-in curve name");
    cmd->add_option("--curve", args.file, "curve JSON file")->excludes(cat);
}

fqb_status load_curve(const CurveArgs& args, fqb_curve** out) {
    if (!args.catalog_name.empty()) return fqb_curve_catalog(args.catalog_name.c_str(), out);
    if (!args.file.empty()) return fqb_curve_from_file(args.file.c_str(), out);
    std::cerr << "error: need --catalog or --curve\n";
    return FQB_E_INPUT;
}

bool read_matrix_file(const std::string& path, std::vector<long long>& flat) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot open " << path << "\n";
        return false;
    }
    Json j = Json::parse(in, nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("matrix") || !j["matrix"].is_array()) {
        std::cerr << "error: matrix file must be {\"matrix\": [[...], ...]}\n";
        return false;
    }
    for (const auto& row : j["matrix"]) {
        if (!row.is_array()) {
            std::cerr << "error: matrix rows must be arrays\n";
            return false;
        }
        for (const auto& v : row) {
            if (!v.is_number_integer()) {
                std::cerr << "error: matrix entries must be integers\n";
                return false;
            }
            flat.push_back(v.get<long long>());
        }
    }
    return true;
}

int write_output(const char* text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << "\n";
        return 0;
    }
    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return static_cast<int>(FQB_E_INPUT);
    }
    out << text << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact rational-point bound checks for curves over small finite fields"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(fqb_version()));

    Common common;
    int exit_code = 0;

    // count
    auto* count = app.add_subcommand("count", "count rational points");
    CurveArgs count_curve;
    add_curve_flags(count, count_curve);
    int count_ext = 1;
    bool count_points = false;
    count->add_option("--ext", count_ext, "extension degree m: count over GF(q^m)");
    count->add_flag("--points", count_points, "list the points");
    count->add_flag("--json", common.json, "machine-readable output");
    count->callback([&] {
        fqb_curve* c = nullptr;
        fqb_status st = load_curve(count_curve, &c);
        if (st != FQB_OK) {
            exit_code = report_error(st);
            return;
        }
        StringOut out;
        st = fqb_count(c, count_ext, count_points ? 1 : 0, &out.s);
        fqb_curve_free(c);
        exit_code = emit(st, out, common, print_count);
    });

    // verify
    auto* verify = app.add_subcommand("verify", "check every applicable bound");
    CurveArgs verify_curve_args;
    add_curve_flags(verify, verify_curve_args);
    int verify_nondeg = 0;
    verify->add_option("--nondeg", verify_nondeg, "probe hyperplane containment up to this extension");
    verify->add_flag("--json", common.json, "machine-readable output");
    verify->callback([&] {
        fqb_curve* c = nullptr;
        fqb_status st = load_curve(verify_curve_args, &c);
        if (st != FQB_OK) {
            exit_code = report_error(st);
            return;
        }
        Json merged;
        StringOut out;
        st = fqb_verify(c, &out.s);
        if (out.s != nullptr && verify_nondeg >= 1) {
            StringOut nd;
            fqb_status nst = fqb_nondeg(c, verify_nondeg, &nd.s);
            if (nst != FQB_OK) {
                fqb_curve_free(c);
                exit_code = report_error(nst);
                return;
            }
            merged = parse_report(out.s);
            Json ndj = parse_report(nd.s);
            ndj.erase("tool");
            ndj.erase("curve");
            merged["nondegeneracy"] = ndj;
            fqb_string_free(out.s);
            out.s = nullptr;
            std::string text = merged.dump(2);
            out.s = new char[text.size() + 1];
            std::memcpy(out.s, text.c_str(), text.size() + 1);
        }
        fqb_curve_free(c);
        exit_code = emit(st, out, common, print_verify);
    });

    // bounds
    auto* bounds = app.add_subcommand("bounds", "evaluate the bound formulas at (q, r, d)");
    long long b_q = 0, b_d = 0;
    int b_r = 0;
    bounds->add_option("--q", b_q, "field order")->required();
    bounds->add_option("--r", b_r, "ambient projective dimension")->required();
    bounds->add_option("--d", b_d, "curve degree")->required();
    bounds->add_flag("--json", common.json, "machine-readable output");
    bounds->callback([&] {
        StringOut out;
        fqb_status st = fqb_bounds_eval(b_q, b_r, b_d, &out.s);
        exit_code = emit(st, out, common, print_bounds);
    });

    // sdeg
    auto* sdeg = app.add_subcommand("sdeg", "s-degree of a point set");
    std::string sdeg_file;
    sdeg->add_option("--points", sdeg_file, "point set JSON file")->required();
    sdeg->add_flag("--json", common.json, "machine-readable output");
    sdeg->callback([&] {
        fqb_pointset* ps = nullptr;
        fqb_status st = fqb_pointset_from_file(sdeg_file.c_str(), &ps);
        if (st != FQB_OK) {
            exit_code = report_error(st);
            return;
        }
        StringOut out;
        st = fqb_sdeg(ps, &out.s);
        fqb_pointset_free(ps);
        exit_code = emit(st, out, common, print_sdeg);
    });

    // arcsuite
    auto* arcsuite = app.add_subcommand("arcsuite", "pseudorandom subset properties in PG(r,q)");
    int a_r = 3;
    long long a_q = 2;
    std::vector<long long> a_sizes;
    int a_trials = 20;
    std::uint64_t a_seed = 1;
    arcsuite->add_option("--r", a_r, "ambient projective dimension");
    arcsuite->add_option("--q", a_q, "field order");
    arcsuite->add_option("--sizes", a_sizes, "subset sizes")->delimiter(',');
    arcsuite->add_option("--trials", a_trials, "trials per size");
    arcsuite->add_option("--seed", a_seed, "RNG seed");
    arcsuite->add_flag("--json", common.json, "machine-readable output");
    arcsuite->callback([&] {
        StringOut out;
        fqb_status st = fqb_arc_suite(a_r, a_q, a_sizes.empty() ? nullptr : a_sizes.data(),
                                      static_cast<int>(a_sizes.size()), a_trials, a_seed, &out.s);
        exit_code = emit(st, out, common, print_arcsuite);
    });

    // lemma
    auto* lemma = app.add_subcommand("lemma", "order-sequence excess check for branches");
    std::string lemma_main;
    std::vector<std::string> lemma_extra;
    lemma->add_option("--branch", lemma_main, "branch JSON file")->required();
    lemma->add_option("--branches", lemma_extra, "further branches at the same center");
    lemma->add_flag("--json", common.json, "machine-readable output");
    lemma->callback([&] {
        std::vector<fqb_branch*> handles;
        auto cleanup = [&] {
            for (auto* b : handles) fqb_branch_free(b);
        };
        std::vector<std::string> files{lemma_main};
        files.insert(files.end(), lemma_extra.begin(), lemma_extra.end());
        for (const auto& f : files) {
            fqb_branch* b = nullptr;
            fqb_status st = fqb_branch_from_file(f.c_str(), &b);
            if (st != FQB_OK) {
                cleanup();
                exit_code = report_error(st);
                return;
            }
            handles.push_back(b);
        }
        StringOut out;
        fqb_status st = fqb_lemma(handles.data(), static_cast<int>(handles.size()), &out.s);
        cleanup();
        exit_code = emit(st, out, common, print_lemma);
    });

    // scan-plane
    auto* scan = app.add_subcommand("scan-plane", "sweep all degree-d plane forms over GF(q)");
    long long s_q = 2;
    int s_d = 3;
    bool s_allow_large = false;
    scan->add_option("--q", s_q, "field order")->required();
    scan->add_option("--d", s_d, "form degree")->required();
    scan->add_flag("--allow-large", s_allow_large, "permit long enumerations");
    scan->add_flag("--json", common.json, "machine-readable output");
    scan->callback([&] {
        StringOut out;
        fqb_status st = fqb_scan_plane(s_q, s_d, s_allow_large ? 1 : 0, &out.s);
        exit_code = emit(st, out, common, print_scan);
    });

    // suite
    auto* suite = app.add_subcommand("suite", "composite verification run");
    std::uint64_t su_seed = 1;
    long long su_q = 0;
    int su_r = 0, su_trials = 0, su_precision = 0;
    suite->add_option("--seed", su_seed, "RNG seed");
    suite->add_option("--q", su_q, "restrict to one field order");
    suite->add_option("--r", su_r, "restrict to one ambient dimension");
    suite->add_option("--trials", su_trials, "trials per randomized check");
    suite->add_option("--precision", su_precision, "series truncation for branch checks");
    suite->add_flag("--json", common.json, "machine-readable output");
    suite->callback([&] {
        StringOut out;
        fqb_status st = fqb_suite(su_seed, su_q, su_r, su_trials, su_precision, &out.s);
        exit_code = emit(st, out, common, print_suite);
    });

    // catalog-list
    auto* cat = app.add_subcommand("catalog-list", "list the built-in curves");
    cat->add_flag("--json", common.json, "machine-readable output");
    cat->callback([&] {
        StringOut out;
        fqb_status st = fqb_catalog_list(&out.s);
        exit_code = emit(st, out, common, print_catalog);
    });

    // transform
    auto* transform = app.add_subcommand("transform", "apply a projective coordinate change");
    CurveArgs t_curve;
    add_curve_flags(transform, t_curve);
    std::string t_branch, t_matrix, t_out;
    transform->add_option("--branch", t_branch, "branch JSON file");
    transform->add_option("--matrix", t_matrix, "JSON file with the (r+1)x(r+1) matrix")->required();
    transform->add_option("--out", t_out, "output file (default stdout)");
    transform->callback([&] {
        std::vector<long long> flat;
        if (!read_matrix_file(t_matrix, flat)) {
            exit_code = static_cast<int>(FQB_E_INPUT);
            return;
        }
        const int n = static_cast<int>(flat.size());
        if (!t_branch.empty()) {
            fqb_branch* b = nullptr;
            fqb_status st = fqb_branch_from_file(t_branch.c_str(), &b);
            if (st != FQB_OK) {
                exit_code = report_error(st);
                return;
            }
            fqb_branch* moved = nullptr;
            st = fqb_branch_transform(b, flat.data(), n, &moved);
            fqb_branch_free(b);
            if (st != FQB_OK) {
                exit_code = report_error(st);
                return;
            }
            StringOut out;
            st = fqb_branch_to_json(moved, &out.s);
            fqb_branch_free(moved);
            exit_code = st != FQB_OK ? report_error(st) : write_output(out.s, t_out);
            return;
        }
        fqb_curve* c = nullptr;
        fqb_status st = load_curve(t_curve, &c);
        if (st != FQB_OK) {
            exit_code = report_error(st);
            return;
        }
        fqb_curve* moved = nullptr;
        st = fqb_curve_transform(c, flat.data(), n, &moved);
        fqb_curve_free(c);
        if (st != FQB_OK) {
            exit_code = report_error(st);
            return;
        }
        StringOut out;
        st = fqb_curve_to_json(moved, &out.s);
        fqb_curve_free(moved);
        exit_code = st != FQB_OK ? report_error(st) : write_output(out.s, t_out);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return static_cast<int>(FQB_E_INPUT);
    }
    return exit_code;
}
