#include "serialize.hpp"

#include <fstream>

#include "version.hpp"

namespace fq {

namespace {

long long get_int(const Json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw Error(Err::parse_error, std::string("missing or non-integer field \"") + key + "\"");
    return j[key].get<long long>();
}

const Json& get_array(const Json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_array())
        throw Error(Err::parse_error, std::string("missing or non-array field \"") + key + "\"");
    return j[key];
}

Json load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Err::parse_error, "cannot open " + path);
    Json j = Json::parse(in, nullptr, false);
    if (j.is_discarded()) throw Error(Err::parse_error, "invalid JSON in " + path);
    return j;
}

} // namespace

Json field_to_json(const Field& F) {
    return Json{{"p", F.p()}, {"e", F.e()}, {"modulus", F.modulus()}};
}

Field field_from_json(const Json& j) {
    if (!j.is_object()) throw Error(Err::parse_error, "field description must be an object");
    int p = static_cast<int>(get_int(j, "p"));
    int e = static_cast<int>(get_int(j, "e"));
    if (j.contains("modulus")) {
        std::vector<int> mod;
        for (const auto& c : get_array(j, "modulus")) {
            if (!c.is_number_integer()) throw Error(Err::parse_error, "modulus coefficients must be integers");
            mod.push_back(c.get<int>());
        }
        return Field(p, e, mod);
    }
    return Field(p, e);
}

Json poly_to_json(const HomogeneousPoly& f) {
    Json terms = Json::array();
    for (const auto& [mono, coeff] : f.terms())
        terms.push_back(Json{{"coeff", coeff}, {"monomial", mono.e}});
    return Json{{"degree", f.degree()}, {"terms", terms}};
}

HomogeneousPoly poly_from_json(const Field& F, int nvars, const Json& j) {
    if (!j.is_object()) throw Error(Err::parse_error, "polynomial must be an object");
    int degree = static_cast<int>(get_int(j, "degree"));
    std::vector<std::pair<Monomial, Elem>> terms;
    for (const auto& t : get_array(j, "terms")) {
        long long c = get_int(t, "coeff");
        if (c < 0) throw Error(Err::parse_error, "coefficient index must be nonnegative");
        Monomial m;
        for (const auto& ex : get_array(t, "monomial")) {
            if (!ex.is_number_integer()) throw Error(Err::parse_error, "exponents must be integers");
            m.e.push_back(ex.get<int>());
        }
        terms.emplace_back(std::move(m), static_cast<Elem>(c));
    }
    return HomogeneousPoly::make(F, nvars, degree, std::move(terms));
}

Json curve_to_json(const CurveDef& c) {
    Json polys = Json::array();
    for (const auto& f : c.equations) polys.push_back(poly_to_json(f));
    return Json{{"field", field_to_json(c.field)},
                {"ambient_dim", c.r},
                {"degree", c.degree},
                {"name", c.name},
                {"polynomials", polys}};
}

CurveDef curve_from_json(const Json& j) {
    if (!j.is_object()) throw Error(Err::parse_error, "curve description must be an object");
    if (!j.contains("field")) throw Error(Err::parse_error, "curve is missing its \"field\"");
    Field F = field_from_json(j["field"]);
    int r = static_cast<int>(get_int(j, "ambient_dim"));
    int degree = static_cast<int>(get_int(j, "degree"));
    std::string name = j.value("name", std::string{});
    std::vector<HomogeneousPoly> eqs;
    for (const auto& pj : get_array(j, "polynomials")) eqs.push_back(poly_from_json(F, r + 1, pj));
    return make_curve(F, r, std::move(eqs), degree, std::move(name));
}

CurveDef curve_from_string(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw Error(Err::parse_error, "invalid JSON curve description");
    return curve_from_json(j);
}

CurveDef curve_from_file(const std::string& path) { return curve_from_json(load_file(path)); }

Json pointset_to_json(const PointSet& X) {
    Json pts = Json::array();
    for (const auto& P : X.points) pts.push_back(P.c);
    return Json{{"field", field_to_json(X.field)}, {"r", X.r}, {"points", pts}};
}

PointSet pointset_from_json(const Json& j) {
    if (!j.is_object()) throw Error(Err::parse_error, "point set must be an object");
    if (!j.contains("field")) throw Error(Err::parse_error, "point set is missing its \"field\"");
    Field F = field_from_json(j["field"]);
    int r = static_cast<int>(get_int(j, "r"));
    std::vector<std::vector<Elem>> raw;
    for (const auto& pj : get_array(j, "points")) {
        if (!pj.is_array()) throw Error(Err::parse_error, "each point must be a coordinate array");
        std::vector<Elem> v;
        for (const auto& c : pj) {
            long long x = c.is_number_integer() ? c.get<long long>() : -1;
            if (x < 0 || x >= F.q()) throw Error(Err::parse_error, "coordinate outside the field");
            v.push_back(static_cast<Elem>(x));
        }
        raw.push_back(std::move(v));
    }
    return make_point_set(F, r, raw);
}

PointSet pointset_from_file(const std::string& path) { return pointset_from_json(load_file(path)); }

Json branch_to_json(const Branch& b) {
    Json series = Json::array();
    for (const auto& s : b.series) series.push_back(s.coeffs);
    return Json{{"field", field_to_json(b.field)}, {"r", b.r}, {"truncation", b.T}, {"series", series}};
}

Branch branch_from_json(const Json& j) {
    if (!j.is_object()) throw Error(Err::parse_error, "branch description must be an object");
    if (!j.contains("field")) throw Error(Err::parse_error, "branch is missing its \"field\"");
    Field F = field_from_json(j["field"]);
    int r = static_cast<int>(get_int(j, "r"));
    int T = static_cast<int>(get_int(j, "truncation"));
    std::vector<TruncatedSeries> series;
    for (const auto& sj : get_array(j, "series")) {
        if (!sj.is_array()) throw Error(Err::parse_error, "each series must be a coefficient array");
        std::vector<Elem> coeffs;
        for (const auto& c : sj) {
            long long x = c.is_number_integer() ? c.get<long long>() : -1;
            if (x < 0 || x >= F.q()) throw Error(Err::parse_error, "series coefficient outside the field");
            coeffs.push_back(static_cast<Elem>(x));
        }
        series.push_back(series_make(T, std::move(coeffs)));
    }
    return make_branch(F, r, T, std::move(series));
}

Branch branch_from_file(const std::string& path) { return branch_from_json(load_file(path)); }

Json point_to_json(const ProjPoint& P) { return Json(P.c); }

Json tool_stanza() { return Json{{"name", "fqbound"}, {"version", FQBOUND_VERSION}}; }

} // namespace fq
