// JSON schemas for everything that crosses the file boundary:
//   field   {"p": int, "e": int, "modulus": [c0, ..., ce]}
//   poly    {"degree": d, "terms": [{"coeff": idx, "monomial": [e0, ..., er]}]}
//   curve   {"field": {...}, "ambient_dim": r, "degree": d, "name": "...", "polynomials": [...]}
//   points  {"field": {...}, "r": r, "points": [[i0, ..., ir], ...]}
//   branch  {"field": {...}, "r": r, "truncation": T, "series": [[c1, ..., cT], ...]}
//   series  {"truncation": T, "coeffs": [c1, ..., cT]}

#ifndef FQ_SERIALIZE_HPP
#define FQ_SERIALIZE_HPP

#include <string>

#include <json.hpp>

#include "curves.hpp"
#include "orderseq.hpp"
#include "arcs.hpp"

namespace fq {

using Json = nlohmann::json;

Json field_to_json(const Field& F);
Field field_from_json(const Json& j);

Json poly_to_json(const HomogeneousPoly& f);
HomogeneousPoly poly_from_json(const Field& F, int nvars, const Json& j);

Json curve_to_json(const CurveDef& c);
CurveDef curve_from_json(const Json& j);
CurveDef curve_from_string(const std::string& text);
CurveDef curve_from_file(const std::string& path);

Json pointset_to_json(const PointSet& X);
PointSet pointset_from_json(const Json& j);
PointSet pointset_from_file(const std::string& path);

Json branch_to_json(const Branch& b);
Branch branch_from_json(const Json& j);
Branch branch_from_file(const std::string& path);

Json point_to_json(const ProjPoint& P);

// Shared "tool" stanza embedded in reports: version plus whatever
// reproducibility inputs the caller passes through.
Json tool_stanza();

} // namespace fq

#endif
