#ifndef FQ_ERROR_HPP
#define FQ_ERROR_HPP

#include <stdexcept>
#include <string>

namespace fq {

enum class Err {
    composite_p,
    non_monic_modulus,
    reducible_modulus,
    field_too_large,
    division_by_zero,
    incompatible_fields,
    zero_vector,
    dimension_mismatch,
    wrong_span_dimension,
    empty_set,
    non_homogeneous,
    not_linear,
    unsupported_ambient,
    truncation_mismatch,
    no_points_retained,
    nonpositive_denominator,
    point_not_in_set,
    all_series_zero,
    zero_covector,
    insufficient_precision,
    unknown_catalog_entry,
    scan_too_large,
    validation_failure,
    chart_degenerate,
    parse_error,
    invalid_argument,
};

struct Error : std::runtime_error {
    Err kind;
    Error(Err k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

const char* err_name(Err k);

} // namespace fq

#endif
