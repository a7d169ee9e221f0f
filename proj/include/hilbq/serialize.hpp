#pragma once

#include <nlohmann/json_fwd.hpp>

#include "hilbq/qseries.hpp"
#include "hilbq/quadform.hpp"
#include "hilbq/theta.hpp"

namespace hilbq {

using json = nlohmann::json;

/// {offset_numerator, offset_denominator, order, coeffs[]} with every integer
/// rendered as a decimal string (coefficients exceed 64 bits at modest orders).
json qseries_to_json(const QSeries& s);
QSeries qseries_from_json(const json& j);

/// {rank, coeffs: [[i, j, c_ij], ...]} with 1-based indices as decimal strings.
json quadform_to_json(const QuadraticForm& q);
QuadraticForm quadform_from_json(const json& j);

/// [{coefficient_num, coefficient_den, form}, ...]
json terms_to_json(const std::vector<DecompositionTerm>& terms);
std::vector<DecompositionTerm> terms_from_json(const json& j);

}  // namespace hilbq
