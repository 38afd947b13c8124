#ifndef SOBNULL_IO_HPP
#define SOBNULL_IO_HPP

#include "sobnull/ball_cloud.hpp"
#include "sobnull/cantor.hpp"
#include "sobnull/classify.hpp"
#include "sobnull/interval_set.hpp"
#include "sobnull/solve.hpp"

#include <json.hpp>

#include <string>

namespace sobnull::io {

using nlohmann::json;

// IntervalSet <-> JSON array of [numerator, denominator] string pairs;
// float-backed sets serialize as decimal strings with a precision_bits field.
json to_json(const sets::IntervalSet& A);
json to_json(const sets::FloatIntervalSet& A);
sets::IntervalSet interval_set_from_json(const json& j);

json spec_to_json(const sets::CantorSpec& spec);
sets::CantorSpec spec_from_json(const json& j);

json verdict_to_json(const nullity::NullityVerdict& v, double s, double p,
                     const std::string& family);

json report_to_json(const capacity::SolveReport& rep);

json cloud_to_json(const sets::BallCloud& cloud);

// Rejects keys outside `allowed`; throws std::invalid_argument naming the
// offender (experiment configs are schema-checked before execution).
void require_keys_subset(const json& j, const std::vector<std::string>& allowed,
                         const std::string& context);

} // namespace sobnull::io

#endif
