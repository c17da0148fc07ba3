// Copyright 2026 The siri-bandits Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// JSON forms of configs and reports. Parse failures throw
// Error(kInvalidArgument).

#ifndef SIRI_SERIALIZE_HPP_
#define SIRI_SERIALIZE_HPP_

#include <string>

#include <json.hpp>

#include "siri/adapt.hpp"
#include "siri/harness.hpp"
#include "siri/reservoir.hpp"
#include "siri/siri.hpp"
#include "siri/validate.hpp"

namespace siri {

using Json = nlohmann::json;

Json to_json(const ReservoirSpec& spec);
ReservoirSpec reservoir_spec_from_json(const Json& j);

Json to_json(const AlgorithmConfig& cfg);
AlgorithmConfig algorithm_config_from_json(const Json& j);

Json to_json(const ExperimentConfig& cfg);
ExperimentConfig experiment_config_from_json(const Json& j);

Json to_json(const SiriSchedule& sched);
Json to_json(const BetaEstimate& est);
Json to_json(const RateFit& fit);
Json to_json(const std::vector<SummaryStats>& summary);
Json to_json(const IntervalCensus& census);
Json to_json(const Xi1Report& report);
Json to_json(const CoverageReport& report);
Json to_json(const BetaConcentrationReport& report);
Json to_json(const RegularityReport& report);

// Parses text, mapping syntax errors to Error(kInvalidArgument).
Json parse_json(const std::string& text);

}  // namespace siri

#endif  // SIRI_SERIALIZE_HPP_
