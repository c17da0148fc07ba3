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


#ifndef SIRI_SUITES_HPP_
#define SIRI_SUITES_HPP_

#include <string>

#include "siri/serialize.hpp"

namespace siri {

// Runs a named validator suite (xi1, coverage, beta, regularity, all) with
// optional overrides and returns its JSON report. Unknown suites throw
// Error(kInvalidArgument).
Json run_validation_suite(const std::string& suite, const Json& options, bool& passed);

}  // namespace siri

#endif  // SIRI_SUITES_HPP_
