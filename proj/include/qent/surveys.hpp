// Copyright 2026 The qent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Figure-level datasets behind the command-line subcommands. Each runner
// takes string parameters (as they arrive from flags) and returns a table
// with a fixed column order.

#ifndef QENT_SURVEYS_HPP_
#define QENT_SURVEYS_HPP_

#include <map>
#include <string>
#include <variant>
#include <vector>

namespace qent {

// Empty, integer, real or text.
using Cell = std::variant<std::monostate, long long, double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
};

using ParamMap = std::map<std::string, std::string>;

// Names accepted by run_survey, in documentation order.
const std::vector<std::string>& survey_names();

// Parameter keys a survey reads; anything else is rejected.
const std::vector<std::string>& survey_params(const std::string& name);

// Throws std::invalid_argument for an unknown survey or parameter key and
// DomainError for values outside their domain.
Table run_survey(const std::string& name, const ParamMap& params);

}  // namespace qent

#endif  // QENT_SURVEYS_HPP_
