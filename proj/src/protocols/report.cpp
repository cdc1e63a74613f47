// Copyright 2026 The entdist Authors
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

#include <algorithm>

#include <json.hpp>

#include "entdist/protocols.hpp"

namespace entdist {

void CheckReport::add(int trial, const std::string& label, const IneqResult& r,
                      const std::string& kind_on_fail) {
  if (kind_on_fail == "violation") {
    const double s = r.lhs - r.rhs + r.slack;
    worst_slack = any_ ? std::min(worst_slack, s) : s;
    any_ = true;
  }
  if (!r.holds) failures.push_back({trial, label, r.lhs, r.rhs, r.slack, kind_on_fail});
}

int CheckReport::hard_failures() const {
  return static_cast<int>(std::count_if(failures.begin(), failures.end(),
                                        [](const Failure& f) { return f.kind == "violation"; }));
}

std::string to_json(const CheckReport& report) {
  nlohmann::ordered_json j;
  j["check"] = report.check;
  j["seed"] = report.seed;
  j["n_trials"] = report.n_trials;
  j["worst_slack"] = report.worst_slack;
  j["failures"] = nlohmann::ordered_json::array();
  for (const auto& f : report.failures) {
    j["failures"].push_back({{"trial", f.trial},
                             {"label", f.label},
                             {"kind", f.kind},
                             {"lhs", f.lhs},
                             {"rhs", f.rhs},
                             {"slack", f.slack}});
  }
  j["notes"] = report.notes;
  return j.dump(2) + "\n";
}

}  // namespace entdist
