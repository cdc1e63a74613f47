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

#include <array>
#include <string>
#include <utility>

#include "entdist/measures.hpp"

namespace entdist {
namespace {

constexpr std::array<std::pair<Quantifier, std::string_view>, 8> kQuantifierNames{{
    {Quantifier::log_negativity, "log_negativity"},
    {Quantifier::negativity, "negativity"},
    {Quantifier::concurrence, "concurrence"},
    {Quantifier::eof, "eof"},
    {Quantifier::eof_squared, "eof_squared"},
    {Quantifier::ree, "ree"},
    {Quantifier::schatten1, "schatten1"},
    {Quantifier::schatten2, "schatten2"},
}};

constexpr std::array<std::pair<DiscordDistance, std::string_view>, 3> kDiscordNames{{
    {DiscordDistance::relative_entropy, "relative_entropy"},
    {DiscordDistance::schatten1, "schatten1"},
    {DiscordDistance::schatten2, "schatten2"},
}};

Evaluation from_report(OptimizerReport rep) {
  Evaluation e;
  e.value = rep.value;
  e.variational = true;
  e.report = std::move(rep);
  return e;
}

}  // namespace

Evaluation evaluate(Quantifier q, const DensityMatrix& rho, const Bipartition& cut,
                    const OptimizerConfig& cfg) {
  switch (q) {
    case Quantifier::log_negativity:
      return {log_negativity(rho, cut), false, std::nullopt};
    case Quantifier::negativity:
      return {negativity(rho, cut), false, std::nullopt};
    case Quantifier::concurrence:
      return {concurrence(rho, cut), false, std::nullopt};
    case Quantifier::eof:
      return {eof(rho, cut), false, std::nullopt};
    case Quantifier::eof_squared: {
      const double e = eof(rho, cut);
      return {e * e, false, std::nullopt};
    }
    case Quantifier::ree:
      return from_report(ree_ppt(rho, cut, cfg));
    case Quantifier::schatten1:
      return from_report(ep_distance(rho, cut, 1, cfg));
    case Quantifier::schatten2:
      return from_report(ep_distance(rho, cut, 2, cfg));
  }
  throw ContractError("evaluate: unknown quantifier");
}

Evaluation evaluate_discord(DiscordDistance d, const DensityMatrix& rho, int measured,
                            std::span<const int> rest, const OptimizerConfig& cfg) {
  return from_report(discord(rho, measured, rest, d, cfg));
}

std::string_view to_string(Quantifier q) {
  for (const auto& [k, name] : kQuantifierNames) {
    if (k == q) return name;
  }
  return "unknown";
}

std::string_view to_string(DiscordDistance d) {
  for (const auto& [k, name] : kDiscordNames) {
    if (k == d) return name;
  }
  return "unknown";
}

Quantifier parse_quantifier(std::string_view name) {
  for (const auto& [k, n] : kQuantifierNames) {
    if (n == name) return k;
  }
  throw ContractError("unknown quantifier: " + std::string(name));
}

DiscordDistance parse_discord_distance(std::string_view name) {
  for (const auto& [k, n] : kDiscordNames) {
    if (n == name) return k;
  }
  throw ContractError("unknown discord distance: " + std::string(name));
}

}  // namespace entdist
