/*
 * Copyright 2026 The InfoRank Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "inforank/scores.hpp"

#include <array>
#include <cmath>
#include <utility>

#include "inforank/error.hpp"

namespace inforank {

namespace {

constexpr std::array<std::pair<Measure, std::string_view>, 9> kMeasureNames{{
    {Measure::indegree, "indegree"},
    {Measure::outdegree, "outdegree"},
    {Measure::degree, "degree"},
    {Measure::pagerank, "pagerank"},
    {Measure::weighted_pagerank, "wpagerank"},
    {Measure::eigenvector, "eigenvector"},
    {Measure::inforank1, "inforank1"},
    {Measure::inforank2, "inforank2"},
    {Measure::inforank3, "inforank3"},
}};

}  // namespace

std::string_view measure_name(Measure m) noexcept {
  for (const auto& [measure, name] : kMeasureNames) {
    if (measure == m) return name;
  }
  return "?";
}

std::optional<Measure> parse_measure(std::string_view name) noexcept {
  for (const auto& [measure, n] : kMeasureNames) {
    if (n == name) return measure;
  }
  return std::nullopt;
}

bool is_iterative(Measure m) noexcept {
  switch (m) {
    case Measure::pagerank:
    case Measure::weighted_pagerank:
    case Measure::eigenvector:
    case Measure::inforank2:
    case Measure::inforank3:
      return true;
    default:
      return false;
  }
}

std::string_view dangling_policy_name(DanglingPolicy p) noexcept {
  return p == DanglingPolicy::redistribute ? "redistribute" : "drop";
}

void IterationConfig::validate() const {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw ConfigError("alpha must lie in (0, 1), got " + std::to_string(alpha));
  }
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw ConfigError("epsilon must be positive, got " +
                      std::to_string(epsilon));
  }
  if (max_iter < 1) throw ConfigError("max_iter must be at least 1");
}

}  // namespace inforank
