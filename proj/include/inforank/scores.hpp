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

#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace inforank {

enum class Measure {
  indegree,
  outdegree,
  degree,
  pagerank,
  weighted_pagerank,
  eigenvector,
  inforank1,
  inforank2,
  inforank3,
};

// CLI names: indegree, outdegree, degree, pagerank, wpagerank, eigenvector,
// inforank1, inforank2, inforank3.
std::string_view measure_name(Measure m) noexcept;
std::optional<Measure> parse_measure(std::string_view name) noexcept;
bool is_iterative(Measure m) noexcept;

// What happens to the score held by nodes without out-links in the
// PageRank family.
enum class DanglingPolicy { redistribute, drop };

std::string_view dangling_policy_name(DanglingPolicy p) noexcept;

// Which kernel family runs the iterations. `serial` is the single-threaded
// reference path.
enum class Backend { parallel, serial };

// Called after every iteration with the 1-based iteration number, the L-inf
// change and the (normalized) scores of that iteration.
using IterationObserver =
    std::function<void(std::size_t, double, std::span<const double>)>;

struct IterationConfig {
  double alpha = 0.85;
  double epsilon = 1e-3;
  std::size_t max_iter = 200;
  DanglingPolicy dangling = DanglingPolicy::redistribute;
  Backend backend = Backend::parallel;
  IterationObserver observer;

  // Throws ConfigError unless 0 < alpha < 1, epsilon > 0, max_iter >= 1.
  void validate() const;
};

struct ScoreVector {
  Measure measure = Measure::degree;
  std::vector<double> scores;
  std::size_t iterations = 0;
  bool converged = true;
  double final_delta = 0.0;

  std::size_t size() const noexcept { return scores.size(); }
  double operator[](std::size_t v) const { return scores[v]; }
};

}  // namespace inforank
