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

#include <span>
#include <utility>
#include <vector>

#include "inforank/error.hpp"
#include "inforank/kernels.hpp"
#include "inforank/scores.hpp"

namespace inforank::detail {

inline std::vector<double> initial_vector(std::size_t n,
                                          std::span<const double> start,
                                          std::vector<double> fallback) {
  if (start.empty()) return fallback;
  if (start.size() != n) {
    throw ConfigError("start vector has " + std::to_string(start.size()) +
                      " entries, graph has " + std::to_string(n) + " nodes");
  }
  return {start.begin(), start.end()};
}

// Runs `step(prev, next)` until the L-inf change drops below epsilon or
// max_iter iterations have run. With `normalize`, each new vector is scaled
// to unit Euclidean norm before the change is measured.
template <typename Step>
ScoreVector power_iterate(Measure measure, std::vector<double> x,
                          const IterationConfig& cfg, bool normalize,
                          Step&& step) {
  const bool serial = cfg.backend == Backend::serial;
  std::vector<double> next(x.size());
  ScoreVector out;
  out.measure = measure;
  out.converged = false;
  for (std::size_t i = 1; i <= cfg.max_iter; ++i) {
    step(std::span<const double>(x), std::span<double>(next));
    if (normalize) {
      serial ? kernels::serial::l2_normalize(next)
             : kernels::l2_normalize(next);
    }
    const double delta = serial ? kernels::serial::max_abs_diff(x, next)
                                : kernels::max_abs_diff(x, next);
    std::swap(x, next);
    out.iterations = i;
    out.final_delta = delta;
    if (cfg.observer) cfg.observer(i, delta, x);
    if (delta < cfg.epsilon) {
      out.converged = true;
      break;
    }
  }
  out.scores = std::move(x);
  return out;
}

}  // namespace inforank::detail
