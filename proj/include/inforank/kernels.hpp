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

// Per-iteration kernels shared by the centrality and InfoRank measures.
//
// The top-level functions are OpenMP-parallel over nodes. Each node's
// update accumulates its neighbor contributions in ascending neighbor id,
// and vector reductions use fixed-size blocks combined in block order, so
// results are bit-identical for any thread count.
//
// The `serial` namespace holds straightforward single-threaded versions of
// the same recurrences. They are kept as the reference the parallel
// kernels are tested and benchmarked against.

#include <cstddef>
#include <cstdint>
#include <span>

#include "inforank/graph.hpp"
#include "inforank/scores.hpp"

namespace inforank::kernels {

inline constexpr std::size_t kReductionBlock = 4096;

void set_thread_count(int threads);
int thread_count();

// Sum with a fixed blocking independent of the thread count.
double blocked_sum(std::span<const double> x);
double blocked_sum_of_squares(std::span<const double> x);
double max_abs_diff(std::span<const double> a, std::span<const double> b);

// Divides x by its Euclidean norm; returns the norm. A zero vector is left
// untouched.
double l2_normalize(std::span<double> x);

// next[v] = (1 - alpha)/n + alpha * sum_{t in in(v)} prev[t]/outdeg(t) * w
// where w is in_weights[k] for the k-th in-edge (1 when in_weights is
// empty). With DanglingPolicy::redistribute, alpha * (mass of nodes with no
// out-edges)/n is added to every node.
void pagerank_step(const Csr& in, std::span<const std::uint32_t> out_degree,
                   std::span<const double> in_weights,
                   std::span<const double> prev, std::span<double> next,
                   double alpha, DanglingPolicy dangling);

// next[v] = prev[v] + sum_{t in adj(v)} prev[t] * (w[v] + w[t]);
// with empty node_weights the factor is dropped (plain neighbor sum).
void propagate_step(const Csr& adj, std::span<const double> node_weights,
                    std::span<const double> prev, std::span<double> next);

// As propagate_step, but each node sums only over its z neighbors with the
// highest prev score (ties to the lower id). The selected neighbors are
// accumulated in ascending id, so z >= degree reproduces propagate_step
// exactly.
void propagate_top_z_step(const Csr& adj, std::span<const double> node_weights,
                          std::span<const double> prev, std::span<double> next,
                          std::size_t z);

namespace serial {

double sum(std::span<const double> x);
double max_abs_diff(std::span<const double> a, std::span<const double> b);
double l2_normalize(std::span<double> x);

void pagerank_step(const Csr& in, std::span<const std::uint32_t> out_degree,
                   std::span<const double> in_weights,
                   std::span<const double> prev, std::span<double> next,
                   double alpha, DanglingPolicy dangling);

void propagate_step(const Csr& adj, std::span<const double> node_weights,
                    std::span<const double> prev, std::span<double> next);

// Selects neighbors with a full sort of each neighbor list.
void propagate_top_z_step(const Csr& adj, std::span<const double> node_weights,
                          std::span<const double> prev, std::span<double> next,
                          std::size_t z);

}  // namespace serial

}  // namespace inforank::kernels
