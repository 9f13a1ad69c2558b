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

// Serial reference kernels against the OpenMP kernels on a random graph.
// Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include <map>
#include <random>
#include <vector>

#include "inforank/graph.hpp"
#include "inforank/inforank.hpp"
#include "inforank/kernels.hpp"
#include "inforank/synth.hpp"

namespace {

using namespace inforank;

struct Fixture {
  InstanceGraph graph;
  std::vector<std::uint32_t> out_degree;
  std::vector<double> weights;
  std::vector<double> prev;
  std::vector<double> next;
};

const Fixture& fixture(std::uint32_t nodes) {
  static std::map<std::uint32_t, Fixture> cache;
  auto it = cache.find(nodes);
  if (it != cache.end()) return it->second;
  synth::RandomGraphSpec spec;
  spec.nodes = nodes;
  spec.edges = std::uint64_t{nodes} * 8;
  spec.max_dtp = 5;
  spec.seed = 7;
  Fixture f;
  f.graph = ingest(GeneratedSource([spec](const TripleSink& sink) {
              synth::emit_random(spec, sink);
            })).graph;
  for (NodeId v = 0; v < f.graph.size(); ++v) {
    f.out_degree.push_back(
        static_cast<std::uint32_t>(f.graph.out_edges().degree(v)));
  }
  f.weights = info_weights(f.graph).w;
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  f.prev.resize(f.graph.size());
  for (double& x : f.prev) x = u(rng);
  f.next.resize(f.graph.size());
  return cache.emplace(nodes, std::move(f)).first->second;
}

template <bool Serial>
void BM_PageRankStep(benchmark::State& state) {
  const Fixture& f = fixture(static_cast<std::uint32_t>(state.range(0)));
  std::vector<double> next(f.prev.size());
  for (auto _ : state) {
    if constexpr (Serial) {
      kernels::serial::pagerank_step(f.graph.in_edges(), f.out_degree, {}, f.prev,
                                     next, 0.85, DanglingPolicy::redistribute);
    } else {
      kernels::pagerank_step(f.graph.in_edges(), f.out_degree, {}, f.prev, next,
                             0.85, DanglingPolicy::redistribute);
    }
    benchmark::DoNotOptimize(next.data());
  }
  state.SetItemsProcessed(state.iterations() * f.graph.directed_edge_count());
}

template <bool Serial>
void BM_PropagateStep(benchmark::State& state) {
  const Fixture& f = fixture(static_cast<std::uint32_t>(state.range(0)));
  std::vector<double> next(f.prev.size());
  for (auto _ : state) {
    if constexpr (Serial) {
      kernels::serial::propagate_step(f.graph.undirected(), f.weights, f.prev, next);
    } else {
      kernels::propagate_step(f.graph.undirected(), f.weights, f.prev, next);
    }
    benchmark::DoNotOptimize(next.data());
  }
  state.SetItemsProcessed(state.iterations() * f.graph.undirected().targets.size());
}

template <bool Serial>
void BM_TopZStep(benchmark::State& state) {
  const Fixture& f = fixture(static_cast<std::uint32_t>(state.range(0)));
  const auto z = static_cast<std::size_t>(state.range(1));
  std::vector<double> next(f.prev.size());
  for (auto _ : state) {
    if constexpr (Serial) {
      kernels::serial::propagate_top_z_step(f.graph.undirected(), f.weights,
                                            f.prev, next, z);
    } else {
      kernels::propagate_top_z_step(f.graph.undirected(), f.weights, f.prev,
                                    next, z);
    }
    benchmark::DoNotOptimize(next.data());
  }
  state.SetItemsProcessed(state.iterations() * f.graph.undirected().targets.size());
}

BENCHMARK(BM_PageRankStep<true>)->Name("pagerank_step/serial")->Arg(100000);
BENCHMARK(BM_PageRankStep<false>)->Name("pagerank_step/parallel")->Arg(100000);
BENCHMARK(BM_PropagateStep<true>)->Name("propagate_step/serial")->Arg(100000);
BENCHMARK(BM_PropagateStep<false>)->Name("propagate_step/parallel")->Arg(100000);
BENCHMARK(BM_TopZStep<true>)->Name("top_z_step/serial")->Args({100000, 4});
BENCHMARK(BM_TopZStep<false>)->Name("top_z_step/parallel")->Args({100000, 4});

}  // namespace

BENCHMARK_MAIN();
