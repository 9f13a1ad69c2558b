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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "inforank/error.hpp"
#include "inforank/inforank.hpp"
#include "inforank/kernels.hpp"
#include "inforank/synth.hpp"
#include "test_support.hpp"

namespace inforank {
namespace {

using testing::edge;
using testing::graph_of;
using testing::literal;
using testing::type_of;

// fig1 ids: A=0, B=1, C=2, D=3, D01..D33 = 4..36.
constexpr NodeId kA = 0, kB = 1, kC = 2, kD = 3, kD1 = 4;

double norm(const std::vector<double>& x) {
  double sq = 0.0;
  for (double v : x) sq += v * v;
  return std::sqrt(sq);
}

TEST(InfoWeights, Fig1) {
  const auto iw = info_weights(testing::fig1_graph());
  EXPECT_EQ(iw.total_dtp, 48u);
  EXPECT_FALSE(iw.fallback_used);
  EXPECT_EQ(iw.w[kA], 2.0 / 48.0);
  EXPECT_EQ(iw.w[kB], 6.0 / 48.0);
  EXPECT_EQ(iw.w[kC], 6.0 / 48.0);
  EXPECT_EQ(iw.w[kD], 1.0 / 48.0);
  for (NodeId s = kD1; s < 37; ++s) EXPECT_EQ(iw.w[s], 1.0 / 48.0);
}

TEST(InfoWeights, FallbackWithoutLiterals) {
  const auto iw = info_weights(
      graph_of({type_of("a"), type_of("b"), type_of("c"), type_of("d")}));
  EXPECT_TRUE(iw.fallback_used);
  for (double w : iw.w) EXPECT_EQ(w, 0.25);
}

TEST(InfoWeights, DirectRatio) {
  const auto iw = info_weights(
      graph_of({type_of("a"), type_of("b"), literal("a", "p", "1"),
                literal("a", "p", "2"), literal("a", "p", "3"),
                literal("b", "p", "1")}));
  EXPECT_EQ(iw.w[0], 0.75);
  EXPECT_EQ(iw.w[1], 0.25);
}

TEST(InfoWeights, EmptyGraph) {
  EXPECT_THROW(info_weights(graph_of({})), DataError);
  EXPECT_THROW(inforank1(graph_of({})), DataError);
}

TEST(InfoRank1, Fig1TopIsBAndC) {
  const auto r = inforank1(testing::fig1_graph());
  EXPECT_EQ(r.iterations, 0u);
  EXPECT_TRUE(r.converged);
  EXPECT_EQ(r[kB], r[kC]);
  for (NodeId v = 0; v < r.size(); ++v) {
    if (v != kB && v != kC) EXPECT_LT(r[v], r[kB]);
  }
  EXPECT_NEAR(std::accumulate(r.scores.begin(), r.scores.end(), 0.0), 1.0,
              1e-12);
}

TEST(InfoRank1, MoreLiteralsNeverLowerRank) {
  std::mt19937_64 rng(77);
  for (int round = 0; round < 50; ++round) {
    auto c = testing::random_case(rng(), 20);
    const auto before = inforank1(graph_of(c.triples));
    const NodeId v = static_cast<NodeId>(rng() % c.n);
    c.triples.push_back(literal(testing::node_name(v), "extra", "new value"));
    const auto after = inforank1(graph_of(c.triples));
    const auto above = [&](const ScoreVector& s) {
      return std::count_if(s.scores.begin(), s.scores.end(),
                           [&](double x) { return x > s[v]; });
    };
    EXPECT_LE(above(after), above(before));
  }
}

TEST(TopZ, HubPicksBridgeThenLowestIds) {
  const InstanceGraph g = testing::fig1_graph();
  const auto w = info_weights(g).w;
  std::vector<NodeId> expected{kA};
  for (NodeId s = kD1; s < kD1 + 9; ++s) expected.push_back(s);
  EXPECT_EQ(top_z_neighbors(g, kD, w, 10), expected);
}

TEST(TopZ, LargeZReturnsAllSorted) {
  const InstanceGraph g = testing::fig1_graph();
  const auto w = info_weights(g).w;
  EXPECT_EQ(top_z_neighbors(g, kA, w, 50),
            (std::vector<NodeId>{kB, kC, kD}));
}

TEST(TopZ, AllTiedTakesLowestIds) {
  const InstanceGraph g = testing::fig1_graph();
  const std::vector<double> flat(g.size(), 1.0);
  EXPECT_EQ(top_z_neighbors(g, kD, flat, 3),
            (std::vector<NodeId>{kA, kD1, kD1 + 1}));
}

TEST(InfoRank3, Fig1IterationsTrackExpectedScores) {
  // Expected scores at i=1..3 for A, B(=C), D, Di.
  const double table[3][4] = {{0.351, 0.544, 0.13, 0.09},
                              {0.464, 0.519, 0.159, 0.082},
                              {0.54, 0.498, 0.182, 0.074}};
  std::vector<std::vector<double>> seen;
  IterationConfig cfg;
  cfg.observer = [&](std::size_t, double, std::span<const double> x) {
    seen.emplace_back(x.begin(), x.end());
  };
  const auto r = inforank3(testing::fig1_graph(), TopZConfig{10}, cfg);
  ASSERT_GE(seen.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    const double tol = i == 0 ? 0.005 : 0.02;
    EXPECT_NEAR(seen[i][kA], table[i][0], tol) << "i=" << i + 1;
    EXPECT_NEAR(seen[i][kB], table[i][1], tol) << "i=" << i + 1;
    EXPECT_NEAR(seen[i][kC], table[i][1], tol) << "i=" << i + 1;
    EXPECT_NEAR(seen[i][kD], table[i][2], tol) << "i=" << i + 1;
    EXPECT_NEAR(seen[i][kD1], table[i][3], tol) << "i=" << i + 1;
  }
  EXPECT_LT(seen[1][kA], seen[1][kB]);
  EXPECT_GT(seen[2][kA], seen[2][kB]);
  EXPECT_TRUE(r.converged);
  EXPECT_GE(r.iterations, 10u);
  EXPECT_LE(r.iterations, 30u);
  EXPECT_GT(r[kA], r[kB]);
  EXPECT_EQ(r[kB], r[kC]);
  EXPECT_GT(r[kC], r[kD]);
  for (NodeId s = kD1; s < 37; ++s) EXPECT_GT(r[kD], r[s]);
}

TEST(InfoRank3, HubUpdateFromRoundedVector) {
  const InstanceGraph g = testing::fig1_graph();
  const auto w = info_weights(g).w;
  std::vector<double> prev(g.size(), 0.09);
  prev[kA] = 0.351;
  prev[kB] = prev[kC] = 0.544;
  prev[kD] = 0.13;
  std::vector<double> next(g.size());
  kernels::propagate_top_z_step(g.undirected(), w, prev, next, 10);
  const double expected =
      0.13 + 0.351 * (3.0 / 48.0) + 9 * 0.09 * (2.0 / 48.0);
  EXPECT_NEAR(next[kD], expected, 1e-12);
}

TEST(InfoRank3, LargeZIsInfoRank2) {
  const InstanceGraph g = testing::fig1_graph();
  const auto ir2 = inforank2(g, IterationConfig{});
  const auto ir3 = inforank3(g, TopZConfig{34}, IterationConfig{});
  EXPECT_EQ(ir2.scores, ir3.scores);
  EXPECT_EQ(ir2.iterations, ir3.iterations);
}

TEST(InfoRank3, InvalidZ) {
  EXPECT_THROW(inforank3(testing::fig1_graph(), TopZConfig{0}, IterationConfig{}),
               ConfigError);
}

TEST(InfoRank2, SingleNode) {
  const auto r = inforank2(
      graph_of({type_of("a"), literal("a", "p", "1"), literal("a", "p", "2"),
                literal("a", "p", "3"), literal("a", "p", "4"),
                literal("a", "p", "5")}),
      IterationConfig{});
  EXPECT_NEAR(r[0], 1.0, 1e-12);
}

TEST(InfoRank, RandomGraphsMatchDenseOracle) {
  IterationConfig cfg;
  cfg.epsilon = 1e-10;
  for (std::uint64_t seed = 100; seed < 130; ++seed) {
    const auto c = testing::random_case(seed);
    const InstanceGraph g = graph_of(c.triples);
    const auto dense = c.dense();
    for (std::size_t z : {0u, 1u, 2u, 5u}) {
      const auto r = z == 0 ? inforank2(g, cfg) : inforank3(g, TopZConfig{z}, cfg);
      const auto oracle = testing::dense_inforank(dense, z, 1e-10, 200);
      EXPECT_EQ(r.iterations, oracle.iterations) << "seed " << seed;
      for (std::size_t v = 0; v < c.n; ++v) {
        ASSERT_NEAR(r[v], oracle.x[v], 1e-9) << "seed " << seed << " z " << z;
      }
    }
  }
}

TEST(InfoRank, UnitNormAndPositiveEveryIteration) {
  for (std::uint64_t seed = 200; seed < 210; ++seed) {
    const InstanceGraph g = graph_of(testing::random_case(seed).triples);
    IterationConfig cfg;
    cfg.observer = [](std::size_t, double, std::span<const double> x) {
      const std::vector<double> v(x.begin(), x.end());
      EXPECT_NEAR(norm(v), 1.0, 1e-12);
      for (double s : v) EXPECT_GE(s, 0.0);
    };
    inforank2(g, cfg);
    const auto r = inforank3(g, TopZConfig{3}, cfg);
    const auto iw = info_weights(g);
    for (NodeId v = 0; v < g.size(); ++v) {
      if (iw.w[v] > 0.0) EXPECT_GT(r[v], 0.0);
    }
  }
}

TEST(InfoRank, PermutingIrisPermutesScoreMultiset) {
  const auto c = testing::random_case(300);
  std::vector<Triple> renamed = c.triples;
  for (Triple& t : renamed) {
    for (Term* term : {&t.subject, &t.object}) {
      if (term->is_iri() && term->lexical.starts_with(testing::ex("n"))) {
        const std::size_t v = std::stoul(term->lexical.substr(11));
        term->lexical = testing::ex("r" + testing::node_name(c.n - 1 - v));
      }
    }
  }
  auto sorted = [](std::vector<double> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  const IterationConfig cfg;
  const auto a = sorted(inforank2(graph_of(c.triples), cfg).scores);
  const auto b = sorted(inforank2(graph_of(renamed), cfg).scores);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t v = 0; v < a.size(); ++v) EXPECT_NEAR(a[v], b[v], 1e-12);
}

}  // namespace
}  // namespace inforank
