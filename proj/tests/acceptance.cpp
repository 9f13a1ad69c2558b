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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails. Pass --skip-scale to leave out the
// million-node run.

#include <sys/resource.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "dense_oracle.hpp"
#include "inforank/centrality.hpp"
#include "inforank/evaluation.hpp"
#include "inforank/inforank.hpp"
#include "inforank/synth.hpp"
#include "test_support.hpp"

namespace {

using namespace inforank;
using Clock = std::chrono::steady_clock;

constexpr NodeId kA = 0, kB = 1, kC = 2, kD = 3, kD1 = 4;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  // Records a failed check; the first few reasons end up on the line.
  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) detail << "failed: ";
    else detail << "; ";
    detail << what;
    pass = false;
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

InstanceGraph decoupled(std::uint32_t fanout) {
  synth::DecoupledSpec spec;
  spec.hub_fanout = fanout;
  return ingest(GeneratedSource([spec](const TripleSink& sink) {
           synth::emit_decoupled(spec, sink);
         })).graph;
}

struct Fig1Run {
  ScoreVector result;
  std::vector<std::vector<double>> history;  // history[i-1] = iteration i
  double seconds = 0.0;
};

Fig1Run run_fig1() {
  const auto start = Clock::now();
  Fig1Run run;
  IterationConfig cfg;
  cfg.epsilon = 1e-3;
  cfg.observer = [&](std::size_t, double, std::span<const double> x) {
    run.history.emplace_back(x.begin(), x.end());
  };
  run.result = inforank3(testing::fig1_graph(), TopZConfig{10}, cfg);
  run.seconds = seconds_since(start);
  return run;
}

Outcome ac1(const Fig1Run& run) {
  Outcome o;
  const auto iw = info_weights(testing::fig1_graph());
  o.require(iw.w[kA] == 2.0 / 48 && iw.w[kB] == 6.0 / 48 &&
                iw.w[kC] == 6.0 / 48 && iw.w[kD] == 1.0 / 48 &&
                iw.w[kD1] == 1.0 / 48,
            "i=0 weights differ from 2/48, 6/48, 1/48");
  const double expected[3][4] = {{0.351, 0.544, 0.13, 0.09},
                                 {0.464, 0.519, 0.159, 0.082},
                                 {0.54, 0.498, 0.182, 0.074}};
  if (run.history.size() < 3) {
    o.require(false, "fewer than 3 iterations");
    return o;
  }
  double worst[3] = {0, 0, 0};
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& x = run.history[i];
    const double got[4][2] = {{x[kA], expected[i][0]},
                              {x[kB], expected[i][1]},
                              {x[kD], expected[i][2]},
                              {x[kD1], expected[i][3]}};
    for (const auto& [value, want] : got) {
      worst[i] = std::max(worst[i], std::abs(value - want));
    }
    o.require(std::abs(x[kC] - expected[i][1]) <= (i == 0 ? 0.005 : 0.02),
              "C off at i=" + std::to_string(i + 1));
  }
  o.require(worst[0] <= 0.005, "i=1 error " + fmt(worst[0]) + " > 0.005");
  o.require(worst[1] <= 0.02, "i=2 error " + fmt(worst[1]) + " > 0.02");
  o.require(worst[2] <= 0.02, "i=3 error " + fmt(worst[2]) + " > 0.02");
  o.require(run.seconds < 1.0, "took " + fmt(run.seconds) + " s");
  if (o.pass) {
    o.detail << "max |error| i=1 " << fmt(worst[0]) << ", i=2 " << fmt(worst[1])
             << ", i=3 " << fmt(worst[2]) << "; " << fmt(run.seconds) << " s";
  }
  return o;
}

Outcome ac2(const Fig1Run& run) {
  Outcome o;
  std::size_t overtake = 0;
  for (std::size_t i = 0; i < run.history.size(); ++i) {
    const auto& x = run.history[i];
    if (x[kA] > x[kB] && x[kA] > x[kC]) {
      overtake = i + 1;
      break;
    }
  }
  o.require(overtake == 3 || overtake == 4,
            "A overtakes at iteration " + std::to_string(overtake));
  const auto& r = run.result;
  bool order = r[kA] > r[kB] && r[kB] == r[kC] && r[kC] > r[kD];
  for (NodeId s = kD1; s < r.size(); ++s) order = order && r[kD] > r[s];
  o.require(order, "converged order is not A > B = C > D > Di");
  o.require(r.converged && r.iterations >= 10 && r.iterations <= 30,
            "converged=" + std::to_string(r.converged) + " after " +
                std::to_string(r.iterations) + " iterations");
  if (o.pass) {
    o.detail << "A first from iteration " << overtake << ", converged after "
             << r.iterations << " iterations";
  }
  return o;
}

Outcome ac3() {
  Outcome o;
  const auto start = Clock::now();
  const InstanceGraph g = testing::fig1_graph();
  const IterationConfig cfg;
  const auto ir2 = inforank2(g, cfg);
  const auto ir3 = inforank3(g, TopZConfig{34}, cfg);
  std::size_t differing = 0;
  for (NodeId v = 0; v < g.size(); ++v) {
    if (std::memcmp(&ir2.scores[v], &ir3.scores[v], sizeof(double)) != 0) {
      ++differing;
    }
  }
  const double secs = seconds_since(start);
  o.require(differing == 0, std::to_string(differing) + " nodes differ");
  o.require(secs < 1.0, "took " + fmt(secs) + " s");
  if (o.pass) o.detail << "37 nodes bit-identical; " << fmt(secs) << " s";
  return o;
}

Outcome ac4() {
  Outcome o;
  const auto start = Clock::now();
  constexpr double kTol = 1e-9;
  constexpr double kEps = 1e-10;
  constexpr std::size_t kMaxIter = 1000;
  IterationConfig cfg;
  cfg.epsilon = kEps;
  cfg.max_iter = kMaxIter;
  double worst = 0.0;
  const auto compare = [&](const std::vector<double>& got,
                           const std::vector<double>& want,
                           const std::string& what) {
    double err = 0.0;
    for (std::size_t v = 0; v < got.size(); ++v) {
      err = std::max(err, std::abs(got[v] - want[v]));
    }
    worst = std::max(worst, err);
    o.require(err <= kTol, what + " error " + std::to_string(err));
  };
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const auto c = testing::random_case(seed * 7919, 50, 10);
    const InstanceGraph g = testing::graph_of(c.triples);
    const auto dense = c.dense();
    const std::string tag = "graph " + std::to_string(seed) + " ";
    compare(pagerank(g, cfg).scores,
            testing::dense_pagerank(dense, 0.85, kEps, kMaxIter, false, true).x,
            tag + "pagerank");
    compare(weighted_pagerank(g, c.weights, cfg).scores,
            testing::dense_pagerank(dense, 0.85, kEps, kMaxIter, true, true).x,
            tag + "wpagerank");
    compare(eigenvector_centrality(g, cfg).scores,
            testing::dense_eigenvector(dense, kEps, kMaxIter).x,
            tag + "eigenvector");
    compare(inforank2(g, cfg).scores,
            testing::dense_inforank(dense, 0, kEps, kMaxIter).x,
            tag + "inforank2");
    const std::size_t z = 1 + seed % 5;
    compare(inforank3(g, TopZConfig{z}, cfg).scores,
            testing::dense_inforank(dense, z, kEps, kMaxIter).x,
            tag + "inforank3");
  }
  const double secs = seconds_since(start);
  o.require(secs < 10.0, "took " + fmt(secs) + " s");
  if (o.pass) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", worst);
    o.detail << "100 graphs x 5 measures, max |error| " << buf << "; "
             << fmt(secs) << " s";
  }
  return o;
}

Outcome ac5() {
  Outcome o;
  const InstanceGraph cycle = testing::graph_of(
      {testing::type_of("a"), testing::type_of("b"), testing::type_of("c"),
       testing::edge("a", "p", "b"), testing::edge("b", "p", "c"),
       testing::edge("c", "p", "a")});
  for (double v : pagerank(cycle, IterationConfig{}).scores) {
    o.require(std::abs(v - 1.0 / 3.0) <= 1e-12, "3-cycle score " + fmt(v));
  }
  std::vector<InstanceGraph> graphs{cycle, testing::fig1_graph(), decoupled(33),
                                    decoupled(500)};
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    graphs.push_back(testing::graph_of(testing::random_case(seed).triples));
  }
  std::size_t with_dangling = 0;
  double worst = 0.0;
  for (const InstanceGraph& g : graphs) {
    for (NodeId v = 0; v < g.size(); ++v) {
      if (g.successors(v).empty()) {
        ++with_dangling;
        break;
      }
    }
    const auto pr = pagerank(g, IterationConfig{});
    const double total = std::accumulate(pr.scores.begin(), pr.scores.end(), 0.0);
    worst = std::max(worst, std::abs(total - 1.0));
  }
  o.require(worst <= 1e-9, "sum off by " + std::to_string(worst));
  if (o.pass) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1e", worst);
    o.detail << "3-cycle uniform; " << graphs.size() << " graphs ("
             << with_dangling << " with dangling nodes) sum to 1 within " << buf;
  }
  return o;
}

Outcome ac6() {
  Outcome o;
  const auto ranked = [](const std::vector<std::string>& iris) {
    std::vector<ScoredIri> s;
    for (std::size_t i = 0; i < iris.size(); ++i) {
      s.push_back({iris[i], static_cast<double>(iris.size() - i)});
    }
    return rank_from_scores(s);
  };
  const std::vector<std::string> gold{"g1", "g2", "g3", "g4", "g5"};
  o.require(average_precision(ranked(gold), GoldStandard(gold)) == 1.0,
            "AP of gold against itself is not 1");
  const double hand =
      average_precision(ranked({"a", "x", "b"}), GoldStandard({"a", "b"}));
  o.require(std::abs(hand - 5.0 / 6.0) <= 1e-12, "AP([a,x,b]) = " + fmt(hand));
  const double c1 = cmap(std::vector<double>{0.424, 0.350, 0.6182});
  const double c2 = cmap(std::vector<double>{0.264, 0.0, 0.25});
  o.require(std::abs(c1 - 0.464) <= 0.0005, "cmap = " + fmt(c1));
  o.require(std::abs(c2 - 0.171) <= 0.0005, "cmap = " + fmt(c2));
  if (o.pass) {
    o.detail << "AP self 1, AP hand " << fmt(hand) << ", CMAP " << fmt(c1)
             << " and " << fmt(c2);
  }
  return o;
}

Outcome ac7() {
  Outcome o;
  const auto start = Clock::now();
  std::ostringstream summary;
  for (std::uint32_t fanout : {33u, 100u, 500u}) {
    const InstanceGraph g = decoupled(fanout);
    const NodeId a = g.id(synth::node_iri("A"));
    const NodeId b = g.id(synth::node_iri("B"));
    const NodeId c = g.id(synth::node_iri("C"));
    const NodeId d = g.id(synth::node_iri("D"));
    const std::string tag = "fanout " + std::to_string(fanout) + ": ";
    const auto hub_first = [&](const ScoreVector& s) {
      return s[d] > s[a] && s[d] > s[b] && s[d] > s[c];
    };
    o.require(hub_first(degree_scores(g, DegreeMode::total)),
              tag + "degree does not put D above A, B, C");
    o.require(hub_first(pagerank(g, IterationConfig{})),
              tag + "pagerank does not put D above A, B, C");
    const auto ir3 = inforank3(g, TopZConfig{10}, IterationConfig{});
    o.require(ir3.converged, tag + "inforank3 did not converge");
    o.require(ir3[a] > ir3[d] && ir3[b] > ir3[d] && ir3[c] > ir3[d],
              tag + "inforank3 does not put A, B, C above D");
    summary << (fanout == 33 ? "" : ", ") << fanout << " ("
            << ir3.iterations << " it)";
  }
  const double secs = seconds_since(start);
  o.require(secs < 5.0, "took " + fmt(secs) + " s");
  if (o.pass) {
    o.detail << "hub first under degree and pagerank, A B C above D under "
                "inforank3 for fanouts "
             << summary.str() << "; " << fmt(secs) << " s";
  }
  return o;
}

Outcome ac8() {
  Outcome o;
  const std::string twin = testing::ex("twin");
  std::vector<std::pair<std::string, std::vector<Triple>>> cases;
  cases.emplace_back("fig1", [] {
    std::vector<Triple> t;
    synth::emit_fig1([&](std::uint64_t, const Triple& x) { t.push_back(x); });
    return t;
  }());
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    cases.emplace_back("random " + std::to_string(seed),
                       testing::random_case(seed * 31).triples);
  }
  std::size_t vectors = 0;
  for (const auto& [name, triples] : cases) {
    std::vector<Triple> doubled = triples;
    WeightTable weights(1.0);
    for (const Triple& t : triples) {
      if (t.object.is_iri() && !is_type_link(t)) {
        doubled.push_back({t.subject, Term::iri(twin), t.object});
        weights.set(t.predicate.lexical, 0.5);
      }
    }
    // The twin predicate never outweighs the original, so the max rule
    // keeps every edge weight.
    weights.set(twin, 0.25);
    const InstanceGraph g = testing::graph_of(triples);
    const InstanceGraph h = testing::graph_of(doubled);
    const IterationConfig cfg;
    const auto same = [&](const ScoreVector& x, const ScoreVector& y,
                          const char* measure) {
      ++vectors;
      o.require(x.scores.size() == y.scores.size() &&
                    std::memcmp(x.scores.data(), y.scores.data(),
                                x.scores.size() * sizeof(double)) == 0,
                name + " " + measure);
    };
    same(degree_scores(g, DegreeMode::in), degree_scores(h, DegreeMode::in), "indegree");
    same(degree_scores(g, DegreeMode::out), degree_scores(h, DegreeMode::out), "outdegree");
    same(degree_scores(g, DegreeMode::total), degree_scores(h, DegreeMode::total), "degree");
    same(pagerank(g, cfg), pagerank(h, cfg), "pagerank");
    same(weighted_pagerank(g, weights, cfg), weighted_pagerank(h, weights, cfg),
         "wpagerank");
    same(weighted_pagerank(g, WeightTable(1.0), cfg),
         weighted_pagerank(h, WeightTable(1.0), cfg), "wpagerank uniform");
    same(eigenvector_centrality(g, cfg), eigenvector_centrality(h, cfg),
         "eigenvector");
    same(inforank1(g), inforank1(h), "inforank1");
    same(inforank2(g, cfg), inforank2(h, cfg), "inforank2");
    same(inforank3(g, TopZConfig{3}, cfg), inforank3(h, TopZConfig{3}, cfg),
         "inforank3");
  }
  if (o.pass) {
    o.detail << vectors << " score vectors bit-identical over " << cases.size()
             << " graphs";
  }
  return o;
}

double peak_rss_gb() {
  rusage usage{};
  getrusage(RUSAGE_SELF, &usage);
  return static_cast<double>(usage.ru_maxrss) / (1024.0 * 1024.0);
}

Outcome ac9() {
  Outcome o;
  const auto start = Clock::now();
  synth::RandomGraphSpec spec;
  spec.nodes = 1'000'000;
  spec.edges = 5'000'000;
  spec.max_dtp = 2;
  spec.predicates = 8;
  spec.seed = 2026;
  const IngestResult r = ingest(GeneratedSource(
      [spec](const TripleSink& sink) { synth::emit_random(spec, sink); }));
  const double build_secs = seconds_since(start);
  const auto ranked = inforank3(r.graph, TopZConfig{100}, IterationConfig{});
  const double secs = seconds_since(start);
  const double gb = peak_rss_gb();
  o.require(r.graph.size() == spec.nodes, "wrong node count");
  o.require(secs < 300.0, "took " + fmt(secs) + " s");
  o.require(gb < 4.0, "peak memory " + fmt(gb) + " GB");
  if (o.pass) {
    o.detail << r.graph.size() << " nodes, " << r.graph.directed_edge_count()
             << " edges; build " << fmt(build_secs) << " s, inforank3 z=100 "
             << ranked.iterations << " it, total " << fmt(secs)
             << " s, peak " << fmt(gb) << " GB";
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  bool skip_scale = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--skip-scale") == 0) skip_scale = true;
  }
  int failures = 0;
  const auto report = [&](const char* id, const char* title,
                          const std::function<Outcome()>& check) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    if (!o.pass) ++failures;
    std::printf("%s %s %s: %s\n", o.pass ? "PASS" : "FAIL", id, title,
                o.detail.str().c_str());
    std::fflush(stdout);
  };

  const Fig1Run fig1 = run_fig1();
  report("AC1", "fig1 per-iteration scores", [&] { return ac1(fig1); });
  report("AC2", "ordering dynamics on fig1", [&] { return ac2(fig1); });
  report("AC3", "inforank3 with z=34 equals inforank2", ac3);
  report("AC4", "dense oracle equivalence", ac4);
  report("AC5", "pagerank sanity", ac5);
  report("AC6", "metric checks", ac6);
  report("AC7", "hub decoupling at fanout 33/100/500", ac7);
  report("AC8", "duplicate predicates leave scores unchanged", ac8);
  if (skip_scale) {
    std::printf("SKIP AC9 scale smoke: --skip-scale given\n");
  } else {
    report("AC9", "scale smoke, 1M nodes / 5M edges", ac9);
  }
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
