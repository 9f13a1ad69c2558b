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

#include "inforank/centrality.hpp"

#include <algorithm>
#include <cmath>
#include <charconv>
#include <fstream>
#include <istream>

#include "inforank/error.hpp"
#include "inforank/kernels.hpp"
#include "power_iteration.hpp"

namespace inforank {

namespace {

void check_weight(double w, std::string_view what) {
  if (!(w >= 0.0 && w <= 1.0)) {
    throw ConfigError("weight for " + std::string(what) +
                      " must lie in [0, 1], got " + std::to_string(w));
  }
}

void require_nodes(const InstanceGraph& g) {
  if (g.empty()) throw DataError("empty graph");
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::uint32_t> out_degrees(const InstanceGraph& g) {
  std::vector<std::uint32_t> d(g.size());
  for (NodeId v = 0; v < g.size(); ++v) {
    d[v] = static_cast<std::uint32_t>(g.out_edges().degree(v));
  }
  return d;
}

ScoreVector run_pagerank(const InstanceGraph& g,
                         std::span<const double> in_weights,
                         const IterationConfig& cfg,
                         std::span<const double> start, Measure measure) {
  require_nodes(g);
  cfg.validate();
  const std::size_t n = g.size();
  const auto degrees = out_degrees(g);
  auto x = detail::initial_vector(
      n, start, std::vector<double>(n, 1.0 / static_cast<double>(n)));
  return detail::power_iterate(
      measure, std::move(x), cfg, /*normalize=*/false,
      [&](std::span<const double> prev, std::span<double> next) {
        if (cfg.backend == Backend::serial) {
          kernels::serial::pagerank_step(g.in_edges(), degrees, in_weights,
                                         prev, next, cfg.alpha, cfg.dangling);
        } else {
          kernels::pagerank_step(g.in_edges(), degrees, in_weights, prev, next,
                                 cfg.alpha, cfg.dangling);
        }
      });
}

}  // namespace

WeightTable::WeightTable(double default_weight) { set_default(default_weight); }

void WeightTable::set(std::string predicate, double weight) {
  check_weight(weight, predicate);
  entries_[std::move(predicate)] = weight;
}

void WeightTable::set_default(double weight) {
  check_weight(weight, "default");
  default_ = weight;
}

double WeightTable::weight(std::string_view predicate) const {
  const auto it = entries_.find(predicate);
  return it == entries_.end() ? default_ : it->second;
}

WeightTable WeightTable::parse(std::istream& in) {
  WeightTable table;
  std::string line;
  std::uint64_t line_no = 0;
  bool seen_default = false;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    const auto tab = text.find('\t');
    if (tab == std::string_view::npos) {
      throw DataError("weights line " + std::to_string(line_no) +
                      ": expected <predicate>\\t<weight>");
    }
    std::string_view key = trim(text.substr(0, tab));
    const std::string_view value = trim(text.substr(tab + 1));
    double w = 0.0;
    const auto [ptr, ec] =
        std::from_chars(value.data(), value.data() + value.size(), w);
    if (ec != std::errc{} || ptr != value.data() + value.size()) {
      throw DataError("weights line " + std::to_string(line_no) +
                      ": invalid weight '" + std::string(value) + "'");
    }
    if (!(w >= 0.0 && w <= 1.0)) {
      throw DataError("weights line " + std::to_string(line_no) +
                      ": weight must lie in [0, 1], got " + std::string(value));
    }
    if (key.size() >= 2 && key.front() == '<' && key.back() == '>') {
      key = key.substr(1, key.size() - 2);
    }
    if (key.empty()) {
      throw DataError("weights line " + std::to_string(line_no) +
                      ": empty predicate");
    }
    if (key == "default") {
      if (seen_default) {
        throw DataError("weights line " + std::to_string(line_no) +
                        ": duplicate default");
      }
      seen_default = true;
      table.set_default(w);
      continue;
    }
    if (table.entries_.contains(key)) {
      throw DataError("weights line " + std::to_string(line_no) +
                      ": duplicate predicate " + std::string(key));
    }
    table.set(std::string(key), w);
  }
  return table;
}

WeightTable WeightTable::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path.string());
  return parse(in);
}

ScoreVector degree_scores(const InstanceGraph& g, DegreeMode mode) {
  ScoreVector out;
  out.measure = mode == DegreeMode::in    ? Measure::indegree
                : mode == DegreeMode::out ? Measure::outdegree
                                          : Measure::degree;
  const Csr& csr = mode == DegreeMode::in    ? g.in_edges()
                   : mode == DegreeMode::out ? g.out_edges()
                                             : g.undirected();
  out.scores.resize(g.size());
  for (NodeId v = 0; v < g.size(); ++v) {
    out.scores[v] = static_cast<double>(csr.degree(v));
  }
  return out;
}

std::vector<double> in_edge_weights(const InstanceGraph& g,
                                    const WeightTable& weights) {
  std::vector<double> per_predicate(g.predicate_count());
  for (PredicateId p = 0; p < per_predicate.size(); ++p) {
    per_predicate[p] = weights.weight(g.predicate(p));
  }
  const Csr& in = g.in_edges();
  const Csr& out = g.out_edges();
  std::vector<double> result(in.targets.size(), 0.0);
  for (NodeId v = 0; v < g.size(); ++v) {
    for (std::uint64_t k = in.offsets[v]; k < in.offsets[v + 1]; ++k) {
      const NodeId t = in.targets[k];
      const auto row = out.row(t);
      const auto pos = std::lower_bound(row.begin(), row.end(), v);
      const std::uint64_t edge = out.offsets[t] + (pos - row.begin());
      double w = 0.0;
      for (const PredicateId p : g.out_edge_predicates(edge)) {
        w = std::max(w, per_predicate[p]);
      }
      result[k] = w;
    }
  }
  return result;
}

ScoreVector pagerank(const InstanceGraph& g, const IterationConfig& cfg,
                     std::span<const double> start) {
  return run_pagerank(g, {}, cfg, start, Measure::pagerank);
}

ScoreVector weighted_pagerank(const InstanceGraph& g, const WeightTable& weights,
                              const IterationConfig& cfg,
                              std::span<const double> start) {
  require_nodes(g);
  const auto lw = in_edge_weights(g, weights);
  return run_pagerank(g, lw, cfg, start, Measure::weighted_pagerank);
}

ScoreVector eigenvector_centrality(const InstanceGraph& g,
                                   const IterationConfig& cfg,
                                   std::span<const double> start) {
  require_nodes(g);
  cfg.validate();
  const std::size_t n = g.size();
  auto x = detail::initial_vector(
      n, start, std::vector<double>(n, 1.0 / static_cast<double>(n)));
  return detail::power_iterate(
      Measure::eigenvector, std::move(x), cfg, /*normalize=*/true,
      [&](std::span<const double> prev, std::span<double> next) {
        if (cfg.backend == Backend::serial) {
          kernels::serial::propagate_step(g.undirected(), {}, prev, next);
        } else {
          kernels::propagate_step(g.undirected(), {}, prev, next);
        }
      });
}

}  // namespace inforank
