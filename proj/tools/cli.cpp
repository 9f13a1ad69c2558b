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

#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>

#include "inforank/centrality.hpp"
#include "inforank/error.hpp"
#include "inforank/evaluation.hpp"
#include "inforank/graph.hpp"
#include "inforank/inforank.hpp"
#include "inforank/kernels.hpp"
#include "inforank/rdf.hpp"
#include "inforank/synth.hpp"

namespace inforank::cli {

namespace {

struct GraphOptions {
  std::string input;
  bool skip_malformed = false;
  bool strict = false;
  std::string load_graph;
  std::string save_graph;
};

struct RankOptions {
  GraphOptions graph;
  std::string measure;
  std::size_t z = 10;
  double alpha = 0.85;
  double epsilon = 1e-3;
  std::size_t max_iter = 200;
  std::string weights;
  std::string dangling = "redistribute";
  std::string restrict_file;
  std::string output;
  std::string format = "tsv";
  bool raw = false;
  int threads = 0;
  bool log_iterations = false;
  std::size_t k = 0;
};

struct EvalOptions {
  std::string scores;
  std::vector<std::string> gold;
  std::string restrict_file;
  std::size_t k = 0;
  std::string votes;
};

struct StatsOptions {
  GraphOptions graph;
  bool json = false;
};

struct GenOptions {
  std::string preset;
  std::uint32_t hub = 33;
  std::uint32_t clique_info = 6;
  std::uint32_t bridge_info = 2;
  std::uint32_t satellite_info = 1;
  std::uint64_t seed = 0;
  std::string satellites = "into-hub";
  std::uint32_t random_nodes = 1000;
  std::uint64_t random_edges = 5000;
  std::uint32_t max_dtp = 10;
  std::string output;
};

std::string format_score(double score, bool raw) {
  char buf[64];
  std::snprintf(buf, sizeof buf, raw ? "%.17g" : "%.6g", score);
  return buf;
}

// Shortest text that reads back as the same double.
std::string format_param(double value) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, end);
}

void add_graph_options(CLI::App* cmd, GraphOptions& o) {
  cmd->add_option("--input,-i", o.input,
                  "N-Triples file (standard input when omitted)")
      ->check(CLI::ExistingFile);
  auto* strict = cmd->add_flag("--strict", o.strict,
                               "Abort on the first malformed line (default)");
  cmd->add_flag("--skip-malformed", o.skip_malformed,
                "Count and skip malformed lines")
      ->excludes(strict);
  cmd->add_option("--load-graph", o.load_graph,
                  "Read a graph snapshot instead of N-Triples")
      ->check(CLI::ExistingFile);
  cmd->add_option("--save-graph", o.save_graph,
                  "Write a graph snapshot after building");
}

void report_parse(const ParseReport& report, std::ostream& err) {
  if (report.malformed == 0) return;
  err << "warning: skipped " << report.malformed << " malformed line(s)";
  if (!report.malformed_samples.empty()) {
    const auto& first = report.malformed_samples.front();
    err << "; first at line " << first.line << ": " << first.reason;
  }
  err << '\n';
}

IngestResult load_graph(const GraphOptions& o, std::istream& in,
                        std::ostream& err) {
  IngestResult result;
  if (!o.load_graph.empty()) {
    if (!o.input.empty()) {
      throw ConfigError("--input and --load-graph are mutually exclusive");
    }
    auto [g, stats] = load_snapshot(std::filesystem::path(o.load_graph));
    result.graph = std::move(g);
    result.stats = stats;
  } else {
    const Strictness strictness =
        o.skip_malformed ? Strictness::skip_malformed : Strictness::strict;
    try {
      if (!o.input.empty()) {
        result = ingest(NTriplesFileSource(o.input, strictness));
      } else {
        std::string text(std::istreambuf_iterator<char>(in), {});
        result = ingest(NTriplesTextSource(std::move(text), strictness));
      }
    } catch (const ParseError& e) {
      const std::string name = o.input.empty() ? "<stdin>" : o.input;
      throw DataError(name + ":" + std::to_string(e.line()) + ": " +
                      e.reason());
    } catch (const EncodingError& e) {
      const std::string name = o.input.empty() ? "<stdin>" : o.input;
      throw DataError(name + ": " + e.what());
    }
    report_parse(result.report, err);
  }
  if (!o.save_graph.empty()) {
    save_snapshot(std::filesystem::path(o.save_graph), result.graph,
                  result.stats);
  }
  return result;
}

std::ostream& open_output(const std::string& path, std::ofstream& file,
                          std::ostream& fallback) {
  if (path.empty() || path == "-") return fallback;
  file.open(path, std::ios::binary);
  if (!file) throw DataError("cannot open " + path + " for writing");
  return file;
}

int cmd_stats(const StatsOptions& o, std::istream& in, std::ostream& out,
              std::ostream& err) {
  const IngestResult r = load_graph(o.graph, in, err);
  const BuildStats& s = r.stats;
  std::uint64_t total_dtp = 0;
  for (const auto d : r.graph.dtp_counts()) total_dtp += d;
  const std::vector<std::pair<std::string, std::uint64_t>> rows{
      {"triples_total", s.triples_total},
      {"type_links", s.type_links},
      {"object_edges", s.object_edges},
      {"dangling_edges_dropped", s.dangling_edges_dropped},
      {"datatype_statements", s.datatype_statements},
      {"duplicate_edges_merged", s.duplicate_edges_merged},
      {"self_loops_dropped", s.self_loops_dropped},
      {"malformed_skipped", s.malformed_skipped},
      {"nodes", r.graph.size()},
      {"directed_edges", r.graph.directed_edge_count()},
      {"undirected_edges", r.graph.undirected_edge_count()},
      {"total_dtp", total_dtp},
  };
  if (o.json) {
    nlohmann::ordered_json record;
    for (const auto& [key, value] : rows) record[key] = value;
    out << record.dump() << '\n';
    return kExitOk;
  }
  std::size_t width = 0;
  for (const auto& row : rows) width = std::max(width, row.first.size());
  for (const auto& [key, value] : rows) {
    out << key << std::string(width - key.size() + 2, ' ') << value << '\n';
  }
  return kExitOk;
}

ScoreVector compute(Measure measure, const InstanceGraph& g,
                    const RankOptions& o, const IterationConfig& cfg,
                    std::ostream& err) {
  switch (measure) {
    case Measure::indegree:
      return degree_scores(g, DegreeMode::in);
    case Measure::outdegree:
      return degree_scores(g, DegreeMode::out);
    case Measure::degree:
      return degree_scores(g, DegreeMode::total);
    case Measure::pagerank:
      return pagerank(g, cfg);
    case Measure::weighted_pagerank: {
      const WeightTable table = o.weights.empty()
                                    ? WeightTable()
                                    : WeightTable::load(o.weights);
      return weighted_pagerank(g, table, cfg);
    }
    case Measure::eigenvector:
      return eigenvector_centrality(g, cfg);
    case Measure::inforank1:
    case Measure::inforank2:
    case Measure::inforank3:
      break;
  }
  if (!g.empty() && info_weights(g).fallback_used) {
    err << "warning: no datatype statements on any instance; using uniform "
           "node weights\n";
  }
  if (measure == Measure::inforank1) return inforank1(g);
  if (measure == Measure::inforank2) return inforank2(g, cfg);
  return inforank3(g, TopZConfig{o.z}, cfg);
}

std::string header_line(const RankOptions& o, Measure measure,
                        const ScoreVector& sv, std::size_t nodes) {
  std::ostringstream h;
  h << "# measure=" << measure_name(measure);
  if (measure == Measure::inforank3) h << " z=" << o.z;
  if (measure == Measure::pagerank || measure == Measure::weighted_pagerank) {
    h << " alpha=" << format_param(o.alpha)
      << " dangling=" << o.dangling;
  }
  if (measure == Measure::weighted_pagerank) {
    h << " weights=" << (o.weights.empty() ? "uniform" : o.weights);
  }
  if (is_iterative(measure)) {
    h << " epsilon=" << format_param(o.epsilon)
      << " max_iter=" << o.max_iter << " iterations=" << sv.iterations
      << " converged=" << (sv.converged ? "true" : "false")
      << " final_delta=" << format_param(sv.final_delta);
  }
  h << " nodes=" << nodes;
  return h.str();
}

int cmd_rank(const RankOptions& o, bool top, std::istream& in,
             std::ostream& out, std::ostream& err) {
  const auto measure = parse_measure(o.measure);
  if (!measure) throw ConfigError("unknown measure '" + o.measure + "'");
  if (o.z < 1) throw ConfigError("--z must be at least 1");
  if (top && o.k < 1) throw ConfigError("--k must be at least 1");

  IterationConfig cfg;
  cfg.alpha = o.alpha;
  cfg.epsilon = o.epsilon;
  cfg.max_iter = o.max_iter;
  cfg.dangling = o.dangling == "drop" ? DanglingPolicy::drop
                                      : DanglingPolicy::redistribute;
  if (o.log_iterations) {
    cfg.observer = [&err](std::size_t i, double delta,
                          std::span<const double>) {
      err << "iteration " << i << " delta " << format_score(delta, true)
          << '\n';
    };
  }
  cfg.validate();
  kernels::set_thread_count(o.threads);

  std::optional<IriSet> restrict_set;
  if (!o.restrict_file.empty()) {
    const auto list = load_iri_list(o.restrict_file);
    restrict_set.emplace(list.begin(), list.end());
  }

  const IngestResult r = load_graph(o.graph, in, err);
  const ScoreVector sv = compute(*measure, r.graph, o, cfg, err);
  if (is_iterative(*measure) && !sv.converged) {
    err << "warning: " << measure_name(*measure) << " did not converge in "
        << sv.iterations << " iterations (delta "
        << format_param(sv.final_delta) << ")\n";
  }
  const RankedList ranked = rank_from_scores(
      r.graph, sv, restrict_set ? &*restrict_set : nullptr);

  std::ofstream file;
  std::ostream& dest = open_output(o.output, file, out);
  const std::size_t rows = top ? std::min(o.k, ranked.size()) : ranked.size();
  if (o.format == "jsonl") {
    for (std::size_t i = 0; i < rows; ++i) {
      nlohmann::ordered_json row;
      row["rank"] = i + 1;
      row["iri"] = ranked[i].iri;
      row["score"] = std::stod(format_score(ranked[i].score, o.raw));
      dest << row.dump() << '\n';
    }
  } else {
    dest << header_line(o, *measure, sv, r.graph.size()) << '\n';
    for (std::size_t i = 0; i < rows; ++i) {
      dest << (i + 1) << '\t' << ranked[i].iri << '\t'
           << format_score(ranked[i].score, o.raw) << '\n';
    }
  }
  dest.flush();
  if (!dest) throw DataError("failed writing output");
  return kExitOk;
}

int cmd_eval(const EvalOptions& o, std::ostream& out) {
  std::optional<IriSet> restrict_set;
  if (!o.restrict_file.empty()) {
    const auto list = load_iri_list(o.restrict_file);
    restrict_set.emplace(list.begin(), list.end());
  }
  const RankedList ranked = rank_from_scores(
      load_scores(o.scores), restrict_set ? &*restrict_set : nullptr);
  if (o.k > ranked.size()) {
    throw ConfigError("--k " + std::to_string(o.k) + " exceeds the " +
                      std::to_string(ranked.size()) + " ranked entries");
  }

  std::size_t width = 4;
  for (const auto& g : o.gold) width = std::max(width, g.size());
  std::vector<double> aps;
  out << "gold" << std::string(width - 4 + 2, ' ') << "AP";
  if (o.k > 0) out << "\tP@" << o.k;
  out << "\tties\n";
  for (const auto& path : o.gold) {
    const GoldStandard gold = load_gold(path);
    const double ap = average_precision(ranked, gold);
    aps.push_back(ap);
    out << path << std::string(width - path.size() + 2, ' ')
        << format_score(ap, false);
    if (o.k > 0) out << '\t' << format_score(precision_at_k(ranked, gold, o.k), false);
    out << '\t' << boundary_tie_count(ranked, gold) << '\n';
  }
  out << "CMAP" << std::string(width - 4 + 2, ' ') << format_score(cmap(aps), false)
      << '\n';
  if (!o.votes.empty()) {
    const auto votes = load_votes(o.votes);
    const std::size_t k = o.k > 0 ? o.k : ranked.size();
    out << "votes@" << k << '\t' << format_score(sum_votes(ranked, votes, k), true)
        << '\n';
  }
  return kExitOk;
}

int cmd_gen(const GenOptions& o, CLI::App* gen, std::ostream& out) {
  std::ofstream file;
  std::ostream& dest = open_output(o.output, file, out);
  const auto sink = [&dest](std::uint64_t, const Triple& t) {
    write_ntriples(dest, t);
  };
  const bool custom = gen->count("--hub") + gen->count("--clique-info") +
                          gen->count("--bridge-info") +
                          gen->count("--satellite-info") >
                      0;
  if (o.preset == "fig1") {
    if (custom) throw ConfigError("--preset fig1 takes no shape options");
    synth::emit_fig1(sink);
  } else if (o.preset == "random") {
    synth::RandomGraphSpec spec;
    spec.nodes = o.random_nodes;
    spec.edges = o.random_edges;
    spec.max_dtp = o.max_dtp;
    spec.seed = o.seed == 0 ? 1 : o.seed;
    synth::emit_random(spec, sink);
  } else {
    synth::DecoupledSpec spec;
    spec.hub_fanout = o.hub;
    spec.clique_info = o.clique_info;
    spec.bridge_info = o.bridge_info;
    spec.satellite_info = o.satellite_info;
    spec.seed = o.seed;
    spec.satellites = o.satellites == "out-of-hub"
                          ? synth::SatelliteDirection::out_of_hub
                          : synth::SatelliteDirection::into_hub;
    synth::emit_decoupled(spec, sink);
  }
  dest.flush();
  if (!dest) throw DataError("failed writing output");
  return kExitOk;
}

void add_rank_options(CLI::App* cmd, RankOptions& o) {
  add_graph_options(cmd, o.graph);
  cmd->add_option("--measure,-m", o.measure,
                  "indegree|outdegree|degree|pagerank|wpagerank|eigenvector|"
                  "inforank1|inforank2|inforank3")
      ->required();
  cmd->add_option("--z", o.z, "Top neighbors kept by inforank3");
  cmd->add_option("--alpha", o.alpha, "PageRank damping factor");
  cmd->add_option("--epsilon", o.epsilon, "L-inf convergence threshold");
  cmd->add_option("--max-iter", o.max_iter, "Iteration cap")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--weights", o.weights, "Predicate weight table (wpagerank)")
      ->check(CLI::ExistingFile);
  cmd->add_option("--dangling", o.dangling, "redistribute|drop")
      ->check(CLI::IsMember({"redistribute", "drop"}));
  cmd->add_option("--restrict", o.restrict_file,
                  "Only rank IRIs listed in this file")
      ->check(CLI::ExistingFile);
  cmd->add_option("--output,-o", o.output, "Output file (default stdout)");
  cmd->add_option("--format", o.format, "tsv|jsonl")
      ->check(CLI::IsMember({"tsv", "jsonl"}));
  cmd->add_flag("--raw", o.raw, "Print scores at full precision");
  cmd->add_option("--threads", o.threads, "Worker threads")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--log-iterations", o.log_iterations,
                "Log the change of every iteration to stderr");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"Instance-graph node ranking and retrieval evaluation",
               "inforank"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();

  StatsOptions stats;
  auto* stats_cmd = app.add_subcommand("stats", "Print graph build statistics");
  add_graph_options(stats_cmd, stats.graph);
  stats_cmd->add_flag("--json", stats.json, "Print one JSON record");

  RankOptions rank;
  auto* rank_cmd = app.add_subcommand("rank", "Rank every node by a measure");
  add_rank_options(rank_cmd, rank);

  RankOptions top;
  auto* top_cmd = app.add_subcommand("top", "Print the k best-ranked nodes");
  add_rank_options(top_cmd, top);
  top_cmd->add_option("--k", top.k, "Rows to print")->required();

  EvalOptions eval;
  auto* eval_cmd =
      app.add_subcommand("eval", "Average precision against gold lists");
  eval_cmd->add_option("--scores", eval.scores, "Ranking TSV")
      ->required()
      ->check(CLI::ExistingFile);
  eval_cmd->add_option("--gold", eval.gold, "Gold IRI lists, comma separated")
      ->required()
      ->delimiter(',')
      ->check(CLI::ExistingFile);
  eval_cmd->add_option("--restrict", eval.restrict_file,
                       "Only rank IRIs listed in this file")
      ->check(CLI::ExistingFile);
  eval_cmd->add_option("--k", eval.k, "Also report precision at k")
      ->check(CLI::PositiveNumber);
  eval_cmd->add_option("--votes", eval.votes,
                       "iri<TAB>votes file; prints the vote sum of the top k")
      ->check(CLI::ExistingFile);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write a synthetic graph");
  gen_cmd->add_option("--preset", gen.preset, "fig1|random")
      ->check(CLI::IsMember({"fig1", "random"}));
  gen_cmd->add_option("--hub", gen.hub, "Satellites on the hub")
      ->check(CLI::PositiveNumber);
  gen_cmd->add_option("--clique-info", gen.clique_info,
                      "Datatype statements on B and C")
      ->check(CLI::PositiveNumber);
  gen_cmd->add_option("--bridge-info", gen.bridge_info,
                      "Datatype statements on A")
      ->check(CLI::PositiveNumber);
  gen_cmd->add_option("--satellite-info", gen.satellite_info,
                      "Datatype statements on D and each satellite")
      ->check(CLI::PositiveNumber);
  gen_cmd->add_option("--satellites", gen.satellites, "into-hub|out-of-hub")
      ->check(CLI::IsMember({"into-hub", "out-of-hub"}));
  gen_cmd->add_option("--seed", gen.seed, "Shuffle seed (0 keeps order)");
  gen_cmd->add_option("--nodes", gen.random_nodes, "Nodes (random preset)")
      ->check(CLI::PositiveNumber);
  gen_cmd->add_option("--edges", gen.random_edges, "Edges (random preset)");
  gen_cmd->add_option("--max-dtp", gen.max_dtp,
                      "Max datatype statements per node (random preset)");
  gen_cmd->add_option("--output,-o", gen.output, "Output file (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*stats_cmd) return cmd_stats(stats, in, out, err);
    if (*rank_cmd) return cmd_rank(rank, false, in, out, err);
    if (*top_cmd) return cmd_rank(top, true, in, out, err);
    if (*eval_cmd) return cmd_eval(eval, out);
    if (*gen_cmd) return cmd_gen(gen, gen_cmd, out);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DataError& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitUsage;
}

}  // namespace inforank::cli
