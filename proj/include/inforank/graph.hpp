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

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "inforank/rdf.hpp"

namespace inforank {

using NodeId = std::uint32_t;
using PredicateId = std::uint32_t;

// Compressed sparse rows: row v is targets[offsets[v] .. offsets[v+1]).
struct Csr {
  std::vector<std::uint64_t> offsets{0};
  std::vector<NodeId> targets;

  std::size_t rows() const noexcept { return offsets.size() - 1; }
  std::span<const NodeId> row(NodeId v) const noexcept {
    return {targets.data() + offsets[v], targets.data() + offsets[v + 1]};
  }
  std::size_t degree(NodeId v) const noexcept {
    return static_cast<std::size_t>(offsets[v + 1] - offsets[v]);
  }

  friend bool operator==(const Csr&, const Csr&) = default;
};

struct BuildStats {
  std::uint64_t triples_total = 0;
  std::uint64_t type_links = 0;
  std::uint64_t object_edges = 0;
  std::uint64_t dangling_edges_dropped = 0;
  std::uint64_t datatype_statements = 0;
  std::uint64_t duplicate_edges_merged = 0;
  std::uint64_t self_loops_dropped = 0;
  std::uint64_t malformed_skipped = 0;

  friend bool operator==(const BuildStats&, const BuildStats&) = default;
};

// The instance graph: one node per rdf:type subject, ids assigned in
// ascending IRI byte order so the build does not depend on input order.
// Immutable after construction.
class InstanceGraph {
 public:
  InstanceGraph() = default;
  InstanceGraph(const InstanceGraph& other);
  InstanceGraph& operator=(const InstanceGraph& other);
  InstanceGraph(InstanceGraph&&) noexcept = default;
  InstanceGraph& operator=(InstanceGraph&&) noexcept = default;

  std::size_t size() const noexcept { return iris_.size(); }
  bool empty() const noexcept { return iris_.empty(); }

  // Undirected, deduplicated, ascending. Throws std::out_of_range.
  std::span<const NodeId> neighbors(NodeId v) const;
  std::span<const NodeId> successors(NodeId v) const;
  std::span<const NodeId> predecessors(NodeId v) const;
  std::uint32_t dtp(NodeId v) const;

  const std::string& iri(NodeId v) const;
  std::optional<NodeId> find(std::string_view iri) const;
  // Like find, but throws std::out_of_range for unknown IRIs.
  NodeId id(std::string_view iri) const;

  // Predicates observed on the ordered pair (s, o); empty if no edge.
  std::vector<std::string_view> edge_predicates(NodeId s, NodeId o) const;
  // Predicate ids attached to the k-th entry of the out-edge array.
  std::span<const PredicateId> out_edge_predicates(std::uint64_t k) const {
    return {edge_pred_ids_.data() + edge_pred_offsets_[k],
            edge_pred_ids_.data() + edge_pred_offsets_[k + 1]};
  }
  const std::string& predicate(PredicateId p) const { return predicates_[p]; }
  std::size_t predicate_count() const noexcept { return predicates_.size(); }

  const Csr& undirected() const noexcept { return undirected_; }
  const Csr& out_edges() const noexcept { return out_; }
  const Csr& in_edges() const noexcept { return in_; }
  std::span<const std::uint32_t> dtp_counts() const noexcept { return dtp_; }
  std::span<const std::string> iris() const noexcept { return iris_; }

  std::uint64_t directed_edge_count() const noexcept {
    return out_.targets.size();
  }
  std::uint64_t undirected_edge_count() const noexcept {
    return undirected_.targets.size() / 2;
  }
  std::size_t max_degree() const noexcept;

  friend bool operator==(const InstanceGraph& a, const InstanceGraph& b);

 private:
  friend class GraphBuilder;
  friend void save_snapshot(std::ostream&, const InstanceGraph&,
                            const BuildStats&);
  friend std::pair<InstanceGraph, BuildStats> load_snapshot(std::istream&);

  void check(NodeId v) const;
  void index_iris();

  std::vector<std::string> iris_;
  std::unordered_map<std::string_view, NodeId> ids_;
  Csr undirected_;
  Csr out_;
  Csr in_;
  // Aligned with out_.targets: predicate ids of each directed edge.
  std::vector<std::uint64_t> edge_pred_offsets_{0};
  std::vector<PredicateId> edge_pred_ids_;
  std::vector<std::string> predicates_;
  std::vector<std::uint32_t> dtp_;
};

// Pass-2 builder. Feed it every triple classified against the pass-1
// instance set, then call finish().
class GraphBuilder {
 public:
  explicit GraphBuilder(const InstanceSet& instances);

  void add(const Triple& t, TripleKind kind);
  void add(const Triple& t) { add(t, classify_triple(t, *instances_)); }

  std::pair<InstanceGraph, BuildStats> finish() &&;

 private:
  struct EdgeRecord {
    NodeId source;
    NodeId target;
    PredicateId predicate;
    friend auto operator<=>(const EdgeRecord&, const EdgeRecord&) = default;
  };

  PredicateId intern_predicate(std::string_view iri);

  const InstanceSet* instances_;
  std::vector<std::string> iris_;
  std::unordered_map<std::string_view, NodeId> ids_;
  std::unordered_map<std::string, PredicateId> predicate_ids_;
  std::vector<std::string> predicates_;
  std::vector<EdgeRecord> edges_;
  std::unordered_set<std::string> literal_keys_;
  std::vector<std::uint32_t> dtp_;
  BuildStats stats_;
};

std::pair<InstanceGraph, BuildStats> build_graph(
    const std::vector<std::pair<Triple, TripleKind>>& classified,
    const InstanceSet& instances);

struct IngestResult {
  InstanceGraph graph;
  BuildStats stats;
  ParseReport report;
};

// Two passes over `source`: collect instances, then classify and build.
IngestResult ingest(const TripleSource& source);

inline constexpr std::uint32_t kSnapshotVersion = 1;

void save_snapshot(std::ostream& out, const InstanceGraph& g,
                   const BuildStats& stats);
std::pair<InstanceGraph, BuildStats> load_snapshot(std::istream& in);
void save_snapshot(const std::filesystem::path& path, const InstanceGraph& g,
                   const BuildStats& stats);
std::pair<InstanceGraph, BuildStats> load_snapshot(
    const std::filesystem::path& path);

}  // namespace inforank
