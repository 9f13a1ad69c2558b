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

#include "inforank/graph.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "inforank/error.hpp"

namespace inforank {

InstanceGraph::InstanceGraph(const InstanceGraph& other)
    : iris_(other.iris_),
      undirected_(other.undirected_),
      out_(other.out_),
      in_(other.in_),
      edge_pred_offsets_(other.edge_pred_offsets_),
      edge_pred_ids_(other.edge_pred_ids_),
      predicates_(other.predicates_),
      dtp_(other.dtp_) {
  index_iris();
}

InstanceGraph& InstanceGraph::operator=(const InstanceGraph& other) {
  if (this != &other) {
    InstanceGraph copy(other);
    *this = std::move(copy);
  }
  return *this;
}

void InstanceGraph::index_iris() {
  ids_.clear();
  ids_.reserve(iris_.size());
  for (NodeId v = 0; v < iris_.size(); ++v) ids_.emplace(iris_[v], v);
}

void InstanceGraph::check(NodeId v) const {
  if (v >= iris_.size()) {
    throw std::out_of_range("node id " + std::to_string(v) +
                            " out of range for graph with " +
                            std::to_string(iris_.size()) + " nodes");
  }
}

std::span<const NodeId> InstanceGraph::neighbors(NodeId v) const {
  check(v);
  return undirected_.row(v);
}

std::span<const NodeId> InstanceGraph::successors(NodeId v) const {
  check(v);
  return out_.row(v);
}

std::span<const NodeId> InstanceGraph::predecessors(NodeId v) const {
  check(v);
  return in_.row(v);
}

std::uint32_t InstanceGraph::dtp(NodeId v) const {
  check(v);
  return dtp_[v];
}

const std::string& InstanceGraph::iri(NodeId v) const {
  check(v);
  return iris_[v];
}

std::optional<NodeId> InstanceGraph::find(std::string_view iri) const {
  const auto it = ids_.find(iri);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

NodeId InstanceGraph::id(std::string_view iri) const {
  if (const auto v = find(iri)) return *v;
  throw std::out_of_range("unknown node " + std::string(iri));
}

std::vector<std::string_view> InstanceGraph::edge_predicates(NodeId s,
                                                             NodeId o) const {
  check(s);
  check(o);
  const auto row = out_.row(s);
  const auto it = std::lower_bound(row.begin(), row.end(), o);
  std::vector<std::string_view> out;
  if (it == row.end() || *it != o) return out;
  const std::uint64_t k = out_.offsets[s] + (it - row.begin());
  for (const PredicateId p : out_edge_predicates(k)) {
    out.emplace_back(predicates_[p]);
  }
  return out;
}

std::size_t InstanceGraph::max_degree() const noexcept {
  std::size_t best = 0;
  for (NodeId v = 0; v < size(); ++v) {
    best = std::max(best, undirected_.degree(v));
  }
  return best;
}

bool operator==(const InstanceGraph& a, const InstanceGraph& b) {
  return a.iris_ == b.iris_ && a.undirected_ == b.undirected_ &&
         a.out_ == b.out_ && a.in_ == b.in_ && a.dtp_ == b.dtp_ &&
         a.edge_pred_offsets_ == b.edge_pred_offsets_ &&
         a.edge_pred_ids_ == b.edge_pred_ids_ &&
         a.predicates_ == b.predicates_;
}

GraphBuilder::GraphBuilder(const InstanceSet& instances)
    : instances_(&instances), iris_(instances.sorted()) {
  ids_.reserve(iris_.size());
  for (NodeId v = 0; v < iris_.size(); ++v) ids_.emplace(iris_[v], v);
  dtp_.assign(iris_.size(), 0);
}

PredicateId GraphBuilder::intern_predicate(std::string_view iri) {
  const auto it = predicate_ids_.find(std::string(iri));
  if (it != predicate_ids_.end()) return it->second;
  const auto id = static_cast<PredicateId>(predicates_.size());
  predicates_.emplace_back(iri);
  predicate_ids_.emplace(std::string(iri), id);
  return id;
}

namespace {

void append_field(std::string& key, std::string_view field) {
  const auto len = static_cast<std::uint32_t>(field.size());
  key.append(reinterpret_cast<const char*>(&len), sizeof(len));
  key.append(field);
}

}  // namespace

void GraphBuilder::add(const Triple& t, TripleKind kind) {
  ++stats_.triples_total;
  switch (kind) {
    case TripleKind::type_link:
      ++stats_.type_links;
      return;
    case TripleKind::dangling_object_edge:
      ++stats_.dangling_edges_dropped;
      return;
    case TripleKind::datatype_statement: {
      ++stats_.datatype_statements;
      const auto it = ids_.find(t.subject.lexical);
      if (it == ids_.end()) return;
      std::string key;
      key.append(reinterpret_cast<const char*>(&it->second),
                 sizeof(it->second));
      append_field(key, t.predicate.lexical);
      append_field(key, t.object.lexical);
      append_field(key, t.object.datatype);
      append_field(key, t.object.language);
      if (literal_keys_.insert(std::move(key)).second) ++dtp_[it->second];
      return;
    }
    case TripleKind::object_edge: {
      ++stats_.object_edges;
      const auto s = ids_.find(t.subject.lexical);
      const auto o = ids_.find(t.object.lexical);
      if (s == ids_.end() || o == ids_.end()) {
        throw std::logic_error("object edge endpoint is not an instance: " +
                               to_ntriples(t));
      }
      if (s->second == o->second) {
        ++stats_.self_loops_dropped;
        return;
      }
      edges_.push_back(
          {s->second, o->second, intern_predicate(t.predicate.lexical)});
      return;
    }
  }
}

namespace {

// Builds a CSR from (row, col) pairs sorted by row then col, dropping
// duplicate pairs.
Csr csr_from_sorted_pairs(std::size_t n,
                          const std::vector<std::pair<NodeId, NodeId>>& pairs) {
  Csr csr;
  csr.offsets.assign(n + 1, 0);
  csr.targets.reserve(pairs.size());
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (k > 0 && pairs[k] == pairs[k - 1]) continue;
    csr.targets.push_back(pairs[k].second);
    ++csr.offsets[pairs[k].first + 1];
  }
  for (std::size_t v = 0; v < n; ++v) csr.offsets[v + 1] += csr.offsets[v];
  return csr;
}

}  // namespace

std::pair<InstanceGraph, BuildStats> GraphBuilder::finish() && {
  const std::size_t n = iris_.size();

  // Renumber predicates by name so ids do not depend on input order.
  std::vector<PredicateId> order(predicates_.size());
  for (PredicateId p = 0; p < order.size(); ++p) order[p] = p;
  std::sort(order.begin(), order.end(), [&](PredicateId a, PredicateId b) {
    return predicates_[a] < predicates_[b];
  });
  std::vector<PredicateId> remap(order.size());
  std::vector<std::string> sorted_predicates;
  sorted_predicates.reserve(order.size());
  for (PredicateId k = 0; k < order.size(); ++k) {
    remap[order[k]] = k;
    sorted_predicates.push_back(std::move(predicates_[order[k]]));
  }
  predicates_ = std::move(sorted_predicates);
  for (EdgeRecord& e : edges_) e.predicate = remap[e.predicate];

  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  InstanceGraph g;
  g.iris_ = std::move(iris_);
  g.index_iris();
  g.predicates_ = std::move(predicates_);
  g.dtp_ = std::move(dtp_);

  // Directed out-edges with their predicate sets.
  g.out_.offsets.assign(n + 1, 0);
  g.edge_pred_offsets_.assign(1, 0);
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    const EdgeRecord& e = edges_[k];
    const bool new_pair = k == 0 || edges_[k - 1].source != e.source ||
                          edges_[k - 1].target != e.target;
    if (new_pair) {
      if (k > 0) g.edge_pred_offsets_.push_back(g.edge_pred_ids_.size());
      g.out_.targets.push_back(e.target);
      ++g.out_.offsets[e.source + 1];
    }
    g.edge_pred_ids_.push_back(e.predicate);
  }
  if (!edges_.empty()) g.edge_pred_offsets_.push_back(g.edge_pred_ids_.size());
  for (std::size_t v = 0; v < n; ++v) g.out_.offsets[v + 1] += g.out_.offsets[v];

  std::vector<std::pair<NodeId, NodeId>> pairs;
  pairs.reserve(g.out_.targets.size());
  for (NodeId s = 0; s < n; ++s) {
    for (const NodeId o : g.out_.row(s)) pairs.emplace_back(o, s);
  }
  std::sort(pairs.begin(), pairs.end());
  g.in_ = csr_from_sorted_pairs(n, pairs);

  // pairs already holds every edge reversed; add the forward direction.
  for (NodeId s = 0; s < n; ++s) {
    for (const NodeId o : g.out_.row(s)) pairs.emplace_back(s, o);
  }
  std::sort(pairs.begin(), pairs.end());
  g.undirected_ = csr_from_sorted_pairs(n, pairs);

  stats_.duplicate_edges_merged =
      stats_.object_edges - stats_.self_loops_dropped - g.out_.targets.size();
  return {std::move(g), stats_};
}

std::pair<InstanceGraph, BuildStats> build_graph(
    const std::vector<std::pair<Triple, TripleKind>>& classified,
    const InstanceSet& instances) {
  GraphBuilder builder(instances);
  for (const auto& [triple, kind] : classified) builder.add(triple, kind);
  return std::move(builder).finish();
}

IngestResult ingest(const TripleSource& source) {
  const InstanceSet instances = scan_instances(source);
  GraphBuilder builder(instances);
  const ParseReport report =
      source.for_each([&](std::uint64_t, const Triple& t) { builder.add(t); });
  auto [graph, stats] = std::move(builder).finish();
  stats.malformed_skipped = report.malformed;
  stats.triples_total += report.malformed;
  return {std::move(graph), stats, report};
}

// Snapshot layout (native little-endian):
//   magic "IRKGRAPH", u32 version, u32 endian marker,
//   then length-prefixed sections in a fixed order.
namespace {

constexpr std::array<char, 8> kMagic{'I', 'R', 'K', 'G', 'R', 'A', 'P', 'H'};
constexpr std::uint32_t kEndianMarker = 0x01020304;

template <typename T>
void put(std::ostream& out, const T& value) {
  out.write(reinterpret_cast<const char*>(&value), sizeof(T));
}

template <typename T>
void put_vector(std::ostream& out, const std::vector<T>& v) {
  put<std::uint64_t>(out, v.size());
  out.write(reinterpret_cast<const char*>(v.data()),
            static_cast<std::streamsize>(v.size() * sizeof(T)));
}

void put_strings(std::ostream& out, const std::vector<std::string>& v) {
  put<std::uint64_t>(out, v.size());
  for (const auto& s : v) {
    put<std::uint64_t>(out, s.size());
    out.write(s.data(), static_cast<std::streamsize>(s.size()));
  }
}

template <typename T>
T get(std::istream& in) {
  T value{};
  in.read(reinterpret_cast<char*>(&value), sizeof(T));
  if (!in) throw DataError("snapshot truncated");
  return value;
}

template <typename T>
std::vector<T> get_vector(std::istream& in) {
  const auto n = get<std::uint64_t>(in);
  if (n > (std::uint64_t{1} << 40)) throw DataError("snapshot corrupt");
  std::vector<T> v(n);
  in.read(reinterpret_cast<char*>(v.data()),
          static_cast<std::streamsize>(n * sizeof(T)));
  if (!in) throw DataError("snapshot truncated");
  return v;
}

std::vector<std::string> get_strings(std::istream& in) {
  const auto n = get<std::uint64_t>(in);
  if (n > (std::uint64_t{1} << 40)) throw DataError("snapshot corrupt");
  std::vector<std::string> v;
  v.reserve(n);
  for (std::uint64_t k = 0; k < n; ++k) {
    const auto len = get<std::uint64_t>(in);
    if (len > (std::uint64_t{1} << 32)) throw DataError("snapshot corrupt");
    std::string s(len, '\0');
    in.read(s.data(), static_cast<std::streamsize>(len));
    if (!in) throw DataError("snapshot truncated");
    v.push_back(std::move(s));
  }
  return v;
}

void put_csr(std::ostream& out, const Csr& csr) {
  put_vector(out, csr.offsets);
  put_vector(out, csr.targets);
}

Csr get_csr(std::istream& in, std::size_t n) {
  Csr csr;
  csr.offsets = get_vector<std::uint64_t>(in);
  csr.targets = get_vector<NodeId>(in);
  if (csr.offsets.size() != n + 1 || csr.offsets.front() != 0 ||
      csr.offsets.back() != csr.targets.size() ||
      !std::is_sorted(csr.offsets.begin(), csr.offsets.end())) {
    throw DataError("snapshot corrupt: bad adjacency offsets");
  }
  for (const NodeId t : csr.targets) {
    if (t >= n) throw DataError("snapshot corrupt: node id out of range");
  }
  return csr;
}

}  // namespace

void save_snapshot(std::ostream& out, const InstanceGraph& g,
                   const BuildStats& stats) {
  out.write(kMagic.data(), kMagic.size());
  put(out, kSnapshotVersion);
  put(out, kEndianMarker);
  put(out, stats);
  put_strings(out, g.iris_);
  put_csr(out, g.undirected_);
  put_csr(out, g.out_);
  put_csr(out, g.in_);
  put_vector(out, g.edge_pred_offsets_);
  put_vector(out, g.edge_pred_ids_);
  put_strings(out, g.predicates_);
  put_vector(out, g.dtp_);
  if (!out) throw DataError("failed writing snapshot");
}

std::pair<InstanceGraph, BuildStats> load_snapshot(std::istream& in) {
  std::array<char, 8> magic{};
  in.read(magic.data(), magic.size());
  if (!in || magic != kMagic) throw DataError("not a graph snapshot");
  const auto version = get<std::uint32_t>(in);
  if (version != kSnapshotVersion) {
    throw DataError("unsupported snapshot version " + std::to_string(version));
  }
  if (get<std::uint32_t>(in) != kEndianMarker) {
    throw DataError("snapshot written on a machine with different byte order");
  }
  const auto stats = get<BuildStats>(in);
  InstanceGraph g;
  g.iris_ = get_strings(in);
  const std::size_t n = g.iris_.size();
  g.undirected_ = get_csr(in, n);
  g.out_ = get_csr(in, n);
  g.in_ = get_csr(in, n);
  g.edge_pred_offsets_ = get_vector<std::uint64_t>(in);
  g.edge_pred_ids_ = get_vector<PredicateId>(in);
  g.predicates_ = get_strings(in);
  g.dtp_ = get_vector<std::uint32_t>(in);
  if (g.dtp_.size() != n ||
      g.edge_pred_offsets_.size() != g.out_.targets.size() + 1 ||
      g.edge_pred_offsets_.back() != g.edge_pred_ids_.size()) {
    throw DataError("snapshot corrupt: inconsistent sections");
  }
  for (const PredicateId p : g.edge_pred_ids_) {
    if (p >= g.predicates_.size()) {
      throw DataError("snapshot corrupt: predicate id out of range");
    }
  }
  g.index_iris();
  return {std::move(g), stats};
}

void save_snapshot(const std::filesystem::path& path, const InstanceGraph& g,
                   const BuildStats& stats) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot open " + path.string() + " for writing");
  save_snapshot(out, g, stats);
}

std::pair<InstanceGraph, BuildStats> load_snapshot(
    const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  return load_snapshot(in);
}

}  // namespace inforank
