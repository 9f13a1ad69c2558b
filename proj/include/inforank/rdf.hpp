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
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace inforank {

inline constexpr std::string_view kRdfType =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";

enum class TermKind : std::uint8_t { iri, literal };

// An RDF term. Blank nodes are iri-kind terms whose lexical text keeps the
// "_:" prefix, so "_:b0" never collides with an absolute IRI.
struct Term {
  TermKind kind = TermKind::iri;
  std::string lexical;
  std::string datatype;  // literals only; empty when absent
  std::string language;  // literals only; empty when absent

  static Term iri(std::string text) {
    return Term{TermKind::iri, std::move(text), {}, {}};
  }
  static Term literal(std::string lexical, std::string datatype = {},
                      std::string language = {}) {
    return Term{TermKind::literal, std::move(lexical), std::move(datatype),
                std::move(language)};
  }

  bool is_iri() const noexcept { return kind == TermKind::iri; }
  bool is_literal() const noexcept { return kind == TermKind::literal; }
  bool is_blank() const noexcept {
    return is_iri() && lexical.starts_with("_:");
  }

  friend bool operator==(const Term&, const Term&) = default;
  friend auto operator<=>(const Term&, const Term&) = default;
};

struct Triple {
  Term subject;
  Term predicate;
  Term object;

  friend bool operator==(const Triple&, const Triple&) = default;
  friend auto operator<=>(const Triple&, const Triple&) = default;
};

enum class TripleKind : std::uint8_t {
  type_link,
  object_edge,
  datatype_statement,
  dangling_object_edge,
};

std::string_view to_string(TripleKind kind) noexcept;

// Subjects of rdf:type statements. Immutable once pass 1 is complete.
class InstanceSet {
 public:
  InstanceSet() = default;

  void insert(std::string_view iri);
  bool contains(std::string_view iri) const;
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }

  // Members in ascending byte order.
  std::vector<std::string> sorted() const;

  friend bool operator==(const InstanceSet& a, const InstanceSet& b) {
    return a.members_ == b.members_;
  }

 private:
  struct Hash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const noexcept {
      return std::hash<std::string_view>{}(s);
    }
  };
  std::unordered_set<std::string, Hash, std::equal_to<>> members_;
};

enum class Strictness : std::uint8_t { strict, skip_malformed };

struct MalformedLine {
  std::uint64_t line = 0;
  std::string reason;
};

struct ParseReport {
  std::uint64_t lines = 0;
  std::uint64_t triples = 0;
  std::uint64_t malformed = 0;
  // First kMaxMalformedSamples malformed lines, in input order.
  std::vector<MalformedLine> malformed_samples;

  static constexpr std::size_t kMaxMalformedSamples = 100;
};

using TripleSink = std::function<void(std::uint64_t line, const Triple&)>;

// Parses one N-Triples line. Returns nullopt for blank and comment lines,
// throws ParseError on a malformed statement.
std::optional<Triple> parse_ntriples_line(std::string_view line,
                                          std::uint64_t line_number);

// Streams every well-formed statement to `sink` in input order. Invalid
// UTF-8 always aborts with EncodingError; malformed statements abort in
// strict mode and are counted in skip-malformed mode.
ParseReport parse_ntriples(std::istream& in, Strictness strictness,
                           const TripleSink& sink);

std::string to_ntriples(const Term& term);
std::string to_ntriples(const Triple& triple);
void write_ntriples(std::ostream& out, const Triple& triple);

bool is_type_link(const Triple& t) noexcept;

InstanceSet scan_instances(const std::vector<Triple>& triples);

TripleKind classify_triple(const Triple& t, const InstanceSet& instances);

// A re-readable sequence of triples. Two-pass ingestion walks it twice.
class TripleSource {
 public:
  virtual ~TripleSource() = default;
  virtual ParseReport for_each(const TripleSink& sink) const = 0;
};

class NTriplesFileSource final : public TripleSource {
 public:
  NTriplesFileSource(std::filesystem::path path, Strictness strictness);
  ParseReport for_each(const TripleSink& sink) const override;
  const std::filesystem::path& path() const noexcept { return path_; }

 private:
  std::filesystem::path path_;
  Strictness strictness_;
};

class NTriplesTextSource final : public TripleSource {
 public:
  NTriplesTextSource(std::string text, Strictness strictness);
  ParseReport for_each(const TripleSink& sink) const override;

 private:
  std::string text_;
  Strictness strictness_;
};

class TripleVectorSource final : public TripleSource {
 public:
  explicit TripleVectorSource(std::vector<Triple> triples)
      : triples_(std::move(triples)) {}
  ParseReport for_each(const TripleSink& sink) const override;

 private:
  std::vector<Triple> triples_;
};

// Wraps a deterministic generator that can be replayed any number of times.
class GeneratedSource final : public TripleSource {
 public:
  using Generator = std::function<void(const TripleSink&)>;
  explicit GeneratedSource(Generator gen) : gen_(std::move(gen)) {}
  ParseReport for_each(const TripleSink& sink) const override;

 private:
  Generator gen_;
};

InstanceSet scan_instances(const TripleSource& source);

}  // namespace inforank
