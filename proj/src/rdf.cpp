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

#include "inforank/rdf.hpp"

#include <array>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <algorithm>

#include "inforank/error.hpp"

namespace inforank {

std::string_view to_string(TripleKind kind) noexcept {
  switch (kind) {
    case TripleKind::type_link:
      return "TypeLink";
    case TripleKind::object_edge:
      return "ObjectEdge";
    case TripleKind::datatype_statement:
      return "DatatypeStatement";
    case TripleKind::dangling_object_edge:
      return "DanglingObjectEdge";
  }
  return "?";
}

void InstanceSet::insert(std::string_view iri) {
  if (!members_.contains(iri)) members_.emplace(iri);
}

bool InstanceSet::contains(std::string_view iri) const {
  return members_.find(iri) != members_.end();
}

std::vector<std::string> InstanceSet::sorted() const {
  std::vector<std::string> out(members_.begin(), members_.end());
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Returns the offset of the first byte that does not start a valid UTF-8
// sequence, or npos when the whole buffer is valid.
std::size_t find_invalid_utf8(std::string_view s) {
  const auto* p = reinterpret_cast<const unsigned char*>(s.data());
  const std::size_t n = s.size();
  std::size_t i = 0;
  while (i < n) {
    const unsigned char c = p[i];
    if (c < 0x80) {
      ++i;
      continue;
    }
    std::size_t len = 0;
    char32_t cp = 0;
    char32_t min = 0;
    if ((c & 0xE0) == 0xC0) {
      len = 2;
      cp = c & 0x1F;
      min = 0x80;
    } else if ((c & 0xF0) == 0xE0) {
      len = 3;
      cp = c & 0x0F;
      min = 0x800;
    } else if ((c & 0xF8) == 0xF0) {
      len = 4;
      cp = c & 0x07;
      min = 0x10000;
    } else {
      return i;
    }
    if (i + len > n) return i;
    for (std::size_t k = 1; k < len; ++k) {
      if ((p[i + k] & 0xC0) != 0x80) return i;
      cp = (cp << 6) | (p[i + k] & 0x3F);
    }
    if (cp < min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return i;
    i += len;
  }
  return std::string_view::npos;
}

void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

bool is_hex(char c) {
  return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f') ||
         (c >= 'A' && c <= 'F');
}

bool is_alpha(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

bool is_alnum(char c) { return is_alpha(c) || (c >= '0' && c <= '9'); }

bool forbidden_in_iri(unsigned char c) {
  return c <= 0x20 || c == '<' || c == '>' || c == '"' || c == '{' ||
         c == '}' || c == '|' || c == '^' || c == '`' || c == '\\';
}

class LineParser {
 public:
  LineParser(std::string_view line, std::uint64_t line_number)
      : s_(line), line_(line_number) {}

  std::optional<Triple> parse() {
    skip_ws();
    if (at_end() || peek() == '#') return std::nullopt;

    Triple t;
    if (peek() == '"') fail("literal not allowed as subject");
    t.subject = parse_resource("subject");
    skip_ws();
    if (at_end()) fail("missing predicate");
    if (peek() != '<') fail("predicate must be an IRI");
    t.predicate = Term::iri(parse_iri());
    skip_ws();
    if (at_end()) fail("missing object");
    if (peek() == '"') {
      t.object = parse_literal();
    } else {
      t.object = parse_resource("object");
    }
    skip_ws();
    if (at_end() || peek() != '.') fail("expected '.' at end of statement");
    ++pos_;
    skip_ws();
    if (!at_end() && peek() != '#') fail("unexpected content after '.'");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& reason) const {
    throw ParseError(line_, reason);
  }

  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }

  void skip_ws() {
    while (!at_end() && (peek() == ' ' || peek() == '\t')) ++pos_;
  }

  Term parse_resource(const char* role) {
    if (peek() == '<') return Term::iri(parse_iri());
    if (s_.substr(pos_).starts_with("_:")) return Term::iri(parse_blank());
    fail(std::string("expected IRI or blank node as ") + role);
  }

  char32_t parse_uchar(std::size_t digits) {
    if (pos_ + digits > s_.size()) fail("truncated \\u escape");
    char32_t cp = 0;
    for (std::size_t k = 0; k < digits; ++k) {
      const char c = s_[pos_ + k];
      if (!is_hex(c)) fail("invalid \\u escape");
      cp = cp * 16 + static_cast<char32_t>(
                         c <= '9' ? c - '0' : (c | 0x20) - 'a' + 10);
    }
    if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
      fail("escape denotes an invalid code point");
    }
    pos_ += digits;
    return cp;
  }

  std::string parse_iri() {
    ++pos_;  // '<'
    std::string out;
    while (true) {
      if (at_end()) fail("unterminated IRI");
      const char c = peek();
      if (c == '>') break;
      if (c == '\\') {
        ++pos_;
        if (at_end()) fail("unterminated IRI");
        const char e = peek();
        ++pos_;
        if (e == 'u') {
          append_utf8(out, parse_uchar(4));
        } else if (e == 'U') {
          append_utf8(out, parse_uchar(8));
        } else {
          fail("invalid escape in IRI");
        }
        continue;
      }
      if (forbidden_in_iri(static_cast<unsigned char>(c))) {
        fail("invalid character in IRI");
      }
      out.push_back(c);
      ++pos_;
    }
    ++pos_;  // '>'
    if (out.empty()) fail("empty IRI");
    return out;
  }

  std::string parse_blank() {
    const std::size_t start = pos_;
    pos_ += 2;
    while (!at_end()) {
      const char c = peek();
      if (c == ' ' || c == '\t' || c == '<' || c == '"' || c == '#') break;
      ++pos_;
    }
    // A statement terminator may follow the label without whitespace.
    while (pos_ > start + 2 && s_[pos_ - 1] == '.') --pos_;
    if (pos_ == start + 2) fail("empty blank node label");
    return std::string(s_.substr(start, pos_ - start));
  }

  Term parse_literal() {
    ++pos_;  // '"'
    std::string lex;
    while (true) {
      if (at_end()) fail("unterminated literal");
      const char c = peek();
      if (c == '"') break;
      if (c == '\\') {
        ++pos_;
        if (at_end()) fail("unterminated literal");
        const char e = peek();
        ++pos_;
        switch (e) {
          case 't': lex.push_back('\t'); break;
          case 'b': lex.push_back('\b'); break;
          case 'n': lex.push_back('\n'); break;
          case 'r': lex.push_back('\r'); break;
          case 'f': lex.push_back('\f'); break;
          case '"': lex.push_back('"'); break;
          case '\'': lex.push_back('\''); break;
          case '\\': lex.push_back('\\'); break;
          case 'u': append_utf8(lex, parse_uchar(4)); break;
          case 'U': append_utf8(lex, parse_uchar(8)); break;
          default: fail("invalid escape in literal");
        }
        continue;
      }
      lex.push_back(c);
      ++pos_;
    }
    ++pos_;  // '"'

    std::string datatype;
    std::string language;
    if (!at_end() && peek() == '@') {
      ++pos_;
      const std::size_t start = pos_;
      while (!at_end() && is_alpha(peek())) ++pos_;
      if (pos_ == start) fail("invalid language tag");
      while (!at_end() && peek() == '-') {
        ++pos_;
        const std::size_t sub = pos_;
        while (!at_end() && is_alnum(peek())) ++pos_;
        if (pos_ == sub) fail("invalid language tag");
      }
      language = std::string(s_.substr(start, pos_ - start));
    } else if (s_.substr(pos_).starts_with("^^")) {
      pos_ += 2;
      if (at_end() || peek() != '<') fail("datatype must be an IRI");
      datatype = parse_iri();
    }
    return Term::literal(std::move(lex), std::move(datatype),
                         std::move(language));
  }

  std::string_view s_;
  std::uint64_t line_;
  std::size_t pos_ = 0;
};

void escape_iri(std::string& out, std::string_view iri) {
  static constexpr char kHex[] = "0123456789ABCDEF";
  for (const char c : iri) {
    const auto u = static_cast<unsigned char>(c);
    if (forbidden_in_iri(u)) {
      out += "\\u00";
      out.push_back(kHex[u >> 4]);
      out.push_back(kHex[u & 0xF]);
    } else {
      out.push_back(c);
    }
  }
}

ParseReport parse_stream(std::istream& in, Strictness strictness,
                         const TripleSink& sink) {
  ParseReport report;
  std::string line;
  std::uint64_t offset = 0;
  while (std::getline(in, line)) {
    ++report.lines;
    const std::uint64_t line_start = offset;
    offset += line.size() + 1;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (const auto bad = find_invalid_utf8(line); bad != std::string::npos) {
      throw EncodingError(line_start + bad);
    }
    std::optional<Triple> t;
    try {
      t = parse_ntriples_line(line, report.lines);
    } catch (const ParseError& e) {
      if (strictness == Strictness::strict) throw;
      ++report.malformed;
      if (report.malformed_samples.size() < ParseReport::kMaxMalformedSamples) {
        report.malformed_samples.push_back({e.line(), e.reason()});
      }
      continue;
    }
    if (!t) continue;
    ++report.triples;
    sink(report.lines, *t);
  }
  return report;
}

}  // namespace

std::optional<Triple> parse_ntriples_line(std::string_view line,
                                          std::uint64_t line_number) {
  return LineParser(line, line_number).parse();
}

ParseReport parse_ntriples(std::istream& in, Strictness strictness,
                           const TripleSink& sink) {
  return parse_stream(in, strictness, sink);
}

std::string to_ntriples(const Term& term) {
  std::string out;
  if (term.is_iri()) {
    if (term.is_blank()) return term.lexical;
    out.push_back('<');
    escape_iri(out, term.lexical);
    out.push_back('>');
    return out;
  }
  out.push_back('"');
  for (const char c : term.lexical) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      default: out.push_back(c);
    }
  }
  out.push_back('"');
  if (!term.language.empty()) {
    out.push_back('@');
    out += term.language;
  } else if (!term.datatype.empty()) {
    out += "^^<";
    escape_iri(out, term.datatype);
    out.push_back('>');
  }
  return out;
}

std::string to_ntriples(const Triple& triple) {
  std::string out = to_ntriples(triple.subject);
  out.push_back(' ');
  out += to_ntriples(triple.predicate);
  out.push_back(' ');
  out += to_ntriples(triple.object);
  out += " .";
  return out;
}

void write_ntriples(std::ostream& out, const Triple& triple) {
  out << to_ntriples(triple) << '\n';
}

bool is_type_link(const Triple& t) noexcept {
  return t.predicate.lexical == kRdfType;
}

InstanceSet scan_instances(const std::vector<Triple>& triples) {
  InstanceSet set;
  for (const Triple& t : triples) {
    if (is_type_link(t)) set.insert(t.subject.lexical);
  }
  return set;
}

InstanceSet scan_instances(const TripleSource& source) {
  InstanceSet set;
  source.for_each([&](std::uint64_t, const Triple& t) {
    if (is_type_link(t)) set.insert(t.subject.lexical);
  });
  return set;
}

TripleKind classify_triple(const Triple& t, const InstanceSet& instances) {
  if (is_type_link(t)) return TripleKind::type_link;
  if (t.object.is_literal()) return TripleKind::datatype_statement;
  if (instances.contains(t.subject.lexical) &&
      instances.contains(t.object.lexical)) {
    return TripleKind::object_edge;
  }
  return TripleKind::dangling_object_edge;
}

NTriplesFileSource::NTriplesFileSource(std::filesystem::path path,
                                       Strictness strictness)
    : path_(std::move(path)), strictness_(strictness) {}

ParseReport NTriplesFileSource::for_each(const TripleSink& sink) const {
  std::ifstream in(path_, std::ios::binary);
  if (!in) throw DataError("cannot open " + path_.string());
  return parse_stream(in, strictness_, sink);
}

NTriplesTextSource::NTriplesTextSource(std::string text, Strictness strictness)
    : text_(std::move(text)), strictness_(strictness) {}

ParseReport NTriplesTextSource::for_each(const TripleSink& sink) const {
  std::istringstream in(text_);
  return parse_stream(in, strictness_, sink);
}

ParseReport TripleVectorSource::for_each(const TripleSink& sink) const {
  ParseReport report;
  for (const Triple& t : triples_) {
    ++report.lines;
    ++report.triples;
    sink(report.lines, t);
  }
  return report;
}

ParseReport GeneratedSource::for_each(const TripleSink& sink) const {
  ParseReport report;
  gen_([&](std::uint64_t, const Triple& t) {
    ++report.lines;
    ++report.triples;
    sink(report.lines, t);
  });
  return report;
}

}  // namespace inforank
