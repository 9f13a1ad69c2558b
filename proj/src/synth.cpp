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

#include "inforank/synth.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <vector>

#include "inforank/error.hpp"

namespace inforank::synth {

namespace {

Triple type_triple(std::string subject) {
  return {Term::iri(std::move(subject)), Term::iri(std::string(kRdfType)),
          Term::iri(std::string(kClass))};
}

Triple link(std::string s, std::string_view predicate, std::string o) {
  return {Term::iri(std::move(s)), Term::iri(std::string(predicate)),
          Term::iri(std::move(o))};
}

void emit_info(const std::string& subject, std::uint32_t count,
               std::vector<Triple>& out) {
  for (std::uint32_t k = 1; k <= count; ++k) {
    out.push_back({Term::iri(subject), Term::iri(std::string(kInfoPredicate)),
                   Term::literal("lit-" + std::to_string(k))});
  }
}

std::string render(const std::function<void(const TripleSink&)>& emit) {
  std::ostringstream out;
  emit([&](std::uint64_t, const Triple& t) { write_ntriples(out, t); });
  return out.str();
}

std::vector<Triple> decoupled_triples(const DecoupledSpec& spec) {
  std::vector<Triple> out;
  const std::string a = node_iri("A");
  const std::string b = node_iri("B");
  const std::string c = node_iri("C");
  const std::string d = node_iri("D");
  for (const auto* iri : {&a, &b, &c, &d}) out.push_back(type_triple(*iri));
  for (std::uint32_t i = 1; i <= spec.hub_fanout; ++i) {
    out.push_back(type_triple(satellite_iri(i, spec.hub_fanout)));
  }
  out.push_back(link(a, kLinkPredicate, b));
  out.push_back(link(a, kLinkPredicate, c));
  out.push_back(link(a, kLinkPredicate, d));
  for (std::uint32_t i = 1; i <= spec.hub_fanout; ++i) {
    const std::string s = satellite_iri(i, spec.hub_fanout);
    if (spec.satellites == SatelliteDirection::into_hub) {
      out.push_back(link(s, kMemberPredicate, d));
    } else {
      out.push_back(link(d, kLinkPredicate, s));
    }
  }
  emit_info(a, spec.bridge_info, out);
  emit_info(b, spec.clique_info, out);
  emit_info(c, spec.clique_info, out);
  emit_info(d, spec.satellite_info, out);
  for (std::uint32_t i = 1; i <= spec.hub_fanout; ++i) {
    emit_info(satellite_iri(i, spec.hub_fanout), spec.satellite_info, out);
  }
  if (spec.seed != 0) {
    std::mt19937_64 rng(spec.seed);
    std::shuffle(out.begin(), out.end(), rng);
  }
  return out;
}

}  // namespace

void DecoupledSpec::validate() const {
  if (hub_fanout == 0 || clique_info == 0 || bridge_info == 0 ||
      satellite_info == 0) {
    throw ConfigError("decoupled graph counts must all be at least 1");
  }
}

std::string node_iri(std::string_view name) {
  return std::string(kBase) + std::string(name);
}

std::string satellite_iri(std::uint32_t i, std::uint32_t hub_fanout) {
  const std::size_t width = std::to_string(hub_fanout).size();
  std::string digits = std::to_string(i);
  if (digits.size() < width) digits.insert(0, width - digits.size(), '0');
  return node_iri("D" + digits);
}

void emit_decoupled(const DecoupledSpec& spec, const TripleSink& sink) {
  spec.validate();
  std::uint64_t line = 0;
  for (const Triple& t : decoupled_triples(spec)) sink(++line, t);
}

std::string gen_decoupled(const DecoupledSpec& spec) {
  return render([&](const TripleSink& sink) { emit_decoupled(spec, sink); });
}

void emit_fig1(const TripleSink& sink) {
  DecoupledSpec spec;
  spec.satellites = SatelliteDirection::out_of_hub;
  emit_decoupled(spec, sink);
}

std::string fig1_fixture() { return render(emit_fig1); }

void emit_random(const RandomGraphSpec& spec, const TripleSink& sink) {
  if (spec.nodes == 0) throw ConfigError("random graph needs at least 1 node");
  if (spec.predicates == 0) {
    throw ConfigError("random graph needs at least 1 predicate");
  }
  std::mt19937_64 rng(spec.seed);
  const std::size_t width = std::to_string(spec.nodes - 1).size();
  const auto name = [&](std::uint64_t v) {
    std::string digits = std::to_string(v);
    digits.insert(0, width - digits.size(), '0');
    return std::string(kBase) + "n" + digits;
  };
  std::vector<std::string> predicates;
  for (std::uint32_t p = 0; p < spec.predicates; ++p) {
    predicates.push_back(std::string(kBase) + "p" + std::to_string(p));
  }

  std::uint64_t line = 0;
  for (std::uint32_t v = 0; v < spec.nodes; ++v) {
    sink(++line, type_triple(name(v)));
  }
  std::uniform_int_distribution<std::uint32_t> node(0, spec.nodes - 1);
  std::uniform_int_distribution<std::uint32_t> pred(0, spec.predicates - 1);
  for (std::uint64_t e = 0; e < spec.edges; ++e) {
    const std::uint32_t s = node(rng);
    const std::uint32_t o = node(rng);
    sink(++line, link(name(s), predicates[pred(rng)], name(o)));
  }
  std::uniform_int_distribution<std::uint32_t> dtp(0, spec.max_dtp);
  std::vector<Triple> info;
  for (std::uint32_t v = 0; v < spec.nodes; ++v) {
    info.clear();
    emit_info(name(v), dtp(rng), info);
    for (const Triple& t : info) sink(++line, t);
  }
}

std::string gen_random(const RandomGraphSpec& spec) {
  return render([&](const TripleSink& sink) { emit_random(spec, sink); });
}

}  // namespace inforank::synth
