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
#include <string>
#include <string_view>

#include "inforank/rdf.hpp"

namespace inforank::synth {

inline constexpr std::string_view kBase = "http://example.org/inforank/";
inline constexpr std::string_view kClass = "http://example.org/inforank/Thing";
inline constexpr std::string_view kLinkPredicate =
    "http://example.org/inforank/related";
inline constexpr std::string_view kMemberPredicate =
    "http://example.org/inforank/memberOf";
inline constexpr std::string_view kInfoPredicate =
    "http://example.org/inforank/info";

enum class SatelliteDirection {
  into_hub,    // Di -> D, the way episodes point at their series
  out_of_hub,  // D -> Di, as in the fig1 fixture
};

// A bridge node A linked to two information-rich nodes B, C and to a hub D
// that carries hub_fanout low-information satellites.
struct DecoupledSpec {
  std::uint32_t hub_fanout = 33;
  std::uint32_t clique_info = 6;
  std::uint32_t bridge_info = 2;
  std::uint32_t satellite_info = 1;
  std::uint64_t seed = 0;  // 0 keeps canonical order; otherwise shuffles
  SatelliteDirection satellites = SatelliteDirection::into_hub;

  void validate() const;  // throws ConfigError if any count is 0
};

// IRI of a named fixture node: "A".."D" or the i-th satellite (1-based,
// zero-padded so byte order matches numeric order).
std::string node_iri(std::string_view name);
std::string satellite_iri(std::uint32_t i, std::uint32_t hub_fanout);

void emit_decoupled(const DecoupledSpec& spec, const TripleSink& sink);
std::string gen_decoupled(const DecoupledSpec& spec);

// The 37-node example graph: A-B, A-C, A-D, D-D01..D33 with datatype
// counts A=2, B=C=6, D=Di=1.
void emit_fig1(const TripleSink& sink);
std::string fig1_fixture();

// Uniform random instance graph for oracle and scale tests.
struct RandomGraphSpec {
  std::uint32_t nodes = 10;
  std::uint64_t edges = 20;  // object-property triples drawn, may repeat
  std::uint32_t max_dtp = 10;
  std::uint32_t predicates = 3;
  std::uint64_t seed = 1;
};

void emit_random(const RandomGraphSpec& spec, const TripleSink& sink);
std::string gen_random(const RandomGraphSpec& spec);

}  // namespace inforank::synth
