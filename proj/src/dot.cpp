//  Copyright 2026 The cfglat Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#include "cfglat/dot.hpp"

#include <array>
#include <map>
#include <sstream>

#include "cfglat/analytics.hpp"

namespace cfglat {

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

const char* palette(std::uint32_t id) {
  static constexpr std::array<const char*, 8> kColours = {
      "black", "red", "blue", "darkgreen", "orange", "purple", "brown", "teal"};
  return kColours[id % kColours.size()];
}

std::string chip_vector(std::span<const Count> chips) {
  std::string out = "(";
  for (std::size_t i = 0; i < chips.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(chips[i]);
  }
  return out + ')';
}

template <class State, class Label>
std::string hasse(const StateSpace<State>& space, Label state_label) {
  std::ostringstream out;
  out << "digraph space {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < space.size(); ++i) {
    std::string name = space.element_name(i);
    if (name == "{}") name = "∅";
    out << "  n" << i << " [label=" << quote(name + "\n" + state_label(i))
        << "];\n";
  }
  for (const auto& c : space.covers)
    out << "  n" << c.lower << " -> n" << c.upper
        << " [label=" << quote(space.vertex_names[c.fired.index]) << "];\n";
  out << "}\n";
  return out.str();
}

}  // namespace

std::string space_dot(const ConfigSpace& space) {
  return hasse(space, [&](std::size_t i) {
    return chip_vector(space.states[i].chips());
  });
}

std::string coloured_space_dot(const ColouredSpace& space) {
  return hasse(space, [&](std::size_t i) {
    const auto& chips = space.states[i].chips;
    std::string out;
    for (std::size_t k = 0; k < chips.colour_count(); ++k) {
      std::vector<Count> row;
      for (std::uint32_t v = 0; v < chips.vertex_count(); ++v)
        row.push_back(chips.get(VertexId{v}, k));
      if (k) out += ' ';
      out += chip_vector(row);
    }
    return out;
  });
}

std::string lattice_dot(const Lattice& l, const LatticeDotOptions& options) {
  std::map<CoverPair, std::size_t> labels;
  if (options.cover_labels)
    for (const auto& c : edge_labels(l))
      labels[{c.lower, c.upper}] = c.meet_irreducible;
  std::ostringstream out;
  out << "digraph lattice {\n  rankdir=BT;\n  node [shape=ellipse];\n";
  for (std::size_t x = 0; x < l.size(); ++x) {
    out << "  n" << x << " [label=" << quote(l.name(x));
    if (options.highlight_irreducibles) {
      const bool j = l.is_join_irreducible(x), m = l.is_meet_irreducible(x);
      if (j || m)
        out << ", style=filled, fillcolor="
            << (j && m ? "plum" : j ? "lightblue" : "orange");
    }
    out << "];\n";
  }
  for (const auto& [lo, hi] : l.cover_pairs()) {
    out << "  n" << lo << " -> n" << hi;
    if (auto it = labels.find({lo, hi}); it != labels.end())
      out << " [label=" << quote(l.name(it->second)) << "]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string game_dot(const Cfg& cfg) {
  const Multigraph& g = cfg.graph();
  std::ostringstream out;
  out << "digraph game {\n";
  for (auto v : g.vertices())
    out << "  v" << v.index << " [label="
        << quote(g.name(v) + "\n" + std::to_string(cfg.initial()[v])) << "];\n";
  for (auto u : g.vertices())
    for (auto v : g.vertices())
      if (const Count m = g.multiplicity(u, v)) {
        out << "  v" << u.index << " -> v" << v.index;
        if (m > 1) out << " [label=\"" << m << "\"]";
        out << ";\n";
      }
  out << "}\n";
  return out.str();
}

std::string coloured_game_dot(const ColouredCfg& cfg, const VertexSet* open) {
  const ColouredMultigraph& g = cfg.graph();
  std::ostringstream out;
  out << "digraph coloured_game {\n";
  for (auto v : g.vertices()) {
    std::string chips;
    for (std::size_t k = 0; k < g.colour_count(); ++k)
      if (const Count n = cfg.initial().get(v, k)) {
        if (!chips.empty()) chips += ',';
        chips += std::to_string(n) + '@' + std::to_string(g.colours()[k].id);
      }
    out << "  v" << v.index << " [label="
        << quote(chips.empty() ? g.name(v) : g.name(v) + "\n" + chips);
    if (open && open->test(v.index)) out << ", style=filled, fillcolor=grey";
    out << "];\n";
  }
  for (auto u : g.vertices())
    for (auto v : g.vertices())
      for (auto c : g.colours())
        if (const Count m = g.multiplicity(u, v, c)) {
          out << "  v" << u.index << " -> v" << v.index << " [color="
              << palette(c.id) << ", label=\"";
          if (m > 1) out << m << 'x';
          out << 'c' << c.id << "\"];\n";
        }
  out << "}\n";
  return out.str();
}

}  // namespace cfglat
