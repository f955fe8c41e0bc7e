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

#include "cfglat/coloured.hpp"

#include <optional>
#include <string>
#include <unordered_map>

#include "cfglat/error.hpp"

namespace cfglat {

void ColouredChips::set(VertexId v, std::size_t colour, Count c) {
  if (c < 0) fail(ErrorKind::invalid_argument, "negative chip count");
  chips_.at(colour * vertices_ + v.index) = c;
}

void ColouredChips::add(VertexId v, std::size_t colour, Count c) {
  set(v, colour, checked_add(get(v, colour), c));
}

Count ColouredChips::total() const {
  Count t = 0;
  for (Count c : chips_) t = checked_add(t, c);
  return t;
}

ColouredCfg::ColouredCfg(ColouredMultigraph graph, ColouredChips init)
    : graph_(std::move(graph)), init_(std::move(init)) {
  if (init_.vertex_count() != graph_.vertex_count() ||
      (graph_.vertex_count() > 0 && init_.colour_count() != graph_.colour_count()))
    fail(ErrorKind::invalid_argument,
         "coloured chips do not match the graph's vertices and colours");
  out_degree_.reserve(graph_.vertex_count() * graph_.colour_count());
  for (auto c : graph_.colours())
    for (auto v : graph_.vertices()) out_degree_.push_back(graph_.out_degree(v, c));
}

Cfg ColouredCfg::restriction(Colour c) const {
  const std::size_t k = graph_.colour_index(c);
  std::vector<Count> chips;
  for (auto v : graph_.vertices()) chips.push_back(init_.get(v, k));
  return Cfg(graph_.restriction_to_colour(c), Configuration(std::move(chips)));
}

ColouredState ColouredCfg::initial_state() const {
  return {init_, VertexSet(vertex_count())};
}

bool colour_guard(const ColouredCfg& g) {
  for (auto c : g.graph().colours())
    if (!every_vertex_reaches_sink(g.graph().restriction_to_colour(c)))
      return false;
  return true;
}

namespace {

bool firable_in(const ColouredCfg& g, const ColouredChips& chips, VertexId v,
                std::size_t colour) {
  const Count d = g.out_degree(v, colour);
  return d > 0 && chips.get(v, colour) >= d;
}

}  // namespace

std::vector<VertexId> openable(const ColouredCfg& g, const ColouredState& s) {
  if (s.open.size() != g.vertex_count())
    fail(ErrorKind::invalid_argument, "state size mismatch");
  std::vector<VertexId> out;
  for (auto v : g.graph().vertices()) {
    if (s.open.test(v.index)) continue;
    for (std::size_t k = 0; k < g.colour_count(); ++k)
      if (firable_in(g, s.chips, v, k)) {
        out.push_back(v);
        break;
      }
  }
  return out;
}

ColouredState open_vertex(const ColouredCfg& g, const ColouredState& s,
                          VertexId v, std::uint64_t step_cap) {
  if (v.index >= g.vertex_count())
    fail(ErrorKind::invalid_argument, "unknown vertex");
  if (s.open.test(v.index))
    fail(ErrorKind::invalid_argument,
         "vertex '" + g.graph().name(v) + "' is already open");
  bool ready = false;
  for (std::size_t k = 0; k < g.colour_count() && !ready; ++k)
    ready = firable_in(g, s.chips, v, k);
  if (!ready)
    fail(ErrorKind::invalid_argument,
         "vertex '" + g.graph().name(v) + "' cannot be opened");

  ColouredState next = s;
  next.open.set(v.index);
  const auto& graph = g.graph();
  for (std::size_t k = 0; k < g.colour_count(); ++k) {
    const Multigraph& layer = graph.restriction_to_colour(graph.colours()[k]);
    std::uint64_t steps = 0;
    for (;;) {
      std::optional<VertexId> w;
      for (auto u : graph.vertices())
        if (next.open.test(u.index) && firable_in(g, next.chips, u, k)) {
          w = u;
          break;
        }
      if (!w) break;
      if (steps++ == step_cap)
        fail(ErrorKind::cap_exceeded,
             "colour " + std::to_string(graph.colours()[k].id) +
                 " still firing after the step cap of " +
                 std::to_string(step_cap));
      next.chips.set(*w, k, next.chips.get(*w, k) - g.out_degree(*w, k));
      for (auto t : graph.vertices())
        if (const Count m = layer.multiplicity(*w, t)) next.chips.add(t, k, m);
    }
  }
  return next;
}

ColouredSpace enumerate_coloured_space(const ColouredCfg& g,
                                       std::size_t state_cap) {
  const std::size_t n = g.vertex_count();
  ColouredSpace space;
  space.vertex_names = g.graph().names();
  std::unordered_map<VertexSet, std::size_t> index;
  space.states.push_back(g.initial_state());
  space.firings.emplace_back(n, 0);
  index.emplace(space.states.front().open, 0);

  for (std::size_t i = 0; i < space.states.size(); ++i) {
    for (auto v : openable(g, space.states[i])) {
      ColouredState next = open_vertex(g, space.states[i], v);
      auto it = index.find(next.open);
      std::size_t j;
      if (it != index.end()) {
        j = it->second;
        if (!(space.states[j].chips == next.chips))
          fail(ErrorKind::internal,
               "open set " + space.element_name(j) +
                   " reached with two different chip distributions");
      } else {
        if (space.states.size() >= state_cap)
          fail(ErrorKind::cap_exceeded,
               "coloured configuration space exceeds the state cap of " +
                   std::to_string(state_cap));
        j = space.states.size();
        std::vector<Count> f(n, 0);
        for (std::size_t u = 0; u < n; ++u) f[u] = next.open.test(u) ? 1 : 0;
        index.emplace(next.open, j);
        space.states.push_back(std::move(next));
        space.firings.push_back(std::move(f));
      }
      space.covers.push_back({i, j, v});
    }
  }
  canonicalize(space);
  return space;
}

ColouredCfg from_classical(const Cfg& cfg) {
  if (!is_simple(cfg))
    fail(ErrorKind::validation,
         "game is not simple; simplify it before lifting to one colour");
  const Colour only{1};
  ColouredMultigraph g(cfg.graph().names(), {only});
  for (auto u : cfg.graph().vertices())
    for (auto v : cfg.graph().vertices())
      if (const Count m = cfg.graph().multiplicity(u, v)) g.add_edges(u, v, only, m);
  ColouredChips chips(cfg.vertex_count(), 1);
  for (auto v : cfg.graph().vertices()) chips.set(v, 0, cfg.initial()[v]);
  return ColouredCfg(std::move(g), std::move(chips));
}

}  // namespace cfglat
