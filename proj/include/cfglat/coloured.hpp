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

#ifndef CFGLAT_COLOURED_HPP_
#define CFGLAT_COLOURED_HPP_

#include <cstdint>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "cfglat/chip_firing.hpp"
#include "cfglat/multigraph.hpp"

namespace cfglat {

/// Chip counts per (vertex, colour). Colours are addressed by their
/// position in the owning graph's colours().
class ColouredChips {
 public:
  ColouredChips() = default;
  ColouredChips(std::size_t vertices, std::size_t colours)
      : vertices_(vertices), chips_(vertices * colours, 0) {}

  std::size_t vertex_count() const noexcept { return vertices_; }
  std::size_t colour_count() const noexcept {
    return vertices_ ? chips_.size() / vertices_ : 0;
  }
  Count get(VertexId v, std::size_t colour) const {
    return chips_.at(colour * vertices_ + v.index);
  }
  void set(VertexId v, std::size_t colour, Count c);
  void add(VertexId v, std::size_t colour, Count c);
  Count total() const;

  friend bool operator==(const ColouredChips&, const ColouredChips&) = default;

 private:
  std::size_t vertices_ = 0;
  std::vector<Count> chips_;
};

using VertexSet = boost::dynamic_bitset<>;

/// Chips plus the set of open vertices.
struct ColouredState {
  ColouredChips chips;
  VertexSet open;

  friend bool operator==(const ColouredState&, const ColouredState&) = default;
};

/// A coloured chip-firing game.
class ColouredCfg {
 public:
  ColouredCfg() = default;
  ColouredCfg(ColouredMultigraph graph, ColouredChips init);

  const ColouredMultigraph& graph() const noexcept { return graph_; }
  const ColouredChips& initial() const noexcept { return init_; }
  std::size_t vertex_count() const noexcept { return graph_.vertex_count(); }
  std::size_t colour_count() const noexcept { return graph_.colour_count(); }
  /// Out-degree of v in the layer at colour position `colour`.
  Count out_degree(VertexId v, std::size_t colour) const {
    return out_degree_.at(colour * vertex_count() + v.index);
  }
  /// The game restricted to one colour, as a classical game.
  Cfg restriction(Colour c) const;

  ColouredState initial_state() const;

  friend bool operator==(const ColouredCfg& a, const ColouredCfg& b) {
    return a.graph_ == b.graph_ && a.init_ == b.init_;
  }

 private:
  ColouredMultigraph graph_;
  ColouredChips init_;
  std::vector<Count> out_degree_;
};

/// Every colour restriction passes the classical convergence guard.
bool colour_guard(const ColouredCfg& g);

/// Closed vertices firable (positive degree, enough chips) in some colour.
std::vector<VertexId> openable(const ColouredCfg& g, const ColouredState& s);

/// Opens v, then stabilises each colour (ascending) with open vertices
/// firing and closed vertices absorbing. Throws ErrorKind::invalid_argument
/// if v is not openable, ErrorKind::cap_exceeded if a colour does not settle
/// within step_cap firings.
ColouredState open_vertex(const ColouredCfg& g, const ColouredState& s,
                          VertexId v, std::uint64_t step_cap = kDefaultStepCap);

using ColouredSpace = StateSpace<ColouredState>;

/// Reachable states keyed by open set (0/1 firing vectors). Throws
/// ErrorKind::internal if one open set is reached with two chip states.
ColouredSpace enumerate_coloured_space(const ColouredCfg& g,
                                       std::size_t state_cap = kDefaultStateCap);

/// One-colour (id 1) view of a simple classical game.
ColouredCfg from_classical(const Cfg& cfg);

}  // namespace cfglat

#endif  // CFGLAT_COLOURED_HPP_
