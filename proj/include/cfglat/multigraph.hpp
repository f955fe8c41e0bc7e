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

#ifndef CFGLAT_MULTIGRAPH_HPP_
#define CFGLAT_MULTIGRAPH_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cfglat {

/// Chip counts and edge multiplicities.
using Count = std::int64_t;

/// Dense index of a vertex inside one graph.
struct VertexId {
  std::uint32_t index = 0;

  friend auto operator<=>(VertexId, VertexId) = default;
};

/// Colour identifier of a coloured multigraph (the text format's `colour=`).
struct Colour {
  std::uint32_t id = 0;

  friend auto operator<=>(Colour, Colour) = default;
};

/// True when `name` can be used as a vertex name in the game text format.
bool valid_vertex_name(std::string_view name);

/// Directed multigraph stored as an edge-multiplicity matrix. Loops are
/// counted in mult(v, v); each loop contributes one to out_degree(v).
class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(std::vector<std::string> names);

  std::size_t vertex_count() const noexcept { return names_.size(); }
  std::vector<VertexId> vertices() const;

  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(VertexId v) const;
  std::optional<VertexId> find(std::string_view name) const;
  /// Like find() but throws on unknown names.
  VertexId at(std::string_view name) const;

  void add_edges(VertexId from, VertexId to, Count count = 1);
  void set_multiplicity(VertexId from, VertexId to, Count count);

  Count multiplicity(VertexId from, VertexId to) const;
  Count out_degree(VertexId v) const;
  Count in_degree(VertexId v) const;
  Count loops(VertexId v) const;
  Count nonloop_out_degree(VertexId v) const;
  Count nonloop_in_degree(VertexId v) const;
  Count total_multiplicity() const;

  /// Targets w != v with mult(v, w) > 0, ascending.
  std::vector<VertexId> successors(VertexId v) const;

  bool contains(VertexId v) const noexcept {
    return v.index < names_.size();
  }

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

 private:
  void check(VertexId v) const;
  std::size_t slot(VertexId from, VertexId to) const {
    return std::size_t{from.index} * names_.size() + to.index;
  }

  std::vector<std::string> names_;
  std::vector<Count> mult_;
};

/// Vertices with out-degree 0.
std::vector<VertexId> sinks(const Multigraph& g);

/// True iff a single sink is reachable by a directed path from every vertex.
bool sink_reachable_from_all(const Multigraph& g);

/// True iff every vertex has a directed path to some sink. Any chip-firing
/// game on such a graph terminates.
bool every_vertex_reaches_sink(const Multigraph& g);

/// Subgraph on `keep` (in the given order), multiplicities preserved.
Multigraph induced_subgraph(const Multigraph& g, std::span<const VertexId> keep);

/// Multigraph whose edges carry colours. One multiplicity layer per colour;
/// colours are kept sorted by id.
class ColouredMultigraph {
 public:
  ColouredMultigraph() = default;
  ColouredMultigraph(std::vector<std::string> names, std::vector<Colour> colours);

  std::size_t vertex_count() const noexcept { return names_.size(); }
  std::size_t colour_count() const noexcept { return colours_.size(); }
  std::vector<VertexId> vertices() const;

  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(VertexId v) const;
  std::optional<VertexId> find(std::string_view name) const;
  VertexId at(std::string_view name) const;

  const std::vector<Colour>& colours() const noexcept { return colours_; }
  bool has_colour(Colour c) const;
  /// Position of `c` in colours(); throws for unknown colours.
  std::size_t colour_index(Colour c) const;

  void add_edges(VertexId from, VertexId to, Colour c, Count count = 1);
  Count multiplicity(VertexId from, VertexId to, Colour c) const;
  Count total_multiplicity(VertexId from, VertexId to) const;
  Count out_degree(VertexId v, Colour c) const;

  /// The layer of colour `c` as a plain multigraph on the same vertices.
  const Multigraph& restriction_to_colour(Colour c) const;
  /// Sum of all colour layers.
  Multigraph underlying() const;

  friend bool operator==(const ColouredMultigraph&,
                         const ColouredMultigraph&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<Colour> colours_;
  std::vector<Multigraph> layers_;
};

}  // namespace cfglat

#endif  // CFGLAT_MULTIGRAPH_HPP_
