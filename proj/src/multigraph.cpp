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

#include "cfglat/multigraph.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "cfglat/error.hpp"

namespace cfglat {

namespace {

void check_names(const std::vector<std::string>& names) {
  std::set<std::string_view> seen;
  for (const auto& n : names) {
    if (!valid_vertex_name(n))
      fail(ErrorKind::invalid_argument, "invalid vertex name '" + n + "'");
    if (!seen.insert(n).second)
      fail(ErrorKind::invalid_argument, "duplicate vertex name '" + n + "'");
  }
}

std::optional<VertexId> find_name(const std::vector<std::string>& names,
                                  std::string_view name) {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) return std::nullopt;
  return VertexId{static_cast<std::uint32_t>(it - names.begin())};
}

std::vector<VertexId> iota_vertices(std::size_t n) {
  std::vector<VertexId> out(n);
  for (std::size_t i = 0; i < n; ++i)
    out[i] = VertexId{static_cast<std::uint32_t>(i)};
  return out;
}

// Vertices from which some vertex in `targets` is reachable.
std::vector<bool> can_reach(const Multigraph& g,
                            const std::vector<VertexId>& targets) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> seen(n, false);
  std::deque<VertexId> queue;
  for (auto t : targets) {
    seen[t.index] = true;
    queue.push_back(t);
  }
  while (!queue.empty()) {
    const VertexId w = queue.front();
    queue.pop_front();
    for (std::uint32_t u = 0; u < n; ++u) {
      if (!seen[u] && g.multiplicity(VertexId{u}, w) > 0) {
        seen[u] = true;
        queue.push_back(VertexId{u});
      }
    }
  }
  return seen;
}

}  // namespace

bool valid_vertex_name(std::string_view name) {
  if (name.empty()) return false;
  return std::none_of(name.begin(), name.end(), [](char ch) {
    return ch == '=' || ch == ' ' || ch == '\t' || ch == '\n' ||
           ch == '\r' || ch == '"' || ch == '#';
  });
}

Multigraph::Multigraph(std::vector<std::string> names)
    : names_(std::move(names)) {
  check_names(names_);
  mult_.assign(names_.size() * names_.size(), 0);
}

std::vector<VertexId> Multigraph::vertices() const {
  return iota_vertices(vertex_count());
}

void Multigraph::check(VertexId v) const {
  if (!contains(v))
    fail(ErrorKind::invalid_argument,
         "unknown vertex index " + std::to_string(v.index));
}

const std::string& Multigraph::name(VertexId v) const {
  check(v);
  return names_[v.index];
}

std::optional<VertexId> Multigraph::find(std::string_view name) const {
  return find_name(names_, name);
}

VertexId Multigraph::at(std::string_view name) const {
  auto v = find(name);
  if (!v)
    fail(ErrorKind::invalid_argument,
         "unknown vertex '" + std::string(name) + "'");
  return *v;
}

void Multigraph::add_edges(VertexId from, VertexId to, Count count) {
  check(from);
  check(to);
  if (count < 0) fail(ErrorKind::invalid_argument, "negative edge count");
  mult_[slot(from, to)] = checked_add(mult_[slot(from, to)], count);
}

void Multigraph::set_multiplicity(VertexId from, VertexId to, Count count) {
  check(from);
  check(to);
  if (count < 0) fail(ErrorKind::invalid_argument, "negative edge count");
  mult_[slot(from, to)] = count;
}

Count Multigraph::multiplicity(VertexId from, VertexId to) const {
  check(from);
  check(to);
  return mult_[slot(from, to)];
}

Count Multigraph::out_degree(VertexId v) const {
  check(v);
  Count d = 0;
  for (std::uint32_t w = 0; w < vertex_count(); ++w)
    d = checked_add(d, mult_[slot(v, VertexId{w})]);
  return d;
}

Count Multigraph::in_degree(VertexId v) const {
  check(v);
  Count d = 0;
  for (std::uint32_t u = 0; u < vertex_count(); ++u)
    d = checked_add(d, mult_[slot(VertexId{u}, v)]);
  return d;
}

Count Multigraph::loops(VertexId v) const { return multiplicity(v, v); }

Count Multigraph::nonloop_out_degree(VertexId v) const {
  return out_degree(v) - loops(v);
}

Count Multigraph::nonloop_in_degree(VertexId v) const {
  return in_degree(v) - loops(v);
}

Count Multigraph::total_multiplicity() const {
  Count total = 0;
  for (Count m : mult_) total = checked_add(total, m);
  return total;
}

std::vector<VertexId> Multigraph::successors(VertexId v) const {
  check(v);
  std::vector<VertexId> out;
  for (std::uint32_t w = 0; w < vertex_count(); ++w)
    if (w != v.index && mult_[slot(v, VertexId{w})] > 0)
      out.push_back(VertexId{w});
  return out;
}

std::vector<VertexId> sinks(const Multigraph& g) {
  std::vector<VertexId> out;
  for (auto v : g.vertices())
    if (g.out_degree(v) == 0) out.push_back(v);
  return out;
}

bool sink_reachable_from_all(const Multigraph& g) {
  for (auto s : sinks(g)) {
    auto seen = can_reach(g, {s});
    if (std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
      return true;
  }
  return false;
}

bool every_vertex_reaches_sink(const Multigraph& g) {
  auto seen = can_reach(g, sinks(g));
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

Multigraph induced_subgraph(const Multigraph& g,
                            std::span<const VertexId> keep) {
  std::vector<std::string> names;
  names.reserve(keep.size());
  for (auto v : keep) names.push_back(g.name(v));
  Multigraph sub(std::move(names));
  for (std::uint32_t i = 0; i < keep.size(); ++i)
    for (std::uint32_t j = 0; j < keep.size(); ++j)
      sub.set_multiplicity(VertexId{i}, VertexId{j},
                           g.multiplicity(keep[i], keep[j]));
  return sub;
}

ColouredMultigraph::ColouredMultigraph(std::vector<std::string> names,
                                       std::vector<Colour> colours)
    : names_(std::move(names)), colours_(std::move(colours)) {
  check_names(names_);
  std::sort(colours_.begin(), colours_.end());
  if (std::adjacent_find(colours_.begin(), colours_.end()) != colours_.end())
    fail(ErrorKind::invalid_argument, "duplicate colour id");
  layers_.assign(colours_.size(), Multigraph(names_));
}

std::vector<VertexId> ColouredMultigraph::vertices() const {
  return iota_vertices(vertex_count());
}

const std::string& ColouredMultigraph::name(VertexId v) const {
  if (v.index >= names_.size())
    fail(ErrorKind::invalid_argument,
         "unknown vertex index " + std::to_string(v.index));
  return names_[v.index];
}

std::optional<VertexId> ColouredMultigraph::find(std::string_view name) const {
  return find_name(names_, name);
}

VertexId ColouredMultigraph::at(std::string_view name) const {
  auto v = find(name);
  if (!v)
    fail(ErrorKind::invalid_argument,
         "unknown vertex '" + std::string(name) + "'");
  return *v;
}

bool ColouredMultigraph::has_colour(Colour c) const {
  return std::binary_search(colours_.begin(), colours_.end(), c);
}

std::size_t ColouredMultigraph::colour_index(Colour c) const {
  auto it = std::lower_bound(colours_.begin(), colours_.end(), c);
  if (it == colours_.end() || *it != c)
    fail(ErrorKind::invalid_argument, "unknown colour " + std::to_string(c.id));
  return static_cast<std::size_t>(it - colours_.begin());
}

void ColouredMultigraph::add_edges(VertexId from, VertexId to, Colour c,
                                   Count count) {
  layers_[colour_index(c)].add_edges(from, to, count);
}

Count ColouredMultigraph::multiplicity(VertexId from, VertexId to,
                                       Colour c) const {
  return layers_[colour_index(c)].multiplicity(from, to);
}

Count ColouredMultigraph::total_multiplicity(VertexId from, VertexId to) const {
  Count total = 0;
  for (const auto& layer : layers_)
    total = checked_add(total, layer.multiplicity(from, to));
  return total;
}

Count ColouredMultigraph::out_degree(VertexId v, Colour c) const {
  return layers_[colour_index(c)].out_degree(v);
}

const Multigraph& ColouredMultigraph::restriction_to_colour(Colour c) const {
  return layers_[colour_index(c)];
}

Multigraph ColouredMultigraph::underlying() const {
  Multigraph sum(names_);
  for (const auto& layer : layers_)
    for (auto u : layer.vertices())
      for (auto v : layer.vertices())
        sum.add_edges(u, v, layer.multiplicity(u, v));
  return sum;
}

}  // namespace cfglat
