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

#ifndef CFGLAT_CHIP_FIRING_HPP_
#define CFGLAT_CHIP_FIRING_HPP_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "cfglat/lattice.hpp"
#include "cfglat/multigraph.hpp"

namespace cfglat {

inline constexpr std::uint64_t kDefaultStepCap = 1'000'000;
inline constexpr std::size_t kDefaultStateCap = 100'000;

/// Chip count per vertex.
class Configuration {
 public:
  Configuration() = default;
  explicit Configuration(std::vector<Count> chips);
  static Configuration zeros(std::size_t n) {
    return Configuration(std::vector<Count>(n, 0));
  }

  std::size_t size() const noexcept { return chips_.size(); }
  Count operator[](VertexId v) const { return chips_.at(v.index); }
  void set(VertexId v, Count c);
  void add(VertexId v, Count c);
  Count total() const;
  std::span<const Count> chips() const noexcept { return chips_; }

  friend bool operator==(const Configuration&, const Configuration&) = default;
  friend auto operator<=>(const Configuration&, const Configuration&) = default;

 private:
  std::vector<Count> chips_;
};

struct ConfigurationHash {
  std::size_t operator()(const Configuration& c) const noexcept;
};

/// A classical chip-firing game: support graph plus initial configuration.
class Cfg {
 public:
  Cfg() = default;
  Cfg(Multigraph graph, Configuration init);

  const Multigraph& graph() const noexcept { return graph_; }
  const Configuration& initial() const noexcept { return init_; }
  std::size_t vertex_count() const noexcept { return graph_.vertex_count(); }
  /// Cached out-degrees.
  Count out_degree(VertexId v) const { return out_degree_.at(v.index); }

  friend bool operator==(const Cfg& a, const Cfg& b) {
    return a.graph_ == b.graph_ && a.init_ == b.init_;
  }

 private:
  Multigraph graph_;
  Configuration init_;
  std::vector<Count> out_degree_;
};

bool is_firable(const Cfg& cfg, const Configuration& conf, VertexId v);
/// Vertices holding at least their (positive) out-degree in chips.
std::vector<VertexId> firable(const Cfg& cfg, const Configuration& conf);
/// Sends one chip along every out-edge of v. Throws if v is not firable.
Configuration fire(const Cfg& cfg, const Configuration& conf, VertexId v);

enum class FiringOrder { lowest_index, highest_index, random };

struct FiringPolicy {
  FiringOrder order = FiringOrder::lowest_index;
  std::uint64_t seed = 0;  // used by FiringOrder::random
};

struct RunOptions {
  FiringPolicy policy;
  std::uint64_t step_cap = kDefaultStepCap;
  bool record_trace = false;
};

struct RunResult {
  Configuration final_configuration;
  std::vector<Count> firings;    // per vertex
  std::vector<VertexId> trace;   // filled when RunOptions::record_trace
  Count total_firings() const;
};

/// Fires until nothing is firable. Throws ErrorKind::cap_exceeded
/// ("possibly divergent") after step_cap firings.
RunResult run_to_fixpoint(const Cfg& cfg, const RunOptions& options = {});

/// True iff one execution fires no vertex twice.
bool is_simple(const Cfg& cfg, std::uint64_t step_cap = kDefaultStepCap);

/// Guard accepted for uncapped runs: every vertex reaches a sink.
bool convergence_guard(const Cfg& cfg);

namespace detail {

inline std::vector<std::size_t> fired_multiset(const std::vector<Count>& f) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < f.size(); ++v)
    for (Count k = 0; k < f[v]; ++k) out.push_back(v);
  return out;
}

}  // namespace detail

/// Canonical element order: total firings, then fired multiset (as a sorted
/// index list) lexicographically.
inline bool canonical_less(const std::vector<Count>& a,
                           const std::vector<Count>& b) {
  const auto ma = detail::fired_multiset(a);
  const auto mb = detail::fired_multiset(b);
  if (ma.size() != mb.size()) return ma.size() < mb.size();
  return ma < mb;
}

/// A covering step of a configuration space: `fired` takes `lower` to
/// `upper`.
struct SpaceCover {
  std::size_t lower = 0;
  std::size_t upper = 0;
  VertexId fired;

  friend bool operator==(const SpaceCover&, const SpaceCover&) = default;
};

/// Reachable states of a game with their firing vectors, in canonical order
/// (total firings, then the fired multiset as a sorted index list,
/// lexicographically). Element 0 is the initial state.
template <class State>
struct StateSpace {
  std::vector<std::string> vertex_names;
  std::vector<std::vector<Count>> firings;
  std::vector<State> states;
  std::vector<SpaceCover> covers;

  std::size_t size() const noexcept { return states.size(); }

  std::size_t height() const {
    Count h = 0;
    for (const auto& f : firings) {
      Count t = 0;
      for (Count c : f) t += c;
      h = std::max(h, t);
    }
    return static_cast<std::size_t>(h);
  }

  /// Every firing vector is 0/1.
  bool is_simple() const {
    for (const auto& f : firings)
      for (Count c : f)
        if (c > 1) return false;
    return true;
  }

  /// Vertices fired at least once to reach element i.
  std::vector<VertexId> shot_set(std::size_t i) const {
    std::vector<VertexId> out;
    for (std::uint32_t v = 0; v < firings.at(i).size(); ++v)
      if (firings[i][v] > 0) out.push_back(VertexId{v});
    return out;
  }

  /// Index of the element with firing vector `vec`; relies on canonical
  /// order.
  std::optional<std::size_t> find(const std::vector<Count>& vec) const;

  /// "{a,b}" for shot-sets; a vertex fired k times is repeated k times.
  std::string element_name(std::size_t i) const {
    std::vector<std::string> parts;
    for (std::size_t v = 0; v < firings.at(i).size(); ++v)
      for (Count k = 0; k < firings[i][v]; ++k) parts.push_back(vertex_names[v]);
    return set_name(parts);
  }

  std::vector<std::string> element_names() const {
    std::vector<std::string> out;
    out.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) out.push_back(element_name(i));
    return out;
  }

  std::vector<CoverPair> cover_pairs() const {
    std::vector<CoverPair> out;
    out.reserve(covers.size());
    for (const auto& c : covers) out.emplace_back(c.lower, c.upper);
    return out;
  }

  /// The space as a lattice; element i keeps index i.
  Lattice lattice(std::size_t element_cap = kDefaultLatticeCap) const {
    auto pairs = cover_pairs();
    return Lattice::from_covers(element_names(), pairs, element_cap);
  }
};

template <class State>
std::optional<std::size_t> StateSpace<State>::find(
    const std::vector<Count>& vec) const {
  auto it = std::lower_bound(firings.begin(), firings.end(), vec,
                             canonical_less);
  if (it == firings.end() || *it != vec) return std::nullopt;
  return static_cast<std::size_t>(it - firings.begin());
}

using ConfigSpace = StateSpace<Configuration>;

/// Breadth-first closure of the reachable configurations. States are keyed
/// by configuration; for non-simple games firing vectors replace shot-sets.
ConfigSpace enumerate_space(const Cfg& cfg,
                            std::size_t state_cap = kDefaultStateCap);

/// Element whose firing vector is the componentwise maximum of those of a
/// and b (the union of shot-sets for simple games).
std::size_t join_of(const ConfigSpace& space, std::size_t a, std::size_t b);

/// Sorts a freshly explored space into canonical order; used by both the
/// classical and the coloured enumerators.
template <class State>
void canonicalize(StateSpace<State>& space) {
  const std::size_t n = space.size();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return canonical_less(space.firings[a], space.firings[b]);
  });
  std::vector<std::size_t> new_index(n);
  for (std::size_t i = 0; i < n; ++i) new_index[order[i]] = i;

  StateSpace<State> out;
  out.vertex_names = std::move(space.vertex_names);
  out.firings.reserve(n);
  out.states.reserve(n);
  for (auto old : order) {
    out.firings.push_back(std::move(space.firings[old]));
    out.states.push_back(std::move(space.states[old]));
  }
  for (const auto& c : space.covers)
    out.covers.push_back({new_index[c.lower], new_index[c.upper], c.fired});
  std::sort(out.covers.begin(), out.covers.end(),
            [](const SpaceCover& a, const SpaceCover& b) {
              return std::tie(a.lower, a.upper, a.fired.index) <
                     std::tie(b.lower, b.upper, b.fired.index);
            });
  space = std::move(out);
}

}  // namespace cfglat

#endif  // CFGLAT_CHIP_FIRING_HPP_
