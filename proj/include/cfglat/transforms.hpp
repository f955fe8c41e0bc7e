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

#ifndef CFGLAT_TRANSFORMS_HPP_
#define CFGLAT_TRANSFORMS_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cfglat/chip_firing.hpp"
#include "cfglat/coloured.hpp"
#include "cfglat/lattice.hpp"

namespace cfglat {

/// One step of simplify().
struct SplitReport {
  std::string vertex;
  /// Twice the total chips of the game being split.
  Count n = 0;
  /// 1-based iteration that performed this split.
  std::size_t iteration = 0;
  std::string low_name;   // a_0, holds N more chips
  std::string high_name;  // a_1
};

/// Replaces a by a_0, a_1: other multiplicities and chips doubled, in-edges
/// of a split one each way, out-edges and loops of a copied twice / once,
/// N - d^>(a) edges in both directions between the halves, and
/// sigma'(a_0) = sigma(a) + N, sigma'(a_1) = sigma(a).
/// Throws ErrorKind::invalid_argument when a is a sink or N < d^>(a),
/// ErrorKind::cap_exceeded on count overflow.
Cfg split_vertex(const Cfg& cfg, VertexId a, SplitReport* report = nullptr);

struct SimplifyOptions {
  std::size_t iteration_cap = 64;
  std::uint64_t step_cap = kDefaultStepCap;
};

struct SimplifyResult {
  Cfg game;
  std::vector<SplitReport> splits;
};

/// Called after every split with the games before and after.
using SplitObserver =
    std::function<void(const Cfg&, const Cfg&, const SplitReport&)>;

/// Splits a most-fired vertex (lowest index on ties) until every vertex
/// fires at most once.
SimplifyResult simplify(const Cfg& cfg, const SimplifyOptions& options = {},
                        const SplitObserver& observer = {});

/// Game whose space is the ideal lattice of p: one vertex per element plus a
/// sink "bot"; edges follow the covers of p upwards, surplus in-degree is
/// balanced by edges to the sink, isolated elements get one sink edge, and
/// sigma(v) = out_degree(v) - in_degree(v).
Cfg cfg_from_poset(const Poset& p);

/// cfg_from_poset applied to the meet-irreducibles of L. Throws
/// ErrorKind::validation, naming a witness triple, if L is not distributive.
Cfg cfg_from_distributive(const Lattice& l);

/// Game whose space is [a, b] of `space` (indices into it): starts from the
/// configuration at a, with out-edges of vertices outside sh(b) removed.
/// Throws ErrorKind::invalid_argument if a is not below b and
/// ErrorKind::validation if the game is not simple.
Cfg interval_cfg(const Cfg& cfg, const ConfigSpace& space, std::size_t a,
                 std::size_t b);

/// Coloured game on J ∪ {bot}: colour i+1 plays cfg_from_poset on the
/// principal ideal of the i-th join-irreducible. Its space is the ideal
/// lattice of J. Throws ErrorKind::validation if L is not ULD.
ColouredCfg build_tilde_cfg(const Lattice& l);

/// build_tilde_cfg contracted by the ~ classes: one vertex per
/// meet-irreducible (named after it) plus bot, multiplicities and chips
/// summed within each colour. Its space is isomorphic to L.
ColouredCfg coloured_from_uld(const Lattice& l);

/// Merges every vertex that never fires into a single sink (keeping the name
/// of the first one); the space is unchanged.
Cfg collapse_unfired(const Cfg& cfg, std::uint64_t step_cap = kDefaultStepCap);

}  // namespace cfglat

#endif  // CFGLAT_TRANSFORMS_HPP_
