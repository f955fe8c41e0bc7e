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

#ifndef CFGLAT_DOT_HPP_
#define CFGLAT_DOT_HPP_

#include <string>

#include "cfglat/chip_firing.hpp"
#include "cfglat/coloured.hpp"
#include "cfglat/lattice.hpp"

// Graphviz writers. Hasse diagrams are drawn bottom-up; nodes are emitted in
// element order.

namespace cfglat {

struct LatticeDotOptions {
  /// Fill join-irreducibles (blue), meet-irreducibles (orange) or both
  /// (purple).
  bool highlight_irreducibles = true;
  /// Label each cover with its meet-irreducible (ULD lattices only).
  bool cover_labels = false;
};

std::string space_dot(const ConfigSpace& space);
std::string coloured_space_dot(const ColouredSpace& space);
std::string lattice_dot(const Lattice& l, const LatticeDotOptions& options = {});
std::string game_dot(const Cfg& cfg);
/// Edges coloured by colour id; vertices in `open` filled grey.
std::string coloured_game_dot(const ColouredCfg& cfg,
                              const VertexSet* open = nullptr);

}  // namespace cfglat

#endif  // CFGLAT_DOT_HPP_
