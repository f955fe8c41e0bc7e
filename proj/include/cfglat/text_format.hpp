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

#ifndef CFGLAT_TEXT_FORMAT_HPP_
#define CFGLAT_TEXT_FORMAT_HPP_

#include <string>
#include <string_view>

#include "cfglat/chip_firing.hpp"
#include "cfglat/coloured.hpp"
#include "cfglat/lattice.hpp"

// Game files:
//
//   # comment
//   vertices: a b c d
//   colours: 1 2            (coloured games, optional)
//   edge: a c 1             (multiplicity defaults to 1)
//   edge: a c 2 colour=3
//   chips: a=1 b=1          (classical)
//   chips: a=1@1,1@3        (coloured: count@colour)
//
// Lattice files:
//
//   elements: e0 e1 e2
//   cover: e0 e1
//
// Parse failures throw ParseError carrying the 1-based line number.

namespace cfglat {

/// True if the text uses any coloured construct (colour=, count@colour or a
/// colours: line).
bool is_coloured_game_text(std::string_view text);

Cfg parse_game(std::string_view text);
ColouredCfg parse_coloured_game(std::string_view text);
Lattice parse_lattice(std::string_view text,
                      std::size_t element_cap = kDefaultLatticeCap);

std::string write_game(const Cfg& cfg);
std::string write_coloured_game(const ColouredCfg& cfg);
std::string write_lattice(const Lattice& l);

/// Whole file as a string; throws ErrorKind::invalid_argument if unreadable.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace cfglat

#endif  // CFGLAT_TEXT_FORMAT_HPP_
