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

#include "cfglat/text_format.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <unordered_map>

#include "cfglat/error.hpp"

namespace cfglat {

namespace {

struct Line {
  std::size_t number = 0;
  std::string key;
  std::vector<std::string> words;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos)
      raw = raw.substr(0, hash);
    std::istringstream in{std::string(raw)};
    std::string first;
    if (!(in >> first)) continue;
    Line line;
    line.number = number;
    const auto colon = first.find(':');
    if (colon == std::string::npos)
      throw ParseError(number, "expected 'keyword:' but found '" + first + "'");
    line.key = first.substr(0, colon);
    if (colon + 1 < first.size()) line.words.push_back(first.substr(colon + 1));
    for (std::string w; in >> w;) line.words.push_back(w);
    out.push_back(std::move(line));
    if (end == text.size()) break;
  }
  return out;
}

Count parse_count(std::string_view s, std::size_t line, const char* what) {
  Count v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || v < 0)
    throw ParseError(line, std::string("bad ") + what + " '" + std::string(s) + "'");
  return v;
}

Colour parse_colour(std::string_view s, std::size_t line) {
  std::uint32_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw ParseError(line, "bad colour '" + std::string(s) + "'");
  return Colour{v};
}

struct RawEdge {
  std::size_t line;
  VertexId from, to;
  Count count;
  std::optional<Colour> colour;
};

struct RawChip {
  std::size_t line;
  VertexId vertex;
  Count count;
  std::optional<Colour> colour;
};

struct RawGame {
  std::vector<std::string> names;
  std::vector<Colour> declared;
  std::vector<RawEdge> edges;
  std::vector<RawChip> chips;
  bool coloured = false;
};

RawGame read_raw(std::string_view text) {
  RawGame g;
  std::unordered_map<std::string, std::uint32_t> index;
  std::set<std::uint32_t> chipped;
  bool have_vertices = false;
  auto vertex = [&](const std::string& name, std::size_t line) {
    auto it = index.find(name);
    if (it == index.end()) throw ParseError(line, "unknown vertex '" + name + "'");
    return VertexId{it->second};
  };
  for (const Line& l : split_lines(text)) {
    if (l.key == "vertices") {
      for (const auto& name : l.words) {
        if (!valid_vertex_name(name))
          throw ParseError(l.number, "invalid vertex name '" + name + "'");
        if (!index.emplace(name, static_cast<std::uint32_t>(g.names.size())).second)
          throw ParseError(l.number, "duplicate vertex '" + name + "'");
        g.names.push_back(name);
      }
      have_vertices = true;
    } else if (l.key == "colours" || l.key == "colors") {
      for (const auto& w : l.words) g.declared.push_back(parse_colour(w, l.number));
      g.coloured = true;
    } else if (l.key == "edge") {
      if (!have_vertices)
        throw ParseError(l.number, "edge before the vertices: line");
      RawEdge e{l.number, {}, {}, 1, std::nullopt};
      std::vector<std::string> plain;
      for (const auto& w : l.words) {
        if (w.rfind("colour=", 0) == 0 || w.rfind("color=", 0) == 0) {
          if (e.colour) throw ParseError(l.number, "colour given twice");
          e.colour = parse_colour(w.substr(w.find('=') + 1), l.number);
          g.coloured = true;
        } else {
          plain.push_back(w);
        }
      }
      if (plain.size() < 2 || plain.size() > 3)
        throw ParseError(l.number, "expected 'edge: from to [count] [colour=c]'");
      e.from = vertex(plain[0], l.number);
      e.to = vertex(plain[1], l.number);
      if (plain.size() == 3) {
        e.count = parse_count(plain[2], l.number, "edge count");
        if (e.count == 0) throw ParseError(l.number, "edge count must be positive");
      }
      g.edges.push_back(e);
    } else if (l.key == "chips") {
      if (!have_vertices)
        throw ParseError(l.number, "chips before the vertices: line");
      for (const auto& w : l.words) {
        const auto eq = w.find('=');
        if (eq == std::string::npos)
          throw ParseError(l.number, "expected 'vertex=count' but found '" + w + "'");
        const VertexId v = vertex(w.substr(0, eq), l.number);
        if (!chipped.insert(v.index).second)
          throw ParseError(l.number, "chips for '" + w.substr(0, eq) + "' given twice");
        std::string_view rest = std::string_view(w).substr(eq + 1);
        std::set<std::uint32_t> seen;
        while (true) {
          const auto comma = rest.find(',');
          std::string_view item = rest.substr(0, comma);
          RawChip c{l.number, v, 0, std::nullopt};
          if (const auto at = item.find('@'); at != std::string_view::npos) {
            c.colour = parse_colour(item.substr(at + 1), l.number);
            item = item.substr(0, at);
            g.coloured = true;
            if (!seen.insert(c.colour->id).second)
              throw ParseError(l.number, "colour repeated in '" + w + "'");
          } else if (comma != std::string_view::npos) {
            throw ParseError(l.number, "chip lists need count@colour items");
          }
          c.count = parse_count(item, l.number, "chip count");
          g.chips.push_back(c);
          if (comma == std::string_view::npos) break;
          rest = rest.substr(comma + 1);
        }
      }
    } else {
      throw ParseError(l.number, "unknown keyword '" + l.key + "'");
    }
  }
  if (!have_vertices) throw ParseError(1, "missing 'vertices:' line");
  return g;
}

std::string join_words(const std::vector<std::string>& words) {
  std::string out;
  for (const auto& w : words) {
    if (!out.empty()) out += ' ';
    out += w;
  }
  return out;
}

}  // namespace

bool is_coloured_game_text(std::string_view text) {
  for (const Line& l : split_lines(text)) {
    if (l.key == "colours" || l.key == "colors") return true;
    for (const auto& w : l.words) {
      if (l.key == "edge" &&
          (w.rfind("colour=", 0) == 0 || w.rfind("color=", 0) == 0))
        return true;
      if (l.key == "chips" && w.find('@') != std::string::npos) return true;
    }
  }
  return false;
}

Cfg parse_game(std::string_view text) {
  RawGame raw = read_raw(text);
  Multigraph g(raw.names);
  for (const auto& e : raw.edges) {
    if (e.colour)
      throw ParseError(e.line, "coloured edge in a classical game");
    g.add_edges(e.from, e.to, e.count);
  }
  std::vector<Count> chips(raw.names.size(), 0);
  for (const auto& c : raw.chips) {
    if (c.colour) throw ParseError(c.line, "coloured chips in a classical game");
    chips[c.vertex.index] = c.count;
  }
  return Cfg(std::move(g), Configuration(std::move(chips)));
}

ColouredCfg parse_coloured_game(std::string_view text) {
  RawGame raw = read_raw(text);
  std::set<Colour> colours(raw.declared.begin(), raw.declared.end());
  for (const auto& e : raw.edges)
    if (e.colour) colours.insert(*e.colour);
  for (const auto& c : raw.chips)
    if (c.colour) colours.insert(*c.colour);
  auto resolve = [&](const std::optional<Colour>& c, std::size_t line) {
    if (c) return *c;
    if (colours.size() != 1)
      throw ParseError(line, "colour missing and the game does not have exactly one colour");
    return *colours.begin();
  };
  ColouredMultigraph g(raw.names, {colours.begin(), colours.end()});
  for (const auto& e : raw.edges)
    g.add_edges(e.from, e.to, resolve(e.colour, e.line), e.count);
  ColouredChips chips(raw.names.size(), colours.size());
  for (const auto& c : raw.chips)
    chips.set(c.vertex, g.colour_index(resolve(c.colour, c.line)), c.count);
  return ColouredCfg(std::move(g), std::move(chips));
}

Lattice parse_lattice(std::string_view text, std::size_t element_cap) {
  std::vector<std::string> names;
  std::unordered_map<std::string, std::size_t> index;
  std::vector<CoverPair> covers;
  std::set<CoverPair> seen;
  for (const Line& l : split_lines(text)) {
    if (l.key == "elements") {
      for (const auto& name : l.words) {
        if (!index.emplace(name, names.size()).second)
          throw ParseError(l.number, "duplicate element '" + name + "'");
        names.push_back(name);
      }
    } else if (l.key == "cover") {
      if (l.words.size() != 2)
        throw ParseError(l.number, "expected 'cover: lower upper'");
      std::size_t ends[2];
      for (std::size_t k = 0; k < 2; ++k) {
        auto it = index.find(l.words[k]);
        if (it == index.end())
          throw ParseError(l.number, "unknown element '" + l.words[k] + "'");
        ends[k] = it->second;
      }
      if (seen.insert({ends[0], ends[1]}).second)
        covers.emplace_back(ends[0], ends[1]);
    } else {
      throw ParseError(l.number, "unknown keyword '" + l.key + "'");
    }
  }
  if (names.empty()) throw ParseError(1, "missing 'elements:' line");
  return Lattice::from_covers(std::move(names), covers, element_cap);
}

std::string write_game(const Cfg& cfg) {
  const Multigraph& g = cfg.graph();
  std::ostringstream out;
  out << "vertices: " << join_words(g.names()) << '\n';
  for (auto u : g.vertices())
    for (auto v : g.vertices())
      if (const Count m = g.multiplicity(u, v))
        out << "edge: " << g.name(u) << ' ' << g.name(v) << ' ' << m << '\n';
  out << "chips:";
  for (auto v : g.vertices()) out << ' ' << g.name(v) << '=' << cfg.initial()[v];
  out << '\n';
  return out.str();
}

std::string write_coloured_game(const ColouredCfg& cfg) {
  const ColouredMultigraph& g = cfg.graph();
  std::ostringstream out;
  out << "vertices: " << join_words(g.names()) << '\n';
  out << "colours:";
  for (auto c : g.colours()) out << ' ' << c.id;
  out << '\n';
  for (auto u : g.vertices())
    for (auto v : g.vertices())
      for (auto c : g.colours())
        if (const Count m = g.multiplicity(u, v, c))
          out << "edge: " << g.name(u) << ' ' << g.name(v) << ' ' << m
              << " colour=" << c.id << '\n';
  out << "chips:";
  for (auto v : g.vertices()) {
    std::string items;
    for (std::size_t k = 0; k < g.colour_count(); ++k)
      if (const Count n = cfg.initial().get(v, k)) {
        if (!items.empty()) items += ',';
        items += std::to_string(n) + '@' + std::to_string(g.colours()[k].id);
      }
    if (!items.empty()) out << ' ' << g.name(v) << '=' << items;
  }
  out << '\n';
  return out.str();
}

std::string write_lattice(const Lattice& l) {
  std::ostringstream out;
  out << "elements: " << join_words(l.names()) << '\n';
  for (const auto& [lo, hi] : l.cover_pairs())
    out << "cover: " << l.name(lo) << ' ' << l.name(hi) << '\n';
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::invalid_argument, "cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::invalid_argument, "cannot write '" + path + "'");
  out << contents;
  if (!out) fail(ErrorKind::invalid_argument, "cannot write '" + path + "'");
}

}  // namespace cfglat
