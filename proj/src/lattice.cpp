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

#include "cfglat/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "cfglat/error.hpp"

namespace cfglat {

namespace {

void check_element_names(const std::vector<std::string>& names) {
  std::set<std::string_view> seen;
  for (const auto& n : names) {
    if (n.empty() || n.find_first_of(" \t\r\n") != std::string::npos)
      fail(ErrorKind::invalid_argument, "invalid element name '" + n + "'");
    if (!seen.insert(n).second)
      fail(ErrorKind::invalid_argument, "duplicate element name '" + n + "'");
  }
}

// Reflexive-transitive closure of `relation` as up-sets; throws on cycles.
std::vector<ElementSet> closure(std::size_t n,
                                std::span<const CoverPair> relation) {
  std::vector<std::vector<std::size_t>> succ(n);
  std::vector<std::size_t> indeg(n, 0);
  for (auto [x, y] : relation) {
    if (x >= n || y >= n)
      fail(ErrorKind::invalid_argument, "relation refers to unknown element");
    if (x == y) continue;
    succ[x].push_back(y);
    ++indeg[y];
  }
  std::vector<std::size_t> order;
  order.reserve(n);
  for (std::size_t x = 0; x < n; ++x)
    if (indeg[x] == 0) order.push_back(x);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (auto y : succ[order[i]])
      if (--indeg[y] == 0) order.push_back(y);
  if (order.size() != n)
    fail(ErrorKind::validation, "order relation contains a cycle");

  std::vector<ElementSet> up(n, ElementSet(n));
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    up[*it].set(*it);
    for (auto y : succ[*it]) up[*it] |= up[y];
  }
  return up;
}

std::vector<ElementSet> transpose(const std::vector<ElementSet>& rel) {
  const std::size_t n = rel.size();
  std::vector<ElementSet> out(n, ElementSet(n));
  for (std::size_t x = 0; x < n; ++x)
    for (auto y = rel[x].find_first(); y != ElementSet::npos;
         y = rel[x].find_next(y))
      out[y].set(x);
  return out;
}

// Linear extension: elements sorted by down-set size, ties by index.
std::vector<std::size_t> linear_extension_of(
    const std::vector<ElementSet>& down) {
  std::vector<std::size_t> order(down.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<std::size_t> rank(down.size());
  for (std::size_t x = 0; x < down.size(); ++x) rank[x] = down[x].count();
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return rank[a] < rank[b]; });
  return order;
}

// Minimal elements of `set`, visiting candidates along `linear`.
std::vector<std::size_t> minimal_elements(const ElementSet& set,
                                          const std::vector<ElementSet>& up,
                                          const std::vector<std::size_t>& linear) {
  std::vector<std::size_t> out;
  ElementSet dominated(set.size());
  for (auto x : linear) {
    if (!set.test(x) || dominated.test(x)) continue;
    out.push_back(x);
    dominated |= up[x];
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<std::size_t>> upper_covers_of(
    const std::vector<ElementSet>& up, const std::vector<std::size_t>& linear) {
  std::vector<std::vector<std::size_t>> out(up.size());
  for (std::size_t x = 0; x < up.size(); ++x) {
    ElementSet strict = up[x];
    strict.reset(x);
    out[x] = minimal_elements(strict, up, linear);
  }
  return out;
}

}  // namespace

std::string set_name(const std::vector<std::string>& members) {
  std::string out = "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) out += ',';
    out += members[i];
  }
  out += '}';
  return out;
}

Poset::Poset(std::vector<std::string> names, std::span<const CoverPair> relation)
    : names_(std::move(names)) {
  check_element_names(names_);
  up_ = closure(names_.size(), relation);
  down_ = transpose(up_);
}

std::vector<CoverPair> Poset::covers() const {
  auto linear = linear_extension_of(down_);
  auto upper = upper_covers_of(up_, linear);
  std::vector<CoverPair> out;
  for (std::size_t x = 0; x < size(); ++x)
    for (auto y : upper[x]) out.emplace_back(x, y);
  return out;
}

std::size_t Poset::strict_relation_count() const {
  std::size_t total = 0;
  for (const auto& u : up_) total += u.count() - 1;
  return total;
}

Lattice Lattice::from_covers(std::vector<std::string> names,
                             std::span<const CoverPair> covers,
                             std::size_t element_cap) {
  if (names.size() > element_cap)
    fail(ErrorKind::cap_exceeded,
         "lattice has " + std::to_string(names.size()) +
             " elements, above the element cap of " +
             std::to_string(element_cap));
  check_element_names(names);
  for (auto [x, y] : covers)
    if (x == y)
      fail(ErrorKind::validation, "cover relation relates '" + names[x] +
                                      "' to itself");
  Lattice l;
  l.names_ = std::move(names);
  l.up_ = closure(l.names_.size(), covers);
  l.finish(element_cap);
  for (auto [x, y] : covers)
    if (!l.covers(x, y))
      fail(ErrorKind::validation, "not a cover relation: '" + l.names_[x] +
                                      "' < '" + l.names_[y] +
                                      "' is implied by a longer path");
  return l;
}

Lattice Lattice::from_order(std::vector<std::string> names,
                            std::vector<ElementSet> up_sets,
                            std::size_t element_cap) {
  if (names.size() > element_cap)
    fail(ErrorKind::cap_exceeded,
         "lattice has " + std::to_string(names.size()) +
             " elements, above the element cap of " +
             std::to_string(element_cap));
  check_element_names(names);
  const std::size_t n = names.size();
  if (up_sets.size() != n)
    fail(ErrorKind::invalid_argument, "order size does not match names");
  for (std::size_t x = 0; x < n; ++x) {
    if (up_sets[x].size() != n)
      fail(ErrorKind::invalid_argument, "order size does not match names");
    if (!up_sets[x].test(x))
      fail(ErrorKind::validation, "order is not reflexive");
  }
  for (std::size_t x = 0; x < n; ++x)
    for (auto y = up_sets[x].find_first(); y != ElementSet::npos;
         y = up_sets[x].find_next(y)) {
      if (y != x && up_sets[y].test(x))
        fail(ErrorKind::validation, "order is not antisymmetric: '" +
                                        names[x] + "' and '" + names[y] + "'");
      if (!up_sets[y].is_subset_of(up_sets[x]))
        fail(ErrorKind::validation, "order is not transitive at '" +
                                        names[x] + "' <= '" + names[y] + "'");
    }
  Lattice l;
  l.names_ = std::move(names);
  l.up_ = std::move(up_sets);
  l.finish(element_cap);
  return l;
}

void Lattice::finish(std::size_t element_cap) {
  const std::size_t n = names_.size();
  if (n == 0) fail(ErrorKind::validation, "a lattice needs at least one element");
  if (n > element_cap)
    fail(ErrorKind::cap_exceeded, "lattice above the element cap of " +
                                      std::to_string(element_cap));
  down_ = transpose(up_);
  linear_ = linear_extension_of(down_);
  upper_ = upper_covers_of(up_, linear_);
  lower_.assign(n, {});
  for (std::size_t x = 0; x < n; ++x)
    for (auto y : upper_[x]) lower_[y].push_back(x);

  // Re-index up/down sets by linear-extension position so that the first set
  // bit of an up-set intersection is a minimal element (last bit: maximal).
  std::vector<std::size_t> pos(n);
  for (std::size_t p = 0; p < n; ++p) pos[linear_[p]] = p;
  std::vector<ElementSet> up_pos(n, ElementSet(n)), down_rev(n, ElementSet(n));
  for (std::size_t x = 0; x < n; ++x) {
    for (auto y = up_[x].find_first(); y != ElementSet::npos;
         y = up_[x].find_next(y))
      up_pos[x].set(pos[y]);
    for (auto y = down_[x].find_first(); y != ElementSet::npos;
         y = down_[x].find_next(y))
      down_rev[x].set(n - 1 - pos[y]);
  }

  join_.assign(n * n, 0);
  meet_.assign(n * n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    join_[x * n + x] = meet_[x * n + x] = static_cast<std::uint32_t>(x);
    for (std::size_t y = x + 1; y < n; ++y) {
      const ElementSet ub = up_pos[x] & up_pos[y];
      auto first = ub.find_first();
      if (first == ElementSet::npos)
        fail(ErrorKind::validation, "not a lattice: '" + names_[x] + "' and '" +
                                        names_[y] + "' have no upper bound");
      const std::size_t z = linear_[first];
      if (!ub.is_subset_of(up_pos[z])) {
        std::string other;
        for (auto q = ub.find_next(first); q != ElementSet::npos;
             q = ub.find_next(q)) {
          const std::size_t w = linear_[q];
          if (!up_pos[z].test(q) && (down_[w] & up_[x] & up_[y]).count() == 1) {
            other = names_[w];
            break;
          }
        }
        fail(ErrorKind::validation, "not a lattice: '" + names_[x] + "' and '" +
                                        names_[y] +
                                        "' have two minimal upper bounds '" +
                                        names_[z] + "' and '" + other + "'");
      }
      join_[x * n + y] = join_[y * n + x] = static_cast<std::uint32_t>(z);

      const ElementSet lb = down_rev[x] & down_rev[y];
      auto firstl = lb.find_first();
      if (firstl == ElementSet::npos)
        fail(ErrorKind::validation, "not a lattice: '" + names_[x] + "' and '" +
                                        names_[y] + "' have no lower bound");
      const std::size_t w = linear_[n - 1 - firstl];
      if (!lb.is_subset_of(down_rev[w])) {
        std::string other;
        for (auto q = lb.find_next(firstl); q != ElementSet::npos;
             q = lb.find_next(q)) {
          const std::size_t v = linear_[n - 1 - q];
          if (!down_rev[w].test(q) && (up_[v] & down_[x] & down_[y]).count() == 1) {
            other = names_[v];
            break;
          }
        }
        fail(ErrorKind::validation, "not a lattice: '" + names_[x] + "' and '" +
                                        names_[y] +
                                        "' have two maximal lower bounds '" +
                                        names_[w] + "' and '" + other + "'");
      }
      meet_[x * n + y] = meet_[y * n + x] = static_cast<std::uint32_t>(w);
    }
  }
  bottom_ = linear_.front();
  top_ = linear_.back();

  j_mask_ = ElementSet(n);
  m_mask_ = ElementSet(n);
  join_irr_.clear();
  meet_irr_.clear();
  for (std::size_t x = 0; x < n; ++x) {
    if (lower_[x].size() == 1) {
      join_irr_.push_back(x);
      j_mask_.set(x);
    }
    if (upper_[x].size() == 1) {
      meet_irr_.push_back(x);
      m_mask_.set(x);
    }
  }
}

std::optional<std::size_t> Lattice::find(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

bool Lattice::covers(std::size_t lower, std::size_t upper) const {
  const auto& ups = upper_.at(lower);
  return std::binary_search(ups.begin(), ups.end(), upper);
}

std::size_t Lattice::join_all(std::span<const std::size_t> xs) const {
  std::size_t acc = bottom_;
  for (auto x : xs) acc = join(acc, x);
  return acc;
}

std::size_t Lattice::meet_all(std::span<const std::size_t> xs) const {
  std::size_t acc = top_;
  for (auto x : xs) acc = meet(acc, x);
  return acc;
}

std::vector<CoverPair> Lattice::cover_pairs() const {
  std::vector<CoverPair> out;
  for (std::size_t x = 0; x < size(); ++x)
    for (auto y : upper_[x]) out.emplace_back(x, y);
  return out;
}

std::size_t Lattice::lower_cover_of(std::size_t j) const {
  if (!is_join_irreducible(j))
    fail(ErrorKind::invalid_argument, "'" + name(j) + "' is not join-irreducible");
  return lower_[j].front();
}

std::size_t Lattice::upper_cover_of(std::size_t m) const {
  if (!is_meet_irreducible(m))
    fail(ErrorKind::invalid_argument, "'" + name(m) + "' is not meet-irreducible");
  return upper_[m].front();
}

Poset Lattice::induced_poset(std::span<const std::size_t> elements) const {
  std::vector<std::string> names;
  std::vector<CoverPair> rel;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    names.push_back(name(elements[i]));
    for (std::size_t k = 0; k < elements.size(); ++k)
      if (i != k && leq(elements[i], elements[k])) rel.emplace_back(i, k);
  }
  return Poset(std::move(names), rel);
}

}  // namespace cfglat
