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

#ifndef CFGLAT_LATTICE_HPP_
#define CFGLAT_LATTICE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace cfglat {

/// Subset of the elements of a poset or lattice, indexed by element.
using ElementSet = boost::dynamic_bitset<>;

/// Pair (lower, upper) with upper covering lower.
using CoverPair = std::pair<std::size_t, std::size_t>;

inline constexpr std::size_t kDefaultLatticeCap = 2048;

/// Finite partial order. Stores, for each element, its up-set and its
/// down-set (both reflexive).
class Poset {
 public:
  Poset() = default;

  /// `relation` lists pairs (x, y) meaning x <= y; the reflexive-transitive
  /// closure is taken. Cycles are rejected.
  Poset(std::vector<std::string> names,
        std::span<const CoverPair> relation);

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t x) const { return names_.at(x); }

  bool leq(std::size_t x, std::size_t y) const { return up_.at(x).test(y); }
  bool less(std::size_t x, std::size_t y) const {
    return x != y && leq(x, y);
  }
  const ElementSet& up_set(std::size_t x) const { return up_.at(x); }
  const ElementSet& down_set(std::size_t x) const { return down_.at(x); }

  /// Cover relation of the order, sorted.
  std::vector<CoverPair> covers() const;
  /// Number of pairs x < y.
  std::size_t strict_relation_count() const;

 private:
  std::vector<std::string> names_;
  std::vector<ElementSet> up_;
  std::vector<ElementSet> down_;
};

/// Finite lattice with precomputed order, cover, join and meet tables.
/// Elements keep the indices and names given at construction.
class Lattice {
 public:
  Lattice() = default;

  /// Builds from a cover relation. Throws ErrorKind::validation when the
  /// relation is cyclic, contains a non-cover (implied) pair, or the order
  /// is not a lattice; the message names a witness.
  static Lattice from_covers(std::vector<std::string> names,
                             std::span<const CoverPair> covers,
                             std::size_t element_cap = kDefaultLatticeCap);

  /// Builds from full up-sets (up_sets[x] = {y : x <= y}).
  static Lattice from_order(std::vector<std::string> names,
                            std::vector<ElementSet> up_sets,
                            std::size_t element_cap = kDefaultLatticeCap);

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t x) const { return names_.at(x); }
  std::optional<std::size_t> find(std::string_view name) const;

  bool leq(std::size_t x, std::size_t y) const { return up_.at(x).test(y); }
  bool less(std::size_t x, std::size_t y) const {
    return x != y && leq(x, y);
  }
  bool covers(std::size_t lower, std::size_t upper) const;
  const ElementSet& up_set(std::size_t x) const { return up_.at(x); }
  const ElementSet& down_set(std::size_t x) const { return down_.at(x); }

  std::size_t join(std::size_t x, std::size_t y) const {
    return join_[x * size() + y];
  }
  std::size_t meet(std::size_t x, std::size_t y) const {
    return meet_[x * size() + y];
  }
  std::size_t join_all(std::span<const std::size_t> xs) const;
  std::size_t meet_all(std::span<const std::size_t> xs) const;

  std::size_t bottom() const noexcept { return bottom_; }
  std::size_t top() const noexcept { return top_; }

  const std::vector<std::size_t>& upper_covers(std::size_t x) const {
    return upper_.at(x);
  }
  const std::vector<std::size_t>& lower_covers(std::size_t x) const {
    return lower_.at(x);
  }
  std::vector<CoverPair> cover_pairs() const;

  /// Elements in a fixed linear extension of the order.
  const std::vector<std::size_t>& linear_extension() const noexcept {
    return linear_;
  }

  bool is_join_irreducible(std::size_t x) const {
    return lower_.at(x).size() == 1;
  }
  bool is_meet_irreducible(std::size_t x) const {
    return upper_.at(x).size() == 1;
  }
  /// J, ascending by element index.
  const std::vector<std::size_t>& join_irreducibles() const noexcept {
    return join_irr_;
  }
  /// M, ascending by element index.
  const std::vector<std::size_t>& meet_irreducibles() const noexcept {
    return meet_irr_;
  }
  /// j- for a join-irreducible j.
  std::size_t lower_cover_of(std::size_t j) const;
  /// m+ for a meet-irreducible m.
  std::size_t upper_cover_of(std::size_t m) const;

  /// Membership masks of J and M.
  const ElementSet& join_irreducible_mask() const noexcept { return j_mask_; }
  const ElementSet& meet_irreducible_mask() const noexcept { return m_mask_; }

  /// The order restricted to `elements` (in that order) as a poset.
  Poset induced_poset(std::span<const std::size_t> elements) const;

 private:
  void finish(std::size_t element_cap);

  std::vector<std::string> names_;
  std::vector<ElementSet> up_;
  std::vector<ElementSet> down_;
  std::vector<std::vector<std::size_t>> upper_;
  std::vector<std::vector<std::size_t>> lower_;
  std::vector<std::size_t> linear_;
  std::vector<std::uint32_t> join_;
  std::vector<std::uint32_t> meet_;
  std::vector<std::size_t> join_irr_;
  std::vector<std::size_t> meet_irr_;
  ElementSet j_mask_;
  ElementSet m_mask_;
  std::size_t bottom_ = 0;
  std::size_t top_ = 0;
};

/// "{x,y,z}" rendering of a set of names.
std::string set_name(const std::vector<std::string>& members);

}  // namespace cfglat

#endif  // CFGLAT_LATTICE_HPP_
