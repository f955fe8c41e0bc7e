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

#ifndef CFGLAT_ANALYTICS_HPP_
#define CFGLAT_ANALYTICS_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "cfglat/lattice.hpp"

namespace cfglat {

inline constexpr std::size_t kDefaultIdealCap = 1'000'000;
inline constexpr std::size_t kDefaultIsomorphismCap = 5000;

// Codings --------------------------------------------------------------------

/// J_x = {j in J : j <= x}, as a mask over the lattice's elements.
ElementSet jx(const Lattice& l, std::size_t x);
/// M_x = {m in M : x <= m}, as a mask over the lattice's elements.
ElementSet mx(const Lattice& l, std::size_t x);

/// x <= y decided through J_x ⊆ J_y. Throws ErrorKind::internal if the
/// M-coding (M_y ⊆ M_x) or the order itself disagrees.
bool order_by_coding(const Lattice& l, std::size_t x, std::size_t y);

// Shape ----------------------------------------------------------------------

struct RankInfo {
  bool ranked = false;
  /// Common length of the maximal chains when ranked, else the longest.
  std::size_t height = 0;
};

RankInfo rank_info(const Lattice& l);
inline bool is_ranked(const Lattice& l) { return rank_info(l).ranked; }
inline std::size_t height(const Lattice& l) { return rank_info(l).height; }

/// A triple (x, y, z) with x ∧ (y ∨ z) != (x ∧ y) ∨ (x ∧ z), if any.
std::optional<std::array<std::size_t, 3>> distributivity_witness(const Lattice& l);
inline bool is_distributive(const Lattice& l) {
  return !distributivity_witness(l).has_value();
}

struct UldVerdict {
  /// Every [x, join of x's upper covers] is a cube of dimension #covers.
  bool hypercube_detector = false;
  /// Every cover x < y drops exactly one meet-irreducible (|M_x \ M_y| = 1),
  /// and comparable pairs dropping one are covers.
  bool meet_irreducible_detector = false;
  std::optional<std::size_t> hypercube_witness;
  std::optional<CoverPair> meet_irreducible_witness;
};

/// Runs both ULD detectors without cross-checking them.
UldVerdict uld_verdict(const Lattice& l);

/// True iff L is upper locally distributive. Throws ErrorKind::internal,
/// naming the witness, when the two detectors disagree.
bool is_uld(const Lattice& l);

struct CoverLabel {
  std::size_t lower = 0;
  std::size_t upper = 0;
  std::size_t meet_irreducible = 0;
};

/// Labels each cover (x, y) with the unique m in M_x \ M_y. Requires ULD.
std::vector<CoverLabel> edge_labels(const Lattice& l);

// Arrow relations ------------------------------------------------------------

/// Arrow relations between J (rows) and M (columns). Bit k of row i refers
/// to meet_irreducibles[k].
struct ArrowRelations {
  std::vector<std::size_t> join_irreducibles;
  std::vector<std::size_t> meet_irreducibles;
  std::vector<ElementSet> down;
  std::vector<ElementSet> up;
  std::vector<ElementSet> updown;
};

ArrowRelations arrows(const Lattice& l);

/// Partition of J into the classes m↕ = {j : j ↕ m}, one per m in M.
struct TildePartition {
  std::vector<std::size_t> join_irreducibles;
  std::vector<std::size_t> meet_irreducibles;
  /// partner[i] = position in meet_irreducibles of the unique m with
  /// join_irreducibles[i] ↕ m.
  std::vector<std::size_t> partner;
  /// classes[k] = elements j (lattice indices) with j ↕ meet_irreducibles[k].
  std::vector<std::vector<std::size_t>> classes;
};

/// Requires ULD; throws ErrorKind::validation otherwise.
TildePartition tilde_partition(const Lattice& l);

struct ArrowLemmaReport {
  /// x ≰ m  ⇒  ∃ j ≤ x with j ↓ m.
  bool down_clause = true;
  std::optional<CoverPair> down_clause_witness;  // (x, m)
  bool uld_clause_checked = false;
  /// For ULD lattices: x ≰ m  ⇒  ∃ j ≤ x with j ↕ m.
  bool uld_clause = true;
  std::optional<CoverPair> uld_clause_witness;  // (x, m)
  /// Ambiguously stated clause, read as: j ≰ x ⇒ ∃ m ≥ x with j ↑ m.
  /// Reported, not part of passed().
  bool up_clause = true;
  std::optional<CoverPair> up_clause_witness;  // (j, x)

  bool passed() const {
    return down_clause && (!uld_clause_checked || uld_clause);
  }
};

ArrowLemmaReport check_arrow_lemma(const Lattice& l);

// Ideals and Birkhoff --------------------------------------------------------

/// Down-closed subsets of a poset, in canonical order (size, then sorted
/// member list). Member 0 is the empty ideal.
struct IdealFamily {
  std::vector<ElementSet> ideals;
  /// Pairs (i, k): ideal k is ideal i plus one element.
  std::vector<CoverPair> covers;
};

IdealFamily ideals(const Poset& p, std::size_t cap = kDefaultIdealCap);

/// Lattice of ideals of p ordered by inclusion.
Lattice birkhoff(const Poset& p, std::size_t cap = kDefaultIdealCap);

Poset meet_irreducible_poset(const Lattice& l);
Poset join_irreducible_poset(const Lattice& l);

/// Sublattice {x : a <= x <= b}; names are kept.
Lattice interval(const Lattice& l, std::size_t a, std::size_t b);

struct IdealQuotient {
  Lattice lattice;
  /// Representative (maximal) ideal of each class, over positions of
  /// l.join_irreducibles(); index k matches element k of `lattice`.
  std::vector<ElementSet> representatives;
  std::size_t ideal_count = 0;
};

/// Ideals of the join-irreducible poset grouped by ~ and represented by
/// their maximal member. Requires ULD.
IdealQuotient compute_ideal_quotient(const Lattice& l,
                                     std::size_t cap = kDefaultIdealCap);
inline Lattice ideal_quotient(const Lattice& l,
                              std::size_t cap = kDefaultIdealCap) {
  return compute_ideal_quotient(l, cap).lattice;
}

// Isomorphism ----------------------------------------------------------------

/// An order isomorphism a -> b (witness[x] is the image of x), if one exists.
/// Throws ErrorKind::cap_exceeded above `cap` elements.
std::optional<std::vector<std::size_t>> find_isomorphism(
    const Lattice& a, const Lattice& b, std::size_t cap = kDefaultIsomorphismCap);
inline bool is_isomorphic(const Lattice& a, const Lattice& b,
                          std::size_t cap = kDefaultIsomorphismCap) {
  return find_isomorphism(a, b, cap).has_value();
}

// Standard lattices ----------------------------------------------------------

/// Subsets of {0..dim-1} ordered by inclusion.
Lattice boolean_lattice(std::size_t dim);
/// Chain 0 < 1 < ... < n-1.
Lattice chain_lattice(std::size_t n);

}  // namespace cfglat

#endif  // CFGLAT_ANALYTICS_HPP_
