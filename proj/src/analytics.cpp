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

#include "cfglat/analytics.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

#include "cfglat/error.hpp"

namespace cfglat {

namespace {

std::vector<std::size_t> members(const ElementSet& s) {
  std::vector<std::size_t> out;
  for (auto i = s.find_first(); i != ElementSet::npos; i = s.find_next(i))
    out.push_back(i);
  return out;
}

// Canonical order on subsets: size, then sorted member list.
bool subset_less(const ElementSet& a, const ElementSet& b) {
  const auto ca = a.count(), cb = b.count();
  if (ca != cb) return ca < cb;
  return members(a) < members(b);
}

}  // namespace

ElementSet jx(const Lattice& l, std::size_t x) {
  return l.down_set(x) & l.join_irreducible_mask();
}

ElementSet mx(const Lattice& l, std::size_t x) {
  return l.up_set(x) & l.meet_irreducible_mask();
}

bool order_by_coding(const Lattice& l, std::size_t x, std::size_t y) {
  const bool by_j = jx(l, x).is_subset_of(jx(l, y));
  const bool by_m = mx(l, y).is_subset_of(mx(l, x));
  if (by_j != by_m || by_j != l.leq(x, y))
    fail(ErrorKind::internal, "irreducible codings disagree on '" + l.name(x) +
                                  "' <= '" + l.name(y) + "'");
  return by_j;
}

RankInfo rank_info(const Lattice& l) {
  const std::size_t n = l.size();
  std::vector<std::size_t> longest(n, 0), shortest(n, 0);
  for (auto x : l.linear_extension()) {
    const auto& lows = l.lower_covers(x);
    if (lows.empty()) continue;
    std::size_t lo = SIZE_MAX, hi = 0;
    for (auto c : lows) {
      lo = std::min(lo, shortest[c] + 1);
      hi = std::max(hi, longest[c] + 1);
    }
    shortest[x] = lo;
    longest[x] = hi;
  }
  return {shortest[l.top()] == longest[l.top()], longest[l.top()]};
}

std::optional<std::array<std::size_t, 3>> distributivity_witness(
    const Lattice& l) {
  const std::size_t n = l.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t xy = l.meet(x, y);
      for (std::size_t z = y + 1; z < n; ++z)
        if (l.meet(x, l.join(y, z)) != l.join(xy, l.meet(x, z)))
          return std::array<std::size_t, 3>{x, y, z};
    }
  return std::nullopt;
}

UldVerdict uld_verdict(const Lattice& l) {
  UldVerdict v;
  const std::size_t n = l.size();

  v.hypercube_detector = true;
  std::map<std::size_t, Lattice> cubes;
  for (std::size_t x = 0; x < n && v.hypercube_detector; ++x) {
    const auto& ups = l.upper_covers(x);
    const std::size_t k = ups.size();
    if (k == 0) continue;
    const std::size_t t = l.join_all(ups);
    const std::size_t span = (l.up_set(x) & l.down_set(t)).count();
    if (k >= 8 * sizeof(std::size_t) - 1 || span != (std::size_t{1} << k)) {
      v.hypercube_detector = false;
      v.hypercube_witness = x;
      break;
    }
    auto it = cubes.find(k);
    if (it == cubes.end()) it = cubes.emplace(k, boolean_lattice(k)).first;
    if (!is_isomorphic(interval(l, x, t), it->second)) {
      v.hypercube_detector = false;
      v.hypercube_witness = x;
    }
  }

  v.meet_irreducible_detector = true;
  const auto& mmask = l.meet_irreducible_mask();
  for (std::size_t x = 0; x < n && v.meet_irreducible_detector; ++x) {
    const ElementSet mx_ = l.up_set(x) & mmask;
    const auto& up = l.up_set(x);
    for (auto y = up.find_first(); y != ElementSet::npos; y = up.find_next(y)) {
      if (y == x) continue;
      const ElementSet dropped = mx_ - (l.up_set(y) & mmask);
      const bool cover = l.covers(x, y);
      if (cover != (dropped.count() == 1)) {
        v.meet_irreducible_detector = false;
        v.meet_irreducible_witness = CoverPair{x, y};
        break;
      }
    }
  }
  return v;
}

bool is_uld(const Lattice& l) {
  const auto v = uld_verdict(l);
  if (v.hypercube_detector != v.meet_irreducible_detector) {
    std::string where;
    if (v.hypercube_witness) where = "'" + l.name(*v.hypercube_witness) + "'";
    if (v.meet_irreducible_witness)
      where = "'" + l.name(v.meet_irreducible_witness->first) + "' < '" +
              l.name(v.meet_irreducible_witness->second) + "'";
    fail(ErrorKind::internal, "ULD detectors disagree at " + where);
  }
  return v.hypercube_detector;
}

std::vector<CoverLabel> edge_labels(const Lattice& l) {
  if (!is_uld(l))
    fail(ErrorKind::validation, "edge labels need an ULD lattice");
  std::vector<CoverLabel> out;
  const auto& mmask = l.meet_irreducible_mask();
  for (auto [x, y] : l.cover_pairs()) {
    const ElementSet dropped = (l.up_set(x) & mmask) - (l.up_set(y) & mmask);
    out.push_back({x, y, dropped.find_first()});
  }
  return out;
}

ArrowRelations arrows(const Lattice& l) {
  ArrowRelations r;
  r.join_irreducibles = l.join_irreducibles();
  r.meet_irreducibles = l.meet_irreducibles();
  const std::size_t nm = r.meet_irreducibles.size();
  for (auto j : r.join_irreducibles) {
    const std::size_t j_minus = l.lower_cover_of(j);
    ElementSet down(nm), up(nm);
    for (std::size_t k = 0; k < nm; ++k) {
      const std::size_t m = r.meet_irreducibles[k];
      if (l.leq(j, m)) continue;
      if (l.leq(j_minus, m)) down.set(k);
      if (l.leq(j, l.upper_cover_of(m))) up.set(k);
    }
    r.updown.push_back(down & up);
    r.down.push_back(std::move(down));
    r.up.push_back(std::move(up));
  }
  return r;
}

TildePartition tilde_partition(const Lattice& l) {
  if (!is_uld(l))
    fail(ErrorKind::validation, "the ~ relation needs an ULD lattice");
  const auto arr = arrows(l);
  TildePartition t;
  t.join_irreducibles = arr.join_irreducibles;
  t.meet_irreducibles = arr.meet_irreducibles;
  t.classes.assign(t.meet_irreducibles.size(), {});
  for (std::size_t i = 0; i < t.join_irreducibles.size(); ++i) {
    if (arr.updown[i].count() != 1)
      fail(ErrorKind::internal,
           "join-irreducible '" + l.name(t.join_irreducibles[i]) + "' has " +
               std::to_string(arr.updown[i].count()) + " double-arrow partners");
    const std::size_t k = arr.updown[i].find_first();
    t.partner.push_back(k);
    t.classes[k].push_back(t.join_irreducibles[i]);
  }
  for (std::size_t k = 0; k < t.classes.size(); ++k)
    if (t.classes[k].empty())
      fail(ErrorKind::internal, "meet-irreducible '" +
                                    l.name(t.meet_irreducibles[k]) +
                                    "' has an empty ~ class");
  return t;
}

ArrowLemmaReport check_arrow_lemma(const Lattice& l) {
  ArrowLemmaReport rep;
  const auto arr = arrows(l);
  const auto& js = arr.join_irreducibles;
  const auto& ms = arr.meet_irreducibles;
  rep.uld_clause_checked = is_uld(l);

  for (std::size_t k = 0; k < ms.size(); ++k)
    for (std::size_t x = 0; x < l.size(); ++x) {
      if (l.leq(x, ms[k])) continue;
      bool down_found = false, updown_found = false;
      for (std::size_t i = 0; i < js.size(); ++i) {
        if (!l.leq(js[i], x)) continue;
        down_found = down_found || arr.down[i].test(k);
        updown_found = updown_found || arr.updown[i].test(k);
      }
      if (!down_found && rep.down_clause) {
        rep.down_clause = false;
        rep.down_clause_witness = CoverPair{x, ms[k]};
      }
      if (rep.uld_clause_checked && !updown_found && rep.uld_clause) {
        rep.uld_clause = false;
        rep.uld_clause_witness = CoverPair{x, ms[k]};
      }
    }

  for (std::size_t i = 0; i < js.size(); ++i)
    for (std::size_t x = 0; x < l.size(); ++x) {
      if (l.leq(js[i], x)) continue;
      bool found = false;
      for (std::size_t k = 0; k < ms.size() && !found; ++k)
        found = l.leq(x, ms[k]) && arr.up[i].test(k);
      if (!found && rep.up_clause) {
        rep.up_clause = false;
        rep.up_clause_witness = CoverPair{js[i], x};
      }
    }
  return rep;
}

IdealFamily ideals(const Poset& p, std::size_t cap) {
  const std::size_t n = p.size();
  std::vector<ElementSet> found;
  std::unordered_map<ElementSet, std::size_t> index;
  std::vector<CoverPair> covers;
  found.emplace_back(n);
  index.emplace(found.front(), 0);
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t x = 0; x < n; ++x) {
      if (found[i].test(x)) continue;
      ElementSet below = p.down_set(x);
      below.reset(x);
      if (!below.is_subset_of(found[i])) continue;
      ElementSet next = found[i];
      next.set(x);
      auto it = index.find(next);
      std::size_t k;
      if (it == index.end()) {
        if (found.size() >= cap)
          fail(ErrorKind::cap_exceeded, "ideal family exceeds the cap of " +
                                            std::to_string(cap));
        k = found.size();
        index.emplace(next, k);
        found.push_back(std::move(next));
      } else {
        k = it->second;
      }
      covers.emplace_back(i, k);
    }
  }

  std::vector<std::size_t> order(found.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return subset_less(found[a], found[b]);
  });
  std::vector<std::size_t> renum(found.size());
  for (std::size_t i = 0; i < order.size(); ++i) renum[order[i]] = i;

  IdealFamily fam;
  for (auto i : order) fam.ideals.push_back(std::move(found[i]));
  for (auto [a, b] : covers) fam.covers.emplace_back(renum[a], renum[b]);
  std::sort(fam.covers.begin(), fam.covers.end());
  return fam;
}

Lattice birkhoff(const Poset& p, std::size_t cap) {
  auto fam = ideals(p, cap);
  std::vector<std::string> names;
  for (const auto& ideal : fam.ideals) {
    std::vector<std::string> parts;
    for (auto x : members(ideal)) parts.push_back(p.name(x));
    names.push_back(set_name(parts));
  }
  return Lattice::from_covers(std::move(names), fam.covers,
                              std::max(cap, kDefaultLatticeCap));
}

Poset meet_irreducible_poset(const Lattice& l) {
  return l.induced_poset(l.meet_irreducibles());
}

Poset join_irreducible_poset(const Lattice& l) {
  return l.induced_poset(l.join_irreducibles());
}

Lattice interval(const Lattice& l, std::size_t a, std::size_t b) {
  if (a >= l.size() || b >= l.size())
    fail(ErrorKind::invalid_argument, "element index out of range");
  if (!l.leq(a, b))
    fail(ErrorKind::invalid_argument,
         "interval needs '" + l.name(a) + "' <= '" + l.name(b) + "'");
  const auto elems = members(l.up_set(a) & l.down_set(b));
  std::vector<std::size_t> pos(l.size(), 0);
  for (std::size_t i = 0; i < elems.size(); ++i) pos[elems[i]] = i;
  std::vector<std::string> names;
  std::vector<ElementSet> up(elems.size(), ElementSet(elems.size()));
  for (std::size_t i = 0; i < elems.size(); ++i) {
    names.push_back(l.name(elems[i]));
    for (std::size_t k = 0; k < elems.size(); ++k)
      if (l.leq(elems[i], elems[k])) up[i].set(k);
  }
  return Lattice::from_order(std::move(names), std::move(up));
}

IdealQuotient compute_ideal_quotient(const Lattice& l, std::size_t cap) {
  const auto tp = tilde_partition(l);
  const Poset jposet = join_irreducible_poset(l);
  auto fam = ideals(jposet, cap);

  const std::size_t nm = tp.meet_irreducibles.size();
  std::unordered_map<ElementSet, std::size_t> group_of;
  std::vector<ElementSet> unions;
  for (const auto& ideal : fam.ideals) {
    ElementSet signature(nm);
    for (auto i : members(ideal)) signature.set(tp.partner[i]);
    auto [it, inserted] = group_of.emplace(signature, unions.size());
    if (inserted)
      unions.push_back(ideal);
    else
      unions[it->second] |= ideal;
  }
  std::sort(unions.begin(), unions.end(), subset_less);

  IdealQuotient q;
  q.ideal_count = fam.ideals.size();
  std::vector<std::string> names;
  std::vector<ElementSet> up(unions.size(), ElementSet(unions.size()));
  for (std::size_t a = 0; a < unions.size(); ++a) {
    std::vector<std::string> parts;
    for (auto i : members(unions[a])) parts.push_back(jposet.name(i));
    names.push_back(set_name(parts));
    for (std::size_t b = 0; b < unions.size(); ++b)
      if (unions[a].is_subset_of(unions[b])) up[a].set(b);
  }
  q.lattice = Lattice::from_order(std::move(names), std::move(up),
                                  std::max(cap, kDefaultLatticeCap));
  q.representatives = std::move(unions);
  return q;
}

Lattice boolean_lattice(std::size_t dim) {
  if (dim > 11)
    fail(ErrorKind::cap_exceeded, "boolean lattice dimension above 11");
  const std::size_t n = std::size_t{1} << dim;
  std::vector<std::string> names;
  std::vector<CoverPair> covers;
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::string> parts;
    for (std::size_t i = 0; i < dim; ++i)
      if (s >> i & 1) parts.push_back(std::to_string(i));
      else covers.emplace_back(s, s | (std::size_t{1} << i));
    names.push_back(set_name(parts));
  }
  return Lattice::from_covers(std::move(names), covers);
}

Lattice chain_lattice(std::size_t n) {
  if (n == 0) fail(ErrorKind::invalid_argument, "a chain needs an element");
  std::vector<std::string> names;
  std::vector<CoverPair> covers;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(std::to_string(i));
    if (i + 1 < n) covers.emplace_back(i, i + 1);
  }
  return Lattice::from_covers(std::move(names), covers);
}

}  // namespace cfglat
