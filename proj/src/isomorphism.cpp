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

#include <algorithm>
#include <map>

#include "cfglat/analytics.hpp"
#include "cfglat/error.hpp"

namespace cfglat {

namespace {

using Colouring = std::vector<std::size_t>;

// Degree/rank profile of every element; equal profiles are necessary for
// two elements to correspond under an isomorphism.
std::vector<std::vector<std::size_t>> base_profile(const Lattice& l) {
  const std::size_t n = l.size();
  std::vector<std::size_t> from_bottom(n, 0), to_top(n, 0);
  for (auto x : l.linear_extension())
    for (auto c : l.lower_covers(x))
      from_bottom[x] = std::max(from_bottom[x], from_bottom[c] + 1);
  const auto& lin = l.linear_extension();
  for (auto it = lin.rbegin(); it != lin.rend(); ++it)
    for (auto c : l.upper_covers(*it))
      to_top[*it] = std::max(to_top[*it], to_top[c] + 1);
  std::vector<std::vector<std::size_t>> out(n);
  for (std::size_t x = 0; x < n; ++x)
    out[x] = {from_bottom[x],
              to_top[x],
              l.upper_covers(x).size(),
              l.lower_covers(x).size(),
              l.down_set(x).count(),
              l.up_set(x).count(),
              jx(l, x).count(),
              mx(l, x).count()};
  return out;
}

std::size_t distinct(const Colouring& c) {
  std::vector<std::size_t> s(c);
  std::sort(s.begin(), s.end());
  return static_cast<std::size_t>(std::unique(s.begin(), s.end()) - s.begin());
}

// Refines both colourings with one shared dictionary until stable.
void refine(const Lattice& a, const Lattice& b, Colouring& ca, Colouring& cb) {
  auto step = [](const Lattice& l, const Colouring& c,
                 std::map<std::vector<std::size_t>, std::size_t>& dict) {
    Colouring next(l.size());
    for (std::size_t x = 0; x < l.size(); ++x) {
      std::vector<std::size_t> ups, lows;
      for (auto y : l.upper_covers(x)) ups.push_back(c[y]);
      for (auto y : l.lower_covers(x)) lows.push_back(c[y]);
      std::sort(ups.begin(), ups.end());
      std::sort(lows.begin(), lows.end());
      std::vector<std::size_t> key{c[x], ups.size()};
      key.insert(key.end(), ups.begin(), ups.end());
      key.insert(key.end(), lows.begin(), lows.end());
      next[x] = dict.emplace(std::move(key), dict.size()).first->second;
    }
    return next;
  };
  std::size_t classes = distinct(ca) + distinct(cb);
  for (;;) {
    std::map<std::vector<std::size_t>, std::size_t> dict;
    Colouring na = step(a, ca, dict);
    Colouring nb = step(b, cb, dict);
    const std::size_t now = distinct(na) + distinct(nb);
    ca = std::move(na);
    cb = std::move(nb);
    if (now == classes) break;
    classes = now;
  }
}

}  // namespace

std::optional<std::vector<std::size_t>> find_isomorphism(const Lattice& a,
                                                         const Lattice& b,
                                                         std::size_t cap) {
  const std::size_t n = a.size();
  if (n != b.size()) return std::nullopt;
  if (n > cap)
    fail(ErrorKind::cap_exceeded, "isomorphism test above the element cap of " +
                                      std::to_string(cap));
  if (a.cover_pairs().size() != b.cover_pairs().size()) return std::nullopt;

  Colouring ca(n), cb(n);
  {
    std::map<std::vector<std::size_t>, std::size_t> dict;
    const auto pa = base_profile(a), pb = base_profile(b);
    for (std::size_t x = 0; x < n; ++x)
      ca[x] = dict.emplace(pa[x], dict.size()).first->second;
    for (std::size_t x = 0; x < n; ++x)
      cb[x] = dict.emplace(pb[x], dict.size()).first->second;
  }
  refine(a, b, ca, cb);
  {
    Colouring sa(ca), sb(cb);
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }

  // Assign along a linear extension of `a`: every strict lower element of x
  // is already mapped, so x's image must have exactly their images below it.
  const auto& order = a.linear_extension();
  std::vector<std::size_t> image(n, SIZE_MAX);
  std::vector<bool> used(n, false);
  std::vector<std::vector<std::size_t>> candidates(n);
  std::vector<std::size_t> cursor(n, 0);

  auto candidates_for = [&](std::size_t x) {
    std::vector<std::size_t> out;
    const auto& lows = a.lower_covers(x);
    if (lows.empty()) {
      for (std::size_t y = 0; y < n; ++y)
        if (!used[y] && cb[y] == ca[x]) out.push_back(y);
      return out;
    }
    for (auto y : b.upper_covers(image[lows.front()]))
      if (!used[y] && cb[y] == ca[x]) out.push_back(y);
    return out;
  };
  auto consistent = [&](std::size_t x, std::size_t y) {
    ElementSet expected(n);
    const auto& down = a.down_set(x);
    for (auto z = down.find_first(); z != ElementSet::npos; z = down.find_next(z))
      if (z != x) expected.set(image[z]);
    expected.set(y);
    return expected == b.down_set(y);
  };

  std::size_t depth = 0;
  candidates[0] = candidates_for(order[0]);
  cursor[0] = 0;
  while (true) {
    const std::size_t x = order[depth];
    bool advanced = false;
    while (cursor[depth] < candidates[depth].size()) {
      const std::size_t y = candidates[depth][cursor[depth]++];
      if (!consistent(x, y)) continue;
      image[x] = y;
      used[y] = true;
      advanced = true;
      break;
    }
    if (advanced) {
      if (depth + 1 == n) return image;
      ++depth;
      candidates[depth] = candidates_for(order[depth]);
      cursor[depth] = 0;
      continue;
    }
    if (depth == 0) return std::nullopt;
    --depth;
    const std::size_t px = order[depth];
    used[image[px]] = false;
    image[px] = SIZE_MAX;
  }
}

}  // namespace cfglat
