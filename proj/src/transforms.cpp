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

#include "cfglat/transforms.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>
#include <string>

#include "cfglat/analytics.hpp"
#include "cfglat/error.hpp"

namespace cfglat {

namespace {

std::string sanitize(const std::string& name) {
  std::string out;
  for (char c : name)
    out += (c == '=' || c == '"' || c == '#' ||
            std::isspace(static_cast<unsigned char>(c)))
               ? '_'
               : c;
  return out.empty() ? std::string("_") : out;
}

// Sanitized names, made distinct by numeric suffixes.
class NameSet {
 public:
  std::string add(const std::string& wanted) {
    std::string base = sanitize(wanted), name = base;
    for (std::size_t k = 1; used_.count(name); ++k)
      name = base + "_" + std::to_string(k);
    used_.insert(name);
    names_.push_back(name);
    return name;
  }
  std::vector<std::string> take() { return std::move(names_); }

 private:
  std::set<std::string> used_;
  std::vector<std::string> names_;
};

}  // namespace

Cfg split_vertex(const Cfg& cfg, VertexId a, SplitReport* report) {
  const Multigraph& g = cfg.graph();
  if (!g.contains(a)) fail(ErrorKind::invalid_argument, "unknown vertex");
  if (g.out_degree(a) == 0)
    fail(ErrorKind::invalid_argument,
         "cannot split sink '" + g.name(a) + "'");
  const Count n = checked_mul(2, cfg.initial().total());
  const Count d_gt = g.nonloop_out_degree(a);
  if (n < d_gt)
    fail(ErrorKind::invalid_argument,
         "cannot split '" + g.name(a) + "': N = " + std::to_string(n) +
             " is below its out-degree " + std::to_string(d_gt));

  const std::uint32_t ai = a.index;
  const std::size_t old_n = g.vertex_count();
  auto idx = [&](std::uint32_t v) { return VertexId{v <= ai ? v : v + 1}; };
  const VertexId a0{ai}, a1{ai + 1};

  std::vector<std::string> wanted;
  for (std::uint32_t v = 0; v < old_n; ++v) {
    if (v == ai) {
      wanted.push_back(g.name(a) + "_0");
      wanted.push_back(g.name(a) + "_1");
    } else {
      wanted.push_back(g.name(VertexId{v}));
    }
  }
  // Keep original names; only the two halves get suffixes.
  std::set<std::string> taken;
  for (std::uint32_t v = 0; v < old_n; ++v)
    if (v != ai) taken.insert(g.name(VertexId{v}));
  for (std::size_t half = 0; half < 2; ++half) {
    std::string& name = wanted[ai + half];
    const std::string base = name;
    for (std::size_t k = 1; taken.count(name); ++k)
      name = base + "_" + std::to_string(k);
    taken.insert(name);
  }

  Multigraph out(wanted);
  for (std::uint32_t v = 0; v < old_n; ++v)
    for (std::uint32_t w = 0; w < old_n; ++w) {
      const Count m = g.multiplicity(VertexId{v}, VertexId{w});
      if (m == 0) continue;
      if (v != ai && w != ai) {
        out.add_edges(idx(v), idx(w), checked_mul(2, m));
      } else if (v != ai) {
        out.add_edges(idx(v), a0, m);
        out.add_edges(idx(v), a1, m);
      } else if (w != ai) {
        out.add_edges(a0, idx(w), checked_mul(2, m));
        out.add_edges(a1, idx(w), checked_mul(2, m));
      } else {
        out.add_edges(a0, a0, m);
        out.add_edges(a1, a1, m);
      }
    }
  if (n > d_gt) {
    out.add_edges(a0, a1, n - d_gt);
    out.add_edges(a1, a0, n - d_gt);
  }

  std::vector<Count> chips(old_n + 1, 0);
  for (std::uint32_t v = 0; v < old_n; ++v) {
    const Count s = cfg.initial()[VertexId{v}];
    if (v == ai) {
      chips[a0.index] = checked_add(s, n);
      chips[a1.index] = s;
    } else {
      chips[idx(v).index] = checked_mul(2, s);
    }
  }
  if (report) {
    report->vertex = g.name(a);
    report->n = n;
    report->low_name = wanted[a0.index];
    report->high_name = wanted[a1.index];
  }
  return Cfg(std::move(out), Configuration(std::move(chips)));
}

SimplifyResult simplify(const Cfg& cfg, const SimplifyOptions& options,
                        const SplitObserver& observer) {
  SimplifyResult result{cfg, {}};
  RunOptions run;
  run.step_cap = options.step_cap;
  for (std::size_t iteration = 1;; ++iteration) {
    const RunResult r = run_to_fixpoint(result.game, run);
    const auto most = std::max_element(r.firings.begin(), r.firings.end());
    if (most == r.firings.end() || *most <= 1) return result;
    if (iteration > options.iteration_cap)
      fail(ErrorKind::cap_exceeded,
           "simplification still not simple after " +
               std::to_string(options.iteration_cap) + " splits");
    const VertexId v{static_cast<std::uint32_t>(most - r.firings.begin())};
    SplitReport report;
    report.iteration = iteration;
    Cfg next = split_vertex(result.game, v, &report);
    if (observer) observer(result.game, next, report);
    result.splits.push_back(std::move(report));
    result.game = std::move(next);
  }
}

Cfg cfg_from_poset(const Poset& p) {
  const std::size_t n = p.size();
  NameSet names;
  for (std::size_t x = 0; x < n; ++x) names.add(p.name(x));
  names.add("bot");
  Multigraph g(names.take());
  const VertexId bot{static_cast<std::uint32_t>(n)};
  auto id = [](std::size_t x) { return VertexId{static_cast<std::uint32_t>(x)}; };

  std::vector<Count> up(n, 0), down(n, 0);
  for (const auto& [lo, hi] : p.covers()) {
    g.add_edges(id(lo), id(hi));
    ++up[lo];
    ++down[hi];
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (down[x] > up[x]) g.add_edges(id(x), bot, down[x] - up[x]);
    if (up[x] == 0 && down[x] == 0) g.add_edges(id(x), bot);
  }
  std::vector<Count> chips(n + 1, 0);
  for (std::size_t x = 0; x < n; ++x)
    chips[x] = g.out_degree(id(x)) - g.in_degree(id(x));
  return Cfg(std::move(g), Configuration(std::move(chips)));
}

Cfg cfg_from_distributive(const Lattice& l) {
  if (auto w = distributivity_witness(l))
    fail(ErrorKind::validation,
         "lattice is not distributive: x = " + l.name((*w)[0]) +
             ", y = " + l.name((*w)[1]) + ", z = " + l.name((*w)[2]) +
             " violate x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z)");
  return cfg_from_poset(meet_irreducible_poset(l));
}

Cfg interval_cfg(const Cfg& cfg, const ConfigSpace& space, std::size_t a,
                 std::size_t b) {
  if (a >= space.size() || b >= space.size())
    fail(ErrorKind::invalid_argument, "element index out of range");
  if (!space.is_simple())
    fail(ErrorKind::validation,
         "interval games need a simple game; simplify it first");
  const auto& fa = space.firings[a];
  const auto& fb = space.firings[b];
  for (std::size_t v = 0; v < fa.size(); ++v)
    if (fa[v] > fb[v])
      fail(ErrorKind::invalid_argument, space.element_name(a) +
                                            " is not below " +
                                            space.element_name(b));
  Multigraph g = cfg.graph();
  for (auto v : g.vertices())
    if (fb[v.index] == 0)
      for (auto w : g.vertices()) g.set_multiplicity(v, w, 0);
  return Cfg(std::move(g), space.states[a]);
}

ColouredCfg build_tilde_cfg(const Lattice& l) {
  if (!is_uld(l))
    fail(ErrorKind::validation, "lattice is not upper locally distributive");
  const auto& js = l.join_irreducibles();
  NameSet names;
  for (auto j : js) names.add(l.name(j));
  names.add("bot");
  std::vector<Colour> colours;
  for (std::size_t i = 0; i < js.size(); ++i)
    colours.push_back(Colour{static_cast<std::uint32_t>(i + 1)});
  ColouredMultigraph g(names.take(), colours);
  ColouredChips chips(js.size() + 1, js.size());
  const VertexId bot{static_cast<std::uint32_t>(js.size())};

  for (std::size_t i = 0; i < js.size(); ++i) {
    std::vector<std::size_t> below;  // positions in js
    std::vector<std::size_t> elements;
    for (std::size_t k = 0; k < js.size(); ++k)
      if (l.leq(js[k], js[i])) {
        below.push_back(k);
        elements.push_back(js[k]);
      }
    const Cfg sub = cfg_from_poset(l.induced_poset(elements));
    auto lift = [&](VertexId v) {
      return v.index < below.size()
                 ? VertexId{static_cast<std::uint32_t>(below[v.index])}
                 : bot;
    };
    for (auto u : sub.graph().vertices()) {
      for (auto v : sub.graph().vertices())
        if (const Count m = sub.graph().multiplicity(u, v))
          g.add_edges(lift(u), lift(v), colours[i], m);
      if (u.index < below.size()) chips.set(lift(u), i, sub.initial()[u]);
    }
  }
  return ColouredCfg(std::move(g), std::move(chips));
}

ColouredCfg coloured_from_uld(const Lattice& l) {
  const ColouredCfg tilde = build_tilde_cfg(l);
  const TildePartition tp = tilde_partition(l);
  const std::size_t classes = tp.meet_irreducibles.size();
  NameSet names;
  for (auto m : tp.meet_irreducibles) names.add(l.name(m));
  names.add("bot");
  const auto& colours = tilde.graph().colours();
  ColouredMultigraph g(names.take(), colours);
  ColouredChips chips(classes + 1, colours.size());

  auto cls = [&](VertexId v) {
    return VertexId{static_cast<std::uint32_t>(
        v.index < tp.partner.size() ? tp.partner[v.index] : classes)};
  };
  for (std::size_t k = 0; k < colours.size(); ++k) {
    const Multigraph& layer = tilde.graph().restriction_to_colour(colours[k]);
    for (auto u : layer.vertices()) {
      for (auto v : layer.vertices())
        if (const Count m = layer.multiplicity(u, v))
          g.add_edges(cls(u), cls(v), colours[k], m);
      chips.add(cls(u), k, tilde.initial().get(u, k));
    }
  }
  return ColouredCfg(std::move(g), std::move(chips));
}

Cfg collapse_unfired(const Cfg& cfg, std::uint64_t step_cap) {
  RunOptions run;
  run.step_cap = step_cap;
  const RunResult r = run_to_fixpoint(cfg, run);
  const Multigraph& g = cfg.graph();
  std::vector<VertexId> fired;
  std::optional<VertexId> first_unfired;
  for (auto v : g.vertices()) {
    if (r.firings[v.index] > 0)
      fired.push_back(v);
    else if (!first_unfired)
      first_unfired = v;
  }
  if (!first_unfired) fail(ErrorKind::invalid_argument, "every vertex fires");

  std::vector<std::string> names;
  for (auto v : fired) names.push_back(g.name(v));
  names.push_back(g.name(*first_unfired));
  const VertexId sink{static_cast<std::uint32_t>(fired.size())};
  std::vector<std::uint32_t> slot(g.vertex_count(), sink.index);
  for (std::uint32_t i = 0; i < fired.size(); ++i) slot[fired[i].index] = i;

  Multigraph out(std::move(names));
  std::vector<Count> chips(fired.size() + 1, 0);
  for (auto u : g.vertices()) {
    const VertexId cu{slot[u.index]};
    chips[cu.index] = checked_add(chips[cu.index], cfg.initial()[u]);
    if (cu == sink) continue;
    for (auto v : g.vertices())
      if (const Count m = g.multiplicity(u, v))
        out.add_edges(cu, VertexId{slot[v.index]}, m);
  }
  return Cfg(std::move(out), Configuration(std::move(chips)));
}

}  // namespace cfglat
