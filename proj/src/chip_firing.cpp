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

#include "cfglat/chip_firing.hpp"

#include <deque>
#include <random>
#include <unordered_map>

#include <boost/container_hash/hash.hpp>

#include "cfglat/error.hpp"

namespace cfglat {

namespace {

void fire_in_place(const Cfg& cfg, std::vector<Count>& chips, VertexId v) {
  const auto& g = cfg.graph();
  chips[v.index] -= cfg.out_degree(v);
  for (std::uint32_t w = 0; w < chips.size(); ++w) {
    const Count m = g.multiplicity(v, VertexId{w});
    if (m) chips[w] = checked_add(chips[w], m);
  }
}

}  // namespace

Configuration::Configuration(std::vector<Count> chips)
    : chips_(std::move(chips)) {
  for (Count c : chips_)
    if (c < 0) fail(ErrorKind::invalid_argument, "negative chip count");
}

void Configuration::set(VertexId v, Count c) {
  if (c < 0) fail(ErrorKind::invalid_argument, "negative chip count");
  chips_.at(v.index) = c;
}

void Configuration::add(VertexId v, Count c) {
  set(v, checked_add(chips_.at(v.index), c));
}

Count Configuration::total() const {
  Count t = 0;
  for (Count c : chips_) t = checked_add(t, c);
  return t;
}

std::size_t ConfigurationHash::operator()(const Configuration& c) const noexcept {
  return boost::hash_range(c.chips().begin(), c.chips().end());
}

Cfg::Cfg(Multigraph graph, Configuration init)
    : graph_(std::move(graph)), init_(std::move(init)) {
  if (init_.size() != graph_.vertex_count())
    fail(ErrorKind::invalid_argument,
         "initial configuration has " + std::to_string(init_.size()) +
             " entries for " + std::to_string(graph_.vertex_count()) +
             " vertices");
  out_degree_.reserve(graph_.vertex_count());
  for (auto v : graph_.vertices()) out_degree_.push_back(graph_.out_degree(v));
}

bool is_firable(const Cfg& cfg, const Configuration& conf, VertexId v) {
  const Count d = cfg.out_degree(v);
  return d > 0 && conf[v] >= d;
}

std::vector<VertexId> firable(const Cfg& cfg, const Configuration& conf) {
  if (conf.size() != cfg.vertex_count())
    fail(ErrorKind::invalid_argument, "configuration size mismatch");
  std::vector<VertexId> out;
  for (auto v : cfg.graph().vertices())
    if (is_firable(cfg, conf, v)) out.push_back(v);
  return out;
}

Configuration fire(const Cfg& cfg, const Configuration& conf, VertexId v) {
  if (conf.size() != cfg.vertex_count())
    fail(ErrorKind::invalid_argument, "configuration size mismatch");
  if (!cfg.graph().contains(v))
    fail(ErrorKind::invalid_argument, "unknown vertex");
  if (!is_firable(cfg, conf, v))
    fail(ErrorKind::invalid_argument,
         "vertex '" + cfg.graph().name(v) + "' is not firable");
  std::vector<Count> chips(conf.chips().begin(), conf.chips().end());
  fire_in_place(cfg, chips, v);
  return Configuration(std::move(chips));
}

Count RunResult::total_firings() const {
  Count t = 0;
  for (Count c : firings) t += c;
  return t;
}

RunResult run_to_fixpoint(const Cfg& cfg, const RunOptions& options) {
  if (options.step_cap == 0)
    fail(ErrorKind::invalid_argument, "step cap must be positive");
  const std::size_t n = cfg.vertex_count();
  std::vector<Count> chips(cfg.initial().chips().begin(),
                           cfg.initial().chips().end());
  RunResult result;
  result.firings.assign(n, 0);
  std::mt19937_64 rng(options.policy.seed);
  std::vector<VertexId> ready;
  std::uint64_t steps = 0;
  for (;;) {
    ready.clear();
    for (std::uint32_t v = 0; v < n; ++v) {
      const Count d = cfg.out_degree(VertexId{v});
      if (d > 0 && chips[v] >= d) ready.push_back(VertexId{v});
    }
    if (ready.empty()) break;
    if (steps == options.step_cap)
      fail(ErrorKind::cap_exceeded,
           "possibly divergent: still firable after the step cap of " +
               std::to_string(options.step_cap) + " firings");
    VertexId v;
    switch (options.policy.order) {
      case FiringOrder::lowest_index:
        v = ready.front();
        break;
      case FiringOrder::highest_index:
        v = ready.back();
        break;
      case FiringOrder::random: {
        std::uniform_int_distribution<std::size_t> pick(0, ready.size() - 1);
        v = ready[pick(rng)];
        break;
      }
    }
    fire_in_place(cfg, chips, v);
    ++result.firings[v.index];
    if (options.record_trace) result.trace.push_back(v);
    ++steps;
  }
  result.final_configuration = Configuration(std::move(chips));
  return result;
}

bool is_simple(const Cfg& cfg, std::uint64_t step_cap) {
  RunOptions opts;
  opts.step_cap = step_cap;
  const auto run = run_to_fixpoint(cfg, opts);
  for (Count c : run.firings)
    if (c > 1) return false;
  return true;
}

bool convergence_guard(const Cfg& cfg) {
  return every_vertex_reaches_sink(cfg.graph());
}

ConfigSpace enumerate_space(const Cfg& cfg, std::size_t state_cap) {
  const std::size_t n = cfg.vertex_count();
  ConfigSpace space;
  space.vertex_names = cfg.graph().names();
  std::unordered_map<Configuration, std::size_t, ConfigurationHash> index;

  space.states.push_back(cfg.initial());
  space.firings.emplace_back(n, 0);
  index.emplace(cfg.initial(), 0);

  for (std::size_t i = 0; i < space.states.size(); ++i) {
    for (auto v : firable(cfg, space.states[i])) {
      Configuration next = fire(cfg, space.states[i], v);
      std::vector<Count> f = space.firings[i];
      ++f[v.index];
      auto it = index.find(next);
      std::size_t j;
      if (it != index.end()) {
        j = it->second;
        if (space.firings[j] != f)
          fail(ErrorKind::internal,
               "a configuration was reached with two different firing vectors");
      } else {
        if (space.states.size() >= state_cap)
          fail(ErrorKind::cap_exceeded,
               "configuration space exceeds the state cap of " +
                   std::to_string(state_cap));
        j = space.states.size();
        index.emplace(next, j);
        space.states.push_back(std::move(next));
        space.firings.push_back(std::move(f));
      }
      space.covers.push_back({i, j, v});
    }
  }
  canonicalize(space);
  return space;
}

std::size_t join_of(const ConfigSpace& space, std::size_t a, std::size_t b) {
  if (a >= space.size() || b >= space.size())
    fail(ErrorKind::invalid_argument, "element index out of range");
  std::vector<Count> f(space.firings[a].size());
  for (std::size_t v = 0; v < f.size(); ++v)
    f[v] = std::max(space.firings[a][v], space.firings[b][v]);
  auto j = space.find(f);
  if (!j)
    fail(ErrorKind::internal, "union of shot-sets " + space.element_name(a) +
                                  " and " + space.element_name(b) +
                                  " is not a reachable shot-set");
  return *j;
}

}  // namespace cfglat
