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

#include <gtest/gtest.h>

#include <set>

#include "cfglat/analytics.hpp"
#include "cfglat/chip_firing.hpp"
#include "cfglat/error.hpp"
#include "cfglat/text_format.hpp"
#include "generators.hpp"
#include "oracles.hpp"

namespace {

using namespace cfglat;

Cfg fig1() {
  return parse_game(R"(
vertices: a b c d
edge: a c
edge: b c
edge: c d 2
chips: a=1 b=1 c=1 d=0
)");
}

Cfg chain_u4() {
  return parse_game(R"(
vertices: u v bot
edge: u v 2
edge: v bot
chips: u=4
)");
}

std::vector<Count> chips(const Configuration& c) {
  return {c.chips().begin(), c.chips().end()};
}

TEST(Firing, FirableVertices) {
  const Cfg g = fig1();
  EXPECT_EQ(firable(g, g.initial()),
            (std::vector<VertexId>{g.graph().at("a"), g.graph().at("b")}));
  const Configuration after_a = fire(g, g.initial(), g.graph().at("a"));
  EXPECT_EQ(chips(after_a), (std::vector<Count>{0, 1, 2, 0}));
  EXPECT_EQ(firable(g, after_a),
            (std::vector<VertexId>{g.graph().at("b"), g.graph().at("c")}));
  const Configuration after_c = fire(g, after_a, g.graph().at("c"));
  EXPECT_EQ(chips(after_c), (std::vector<Count>{0, 1, 0, 2}));
}

TEST(Firing, SinkAndPoorVerticesDoNotFire) {
  const Cfg g = fig1();
  EXPECT_FALSE(is_firable(g, g.initial(), g.graph().at("c")));
  EXPECT_FALSE(is_firable(g, g.initial(), g.graph().at("d")));
  EXPECT_THROW(fire(g, g.initial(), g.graph().at("d")), Error);
}

TEST(Firing, LoopsReturnChips) {
  Multigraph m({"x", "s"});
  m.add_edges(VertexId{0}, VertexId{0});
  m.add_edges(VertexId{0}, VertexId{1});
  const Cfg g(m, Configuration({2, 0}));
  const Configuration next = fire(g, g.initial(), VertexId{0});
  EXPECT_EQ(chips(next), (std::vector<Count>{1, 1}));
  EXPECT_FALSE(is_firable(g, next, VertexId{0}));
}

TEST(Run, Fig1FixedPoint) {
  for (auto order : {FiringOrder::lowest_index, FiringOrder::highest_index,
                     FiringOrder::random}) {
    RunOptions o;
    o.policy.order = order;
    o.policy.seed = 7;
    o.record_trace = true;
    const RunResult r = run_to_fixpoint(fig1(), o);
    EXPECT_EQ(chips(r.final_configuration), (std::vector<Count>{0, 0, 1, 2}));
    EXPECT_EQ(r.firings, (std::vector<Count>{1, 1, 1, 0}));
    EXPECT_EQ(r.trace.size(), 3u);
    EXPECT_EQ(r.total_firings(), 3);
  }
}

TEST(Run, ChainFiresRepeatedly) {
  const RunResult r = run_to_fixpoint(chain_u4());
  EXPECT_EQ(r.firings, (std::vector<Count>{2, 4, 0}));
  EXPECT_EQ(chips(r.final_configuration), (std::vector<Count>{0, 0, 4}));
  EXPECT_FALSE(is_simple(chain_u4()));
  EXPECT_TRUE(is_simple(fig1()));
}

TEST(Run, StepCapStopsDivergentGames) {
  Multigraph m({"a", "b"});
  m.add_edges(VertexId{0}, VertexId{1});
  m.add_edges(VertexId{1}, VertexId{0});
  const Cfg g(m, Configuration({1, 0}));
  EXPECT_FALSE(convergence_guard(g));
  RunOptions o;
  o.step_cap = 50;
  try {
    run_to_fixpoint(g, o);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::cap_exceeded);
    EXPECT_NE(std::string(e.what()).find("50"), std::string::npos);
  }
}

TEST(Run, ZeroChipsNoFirings) {
  Multigraph m({"a", "s"});
  m.add_edges(VertexId{0}, VertexId{1});
  const RunResult r = run_to_fixpoint(Cfg(m, Configuration({0, 0})));
  EXPECT_EQ(r.total_firings(), 0);
}

TEST(Space, Fig1SevenElements) {
  const ConfigSpace s = enumerate_space(fig1());
  EXPECT_EQ(s.element_names(),
            (std::vector<std::string>{"{}", "{a}", "{b}", "{a,b}", "{a,c}",
                                      "{b,c}", "{a,b,c}"}));
  EXPECT_EQ(s.height(), 3u);
  EXPECT_TRUE(s.is_simple());
  EXPECT_EQ(chips(s.states.back()), (std::vector<Count>{0, 0, 1, 2}));
  EXPECT_EQ(s.covers.size(), 9u);
  const Lattice l = s.lattice();
  EXPECT_TRUE(is_uld(l));
  EXPECT_FALSE(is_distributive(l));
}

TEST(Space, ChainU4HasNineElements) {
  const ConfigSpace s = enumerate_space(chain_u4());
  EXPECT_EQ(s.size(), 9u);
  EXPECT_EQ(s.height(), 6u);
  EXPECT_FALSE(s.is_simple());
  EXPECT_EQ(s.element_name(s.size() - 1), "{u,u,v,v,v,v}");
  const Lattice l = s.lattice();
  EXPECT_TRUE(is_uld(l));
  EXPECT_TRUE(is_ranked(l));
}

TEST(Space, StateCap) {
  try {
    enumerate_space(chain_u4(), 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::cap_exceeded);
  }
}

TEST(Space, SingletonSpace) {
  Multigraph m({"s"});
  const ConfigSpace s = enumerate_space(Cfg(m, Configuration({3})));
  EXPECT_EQ(s.size(), 1u);
  EXPECT_EQ(s.height(), 0u);
  EXPECT_EQ(s.lattice().size(), 1u);
}

TEST(Space, FindAndJoin) {
  const ConfigSpace s = enumerate_space(fig1());
  const auto a = s.find({1, 0, 0, 0});
  const auto b = s.find({0, 1, 0, 0});
  ASSERT_TRUE(a && b);
  const auto ab = s.find({1, 1, 0, 0});
  EXPECT_EQ(join_of(s, *a, *b), *ab);
  EXPECT_FALSE(s.find({0, 0, 1, 0}).has_value());
}

class RandomGames : public ::testing::TestWithParam<int> {};

TEST_P(RandomGames, SpaceMatchesDepthFirstOracle) {
  gen::Rng rng(1000 + GetParam());
  const Cfg g = gen::convergent_game(rng, 5, 7);
  const ConfigSpace s = enumerate_space(g);
  const oracle::Explored e = oracle::explore(g);
  ASSERT_TRUE(e.consistent);
  ASSERT_EQ(s.size(), e.states.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    auto it = e.states.find(chips(s.states[i]));
    ASSERT_NE(it, e.states.end());
    EXPECT_EQ(it->second, s.firings[i]);
  }
  for (std::size_t i = 1; i < s.size(); ++i)
    EXPECT_TRUE(canonical_less(s.firings[i - 1], s.firings[i]));
  EXPECT_EQ(s.firings[0], std::vector<Count>(g.vertex_count(), 0));
}

TEST_P(RandomGames, FixedPointMatchesOracle) {
  gen::Rng rng(2000 + GetParam());
  const Cfg g = gen::convergent_game(rng, 6, 8);
  const auto [final_conf, counts] = oracle::fixpoint(g);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    RunOptions o;
    o.policy.order = FiringOrder::random;
    o.policy.seed = seed;
    const RunResult r = run_to_fixpoint(g, o);
    EXPECT_EQ(chips(r.final_configuration), final_conf);
    EXPECT_EQ(r.firings, counts);
  }
}

TEST_P(RandomGames, CoversFireOneVertex) {
  gen::Rng rng(3000 + GetParam());
  const Cfg g = gen::convergent_game(rng, 5, 6);
  const ConfigSpace s = enumerate_space(g);
  for (const auto& c : s.covers) {
    auto f = s.firings[c.lower];
    ++f[c.fired.index];
    EXPECT_EQ(f, s.firings[c.upper]);
    EXPECT_EQ(fire(g, s.states[c.lower], c.fired), s.states[c.upper]);
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomGames, ::testing::Range(0, 40));

}  // namespace
