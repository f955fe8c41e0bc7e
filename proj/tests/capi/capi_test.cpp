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

#include <memory>
#include <string>

#include "cfglat/cfglat.h"

namespace {

std::string data(const char* name) { return std::string(CFGLAT_DATA_DIR) + "/" + name; }

struct GameFree {
  void operator()(cfglat_game* g) const { cfglat_game_free(g); }
};
struct SpaceFree {
  void operator()(cfglat_space* s) const { cfglat_space_free(s); }
};
struct LatticeFree {
  void operator()(cfglat_lattice* l) const { cfglat_lattice_free(l); }
};
struct RunFree {
  void operator()(cfglat_run* r) const { cfglat_run_free(r); }
};
using Game = std::unique_ptr<cfglat_game, GameFree>;
using Space = std::unique_ptr<cfglat_space, SpaceFree>;
using Lat = std::unique_ptr<cfglat_lattice, LatticeFree>;
using RunHandle = std::unique_ptr<cfglat_run, RunFree>;

Game load_game(const char* name) {
  cfglat_game* g = nullptr;
  EXPECT_EQ(cfglat_game_load(data(name).c_str(), &g), CFGLAT_OK) << cfglat_last_error();
  return Game(g);
}

Lat load_lattice(const char* name) {
  cfglat_lattice* l = nullptr;
  EXPECT_EQ(cfglat_lattice_load(data(name).c_str(), &l), CFGLAT_OK) << cfglat_last_error();
  return Lat(l);
}

std::string take(char* s) {
  std::string out = s ? s : "";
  cfglat_string_free(s);
  return out;
}

TEST(CApi, Version) { EXPECT_STREQ(cfglat_version(), "0.1.0"); }

TEST(CApi, RunFig1) {
  const Game g = load_game("fig1.game");
  ASSERT_TRUE(g);
  EXPECT_EQ(cfglat_game_vertex_count(g.get()), 4u);
  EXPECT_STREQ(cfglat_game_vertex_name(g.get(), 2), "c");
  EXPECT_EQ(cfglat_game_vertex_name(g.get(), 9), nullptr);
  EXPECT_EQ(cfglat_game_is_coloured(g.get()), 0);
  EXPECT_EQ(cfglat_game_passes_guard(g.get()), 1);
  cfglat_run* r = nullptr;
  ASSERT_EQ(cfglat_game_run(g.get(), CFGLAT_ORDER_RANDOM, 3, 0, 1, &r), CFGLAT_OK);
  const RunHandle run(r);
  const int64_t final_chips[] = {0, 0, 1, 2};
  for (size_t v = 0; v < 4; ++v) EXPECT_EQ(cfglat_run_final_chips(r, v), final_chips[v]);
  EXPECT_EQ(cfglat_run_total_firings(r), 3);
  EXPECT_EQ(cfglat_run_trace_length(r), 3u);
  EXPECT_EQ(cfglat_run_firings(r, 3), 0);
  int simple = 0;
  ASSERT_EQ(cfglat_game_is_simple(g.get(), 0, &simple), CFGLAT_OK);
  EXPECT_EQ(simple, 1);
}

TEST(CApi, ParseErrorStatus) {
  cfglat_game* g = nullptr;
  EXPECT_EQ(cfglat_game_parse("vertices: a\nedge: a b\n", &g), CFGLAT_PARSE);
  EXPECT_EQ(g, nullptr);
  EXPECT_NE(std::string(cfglat_last_error()).find("line 2"), std::string::npos);
  EXPECT_EQ(cfglat_game_load("/nonexistent/x.game", &g), CFGLAT_INVALID_ARGUMENT);
  EXPECT_EQ(cfglat_game_parse(nullptr, &g), CFGLAT_INVALID_ARGUMENT);
}

TEST(CApi, StepCap) {
  cfglat_game* raw = nullptr;
  ASSERT_EQ(cfglat_game_parse("vertices: a b\nedge: a b\nedge: b a\nchips: a=1\n", &raw),
            CFGLAT_OK);
  const Game g(raw);
  EXPECT_EQ(cfglat_game_passes_guard(g.get()), 0);
  cfglat_run* r = nullptr;
  EXPECT_EQ(cfglat_game_run(g.get(), CFGLAT_ORDER_LOWEST, 0, 100, 0, &r),
            CFGLAT_CAP_EXCEEDED);
  EXPECT_EQ(r, nullptr);
}

TEST(CApi, SpaceAndLattice) {
  const Game g = load_game("fig1.game");
  cfglat_space* s = nullptr;
  ASSERT_EQ(cfglat_space_enumerate(g.get(), 0, &s), CFGLAT_OK);
  const Space space(s);
  EXPECT_EQ(cfglat_space_size(s), 7u);
  EXPECT_EQ(cfglat_space_height(s), 3u);
  EXPECT_EQ(cfglat_space_is_simple(s), 1);
  size_t a = 0, b = 0, j = 0;
  ASSERT_EQ(cfglat_space_find(s, "{a}", &a), CFGLAT_OK);
  ASSERT_EQ(cfglat_space_find(s, "{b}", &b), CFGLAT_OK);
  ASSERT_EQ(cfglat_space_join(s, a, b, &j), CFGLAT_OK);
  char* name = nullptr;
  ASSERT_EQ(cfglat_space_element_name(s, j, &name), CFGLAT_OK);
  EXPECT_EQ(take(name), "{a,b}");
  EXPECT_EQ(cfglat_space_find(s, "{d}", &a), CFGLAT_INVALID_ARGUMENT);

  cfglat_lattice* l = nullptr;
  ASSERT_EQ(cfglat_space_lattice(s, &l), CFGLAT_OK);
  const Lat lat(l);
  cfglat_lattice_summary sum{};
  ASSERT_EQ(cfglat_lattice_summarize(l, &sum), CFGLAT_OK);
  EXPECT_EQ(sum.size, 7u);
  EXPECT_EQ(sum.cover_count, 9u);
  EXPECT_EQ(sum.height, 3u);
  EXPECT_EQ(sum.meet_irreducibles, 3u);
  EXPECT_EQ(sum.join_irreducibles, 4u);
  EXPECT_EQ(sum.uld, 1);
  EXPECT_EQ(sum.distributive, 0);
  EXPECT_EQ(sum.ranked, 1);

  char* dot = nullptr;
  ASSERT_EQ(cfglat_space_to_dot(s, &dot), CFGLAT_OK);
  EXPECT_EQ(take(dot).rfind("digraph", 0), 0u);
  char* report = nullptr;
  ASSERT_EQ(cfglat_lattice_report(l, &report), CFGLAT_OK);
  const std::string text = take(report);
  EXPECT_NE(text.find("ULD: yes"), std::string::npos) << text;
  EXPECT_NE(text.find("arrow lemma: passed"), std::string::npos) << text;
}

TEST(CApi, Witnesses) {
  const Lat n5 = load_lattice("n5.lattice");
  int found = 0;
  size_t triple[3] = {0, 0, 0};
  ASSERT_EQ(cfglat_lattice_distributivity_witness(n5.get(), &found, triple), CFGLAT_OK);
  EXPECT_EQ(found, 1);
  cfglat_game* g = nullptr;
  EXPECT_EQ(cfglat_synth_distributive(n5.get(), &g), CFGLAT_VALIDATION);
  EXPECT_EQ(cfglat_synth_uld(n5.get(), &g), CFGLAT_VALIDATION);
  EXPECT_EQ(cfglat_lattice_ideal_quotient(n5.get(), nullptr), CFGLAT_INVALID_ARGUMENT);
}

TEST(CApi, UldSynthesisRoundTrip) {
  const Lat fig3 = load_lattice("fig3.lattice");
  cfglat_game* raw = nullptr;
  ASSERT_EQ(cfglat_synth_uld(fig3.get(), &raw), CFGLAT_OK) << cfglat_last_error();
  const Game g(raw);
  EXPECT_EQ(cfglat_game_is_coloured(g.get()), 1);
  cfglat_space* s = nullptr;
  ASSERT_EQ(cfglat_space_enumerate(g.get(), 0, &s), CFGLAT_OK);
  const Space space(s);
  cfglat_lattice* l = nullptr;
  ASSERT_EQ(cfglat_space_lattice(s, &l), CFGLAT_OK);
  const Lat back(l);
  int iso = 0;
  ASSERT_EQ(cfglat_lattice_is_isomorphic(back.get(), fig3.get(), &iso), CFGLAT_OK);
  EXPECT_EQ(iso, 1);

  cfglat_lattice* q = nullptr;
  ASSERT_EQ(cfglat_lattice_ideal_quotient(fig3.get(), &q), CFGLAT_OK);
  const Lat quotient(q);
  ASSERT_EQ(cfglat_lattice_is_isomorphic(quotient.get(), fig3.get(), &iso), CFGLAT_OK);
  EXPECT_EQ(iso, 1);
}

TEST(CApi, DistributiveSynthesis) {
  const Lat b3 = load_lattice("boolean3.lattice");
  cfglat_game* raw = nullptr;
  ASSERT_EQ(cfglat_synth_distributive(b3.get(), &raw), CFGLAT_OK);
  const Game g(raw);
  char* text = nullptr;
  ASSERT_EQ(cfglat_game_to_text(g.get(), &text), CFGLAT_OK);
  const std::string t = take(text);
  EXPECT_NE(t.find("vertices:"), std::string::npos);
  EXPECT_NE(t.find("bot"), std::string::npos);
}

TEST(CApi, SimplifyAndInterval) {
  const Game u4 = load_game("chain_u4.game");
  cfglat_game* raw = nullptr;
  char* report = nullptr;
  ASSERT_EQ(cfglat_game_simplify(u4.get(), 0, 0, &raw, &report), CFGLAT_OK);
  const Game simple(raw);
  EXPECT_NE(take(report).find("split v"), std::string::npos);
  int is_simple = 0;
  ASSERT_EQ(cfglat_game_is_simple(simple.get(), 0, &is_simple), CFGLAT_OK);
  EXPECT_EQ(is_simple, 1);

  const Game fig1 = load_game("fig1.game");
  cfglat_space* s = nullptr;
  ASSERT_EQ(cfglat_space_enumerate(fig1.get(), 0, &s), CFGLAT_OK);
  const Space space(s);
  size_t a = 0, top = 0, b = 0;
  ASSERT_EQ(cfglat_space_find(s, "{a}", &a), CFGLAT_OK);
  ASSERT_EQ(cfglat_space_find(s, "{a,b,c}", &top), CFGLAT_OK);
  ASSERT_EQ(cfglat_space_find(s, "{b}", &b), CFGLAT_OK);
  ASSERT_EQ(cfglat_game_interval(s, a, top, &raw), CFGLAT_OK);
  const Game ig(raw);
  cfglat_space* is = nullptr;
  ASSERT_EQ(cfglat_space_enumerate(ig.get(), 0, &is), CFGLAT_OK);
  EXPECT_EQ(cfglat_space_size(is), 4u);
  cfglat_space_free(is);
  EXPECT_EQ(cfglat_game_interval(s, a, b, &raw), CFGLAT_INVALID_ARGUMENT);
}

TEST(CApi, ColouredGames) {
  const Game g = load_game("fig7.cgame");
  EXPECT_EQ(cfglat_game_is_coloured(g.get()), 1);
  EXPECT_EQ(cfglat_game_passes_guard(g.get()), 1);
  cfglat_run* r = nullptr;
  EXPECT_EQ(cfglat_game_run(g.get(), CFGLAT_ORDER_LOWEST, 0, 0, 0, &r),
            CFGLAT_INVALID_ARGUMENT);
  cfglat_space* s = nullptr;
  ASSERT_EQ(cfglat_space_enumerate(g.get(), 0, &s), CFGLAT_OK);
  EXPECT_EQ(cfglat_space_size(s), 7u);
  size_t x = 0;
  EXPECT_EQ(cfglat_space_join(s, 0, 1, &x), CFGLAT_INVALID_ARGUMENT);
  cfglat_space_free(s);

  const Game fig1 = load_game("fig1.game");
  cfglat_game* c = nullptr;
  ASSERT_EQ(cfglat_game_to_coloured(fig1.get(), &c), CFGLAT_OK);
  EXPECT_EQ(cfglat_game_is_coloured(c), 1);
  cfglat_game_free(c);
}

TEST(CApi, LatticeHelpers) {
  const Lat b3 = load_lattice("boolean3.lattice");
  EXPECT_EQ(cfglat_lattice_size(b3.get()), 8u);
  size_t lo = 0, hi = 0;
  ASSERT_EQ(cfglat_lattice_find(b3.get(), "{x}", &lo), CFGLAT_OK);
  ASSERT_EQ(cfglat_lattice_find(b3.get(), "{x,y,z}", &hi), CFGLAT_OK);
  cfglat_lattice* iv = nullptr;
  ASSERT_EQ(cfglat_lattice_interval(b3.get(), lo, hi, &iv), CFGLAT_OK);
  EXPECT_EQ(cfglat_lattice_size(iv), 4u);
  cfglat_lattice_free(iv);
  char* text = nullptr;
  ASSERT_EQ(cfglat_lattice_to_text(b3.get(), &text), CFGLAT_OK);
  cfglat_lattice* back = nullptr;
  ASSERT_EQ(cfglat_lattice_parse(text, &back), CFGLAT_OK);
  cfglat_string_free(text);
  int iso = 0;
  ASSERT_EQ(cfglat_lattice_is_isomorphic(back, b3.get(), &iso), CFGLAT_OK);
  EXPECT_EQ(iso, 1);
  cfglat_lattice_free(back);
  char* dot = nullptr;
  ASSERT_EQ(cfglat_lattice_to_dot(b3.get(), 1, &dot), CFGLAT_OK);
  EXPECT_NE(take(dot).find("rankdir=BT"), std::string::npos);
  EXPECT_EQ(cfglat_lattice_find(b3.get(), "nope", &lo), CFGLAT_INVALID_ARGUMENT);
}

TEST(CApi, NullHandlesAreSafe) {
  cfglat_game_free(nullptr);
  cfglat_space_free(nullptr);
  cfglat_lattice_free(nullptr);
  cfglat_run_free(nullptr);
  cfglat_string_free(nullptr);
  EXPECT_EQ(cfglat_game_vertex_count(nullptr), 0u);
  EXPECT_EQ(cfglat_space_size(nullptr), 0u);
}

}  // namespace
