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

// Acceptance suite: one PASS/FAIL line per criterion.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cfglat/analytics.hpp"
#include "cfglat/chip_firing.hpp"
#include "cfglat/coloured.hpp"
#include "cfglat/error.hpp"
#include "cfglat/text_format.hpp"
#include "cfglat/transforms.hpp"
#include "generators.hpp"
#include "oracles.hpp"

namespace {

using namespace cfglat;
using Clock = std::chrono::steady_clock;

std::string data(const char* name) {
  return read_file(std::string(CFGLAT_DATA_DIR) + "/" + name);
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Collects the first few failures of a criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    ++failures_;
    if (notes_.size() < 3) notes_.push_back(what);
  }
  bool ok() const { return failures_ == 0; }
  std::string summary() const {
    std::string s = std::to_string(failures_) + " failure(s)";
    for (const auto& n : notes_) s += "; " + n;
    return s;
  }

 private:
  std::size_t failures_ = 0;
  std::vector<std::string> notes_;
};

struct Outcome {
  bool pass = false;
  std::string detail;
};

// Lattices shared between criteria.
struct Corpus {
  std::vector<Cfg> games;                  // criterion 1
  std::vector<Lattice> game_spaces;        // their spaces
  std::vector<Lattice> coloured_spaces;    // criterion 8
  std::vector<Lattice> birkhoff_lattices;  // criterion 5
  std::vector<Lattice> fixtures;           // shipped lattice files and Fig. 1

  std::vector<const Lattice*> all() const {
    std::vector<const Lattice*> out;
    for (const auto* v : {&game_spaces, &coloured_spaces, &birkhoff_lattices, &fixtures})
      for (const auto& l : *v) out.push_back(&l);
    return out;
  }
};

std::string label(const Cfg& g) {
  std::ostringstream out;
  out << g.vertex_count() << " vertices, " << g.initial().total() << " chips";
  return out.str();
}

std::vector<Count> chips_of(const Configuration& c) {
  return {c.chips().begin(), c.chips().end()};
}

// 1. Strong convergence ----------------------------------------------------------------

Outcome strong_convergence(Corpus& corpus) {
  const auto t0 = Clock::now();
  Check check;
  gen::Rng rng(20240101);
  for (int i = 0; i < 200; ++i) {
    Cfg g = gen::convergent_game(rng, 6, 8);
    const auto [final_conf, counts] = oracle::fixpoint(g);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      RunOptions o;
      o.policy.order = FiringOrder::random;
      o.policy.seed = seed * 7919 + static_cast<std::uint64_t>(i);
      const RunResult r = run_to_fixpoint(g, o);
      check.expect(chips_of(r.final_configuration) == final_conf && r.firings == counts,
                   "game " + std::to_string(i) + " seed " + std::to_string(seed));
    }
    corpus.games.push_back(std::move(g));
  }
  const double t = seconds_since(t0);
  check.expect(t < 10.0, "took " + std::to_string(t) + " s");
  return {check.ok(), "200 games x 10 random orders, " + std::to_string(t).substr(0, 5) +
                          " s; " + check.summary()};
}

// 2. Spaces are ULD and ranked -----------------------------------------------------------

Outcome uld_spaces(Corpus& corpus) {
  Check check;
  std::size_t simple = 0;
  for (std::size_t i = 0; i < corpus.games.size(); ++i) {
    const Cfg& g = corpus.games[i];
    const ConfigSpace s = enumerate_space(g);
    const Lattice l = s.lattice();
    const UldVerdict v = uld_verdict(l);
    const RunResult r = run_to_fixpoint(g);
    const auto rank = rank_info(l);
    check.expect(v.hypercube_detector && v.meet_irreducible_detector,
                 "not ULD: game " + std::to_string(i));
    check.expect(rank.ranked && rank.height == static_cast<std::size_t>(r.total_firings()),
                 "rank/height: game " + std::to_string(i));
    if (s.is_simple()) {
      ++simple;
      // Unfired vertices merge into the sink without changing the space.
      const Cfg c = collapse_unfired(g);
      check.expect(enumerate_space(c).height() == c.vertex_count() - 1,
                   "height != |V|-1 after merging unfired vertices: game " +
                       std::to_string(i));
      const bool all_fire = std::count(r.firings.begin(), r.firings.end(), 0) == 1;
      if (all_fire)
        check.expect(s.height() == g.vertex_count() - 1,
                     "height != |V|-1: game " + std::to_string(i));
    }
    corpus.game_spaces.push_back(l);
  }
  return {check.ok(), std::to_string(corpus.games.size()) + " spaces, " +
                          std::to_string(simple) + " simple; " + check.summary()};
}

// 3. Join formula ----------------------------------------------------------------------

Outcome join_formula(const Corpus& corpus) {
  Check check;
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < corpus.games.size(); ++i) {
    const ConfigSpace s = enumerate_space(corpus.games[i]);
    const Lattice& l = corpus.game_spaces[i];
    std::set<std::vector<Count>> family(s.firings.begin(), s.firings.end());
    for (std::size_t a = 0; a < s.size(); ++a)
      for (std::size_t b = 0; b < s.size(); ++b) {
        ++pairs;
        std::vector<Count> m(s.firings[a].size());
        for (std::size_t v = 0; v < m.size(); ++v)
          m[v] = std::max(s.firings[a][v], s.firings[b][v]);
        check.expect(family.count(m) == 1, "not union-closed: game " + std::to_string(i));
        check.expect(join_of(s, a, b) == l.join(a, b),
                     "join mismatch: game " + std::to_string(i));
      }
  }
  return {check.ok(), std::to_string(pairs) + " pairs; " + check.summary()};
}

// 4. Simplification ----------------------------------------------------------------------

Outcome simplification() {
  const auto t0 = Clock::now();
  Check check;
  gen::Rng rng(4242);
  std::size_t splits = 0;
  for (int i = 0; i < 100; ++i) {
    const Cfg g = gen::non_simple_game(rng, 4, 6);
    const std::string name = "game " + std::to_string(i) + " (" + label(g) + ")";
    const SimplifyResult r = simplify(
        g, {}, [&](const Cfg& before, const Cfg& after, const SplitReport& rep) {
          check.expect(rep.n == 2 * before.initial().total(), name + ": N");
          const VertexId a0 = after.graph().at(rep.low_name);
          const VertexId a1 = after.graph().at(rep.high_name);
          for (const auto& c : enumerate_space(after).states)
            check.expect(std::llabs(static_cast<long long>(c[a0]) - c[a1]) == rep.n,
                         name + ": |a0 - a1| != N at split " +
                             std::to_string(rep.iteration));
        });
    splits += r.splits.size();
    check.expect(is_simple(r.game), name + ": result not simple");
    check.expect(is_isomorphic(enumerate_space(r.game).lattice(),
                               enumerate_space(g).lattice()),
                 name + ": space changed");
  }
  const double t = seconds_since(t0);
  check.expect(t < 60.0, "took " + std::to_string(t) + " s");
  return {check.ok(), "100 games, " + std::to_string(splits) + " splits, " +
                          std::to_string(t).substr(0, 5) + " s; " + check.summary()};
}

// 5. Distributive synthesis ---------------------------------------------------------------

Outcome distributive_synthesis(Corpus& corpus) {
  Check check;
  std::size_t count = 0;
  for (std::size_t n = 0; n <= 5; ++n)
    for (const Poset& p : oracle::posets_up_to_iso(n)) {
      ++count;
      const Lattice l = birkhoff(p);
      const Cfg g = cfg_from_distributive(l);
      const std::string name = "poset " + std::to_string(count) + " on " + std::to_string(n);
      check.expect(is_isomorphic(enumerate_space(g).lattice(), l), name + ": space");
      const RunResult r = run_to_fixpoint(g);
      const VertexId bot = g.graph().at("bot");
      for (auto v : g.graph().vertices())
        check.expect(r.firings[v.index] == (v == bot ? 0 : 1), name + ": firing count");
      corpus.birkhoff_lattices.push_back(l);
    }
  return {check.ok(), std::to_string(count) + " posets up to 5 elements; " + check.summary()};
}

// 6. Birkhoff round trip -----------------------------------------------------------------

Outcome birkhoff_round_trip(const Corpus& corpus) {
  Check check;
  std::size_t distributive = 0;
  for (const Lattice* l : corpus.all()) {
    if (!is_distributive(*l)) continue;
    ++distributive;
    check.expect(is_isomorphic(birkhoff(meet_irreducible_poset(*l)), *l),
                 "round trip failed on a " + std::to_string(l->size()) + "-element lattice");
  }
  for (const char* f : {"n5.lattice", "m3.lattice", "fig3.lattice"}) {
    const Lattice l = parse_lattice(data(f));
    const auto w = distributivity_witness(l);
    check.expect(w.has_value() && !is_distributive(l), std::string(f) + ": no witness");
    if (w)
      check.expect(oracle::violates_distributivity(l, (*w)[0], (*w)[1], (*w)[2]),
                   std::string(f) + ": witness does not violate");
  }
  return {check.ok(), std::to_string(distributive) +
                          " distributive lattices, 3 witnesses; " + check.summary()};
}

// 7. Intervals -----------------------------------------------------------------------------

Outcome intervals() {
  Check check;
  gen::Rng rng(777);
  std::vector<Cfg> games{parse_game(data("fig1.game"))};
  for (int i = 0; i < 50; ++i) games.push_back(gen::simple_game(rng, 5, 5));
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < games.size(); ++i) {
    const ConfigSpace s = enumerate_space(games[i]);
    const Lattice l = s.lattice();
    for (std::size_t a = 0; a < s.size(); ++a)
      for (std::size_t b = 0; b < s.size(); ++b) {
        if (!l.leq(a, b)) continue;
        ++pairs;
        const Cfg ig = interval_cfg(games[i], s, a, b);
        check.expect(is_isomorphic(enumerate_space(ig).lattice(), interval(l, a, b)),
                     "game " + std::to_string(i) + " [" + s.element_name(a) + ", " +
                         s.element_name(b) + "]");
      }
  }
  return {check.ok(), std::to_string(games.size()) + " games, " + std::to_string(pairs) +
                          " intervals; " + check.summary()};
}

// 8. Coloured spaces -----------------------------------------------------------------------

Outcome coloured_spaces(Corpus& corpus) {
  Check check;
  gen::Rng rng(8888);
  for (int i = 0; i < 100; ++i) {
    const ColouredCfg g = gen::coloured_game(rng, 5, 3);
    const std::string name = "coloured game " + std::to_string(i);
    check.expect(colour_guard(g), name + ": guard");
    const ColouredSpace s = enumerate_coloured_space(g);
    std::set<std::uint64_t> sets;
    for (const auto& st : s.states) {
      std::uint64_t m = 0;
      for (auto v = st.open.find_first(); v != VertexSet::npos; v = st.open.find_next(v))
        m |= std::uint64_t{1} << v;
      sets.insert(m);
    }
    check.expect(sets == oracle::coloured_shot_sets(g), name + ": shot-sets");
    for (auto x : sets)
      for (auto y : sets) check.expect(sets.count(x | y) == 1, name + ": not union-closed");
    try {
      const Lattice l = s.lattice();
      const UldVerdict v = uld_verdict(l);
      check.expect(v.hypercube_detector && v.meet_irreducible_detector, name + ": not ULD");
      corpus.coloured_spaces.push_back(l);
    } catch (const Error& e) {
      check.expect(false, name + ": " + e.what());
    }
  }
  return {check.ok(), "100 games; " + check.summary()};
}

// 9. Ideal quotient ------------------------------------------------------------------------

Outcome ideal_quotients(const Corpus& corpus) {
  Check check;
  std::size_t count = 0;
  auto run = [&](const Lattice& l, const std::string& name) {
    if (!is_uld(l)) return;
    ++count;
    check.expect(is_isomorphic(ideal_quotient(l), l), name);
  };
  for (const auto& l : corpus.game_spaces) run(l, "game space");
  for (const auto& l : corpus.coloured_spaces) run(l, "coloured space");
  const Lattice fig3 = parse_lattice(data("fig3.lattice"));
  check.expect(fig3.size() == 23 && height(fig3) == 5 && fig3.meet_irreducibles().size() == 5,
               "Fig. 3 fixture shape");
  run(fig3, "Fig. 3 fixture");
  return {check.ok(), std::to_string(count) + " ULD lattices; " + check.summary()};
}

// 10. Coloured synthesis ---------------------------------------------------------------------

Outcome coloured_synthesis(const Corpus& corpus) {
  Check check;
  const Lattice fig3 = parse_lattice(data("fig3.lattice"));
  const auto t0 = Clock::now();
  check.expect(is_isomorphic(enumerate_coloured_space(coloured_from_uld(fig3)).lattice(), fig3),
               "Fig. 3 fixture");
  const double t = seconds_since(t0);
  check.expect(t < 5.0, "Fig. 3 took " + std::to_string(t) + " s");
  std::size_t count = 1;
  auto run = [&](const Lattice& l, const std::string& name) {
    ++count;
    check.expect(is_isomorphic(enumerate_coloured_space(coloured_from_uld(l)).lattice(), l),
                 name + " (" + std::to_string(l.size()) + " elements)");
  };
  for (const Lattice* l : corpus.all())
    if (is_distributive(*l)) run(*l, "distributive lattice");
  for (const auto& l : corpus.coloured_spaces)
    if (l.size() <= 200) run(l, "coloured space");
  return {check.ok(), std::to_string(count) + " round trips, Fig. 3 in " +
                          std::to_string(t).substr(0, 5) + " s; " + check.summary()};
}

// 11. Arrow lemma ------------------------------------------------------------------------------

Outcome arrow_lemma(const Corpus& corpus) {
  Check check;
  std::size_t count = 0, uld = 0;
  for (const Lattice* l : corpus.all()) {
    ++count;
    const ArrowLemmaReport r = check_arrow_lemma(*l);
    check.expect(r.passed(), "lemma failed on a " + std::to_string(l->size()) +
                                 "-element lattice");
    if (!is_uld(*l)) continue;
    ++uld;
    check.expect(r.uld_clause_checked, "ULD clause skipped");
    const ArrowRelations a = arrows(*l);
    for (const auto& row : a.updown) check.expect(row.count() == 1, "j without one partner");
    const TildePartition t = tilde_partition(*l);
    std::set<std::size_t> seen;
    std::size_t members = 0;
    for (const auto& c : t.classes) {
      check.expect(!c.empty(), "empty class");
      members += c.size();
      seen.insert(c.begin(), c.end());
    }
    check.expect(t.classes.size() == l->meet_irreducibles().size(), "class count != |M|");
    check.expect(members == seen.size() && seen.size() == l->join_irreducibles().size(),
                 "classes do not partition J");
  }
  return {check.ok(), std::to_string(count) + " lattices (" + std::to_string(uld) +
                          " ULD); " + check.summary()};
}

// 12. Fig. 1 ---------------------------------------------------------------------------------

Outcome fig1_reproduction() {
  Check check;
  const Cfg g = parse_game(data("fig1.game"));
  const ConfigSpace s = enumerate_space(g);
  check.expect(s.size() == 7, std::to_string(s.size()) + " configurations");
  const RunResult r = run_to_fixpoint(g);
  check.expect(chips_of(r.final_configuration) == std::vector<Count>{0, 0, 1, 2},
               "final configuration");
  const Lattice l = s.lattice();
  const auto labels = edge_labels(l);
  std::map<std::string, std::set<std::size_t>> by_vertex;
  std::map<std::size_t, std::set<std::string>> by_label;
  for (std::size_t i = 0; i < s.covers.size(); ++i) {
    const std::string v = g.graph().name(s.covers[i].fired);
    by_vertex[v].insert(labels[i].meet_irreducible);
    by_label[labels[i].meet_irreducible].insert(v);
  }
  std::set<std::string> fired;
  for (const auto& [v, ms] : by_vertex) {
    fired.insert(v);
    check.expect(ms.size() == 1, v + " carries several labels");
  }
  check.expect(fired == std::set<std::string>{"a", "b", "c"}, "fired vertices");
  for (const auto& [m, vs] : by_label) check.expect(vs.size() == 1, "label shared");
  check.expect(by_label.size() == l.meet_irreducibles().size(), "labels != M");
  std::string mapping;
  for (const auto& [v, ms] : by_vertex) mapping += " " + v + "->" + l.name(*ms.begin());
  return {check.ok(), "7 configurations, final (0,0,1,2), labels" + mapping + "; " +
                          check.summary()};
}

}  // namespace

int main() {
  Corpus corpus;
  corpus.fixtures.push_back(enumerate_space(parse_game(data("fig1.game"))).lattice());
  for (const char* f : {"fig3.lattice", "n5.lattice", "m3.lattice", "boolean3.lattice",
                        "chain3.lattice"})
    corpus.fixtures.push_back(parse_lattice(data(f)));

  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"strong convergence", [&] { return strong_convergence(corpus); }},
      {"ULD and ranked spaces", [&] { return uld_spaces(corpus); }},
      {"join formula", [&] { return join_formula(corpus); }},
      {"simplification", [] { return simplification(); }},
      {"distributive synthesis", [&] { return distributive_synthesis(corpus); }},
      {"Birkhoff round trip", [&] { return birkhoff_round_trip(corpus); }},
      {"interval games", [] { return intervals(); }},
      {"coloured spaces", [&] { return coloured_spaces(corpus); }},
      {"ideal quotient", [&] { return ideal_quotients(corpus); }},
      {"coloured synthesis", [&] { return coloured_synthesis(corpus); }},
      {"arrow lemma", [&] { return arrow_lemma(corpus); }},
      {"Fig. 1 reproduction", [] { return fig1_reproduction(); }},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("%s criterion %2zu: %s (%.2f s) %s\n", o.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first, seconds_since(t0), o.detail.c_str());
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
