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

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "cfglat/cfglat.h"

namespace {

constexpr std::size_t kStateCap = 100000;
constexpr std::uint64_t kStepCap = 1000000;

enum Exit { kOk = 0, kFailed = 1, kParse = 2, kCap = 3 };

struct GameDeleter {
  void operator()(cfglat_game* g) const { cfglat_game_free(g); }
};
struct SpaceDeleter {
  void operator()(cfglat_space* s) const { cfglat_space_free(s); }
};
struct LatticeDeleter {
  void operator()(cfglat_lattice* l) const { cfglat_lattice_free(l); }
};
struct RunDeleter {
  void operator()(cfglat_run* r) const { cfglat_run_free(r); }
};
using Game = std::unique_ptr<cfglat_game, GameDeleter>;
using Space = std::unique_ptr<cfglat_space, SpaceDeleter>;
using LatticePtr = std::unique_ptr<cfglat_lattice, LatticeDeleter>;
using Run = std::unique_ptr<cfglat_run, RunDeleter>;

// Thrown to unwind with an exit code after the message is printed.
struct Abort {
  int code;
};

int exit_code(cfglat_status st) {
  switch (st) {
    case CFGLAT_OK: return kOk;
    case CFGLAT_PARSE: return kParse;
    case CFGLAT_CAP_EXCEEDED: return kCap;
    default: return kFailed;
  }
}

void check(cfglat_status st, const std::string& context) {
  if (st == CFGLAT_OK) return;
  std::cerr << "cfglat: " << context << ": " << cfglat_last_error() << '\n';
  throw Abort{exit_code(st)};
}

std::string take(char* s) {
  std::string out = s ? s : "";
  cfglat_string_free(s);
  return out;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) {
    std::cerr << "cfglat: cannot write '" << path << "'\n";
    throw Abort{kFailed};
  }
}

Game load_game(const std::string& path) {
  cfglat_game* g = nullptr;
  check(cfglat_game_load(path.c_str(), &g), path);
  return Game(g);
}

LatticePtr load_lattice(const std::string& path) {
  cfglat_lattice* l = nullptr;
  check(cfglat_lattice_load(path.c_str(), &l), path);
  return LatticePtr(l);
}

void require_guard(const cfglat_game* g, bool capped) {
  if (capped || cfglat_game_passes_guard(g)) return;
  std::cerr << "cfglat: refusing to run: some vertex cannot reach a sink, so "
               "the game may not terminate; pass --cap N to bound the run\n";
  throw Abort{kFailed};
}

LatticePtr space_lattice(const cfglat_space* s) {
  cfglat_lattice* l = nullptr;
  check(cfglat_space_lattice(s, &l), "space");
  return LatticePtr(l);
}

bool isomorphic(const cfglat_lattice* a, const cfglat_lattice* b) {
  int iso = 0;
  check(cfglat_lattice_is_isomorphic(a, b, &iso), "isomorphism");
  return iso != 0;
}

Space enumerate(const cfglat_game* g, std::size_t cap) {
  cfglat_space* s = nullptr;
  check(cfglat_space_enumerate(g, cap, &s), "space");
  return Space(s);
}

const char* yes(int b) { return b ? "yes" : "no"; }

// run ------------------------------------------------------------------------

struct RunArgs {
  std::string game;
  std::string order = "lowest";
  std::uint64_t seed = 0;
  std::uint64_t cap = 0;
  bool trace = false;
};

int cmd_run(const RunArgs& a) {
  Game g = load_game(a.game);
  if (cfglat_game_is_coloured(g.get())) {
    std::cerr << "cfglat: run takes a classical game; use 'space' for coloured games\n";
    return kFailed;
  }
  require_guard(g.get(), a.cap > 0);
  const cfglat_order order = a.order == "highest" ? CFGLAT_ORDER_HIGHEST
                             : a.order == "random" ? CFGLAT_ORDER_RANDOM
                                                   : CFGLAT_ORDER_LOWEST;
  cfglat_run* r = nullptr;
  check(cfglat_game_run(g.get(), order, a.seed, a.cap ? a.cap : kStepCap,
                        a.trace, &r),
        "run");
  Run run(r);
  const std::size_t n = cfglat_run_vertex_count(r);
  if (a.trace)
    for (std::size_t i = 0; i < cfglat_run_trace_length(r); ++i)
      std::cout << "fire " << cfglat_game_vertex_name(g.get(), cfglat_run_trace_at(r, i))
                << '\n';
  std::cout << "final:";
  for (std::size_t v = 0; v < n; ++v)
    std::cout << ' ' << cfglat_game_vertex_name(g.get(), v) << '='
              << cfglat_run_final_chips(r, v);
  std::cout << '\n';
  if (cfglat_run_total_firings(r) == 0) {
    std::cout << "no firings\n";
    return kOk;
  }
  std::cout << "firings:";
  for (std::size_t v = 0; v < n; ++v)
    std::cout << ' ' << cfglat_game_vertex_name(g.get(), v) << '='
              << cfglat_run_firings(r, v);
  std::cout << "\ntotal firings: " << cfglat_run_total_firings(r) << '\n';
  return kOk;
}

// space ----------------------------------------------------------------------

struct SpaceArgs {
  std::string game;
  bool coloured = false;
  std::string dot;
  std::size_t cap = 0;
};

int cmd_space(const SpaceArgs& a) {
  Game g = load_game(a.game);
  if (a.coloured && !cfglat_game_is_coloured(g.get())) {
    cfglat_game* c = nullptr;
    check(cfglat_game_to_coloured(g.get(), &c), "coloured view");
    g.reset(c);
  }
  require_guard(g.get(), a.cap > 0);
  Space s = enumerate(g.get(), a.cap ? a.cap : kStateCap);
  LatticePtr l = space_lattice(s.get());
  cfglat_lattice_summary sum{};
  check(cfglat_lattice_summarize(l.get(), &sum), "space");
  std::cout << sum.size << (sum.size == 1 ? " element" : " elements")
            << ", height " << sum.height << ", ranked: " << yes(sum.ranked)
            << ", distributive: " << yes(sum.distributive)
            << ", ULD: " << yes(sum.uld) << '\n';
  std::cout << "simple: " << yes(cfglat_space_is_simple(s.get())) << '\n';
  if (!a.dot.empty()) {
    char* dot = nullptr;
    check(cfglat_space_to_dot(s.get(), &dot), "dot");
    write_text(a.dot, take(dot));
  }
  return kOk;
}

// check ----------------------------------------------------------------------

struct CheckArgs {
  std::string lattice;
  std::string dot;
};

int cmd_check(const CheckArgs& a) {
  LatticePtr l = load_lattice(a.lattice);
  char* text = nullptr;
  check(cfglat_lattice_report(l.get(), &text), "check");
  std::cout << take(text);
  if (!a.dot.empty()) {
    cfglat_lattice_summary sum{};
    check(cfglat_lattice_summarize(l.get(), &sum), "check");
    char* dot = nullptr;
    check(cfglat_lattice_to_dot(l.get(), sum.uld, &dot), "dot");
    write_text(a.dot, take(dot));
  }
  return kOk;
}

// synth ----------------------------------------------------------------------

struct SynthArgs {
  std::string lattice;
  std::string mode = "distributive";
  std::string output;
};

int cmd_synth(const SynthArgs& a) {
  LatticePtr l = load_lattice(a.lattice);
  cfglat_game* raw = nullptr;
  check(a.mode == "uld" ? cfglat_synth_uld(l.get(), &raw)
                        : cfglat_synth_distributive(l.get(), &raw),
        "synth");
  Game g(raw);
  Space s = enumerate(g.get(), kStateCap);
  LatticePtr back = space_lattice(s.get());
  const bool iso = isomorphic(l.get(), back.get());
  char* text = nullptr;
  check(cfglat_game_to_text(g.get(), &text), "synth");
  const std::string game_text = take(text);
  const std::string verdict = std::string("round-trip: ") +
                              (iso ? "isomorphic" : "NOT isomorphic");
  if (a.output.empty()) {
    std::cout << game_text << "# " << verdict << '\n';
  } else {
    write_text(a.output, game_text);
    std::cout << cfglat_game_vertex_count(g.get()) << " vertices written to "
              << a.output << '\n'
              << verdict << '\n';
  }
  return iso ? kOk : kFailed;
}

// simplify -------------------------------------------------------------------

struct SimplifyArgs {
  std::string game;
  std::string output;
  std::uint64_t cap = 0;
  std::size_t iterations = 64;
};

int cmd_simplify(const SimplifyArgs& a) {
  Game g = load_game(a.game);
  if (cfglat_game_is_coloured(g.get())) {
    std::cerr << "cfglat: simplify takes a classical game\n";
    return kFailed;
  }
  require_guard(g.get(), a.cap > 0);
  cfglat_game* raw = nullptr;
  char* report = nullptr;
  check(cfglat_game_simplify(g.get(), a.iterations, a.cap ? a.cap : kStepCap,
                             &raw, &report),
        "simplify");
  Game out(raw);
  const std::string lines = take(report);
  std::cout << (lines.empty() ? "no splits needed\n" : lines);
  int simple = 0;
  check(cfglat_game_is_simple(out.get(), a.cap ? a.cap : kStepCap, &simple),
        "simplify");
  Space before = enumerate(g.get(), kStateCap);
  Space after = enumerate(out.get(), kStateCap);
  LatticePtr lb = space_lattice(before.get()), la = space_lattice(after.get());
  const bool iso = isomorphic(lb.get(), la.get());
  std::cout << "simple: " << yes(simple) << ", isomorphic: " << yes(iso) << '\n';
  char* text = nullptr;
  check(cfglat_game_to_text(out.get(), &text), "simplify");
  if (!a.output.empty())
    write_text(a.output, take(text));
  else
    std::cout << take(text);
  return simple && iso ? kOk : kFailed;
}

// interval -------------------------------------------------------------------

struct IntervalArgs {
  std::string game;
  std::string lower;
  std::string upper;
  std::string output;
};

int cmd_interval(const IntervalArgs& a) {
  Game g = load_game(a.game);
  require_guard(g.get(), false);
  Space s = enumerate(g.get(), kStateCap);
  std::size_t lo = 0, hi = 0;
  check(cfglat_space_find(s.get(), a.lower.c_str(), &lo), "interval");
  check(cfglat_space_find(s.get(), a.upper.c_str(), &hi), "interval");
  cfglat_game* raw = nullptr;
  check(cfglat_game_interval(s.get(), lo, hi, &raw), "interval");
  Game out(raw);
  Space sub = enumerate(out.get(), kStateCap);
  LatticePtr whole = space_lattice(s.get()), got = space_lattice(sub.get());
  cfglat_lattice* expected_raw = nullptr;
  check(cfglat_lattice_interval(whole.get(), lo, hi, &expected_raw), "interval");
  LatticePtr expected(expected_raw);
  const bool iso = isomorphic(got.get(), expected.get());
  char* text = nullptr;
  check(cfglat_game_to_text(out.get(), &text), "interval");
  const std::string verdict = std::to_string(cfglat_space_size(sub.get())) +
                              " elements, isomorphic to the interval: " + yes(iso);
  if (a.output.empty()) {
    std::cout << take(text) << "# " << verdict << '\n';
  } else {
    write_text(a.output, take(text));
    std::cout << verdict << '\n';
  }
  return iso ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chip-firing games and their configuration lattices"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", std::string(cfglat_version()));

  RunArgs run;
  auto* run_cmd = app.add_subcommand("run", "Fire a classical game until it stops");
  run_cmd->add_option("game", run.game, "Game file")->required();
  run_cmd->add_option("--order", run.order, "Firing order")
      ->check(CLI::IsMember({"lowest", "highest", "random"}));
  run_cmd->add_option("--seed", run.seed, "Seed for --order random");
  run_cmd->add_option("--cap", run.cap, "Step cap; allows games without a sink path");
  run_cmd->add_flag("--trace", run.trace, "Print every firing");

  SpaceArgs space;
  auto* space_cmd = app.add_subcommand("space", "Enumerate the configuration space");
  space_cmd->add_option("game", space.game, "Game file")->required();
  space_cmd->add_flag("--coloured,--colored", space.coloured,
                      "Treat a classical game as a one-colour game");
  space_cmd->add_option("--dot", space.dot, "Write the Hasse diagram here");
  space_cmd->add_option("--cap", space.cap, "State cap");

  CheckArgs chk;
  auto* check_cmd = app.add_subcommand("check", "Analyse a lattice file");
  check_cmd->add_option("lattice", chk.lattice, "Lattice file")->required();
  check_cmd->add_option("--dot", chk.dot, "Write the Hasse diagram here");

  SynthArgs synth;
  auto* synth_cmd = app.add_subcommand("synth", "Build a game realising a lattice");
  synth_cmd->add_option("lattice", synth.lattice, "Lattice file")->required();
  synth_cmd->add_option("--mode", synth.mode, "distributive or uld")
      ->check(CLI::IsMember({"distributive", "uld"}));
  synth_cmd->add_option("-o,--output", synth.output, "Game file to write");

  SimplifyArgs simp;
  auto* simp_cmd = app.add_subcommand("simplify", "Turn a game into a simple one");
  simp_cmd->add_option("game", simp.game, "Game file")->required();
  simp_cmd->add_option("-o,--output", simp.output, "Game file to write");
  simp_cmd->add_option("--cap", simp.cap, "Step cap per run");
  simp_cmd->add_option("--iterations", simp.iterations, "Split cap");

  IntervalArgs iv;
  auto* iv_cmd = app.add_subcommand("interval", "Game whose space is an interval");
  iv_cmd->add_option("game", iv.game, "Simple game file")->required();
  iv_cmd->add_option("lower", iv.lower, "Lower element, e.g. {a}")->required();
  iv_cmd->add_option("upper", iv.upper, "Upper element, e.g. {a,b,c}")->required();
  iv_cmd->add_option("-o,--output", iv.output, "Game file to write");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kFailed;
  }

  try {
    if (*run_cmd) return cmd_run(run);
    if (*space_cmd) return cmd_space(space);
    if (*check_cmd) return cmd_check(chk);
    if (*synth_cmd) return cmd_synth(synth);
    if (*simp_cmd) return cmd_simplify(simp);
    if (*iv_cmd) return cmd_interval(iv);
  } catch (const Abort& a) {
    return a.code;
  }
  return kFailed;
}
