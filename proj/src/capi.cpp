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

#include "cfglat/cfglat.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>
#include <variant>

#include "cfglat/analytics.hpp"
#include "cfglat/coloured.hpp"
#include "cfglat/dot.hpp"
#include "cfglat/error.hpp"
#include "cfglat/text_format.hpp"
#include "cfglat/transforms.hpp"

using namespace cfglat;

struct cfglat_game {
  std::variant<Cfg, ColouredCfg> game;
};

struct cfglat_run {
  RunResult result;
};

struct cfglat_space {
  Cfg game;  // classical spaces only
  std::variant<ConfigSpace, ColouredSpace> space;
};

struct cfglat_lattice {
  Lattice lattice;
};

namespace {

thread_local std::string last_error;

cfglat_status status_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_argument: return CFGLAT_INVALID_ARGUMENT;
    case ErrorKind::validation: return CFGLAT_VALIDATION;
    case ErrorKind::parse: return CFGLAT_PARSE;
    case ErrorKind::cap_exceeded: return CFGLAT_CAP_EXCEEDED;
    case ErrorKind::internal: return CFGLAT_INTERNAL;
  }
  return CFGLAT_INTERNAL;
}

template <class T>
T or_default(T value, T fallback) {
  return value ? value : fallback;
}

template <class F>
cfglat_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return CFGLAT_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return CFGLAT_CAP_EXCEEDED;
  } catch (const std::exception& e) {
    last_error = e.what();
    return CFGLAT_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (!p) fail(ErrorKind::invalid_argument, std::string("null ") + what);
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

const Cfg& classical(const cfglat_game* g) {
  require(g, "game");
  if (auto* c = std::get_if<Cfg>(&g->game)) return *c;
  fail(ErrorKind::invalid_argument, "expected a classical game");
}

const char* yes(bool b) { return b ? "yes" : "no"; }

std::string report(const Lattice& l) {
  std::ostringstream out;
  const auto rank = rank_info(l);
  out << "elements: " << l.size() << ", covers: " << l.cover_pairs().size() << '\n';
  out << "ranked: " << yes(rank.ranked) << ", height " << rank.height << '\n';
  if (auto w = distributivity_witness(l))
    out << "distributive: no (x = " << l.name((*w)[0]) << ", y = "
        << l.name((*w)[1]) << ", z = " << l.name((*w)[2]) << ")\n";
  else
    out << "distributive: yes\n";
  const UldVerdict v = uld_verdict(l);
  if (v.hypercube_detector && v.meet_irreducible_detector) {
    out << "ULD: yes (hypercube detector: yes, meet-irreducible detector: yes)\n";
  } else if (!v.hypercube_detector && !v.meet_irreducible_detector) {
    out << "ULD: no (hypercube detector fails at " << l.name(*v.hypercube_witness)
        << ", meet-irreducible detector fails at "
        << l.name(v.meet_irreducible_witness->first) << " < "
        << l.name(v.meet_irreducible_witness->second) << ")\n";
  } else {
    out << "ULD: detectors disagree (hypercube: " << yes(v.hypercube_detector)
        << ", meet-irreducible: " << yes(v.meet_irreducible_detector) << ")\n";
  }
  out << "|J| " << l.join_irreducibles().size() << ", |M| "
      << l.meet_irreducibles().size() << '\n';
  if (v.hypercube_detector && v.meet_irreducible_detector) {
    const TildePartition tp = tilde_partition(l);
    out << "~ classes: " << tp.classes.size() << '\n';
    for (std::size_t k = 0; k < tp.classes.size(); ++k) {
      out << "  " << l.name(tp.meet_irreducibles[k]) << ":";
      for (auto j : tp.classes[k]) out << ' ' << l.name(j);
      out << '\n';
    }
  }
  const ArrowLemmaReport a = check_arrow_lemma(l);
  out << "arrow lemma: " << (a.passed() ? "passed" : "FAILED")
      << " (down clause: " << yes(a.down_clause);
  if (a.uld_clause_checked) out << ", ULD clause: " << yes(a.uld_clause);
  out << ", up clause: " << yes(a.up_clause) << ")\n";
  if (a.down_clause_witness)
    out << "  down clause fails for x = " << l.name(a.down_clause_witness->first)
        << ", m = " << l.name(a.down_clause_witness->second) << '\n';
  if (a.uld_clause_witness)
    out << "  ULD clause fails for x = " << l.name(a.uld_clause_witness->first)
        << ", m = " << l.name(a.uld_clause_witness->second) << '\n';
  if (a.up_clause_witness)
    out << "  up clause fails for j = " << l.name(a.up_clause_witness->first)
        << ", x = " << l.name(a.up_clause_witness->second) << '\n';
  return out.str();
}

template <class T, class... Args>
T* make(Args&&... args) {
  return new T{std::forward<Args>(args)...};
}

}  // namespace

extern "C" {

const char* cfglat_last_error(void) { return last_error.c_str(); }
const char* cfglat_version(void) { return "0.1.0"; }
void cfglat_string_free(char* s) { std::free(s); }

cfglat_status cfglat_game_parse(const char* text, cfglat_game** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = nullptr;
    if (is_coloured_game_text(text))
      *out = make<cfglat_game>(parse_coloured_game(text));
    else
      *out = make<cfglat_game>(parse_game(text));
  });
}

cfglat_status cfglat_game_load(const char* path, cfglat_game** out) {
  std::string text;
  const auto st = guarded([&] {
    require(path, "path");
    text = read_file(path);
  });
  if (st != CFGLAT_OK) return st;
  return cfglat_game_parse(text.c_str(), out);
}

void cfglat_game_free(cfglat_game* game) { delete game; }

int cfglat_game_is_coloured(const cfglat_game* game) {
  return game && std::holds_alternative<ColouredCfg>(game->game);
}

size_t cfglat_game_vertex_count(const cfglat_game* game) {
  if (!game) return 0;
  return std::visit([](const auto& g) { return g.vertex_count(); }, game->game);
}

const char* cfglat_game_vertex_name(const cfglat_game* game, size_t vertex) {
  if (!game || vertex >= cfglat_game_vertex_count(game)) return nullptr;
  return std::visit(
      [&](const auto& g) {
        return g.graph().names()[vertex].c_str();
      },
      game->game);
}

cfglat_status cfglat_game_to_text(const cfglat_game* game, char** out) {
  return guarded([&] {
    require(game, "game");
    require(out, "out");
    if (auto* c = std::get_if<Cfg>(&game->game))
      *out = dup(write_game(*c));
    else
      *out = dup(write_coloured_game(std::get<ColouredCfg>(game->game)));
  });
}

cfglat_status cfglat_game_to_dot(const cfglat_game* game, char** out) {
  return guarded([&] {
    require(game, "game");
    require(out, "out");
    if (auto* c = std::get_if<Cfg>(&game->game))
      *out = dup(game_dot(*c));
    else
      *out = dup(coloured_game_dot(std::get<ColouredCfg>(game->game)));
  });
}

int cfglat_game_passes_guard(const cfglat_game* game) {
  if (!game) return 0;
  if (auto* c = std::get_if<Cfg>(&game->game)) return convergence_guard(*c);
  return colour_guard(std::get<ColouredCfg>(game->game));
}

cfglat_status cfglat_game_is_simple(const cfglat_game* game, uint64_t step_cap,
                                    int* out) {
  return guarded([&] {
    require(out, "out");
    *out = is_simple(classical(game), or_default(step_cap, kDefaultStepCap));
  });
}

cfglat_status cfglat_game_to_coloured(const cfglat_game* game, cfglat_game** out) {
  return guarded([&] {
    require(out, "out");
    *out = make<cfglat_game>(from_classical(classical(game)));
  });
}

cfglat_status cfglat_game_run(const cfglat_game* game, cfglat_order order,
                              uint64_t seed, uint64_t step_cap, int record_trace,
                              cfglat_run** out) {
  return guarded([&] {
    require(out, "out");
    RunOptions options;
    switch (order) {
      case CFGLAT_ORDER_LOWEST: options.policy.order = FiringOrder::lowest_index; break;
      case CFGLAT_ORDER_HIGHEST: options.policy.order = FiringOrder::highest_index; break;
      case CFGLAT_ORDER_RANDOM: options.policy.order = FiringOrder::random; break;
      default: fail(ErrorKind::invalid_argument, "unknown firing order");
    }
    options.policy.seed = seed;
    options.step_cap = or_default(step_cap, kDefaultStepCap);
    options.record_trace = record_trace != 0;
    *out = make<cfglat_run>(run_to_fixpoint(classical(game), options));
  });
}

void cfglat_run_free(cfglat_run* run) { delete run; }

size_t cfglat_run_vertex_count(const cfglat_run* run) {
  return run ? run->result.firings.size() : 0;
}

int64_t cfglat_run_final_chips(const cfglat_run* run, size_t vertex) {
  if (!run || vertex >= run->result.firings.size()) return -1;
  return run->result.final_configuration[VertexId{static_cast<std::uint32_t>(vertex)}];
}

int64_t cfglat_run_firings(const cfglat_run* run, size_t vertex) {
  if (!run || vertex >= run->result.firings.size()) return -1;
  return run->result.firings[vertex];
}

int64_t cfglat_run_total_firings(const cfglat_run* run) {
  return run ? run->result.total_firings() : -1;
}

size_t cfglat_run_trace_length(const cfglat_run* run) {
  return run ? run->result.trace.size() : 0;
}

size_t cfglat_run_trace_at(const cfglat_run* run, size_t step) {
  if (!run || step >= run->result.trace.size()) return SIZE_MAX;
  return run->result.trace[step].index;
}

cfglat_status cfglat_space_enumerate(const cfglat_game* game, size_t state_cap,
                                     cfglat_space** out) {
  return guarded([&] {
    require(game, "game");
    require(out, "out");
    state_cap = or_default(state_cap, kDefaultStateCap);
    if (auto* c = std::get_if<Cfg>(&game->game))
      *out = make<cfglat_space>(*c, enumerate_space(*c, state_cap));
    else
      *out = make<cfglat_space>(
          Cfg{}, enumerate_coloured_space(std::get<ColouredCfg>(game->game),
                                          state_cap));
  });
}

void cfglat_space_free(cfglat_space* space) { delete space; }

size_t cfglat_space_size(const cfglat_space* space) {
  if (!space) return 0;
  return std::visit([](const auto& s) { return s.size(); }, space->space);
}

size_t cfglat_space_height(const cfglat_space* space) {
  if (!space) return 0;
  return std::visit([](const auto& s) { return s.height(); }, space->space);
}

int cfglat_space_is_simple(const cfglat_space* space) {
  if (!space) return 0;
  return std::visit([](const auto& s) { return s.is_simple(); }, space->space);
}

cfglat_status cfglat_space_element_name(const cfglat_space* space, size_t element,
                                        char** out) {
  return guarded([&] {
    require(space, "space");
    require(out, "out");
    if (element >= cfglat_space_size(space))
      fail(ErrorKind::invalid_argument, "element index out of range");
    *out = dup(std::visit([&](const auto& s) { return s.element_name(element); },
                          space->space));
  });
}

cfglat_status cfglat_space_find(const cfglat_space* space, const char* name,
                                size_t* out) {
  return guarded([&] {
    require(space, "space");
    require(name, "name");
    require(out, "out");
    const std::size_t n = cfglat_space_size(space);
    for (std::size_t i = 0; i < n; ++i)
      if (std::visit([&](const auto& s) { return s.element_name(i); },
                     space->space) == name) {
        *out = i;
        return;
      }
    fail(ErrorKind::invalid_argument,
         std::string("no element '") + name + "' in the space");
  });
}

cfglat_status cfglat_space_join(const cfglat_space* space, size_t a, size_t b,
                                size_t* out) {
  return guarded([&] {
    require(space, "space");
    require(out, "out");
    auto* s = std::get_if<ConfigSpace>(&space->space);
    if (!s) fail(ErrorKind::invalid_argument, "expected a classical space");
    if (a >= s->size() || b >= s->size())
      fail(ErrorKind::invalid_argument, "element index out of range");
    *out = join_of(*s, a, b);
  });
}

cfglat_status cfglat_space_lattice(const cfglat_space* space, cfglat_lattice** out) {
  return guarded([&] {
    require(space, "space");
    require(out, "out");
    *out = make<cfglat_lattice>(
        std::visit([](const auto& s) { return s.lattice(); }, space->space));
  });
}

cfglat_status cfglat_space_to_dot(const cfglat_space* space, char** out) {
  return guarded([&] {
    require(space, "space");
    require(out, "out");
    if (auto* s = std::get_if<ConfigSpace>(&space->space))
      *out = dup(space_dot(*s));
    else
      *out = dup(coloured_space_dot(std::get<ColouredSpace>(space->space)));
  });
}

cfglat_status cfglat_lattice_parse(const char* text, cfglat_lattice** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = make<cfglat_lattice>(parse_lattice(text));
  });
}

cfglat_status cfglat_lattice_load(const char* path, cfglat_lattice** out) {
  std::string text;
  const auto st = guarded([&] {
    require(path, "path");
    text = read_file(path);
  });
  if (st != CFGLAT_OK) return st;
  return cfglat_lattice_parse(text.c_str(), out);
}

void cfglat_lattice_free(cfglat_lattice* lattice) { delete lattice; }

size_t cfglat_lattice_size(const cfglat_lattice* lattice) {
  return lattice ? lattice->lattice.size() : 0;
}

cfglat_status cfglat_lattice_find(const cfglat_lattice* lattice, const char* name,
                                  size_t* out) {
  return guarded([&] {
    require(lattice, "lattice");
    require(name, "name");
    require(out, "out");
    auto x = lattice->lattice.find(name);
    if (!x)
      fail(ErrorKind::invalid_argument,
           std::string("no element '") + name + "' in the lattice");
    *out = *x;
  });
}

cfglat_status cfglat_lattice_to_text(const cfglat_lattice* lattice, char** out) {
  return guarded([&] {
    require(lattice, "lattice");
    require(out, "out");
    *out = dup(write_lattice(lattice->lattice));
  });
}

cfglat_status cfglat_lattice_to_dot(const cfglat_lattice* lattice,
                                    int cover_labels, char** out) {
  return guarded([&] {
    require(lattice, "lattice");
    require(out, "out");
    LatticeDotOptions options;
    options.cover_labels = cover_labels != 0;
    *out = dup(lattice_dot(lattice->lattice, options));
  });
}

cfglat_status cfglat_lattice_summarize(const cfglat_lattice* lattice,
                                       cfglat_lattice_summary* out) {
  return guarded([&] {
    require(lattice, "lattice");
    require(out, "out");
    const Lattice& l = lattice->lattice;
    const auto rank = rank_info(l);
    const auto v = uld_verdict(l);
    out->size = l.size();
    out->cover_count = l.cover_pairs().size();
    out->height = rank.height;
    out->join_irreducibles = l.join_irreducibles().size();
    out->meet_irreducibles = l.meet_irreducibles().size();
    out->ranked = rank.ranked;
    out->distributive = is_distributive(l);
    out->hypercube_detector = v.hypercube_detector;
    out->meet_irreducible_detector = v.meet_irreducible_detector;
    out->uld = v.hypercube_detector && v.meet_irreducible_detector;
  });
}

cfglat_status cfglat_lattice_report(const cfglat_lattice* lattice, char** out) {
  return guarded([&] {
    require(lattice, "lattice");
    require(out, "out");
    *out = dup(report(lattice->lattice));
  });
}

cfglat_status cfglat_lattice_distributivity_witness(const cfglat_lattice* lattice,
                                                    int* found, size_t triple[3]) {
  return guarded([&] {
    require(lattice, "lattice");
    require(found, "found");
    require(triple, "triple");
    auto w = distributivity_witness(lattice->lattice);
    *found = w.has_value();
    if (w)
      for (int k = 0; k < 3; ++k) triple[k] = (*w)[k];
  });
}

cfglat_status cfglat_lattice_is_isomorphic(const cfglat_lattice* a,
                                           const cfglat_lattice* b, int* out) {
  return guarded([&] {
    require(a, "lattice");
    require(b, "lattice");
    require(out, "out");
    *out = is_isomorphic(a->lattice, b->lattice);
  });
}

cfglat_status cfglat_lattice_ideal_quotient(const cfglat_lattice* lattice,
                                            cfglat_lattice** out) {
  return guarded([&] {
    require(lattice, "lattice");
    require(out, "out");
    *out = make<cfglat_lattice>(ideal_quotient(lattice->lattice));
  });
}

cfglat_status cfglat_lattice_interval(const cfglat_lattice* lattice, size_t a,
                                      size_t b, cfglat_lattice** out) {
  return guarded([&] {
    require(lattice, "lattice");
    require(out, "out");
    if (a >= lattice->lattice.size() || b >= lattice->lattice.size())
      fail(ErrorKind::invalid_argument, "element index out of range");
    *out = make<cfglat_lattice>(interval(lattice->lattice, a, b));
  });
}

cfglat_status cfglat_synth_distributive(const cfglat_lattice* lattice,
                                        cfglat_game** out) {
  return guarded([&] {
    require(lattice, "lattice");
    require(out, "out");
    *out = make<cfglat_game>(cfg_from_distributive(lattice->lattice));
  });
}

cfglat_status cfglat_synth_uld(const cfglat_lattice* lattice, cfglat_game** out) {
  return guarded([&] {
    require(lattice, "lattice");
    require(out, "out");
    *out = make<cfglat_game>(coloured_from_uld(lattice->lattice));
  });
}

cfglat_status cfglat_game_simplify(const cfglat_game* game, size_t iteration_cap,
                                   uint64_t step_cap, cfglat_game** out,
                                   char** report_out) {
  return guarded([&] {
    require(out, "out");
    SimplifyOptions options;
    options.iteration_cap = or_default(iteration_cap, options.iteration_cap);
    options.step_cap = or_default(step_cap, kDefaultStepCap);
    SimplifyResult r = simplify(classical(game), options);
    std::string lines;
    for (const auto& s : r.splits)
      lines += "split " + s.vertex + " (iteration " + std::to_string(s.iteration) +
               ", N = " + std::to_string(s.n) + ") into " + s.low_name + ", " +
               s.high_name + "\n";
    char* text = report_out ? dup(lines) : nullptr;
    *out = make<cfglat_game>(std::move(r.game));
    if (report_out) *report_out = text;
  });
}

cfglat_status cfglat_game_interval(const cfglat_space* space, size_t a, size_t b,
                                   cfglat_game** out) {
  return guarded([&] {
    require(space, "space");
    require(out, "out");
    auto* s = std::get_if<ConfigSpace>(&space->space);
    if (!s) fail(ErrorKind::invalid_argument, "expected a classical space");
    *out = make<cfglat_game>(interval_cfg(space->game, *s, a, b));
  });
}

}  // extern "C"
