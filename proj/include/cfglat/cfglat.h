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

#ifndef CFGLAT_CFGLAT_H_
#define CFGLAT_CFGLAT_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(CFGLAT_BUILDING)
#define CFGLAT_API __declspec(dllexport)
#else
#define CFGLAT_API __declspec(dllimport)
#endif
#else
#define CFGLAT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cfglat_status {
  CFGLAT_OK = 0,
  CFGLAT_INVALID_ARGUMENT = 1,
  CFGLAT_VALIDATION = 2,
  CFGLAT_PARSE = 3,
  CFGLAT_CAP_EXCEEDED = 4,
  CFGLAT_INTERNAL = 5
} cfglat_status;

typedef enum cfglat_order {
  CFGLAT_ORDER_LOWEST = 0,
  CFGLAT_ORDER_HIGHEST = 1,
  CFGLAT_ORDER_RANDOM = 2
} cfglat_order;

/* Classical or coloured game. */
typedef struct cfglat_game cfglat_game;
typedef struct cfglat_run cfglat_run;
/* Configuration space of a game, with the game it came from. */
typedef struct cfglat_space cfglat_space;
typedef struct cfglat_lattice cfglat_lattice;

typedef struct cfglat_lattice_summary {
  size_t size;
  size_t cover_count;
  size_t height;
  size_t join_irreducibles;
  size_t meet_irreducibles;
  int ranked;
  int distributive;
  int uld;
  int hypercube_detector;
  int meet_irreducible_detector;
} cfglat_lattice_summary;

/* Message of the last failed call on this thread ("" if none). */
CFGLAT_API const char* cfglat_last_error(void);
CFGLAT_API const char* cfglat_version(void);
/* Frees strings returned through char** out-parameters. */
CFGLAT_API void cfglat_string_free(char* s);

/* Caps (step_cap, state_cap, iteration_cap) of 0 select the library
 * defaults. */

/* Games ------------------------------------------------------------------ */

/* Coloured syntax is detected automatically. */
CFGLAT_API cfglat_status cfglat_game_parse(const char* text, cfglat_game** out);
CFGLAT_API cfglat_status cfglat_game_load(const char* path, cfglat_game** out);
CFGLAT_API void cfglat_game_free(cfglat_game* game);

CFGLAT_API int cfglat_game_is_coloured(const cfglat_game* game);
CFGLAT_API size_t cfglat_game_vertex_count(const cfglat_game* game);
/* Borrowed pointer, valid while the game lives; NULL when out of range. */
CFGLAT_API const char* cfglat_game_vertex_name(const cfglat_game* game,
                                               size_t vertex);
CFGLAT_API cfglat_status cfglat_game_to_text(const cfglat_game* game, char** out);
CFGLAT_API cfglat_status cfglat_game_to_dot(const cfglat_game* game, char** out);

/* 1 if every vertex (of every colour layer) reaches a sink. */
CFGLAT_API int cfglat_game_passes_guard(const cfglat_game* game);
CFGLAT_API cfglat_status cfglat_game_is_simple(const cfglat_game* game,
                                               uint64_t step_cap, int* out);
/* One-colour view of a simple classical game. */
CFGLAT_API cfglat_status cfglat_game_to_coloured(const cfglat_game* game,
                                                 cfglat_game** out);

/* Runs ------------------------------------------------------------------- */

CFGLAT_API cfglat_status cfglat_game_run(const cfglat_game* game,
                                         cfglat_order order, uint64_t seed,
                                         uint64_t step_cap, int record_trace,
                                         cfglat_run** out);
CFGLAT_API void cfglat_run_free(cfglat_run* run);
CFGLAT_API size_t cfglat_run_vertex_count(const cfglat_run* run);
CFGLAT_API int64_t cfglat_run_final_chips(const cfglat_run* run, size_t vertex);
CFGLAT_API int64_t cfglat_run_firings(const cfglat_run* run, size_t vertex);
CFGLAT_API int64_t cfglat_run_total_firings(const cfglat_run* run);
CFGLAT_API size_t cfglat_run_trace_length(const cfglat_run* run);
CFGLAT_API size_t cfglat_run_trace_at(const cfglat_run* run, size_t step);

/* Spaces ----------------------------------------------------------------- */

CFGLAT_API cfglat_status cfglat_space_enumerate(const cfglat_game* game,
                                                size_t state_cap,
                                                cfglat_space** out);
CFGLAT_API void cfglat_space_free(cfglat_space* space);
CFGLAT_API size_t cfglat_space_size(const cfglat_space* space);
CFGLAT_API size_t cfglat_space_height(const cfglat_space* space);
CFGLAT_API int cfglat_space_is_simple(const cfglat_space* space);
CFGLAT_API cfglat_status cfglat_space_element_name(const cfglat_space* space,
                                                   size_t element, char** out);
/* Element whose shot-set renders as `name`, e.g. "{a,c}" or "{}". */
CFGLAT_API cfglat_status cfglat_space_find(const cfglat_space* space,
                                           const char* name, size_t* out);
/* Join by the firing-vector formula (classical spaces). */
CFGLAT_API cfglat_status cfglat_space_join(const cfglat_space* space, size_t a,
                                           size_t b, size_t* out);
CFGLAT_API cfglat_status cfglat_space_lattice(const cfglat_space* space,
                                              cfglat_lattice** out);
CFGLAT_API cfglat_status cfglat_space_to_dot(const cfglat_space* space, char** out);

/* Lattices --------------------------------------------------------------- */

CFGLAT_API cfglat_status cfglat_lattice_parse(const char* text,
                                              cfglat_lattice** out);
CFGLAT_API cfglat_status cfglat_lattice_load(const char* path,
                                             cfglat_lattice** out);
CFGLAT_API void cfglat_lattice_free(cfglat_lattice* lattice);
CFGLAT_API size_t cfglat_lattice_size(const cfglat_lattice* lattice);
CFGLAT_API cfglat_status cfglat_lattice_find(const cfglat_lattice* lattice,
                                             const char* name, size_t* out);
CFGLAT_API cfglat_status cfglat_lattice_to_text(const cfglat_lattice* lattice,
                                                char** out);
CFGLAT_API cfglat_status cfglat_lattice_to_dot(const cfglat_lattice* lattice,
                                               int cover_labels, char** out);
CFGLAT_API cfglat_status cfglat_lattice_summarize(const cfglat_lattice* lattice,
                                                  cfglat_lattice_summary* out);
/* Multi-line human-readable report of every detector. */
CFGLAT_API cfglat_status cfglat_lattice_report(const cfglat_lattice* lattice,
                                               char** out);
/* found = 0 for distributive lattices; otherwise triple holds x, y, z. */
CFGLAT_API cfglat_status cfglat_lattice_distributivity_witness(
    const cfglat_lattice* lattice, int* found, size_t triple[3]);
CFGLAT_API cfglat_status cfglat_lattice_is_isomorphic(const cfglat_lattice* a,
                                                      const cfglat_lattice* b,
                                                      int* out);
CFGLAT_API cfglat_status cfglat_lattice_ideal_quotient(
    const cfglat_lattice* lattice, cfglat_lattice** out);
CFGLAT_API cfglat_status cfglat_lattice_interval(const cfglat_lattice* lattice,
                                                 size_t a, size_t b,
                                                 cfglat_lattice** out);

/* Transforms ------------------------------------------------------------- */

CFGLAT_API cfglat_status cfglat_synth_distributive(const cfglat_lattice* lattice,
                                                   cfglat_game** out);
CFGLAT_API cfglat_status cfglat_synth_uld(const cfglat_lattice* lattice,
                                          cfglat_game** out);
/* report (optional) receives one line per split. */
CFGLAT_API cfglat_status cfglat_game_simplify(const cfglat_game* game,
                                              size_t iteration_cap,
                                              uint64_t step_cap,
                                              cfglat_game** out, char** report);
/* Game whose space is [a, b] of `space`; space must come from a simple
 * classical game. */
CFGLAT_API cfglat_status cfglat_game_interval(const cfglat_space* space, size_t a,
                                              size_t b, cfglat_game** out);

#ifdef __cplusplus
}
#endif

#endif /* CFGLAT_CFGLAT_H_ */
