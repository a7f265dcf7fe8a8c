/* SPDX-License-Identifier: MIT
 *
 * temporeach C API: reachability shaping in temporal graphs via label
 * merges and label delays.
 *
 * Conventions:
 *   - An instance handle is opaque; create with temporeach_instance_parse,
 *     destroy with temporeach_instance_free.
 *   - Every function returns a temporeach_status; on failure *errmsg (when
 *     non-NULL) receives a malloc'd description the caller frees with
 *     temporeach_string_free. Output strings follow the same rule.
 *   - Options go in as small JSON objects (pass NULL or "{}" for defaults);
 *     results come back as JSON reports. See the field lists below.
 */
#ifndef TEMPOREACH_H
#define TEMPOREACH_H

#ifdef __cplusplus
extern "C" {
#endif

#ifndef TEMPOREACH_API
#define TEMPOREACH_API __attribute__((visibility("default")))
#endif

typedef enum temporeach_status {
    TEMPOREACH_OK = 0,
    TEMPOREACH_ERR_PARSE = 2,            /* malformed instance/scheme/payload text */
    TEMPOREACH_ERR_BUDGET = 3,           /* evaluation budget or guard exceeded */
    TEMPOREACH_ERR_UNSUPPORTED = 4,      /* outside the supported surface */
    TEMPOREACH_ERR_VALIDATION = 5,       /* scheme violates a constraint */
    TEMPOREACH_ERR_INVALID_ARGUMENT = 6, /* bad options or parameters */
    TEMPOREACH_ERR_INTERNAL = 7
} temporeach_status;

typedef struct temporeach_instance temporeach_instance;

/* Library version, static storage (do not free). */
TEMPOREACH_API const char* temporeach_version(void);

/* Frees any string produced by this API. NULL is fine. */
TEMPOREACH_API void temporeach_string_free(char* s);

/* Parses the line-oriented instance format (vertex/edge/source/param/
 * directed directives). */
TEMPOREACH_API temporeach_status temporeach_instance_parse(const char* text,
                                                           temporeach_instance** out,
                                                           char** errmsg);

TEMPOREACH_API void temporeach_instance_free(temporeach_instance* inst);

/* Canonical instance text (round-trips through parse). */
TEMPOREACH_API temporeach_status temporeach_instance_serialize(const temporeach_instance* inst,
                                                               char** out, char** errmsg);

/* Reachability report.
 * options: {"strictness":"strict"|"non-strict", "cutoff":int,
 *           "per_source":bool}
 * report:  {"strictness","cutoff","sources","reach","size","arrival",
 *           "per_source"?} */
TEMPOREACH_API temporeach_status temporeach_reach(const temporeach_instance* inst,
                                                  const char* options_json,
                                                  char** report_json, char** errmsg);

/* Exact merge-scheme optimization.
 * options: {"objective":"MinReach"|..., "lambda":int, "mu":int,
 *           "mode":"minimize"|"maximize", "eval_limit":int}
 *          lambda/mu default to the instance params; mode defaults to the
 *          objective's direction.
 * report:  {"objective","mode","lambda","mu","baseline","value",
 *           "evaluations","scheme":{"merges":[{"start","len"}]}} */
TEMPOREACH_API temporeach_status temporeach_solve_merge(const temporeach_instance* inst,
                                                        const char* options_json,
                                                        char** report_json, char** errmsg);

/* Exact delay-scheme optimization (minimization objectives only).
 * options: {"objective","delta":int, "kappa":int, "eval_limit":int}
 *          delta/kappa default to the instance params.
 * report:  {"objective","delta","kappa","baseline","value","evaluations",
 *           "scheme":{"delays":[{"u","v","from","to"}]}} */
TEMPOREACH_API temporeach_status temporeach_solve_delay(const temporeach_instance* inst,
                                                        const char* options_json,
                                                        char** report_json, char** errmsg);

/* Frontier-chasing greedy delay (no entry-count budget).
 * options: {"delta":int} (defaults to the instance param)
 * report:  {"delta","entries","scheme","reach_before","reach_after"} */
TEMPOREACH_API temporeach_status temporeach_greedy_delay(const temporeach_instance* inst,
                                                         const char* options_json,
                                                         char** report_json, char** errmsg);

/* Validates a scheme ({"merges":[...]} or {"delays":[...]}) against the
 * instance, re-applies it, and reports every objective on the result.
 * options: {"lambda","mu","delta","kappa"} override the instance params;
 *          delay schemes require delta (option or instance param).
 * report:  {"kind","valid":true,"objectives":{name:value},
 *           "baseline_objectives":{name:value}}
 * An invalid scheme yields TEMPOREACH_ERR_VALIDATION and *errmsg names the
 * first violated constraint. */
TEMPOREACH_API temporeach_status temporeach_verify(const temporeach_instance* inst,
                                                   const char* scheme_json,
                                                   const char* options_json,
                                                   char** report_json, char** errmsg);

/* Builds a generator-family instance.
 * family:  minreach-path | minreach-tree | maxreach-path | maxreach-1src |
 *          maxreach-forest | maxreach-tree | clique-delay | fig1 | fig8
 * payload: formula text (one clause per line, literals x3 / -x3) for the
 *          formula families; plain graph text (vertex/edge lines) for
 *          clique-delay; NULL for fig1/fig8.
 * options: {"lambda":int, "delta":int, "k":int} as the family requires.
 * Outputs the canonical instance text and a provenance JSON document. */
TEMPOREACH_API temporeach_status temporeach_generate(const char* family, const char* payload,
                                                     const char* options_json,
                                                     char** instance_text,
                                                     char** provenance_json, char** errmsg);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* TEMPOREACH_H */
