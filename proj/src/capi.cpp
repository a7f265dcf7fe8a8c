// SPDX-License-Identifier: MIT
#include "temporeach.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>

#include <json.hpp>

#include "temporeach/delay_solver.hpp"
#include "temporeach/errors.hpp"
#include "temporeach/instance_io.hpp"
#include "temporeach/merge_solver.hpp"
#include "temporeach/objective.hpp"
#include "temporeach/reach.hpp"
#include "temporeach/reductions.hpp"
#include "temporeach/scheme_io.hpp"

using nlohmann::json;
using namespace temporeach;

struct temporeach_instance {
    Instance value;
};

namespace {

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) return nullptr;
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void set_string(char** slot, const std::string& s) {
    if (slot) *slot = dup_string(s);
}

// Runs `body` and maps C++ errors onto status codes + errmsg.
template <typename Body>
temporeach_status guarded(char** errmsg, Body&& body) {
    if (errmsg) *errmsg = nullptr;
    try {
        return body();
    } catch (const ParseError& e) {
        set_string(errmsg, e.what());
        return TEMPOREACH_ERR_PARSE;
    } catch (const BudgetError& e) {
        set_string(errmsg, e.what());
        return TEMPOREACH_ERR_BUDGET;
    } catch (const UnsupportedError& e) {
        set_string(errmsg, e.what());
        return TEMPOREACH_ERR_UNSUPPORTED;
    } catch (const ValidationError& e) {
        set_string(errmsg, e.what());
        return TEMPOREACH_ERR_VALIDATION;
    } catch (const std::invalid_argument& e) {
        set_string(errmsg, e.what());
        return TEMPOREACH_ERR_INVALID_ARGUMENT;
    } catch (const std::exception& e) {
        set_string(errmsg, e.what());
        return TEMPOREACH_ERR_INTERNAL;
    }
}

json parse_options(const char* options_json) {
    if (!options_json || !*options_json) return json::object();
    json doc = json::parse(options_json, nullptr, false);
    if (doc.is_discarded() || !doc.is_object())
        throw std::invalid_argument("options must be a JSON object");
    return doc;
}

std::optional<int> opt_int(const json& options, const char* key) {
    if (!options.contains(key)) return std::nullopt;
    if (!options[key].is_number_integer())
        throw std::invalid_argument(std::string("option '") + key + "' must be an integer");
    return options[key].get<int>();
}

std::optional<std::string> opt_string(const json& options, const char* key) {
    if (!options.contains(key)) return std::nullopt;
    if (!options[key].is_string())
        throw std::invalid_argument(std::string("option '") + key + "' must be a string");
    return options[key].get<std::string>();
}

std::optional<bool> opt_bool(const json& options, const char* key) {
    if (!options.contains(key)) return std::nullopt;
    if (!options[key].is_boolean())
        throw std::invalid_argument(std::string("option '") + key + "' must be a boolean");
    return options[key].get<bool>();
}

Strictness strictness_option(const json& options) {
    const auto name = opt_string(options, "strictness").value_or("strict");
    if (name == "strict") return Strictness::Strict;
    if (name == "non-strict") return Strictness::NonStrict;
    throw std::invalid_argument("strictness must be 'strict' or 'non-strict'");
}

int required_param(std::optional<int> override_value, std::optional<int> instance_value,
                   const char* name) {
    if (override_value) return *override_value;
    if (instance_value) return *instance_value;
    throw std::invalid_argument(std::string("missing required parameter ") + name +
                                " (no option given and no instance param present)");
}

const Instance& deref(const temporeach_instance* inst) {
    if (!inst) throw std::invalid_argument("instance handle is NULL");
    return inst->value;
}

json merge_scheme_json(const MergingScheme& scheme) {
    return json::parse(serialize_merging_scheme(scheme));
}

json delay_scheme_json(const DelayScheme& scheme) {
    return json::parse(serialize_delay_scheme(scheme));
}

json all_objectives_json(const TemporalGraph& g, const std::vector<std::string>& sources) {
    json out = json::object();
    for (Objective objective :
         {Objective::MinReach, Objective::MaxReach, Objective::MinMaxReach,
          Objective::MaxMinReach, Objective::MinAvgReach, Objective::MaxAvgReach}) {
        out[objective_name(objective)] = evaluate_objective(g, sources, objective);
    }
    return out;
}

}  // namespace

extern "C" {

const char* temporeach_version(void) { return "1.0.0"; }

void temporeach_string_free(char* s) { std::free(s); }

temporeach_status temporeach_instance_parse(const char* text, temporeach_instance** out,
                                            char** errmsg) {
    return guarded(errmsg, [&]() {
        if (!text) throw std::invalid_argument("instance text is NULL");
        if (!out) throw std::invalid_argument("output handle is NULL");
        Instance parsed = parse_instance(text);
        *out = new (std::nothrow) temporeach_instance{std::move(parsed)};
        if (!*out) throw std::bad_alloc();
        return TEMPOREACH_OK;
    });
}

void temporeach_instance_free(temporeach_instance* inst) { delete inst; }

temporeach_status temporeach_instance_serialize(const temporeach_instance* inst, char** out,
                                                char** errmsg) {
    return guarded(errmsg, [&]() {
        if (!out) throw std::invalid_argument("output slot is NULL");
        set_string(out, serialize_instance(deref(inst)));
        return TEMPOREACH_OK;
    });
}

temporeach_status temporeach_reach(const temporeach_instance* inst, const char* options_json,
                                   char** report_json, char** errmsg) {
    return guarded(errmsg, [&]() {
        const Instance& instance = deref(inst);
        const json options = parse_options(options_json);
        const Strictness strictness = strictness_option(options);
        const std::optional<int> cutoff = opt_int(options, "cutoff");
        const bool per_source = opt_bool(options, "per_source").value_or(false);

        const auto arrival =
            earliest_arrival(instance.graph, instance.sources, strictness, cutoff);
        json report{{"strictness",
                     strictness == Strictness::Strict ? "strict" : "non-strict"},
                    {"cutoff", cutoff ? json(*cutoff) : json(nullptr)},
                    {"sources", instance.sources}};
        json reach = json::array();
        json arrivals = json::object();
        for (const auto& [v, t] : arrival) {
            reach.push_back(v);
            arrivals[v] = t;
        }
        report["reach"] = reach;
        report["size"] = arrival.size();
        report["arrival"] = arrivals;
        if (per_source) {
            json per = json::object();
            for (const auto& s : instance.sources) {
                const auto r = reach_set(instance.graph, {s}, strictness, cutoff);
                per[s] = {{"reach", r}, {"size", r.size()}};
            }
            report["per_source"] = per;
        }
        set_string(report_json, report.dump());
        return TEMPOREACH_OK;
    });
}

temporeach_status temporeach_solve_merge(const temporeach_instance* inst,
                                         const char* options_json, char** report_json,
                                         char** errmsg) {
    return guarded(errmsg, [&]() {
        const Instance& instance = deref(inst);
        const json options = parse_options(options_json);
        const auto objective_str = opt_string(options, "objective");
        if (!objective_str) throw std::invalid_argument("missing required option 'objective'");
        const Objective objective = objective_from_name(*objective_str);
        const int lambda =
            required_param(opt_int(options, "lambda"), instance.params.lambda, "lambda");
        const int mu = required_param(opt_int(options, "mu"), instance.params.mu, "mu");
        const auto mode_str = opt_string(options, "mode");
        const SolverMode mode = mode_str ? solver_mode_from_name(*mode_str)
                                         : (is_minimization(objective) ? SolverMode::Minimize
                                                                       : SolverMode::Maximize);
        MergeSolveOptions solve_options;
        if (auto limit = opt_int(options, "eval_limit")) solve_options.eval_limit = *limit;

        const MergeSolveResult result =
            solve_merge_exact(instance.graph, instance.sources, objective, lambda, mu, mode,
                              strictness_option(options), solve_options);
        json report{{"objective", objective_name(objective)},
                    {"mode", solver_mode_name(mode)},
                    {"lambda", lambda},
                    {"mu", mu},
                    {"baseline", result.baseline},
                    {"value", result.value},
                    {"evaluations", result.evaluations},
                    {"scheme", merge_scheme_json(result.scheme)}};
        set_string(report_json, report.dump());
        return TEMPOREACH_OK;
    });
}

temporeach_status temporeach_solve_delay(const temporeach_instance* inst,
                                         const char* options_json, char** report_json,
                                         char** errmsg) {
    return guarded(errmsg, [&]() {
        const Instance& instance = deref(inst);
        const json options = parse_options(options_json);
        const auto objective_str = opt_string(options, "objective");
        if (!objective_str) throw std::invalid_argument("missing required option 'objective'");
        const Objective objective = objective_from_name(*objective_str);
        const int delta =
            required_param(opt_int(options, "delta"), instance.params.delta, "delta");
        const int kappa =
            required_param(opt_int(options, "kappa"), instance.params.kappa, "kappa");
        DelaySolveOptions solve_options;
        if (auto limit = opt_int(options, "eval_limit")) solve_options.eval_limit = *limit;

        const DelaySolveResult result =
            solve_delay_exact(instance.graph, instance.sources, objective, delta, kappa,
                              strictness_option(options), solve_options);
        json report{{"objective", objective_name(objective)},
                    {"delta", delta},
                    {"kappa", kappa},
                    {"baseline", result.baseline},
                    {"value", result.value},
                    {"evaluations", result.evaluations},
                    {"scheme", delay_scheme_json(result.scheme)}};
        set_string(report_json, report.dump());
        return TEMPOREACH_OK;
    });
}

temporeach_status temporeach_greedy_delay(const temporeach_instance* inst,
                                          const char* options_json, char** report_json,
                                          char** errmsg) {
    return guarded(errmsg, [&]() {
        const Instance& instance = deref(inst);
        const json options = parse_options(options_json);
        const int delta =
            required_param(opt_int(options, "delta"), instance.params.delta, "delta");

        const GreedyDelayResult result = greedy_unbounded_delay(
            instance.graph, instance.sources, delta, strictness_option(options));
        json report{
            {"delta", delta},
            {"entries", result.scheme.delays.size()},
            {"scheme", delay_scheme_json(result.scheme)},
            {"reach_before",
             evaluate_objective(instance.graph, instance.sources, Objective::MinReach)},
            {"reach_after",
             evaluate_objective(result.delayed, instance.sources, Objective::MinReach)}};
        set_string(report_json, report.dump());
        return TEMPOREACH_OK;
    });
}

temporeach_status temporeach_verify(const temporeach_instance* inst, const char* scheme_json,
                                    const char* options_json, char** report_json,
                                    char** errmsg) {
    return guarded(errmsg, [&]() {
        const Instance& instance = deref(inst);
        if (!scheme_json) throw std::invalid_argument("scheme text is NULL");
        const json options = parse_options(options_json);

        const SchemeKind kind = detect_scheme_kind(scheme_json);
        TemporalGraph after;
        if (kind == SchemeKind::Merging) {
            const MergingScheme scheme = parse_merging_scheme(scheme_json);
            std::optional<int> lambda = opt_int(options, "lambda");
            if (!lambda) lambda = instance.params.lambda;
            std::optional<int> mu = opt_int(options, "mu");
            if (!mu) mu = instance.params.mu;
            validate_scheme(scheme, instance.graph.lifetime(), lambda, mu);
            after = apply_scheme(instance.graph, scheme);
        } else {
            const DelayScheme scheme = parse_delay_scheme(scheme_json);
            const int delta =
                required_param(opt_int(options, "delta"), instance.params.delta, "delta");
            std::optional<int> kappa = opt_int(options, "kappa");
            if (!kappa) kappa = instance.params.kappa;
            after = apply_delay_scheme(instance.graph, scheme, delta, kappa);
        }

        json report{{"kind", kind == SchemeKind::Merging ? "merging" : "delay"},
                    {"valid", true},
                    {"objectives", all_objectives_json(after, instance.sources)},
                    {"baseline_objectives",
                     all_objectives_json(instance.graph, instance.sources)}};
        set_string(report_json, report.dump());
        return TEMPOREACH_OK;
    });
}

temporeach_status temporeach_generate(const char* family, const char* payload,
                                      const char* options_json, char** instance_text,
                                      char** provenance_json, char** errmsg) {
    return guarded(errmsg, [&]() {
        if (!family) throw std::invalid_argument("family is NULL");
        const json options = parse_options(options_json);

        std::optional<Formula> formula;
        std::optional<PlainGraph> graph;
        if (payload && *payload) {
            if (std::string(family) == "clique-delay") {
                graph = parse_plain_graph(payload);
            } else {
                formula = parse_formula(payload);
            }
        }
        const ReductionInstance built =
            build_reduction(family, formula, graph, opt_int(options, "lambda"),
                            opt_int(options, "delta"), opt_int(options, "k"));
        set_string(instance_text, serialize_instance(built.instance));
        set_string(provenance_json, built.provenance_json);
        return TEMPOREACH_OK;
    });
}

}  // extern "C"
