// SPDX-License-Identifier: MIT
// Command-line front end over the shared library's C API.
//
// Every successful run prints one JSON envelope on stdout:
//   {"command", "input", "digest", "report", "wall_ms"}
// where digest is the FNV-1a 64-bit hash (hex) of the raw input file bytes
// and report is the C API's JSON report. A one-line human summary goes to
// stderr. Failures print `error: ...` on stderr and exit with:
//   2  bad usage, unreadable files, parse errors, bad options
//   3  an evaluation budget or guard tripped
//   4  a request outside the supported surface
//   5  an invalid scheme
#include <CLI11.hpp>
#include <json.hpp>
#include <temporeach.h>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using nlohmann::json;

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

bool write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) return false;
    out << content;
    return static_cast<bool>(out);
}

std::string fnv1a64_hex(const std::string& bytes) {
    std::uint64_t hash = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

int exit_code_for(temporeach_status status) {
    switch (status) {
        case TEMPOREACH_OK: return 0;
        case TEMPOREACH_ERR_PARSE: return 2;
        case TEMPOREACH_ERR_BUDGET: return 3;
        case TEMPOREACH_ERR_UNSUPPORTED: return 4;
        case TEMPOREACH_ERR_VALIDATION: return 5;
        case TEMPOREACH_ERR_INVALID_ARGUMENT: return 2;
        case TEMPOREACH_ERR_INTERNAL: break;
    }
    return 1;
}

// Takes ownership of the C API's error string, reports it, maps the status.
int fail(temporeach_status status, char* errmsg) {
    std::cerr << "error: " << (errmsg ? errmsg : "unknown failure") << "\n";
    temporeach_string_free(errmsg);
    return exit_code_for(status);
}

int fail_usage(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return 2;
}

void emit_envelope(const std::string& command, const json& input,
                   const std::string& digest, const json& report, long long wall_ms) {
    const json envelope{{"command", command},
                        {"input", input},
                        {"digest", digest},
                        {"report", report},
                        {"wall_ms", wall_ms}};
    std::cout << envelope.dump(2) << "\n";
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    long long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

// Shared state for the subcommands that read one instance file.
struct InstanceArgs {
    std::string path;
    std::optional<int> cutoff;
    std::optional<std::string> strictness;
    bool per_source = false;
    std::optional<std::string> objective;
    std::optional<int> lambda;
    std::optional<int> mu;
    std::optional<std::string> mode;
    std::optional<int> delta;
    std::optional<int> kappa;
    std::optional<long long> limit;
    std::string scheme_path;
};

// Runs one C API instance call and emits the envelope. `invoke` receives
// the parsed instance and must fill a malloc'd report.
template <typename Invoke>
int run_instance_command(const std::string& command, const InstanceArgs& args,
                         const json& options, Invoke&& invoke,
                         const std::function<std::string(const json&)>& summarize) {
    const auto text = read_file(args.path);
    if (!text) return fail_usage("cannot read instance file '" + args.path + "'");

    Timer timer;
    temporeach_instance* inst = nullptr;
    char* errmsg = nullptr;
    temporeach_status status = temporeach_instance_parse(text->c_str(), &inst, &errmsg);
    if (status != TEMPOREACH_OK) return fail(status, errmsg);

    char* report_text = nullptr;
    status = invoke(inst, options.dump().c_str(), &report_text, &errmsg);
    temporeach_instance_free(inst);
    if (status != TEMPOREACH_OK) return fail(status, errmsg);

    const json report = json::parse(report_text);
    temporeach_string_free(report_text);
    emit_envelope(command, args.path, fnv1a64_hex(*text), report, timer.ms());
    std::cerr << summarize(report) << "\n";
    return 0;
}

json reach_options(const InstanceArgs& args) {
    json options = json::object();
    if (args.cutoff) options["cutoff"] = *args.cutoff;
    if (args.strictness) options["strictness"] = *args.strictness;
    if (args.per_source) options["per_source"] = true;
    return options;
}

json solve_merge_options(const InstanceArgs& args) {
    json options = json::object();
    if (args.objective) options["objective"] = *args.objective;
    if (args.lambda) options["lambda"] = *args.lambda;
    if (args.mu) options["mu"] = *args.mu;
    if (args.mode) options["mode"] = *args.mode;
    if (args.limit) options["eval_limit"] = *args.limit;
    return options;
}

json solve_delay_options(const InstanceArgs& args) {
    json options = json::object();
    if (args.objective) options["objective"] = *args.objective;
    if (args.delta) options["delta"] = *args.delta;
    if (args.kappa) options["kappa"] = *args.kappa;
    if (args.limit) options["eval_limit"] = *args.limit;
    return options;
}

json verify_options(const InstanceArgs& args) {
    json options = json::object();
    if (args.lambda) options["lambda"] = *args.lambda;
    if (args.mu) options["mu"] = *args.mu;
    if (args.delta) options["delta"] = *args.delta;
    if (args.kappa) options["kappa"] = *args.kappa;
    return options;
}

struct GenArgs {
    std::string family;
    std::string formula_path;
    std::string graph_path;
    std::optional<int> lambda;
    std::optional<int> delta;
    std::optional<int> k;
    std::string out_path;
};

int run_gen(const GenArgs& args) {
    std::optional<std::string> payload;
    std::string payload_path;
    if (!args.formula_path.empty() && !args.graph_path.empty())
        return fail_usage("give either --formula or --graph, not both");
    if (!args.formula_path.empty()) payload_path = args.formula_path;
    if (!args.graph_path.empty()) payload_path = args.graph_path;
    if (!payload_path.empty()) {
        payload = read_file(payload_path);
        if (!payload) return fail_usage("cannot read payload file '" + payload_path + "'");
    }

    json options = json::object();
    if (args.lambda) options["lambda"] = *args.lambda;
    if (args.delta) options["delta"] = *args.delta;
    if (args.k) options["k"] = *args.k;

    Timer timer;
    char* instance_text = nullptr;
    char* provenance = nullptr;
    char* errmsg = nullptr;
    const temporeach_status status = temporeach_generate(
        args.family.c_str(), payload ? payload->c_str() : nullptr,
        options.dump().c_str(), &instance_text, &provenance, &errmsg);
    if (status != TEMPOREACH_OK) return fail(status, errmsg);

    const std::string provenance_path = args.out_path + ".provenance.json";
    const bool wrote = write_file(args.out_path, instance_text) &&
                       write_file(provenance_path, provenance);
    temporeach_string_free(instance_text);
    temporeach_string_free(provenance);
    if (!wrote) return fail_usage("cannot write output file '" + args.out_path + "'");

    const json report{{"family", args.family},
                      {"out", args.out_path},
                      {"provenance_out", provenance_path}};
    emit_envelope("gen", payload_path.empty() ? json(nullptr) : json(payload_path),
                  fnv1a64_hex(payload.value_or("")), report, timer.ms());
    std::cerr << "gen: " << args.family << " -> " << args.out_path << " (+ "
              << provenance_path << ")\n";
    return 0;
}

int run_verify(const InstanceArgs& args) {
    const auto text = read_file(args.path);
    if (!text) return fail_usage("cannot read instance file '" + args.path + "'");
    const auto scheme_text = read_file(args.scheme_path);
    if (!scheme_text)
        return fail_usage("cannot read scheme file '" + args.scheme_path + "'");

    Timer timer;
    temporeach_instance* inst = nullptr;
    char* errmsg = nullptr;
    temporeach_status status = temporeach_instance_parse(text->c_str(), &inst, &errmsg);
    if (status != TEMPOREACH_OK) return fail(status, errmsg);

    char* report_text = nullptr;
    status = temporeach_verify(inst, scheme_text->c_str(),
                               verify_options(args).dump().c_str(), &report_text,
                               &errmsg);
    temporeach_instance_free(inst);
    if (status != TEMPOREACH_OK) return fail(status, errmsg);

    const json report = json::parse(report_text);
    temporeach_string_free(report_text);
    emit_envelope("verify", args.path, fnv1a64_hex(*text), report, timer.ms());
    std::cerr << "verify: " << report.at("kind").get<std::string>()
              << " scheme is valid\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"reachability shaping in temporal graphs (merges and delays)"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(temporeach_version()));

    InstanceArgs args;
    GenArgs gen_args;
    int exit_code = 0;

    auto* reach = app.add_subcommand("reach", "earliest arrivals and reach sets");
    reach->add_option("instance", args.path, "instance file")->required();
    reach->add_option("--cutoff", args.cutoff, "ignore arrivals after this step");
    reach->add_option("--strictness", args.strictness, "strict | non-strict");
    reach->add_flag("--per-source", args.per_source, "also report per-source reach");
    reach->callback([&] {
        exit_code = run_instance_command(
            "reach", args, reach_options(args), temporeach_reach, [](const json& r) {
                return "reach: " + std::to_string(r.at("size").get<long long>()) +
                       " vertices reachable from " +
                       std::to_string(r.at("sources").size()) + " source(s)";
            });
    });

    auto* solve_merge =
        app.add_subcommand("solve-merge", "optimal bounded merging scheme");
    solve_merge->add_option("instance", args.path, "instance file")->required();
    solve_merge->add_option("--objective", args.objective,
                            "MinReach | MaxReach | MinMaxReach | MaxMinReach | "
                            "MinAvgReach | MaxAvgReach")
        ->required();
    solve_merge->add_option("--lambda", args.lambda, "window length cap");
    solve_merge->add_option("--mu", args.mu, "merge count");
    solve_merge->add_option("--mode", args.mode, "minimize | maximize");
    solve_merge->add_option("--limit", args.limit, "evaluation budget");
    solve_merge->callback([&] {
        exit_code = run_instance_command(
            "solve-merge", args, solve_merge_options(args), temporeach_solve_merge,
            [](const json& r) {
                return "solve-merge: " + r.at("objective").get<std::string>() + " (" +
                       r.at("mode").get<std::string>() + ") value " +
                       std::to_string(r.at("value").get<long long>()) +
                       ", baseline " +
                       std::to_string(r.at("baseline").get<long long>()) + ", " +
                       std::to_string(r.at("scheme").at("merges").size()) +
                       " merge(s)";
            });
    });

    auto* solve_delay =
        app.add_subcommand("solve-delay", "optimal bounded delay scheme");
    solve_delay->add_option("instance", args.path, "instance file")->required();
    solve_delay->add_option("--objective", args.objective,
                            "MinReach | MinMaxReach | MinAvgReach")
        ->required();
    solve_delay->add_option("--delta", args.delta, "per-label delay budget");
    solve_delay->add_option("--kappa", args.kappa, "delayed instance count");
    solve_delay->add_option("--limit", args.limit, "evaluation budget");
    solve_delay->callback([&] {
        exit_code = run_instance_command(
            "solve-delay", args, solve_delay_options(args), temporeach_solve_delay,
            [](const json& r) {
                return "solve-delay: " + r.at("objective").get<std::string>() +
                       " value " + std::to_string(r.at("value").get<long long>()) +
                       ", baseline " +
                       std::to_string(r.at("baseline").get<long long>()) + ", " +
                       std::to_string(r.at("scheme").at("delays").size()) +
                       " delay(s)";
            });
    });

    auto* greedy = app.add_subcommand("greedy-delay", "frontier-chasing greedy delays");
    greedy->add_option("instance", args.path, "instance file")->required();
    greedy->add_option("--delta", args.delta, "per-label delay budget");
    greedy->callback([&] {
        json options = json::object();
        if (args.delta) options["delta"] = *args.delta;
        exit_code = run_instance_command(
            "greedy-delay", args, options, temporeach_greedy_delay, [](const json& r) {
                return "greedy-delay: " +
                       std::to_string(r.at("entries").get<long long>()) +
                       " delay(s), union reach " +
                       std::to_string(r.at("reach_before").get<long long>()) + " -> " +
                       std::to_string(r.at("reach_after").get<long long>());
            });
    });

    auto* verify = app.add_subcommand("verify", "validate a scheme and re-measure");
    verify->add_option("instance", args.path, "instance file")->required();
    verify->add_option("--scheme", args.scheme_path, "scheme JSON file")->required();
    verify->add_option("--lambda", args.lambda, "window length cap");
    verify->add_option("--mu", args.mu, "merge count budget");
    verify->add_option("--delta", args.delta, "per-label delay budget");
    verify->add_option("--kappa", args.kappa, "delay entry budget");
    verify->callback([&] { exit_code = run_verify(args); });

    auto* gen = app.add_subcommand("gen", "build a generator-family instance");
    gen->add_option("--family", gen_args.family, "family name")->required();
    gen->add_option("--formula", gen_args.formula_path, "formula file payload");
    gen->add_option("--graph", gen_args.graph_path, "plain graph file payload");
    gen->add_option("--lambda", gen_args.lambda, "window length (minreach-tree)");
    gen->add_option("--delta", gen_args.delta, "delay budget (clique-delay)");
    gen->add_option("--k", gen_args.k, "clique size (clique-delay)");
    gen->add_option("--out", gen_args.out_path, "output instance path")->required();
    gen->callback([&] { exit_code = run_gen(gen_args); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    return exit_code;
}
