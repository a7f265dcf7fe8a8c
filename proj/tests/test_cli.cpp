// SPDX-License-Identifier: MIT
// End-to-end tests for the command-line binary. The binary under test is
// named by the TEMPOREACH_CLI environment variable (set by the build); each
// case drives it as a subprocess and inspects the JSON envelope, the stderr
// summary, and the exit code.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include "temporeach/instance_io.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

const fs::path& work_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() /
                     ("temporeach_cli_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string cli_path() {
    const char* env = std::getenv("TEMPOREACH_CLI");
    REQUIRE_MESSAGE(env != nullptr, "TEMPOREACH_CLI must point at the built binary");
    return env;
}

void write_text(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    REQUIRE(out.good());
    out << content;
}

std::string read_text(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

RunResult run_cli(const std::string& arguments) {
    const fs::path err_path = work_dir() / "stderr.txt";
    const std::string command =
        "'" + cli_path() + "' " + arguments + " 2>" + err_path.string();
    FILE* pipe = ::popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    char buffer[4096];
    std::size_t got = 0;
    while ((got = std::fread(buffer, 1, sizeof buffer, pipe)) > 0)
        result.out.append(buffer, got);
    const int status = ::pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.err = read_text(err_path);
    return result;
}

json envelope_of(const RunResult& result) {
    const json doc = json::parse(result.out, nullptr, false);
    REQUIRE_MESSAGE(!doc.is_discarded(), "stdout must be a JSON envelope");
    return doc;
}

// The digest algorithm the envelope promises: FNV-1a over the file bytes.
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

fs::path chain_path() {
    static const fs::path path = [] {
        const fs::path p = work_dir() / "chain.inst";
        write_text(p,
                   "edge x y 1\nedge y z 2\nsource x\nparam lambda 2\nparam mu 1\n");
        return p;
    }();
    return path;
}

fs::path frontier_path() {
    static const fs::path path = [] {
        const fs::path p = work_dir() / "frontier.inst";
        write_text(p, "edge s x 1\nedge s y 1\nedge y z 2\nsource s\nparam delta 1\n");
        return p;
    }();
    return path;
}

}  // namespace

TEST_CASE("reach emits a well-formed envelope") {
    const RunResult result = run_cli("reach " + chain_path().string());
    CHECK(result.exit_code == 0);
    const json env = envelope_of(result);
    CHECK(env.at("command") == "reach");
    CHECK(env.at("input") == chain_path().string());
    CHECK(env.at("digest") == fnv1a64_hex(read_text(chain_path())));
    CHECK(env.at("wall_ms").is_number_integer());
    CHECK(env.at("report").at("size") == 3);
    CHECK(env.at("report").at("reach") == json::array({"x", "y", "z"}));
    CHECK(result.err.find("3 vertices reachable") != std::string::npos);

    SUBCASE("the digest is stable across runs and tracks the bytes") {
        const RunResult again = run_cli("reach " + chain_path().string());
        CHECK(envelope_of(again).at("digest") == env.at("digest"));

        const fs::path other = work_dir() / "chain2.inst";
        write_text(other, "# comment\n" + read_text(chain_path()));
        const RunResult changed = run_cli("reach " + other.string());
        CHECK(envelope_of(changed).at("digest") != env.at("digest"));
        CHECK(envelope_of(changed).at("digest") == fnv1a64_hex(read_text(other)));
    }
    SUBCASE("cutoff and strictness flags pass through") {
        const RunResult cut =
            run_cli("reach " + chain_path().string() + " --cutoff 1");
        CHECK(envelope_of(cut).at("report").at("size") == 2);
        CHECK(envelope_of(cut).at("report").at("cutoff") == 1);
        const RunResult per =
            run_cli("reach " + chain_path().string() + " --per-source");
        CHECK(envelope_of(per).at("report").contains("per_source"));
    }
}

TEST_CASE("solve-merge solves and respects flag-over-param precedence") {
    const RunResult result =
        run_cli("solve-merge " + chain_path().string() + " --objective MinReach");
    CHECK(result.exit_code == 0);
    const json report = envelope_of(result).at("report");
    CHECK(report.at("value") == 2);
    CHECK(report.at("baseline") == 3);
    CHECK(report.at("lambda") == 2);  // from the instance params
    CHECK(report.at("mu") == 1);
    CHECK(report.at("scheme").at("merges") ==
          json::array({{{"start", 1}, {"len", 2}}}));

    SUBCASE("an explicit --mu overrides the instance param") {
        const RunResult zero = run_cli("solve-merge " + chain_path().string() +
                                       " --objective MinReach --mu 0");
        const json r = envelope_of(zero).at("report");
        CHECK(r.at("mu") == 0);
        CHECK(r.at("value") == 3);
        CHECK(r.at("scheme").at("merges").empty());
    }
}

TEST_CASE("exit codes map failure classes") {
    SUBCASE("missing required flags: 2") {
        const RunResult result = run_cli("solve-merge " + chain_path().string());
        CHECK(result.exit_code == 2);
        CHECK_FALSE(result.err.empty());
    }
    SUBCASE("unknown subcommands: 2") {
        CHECK(run_cli("frobnicate").exit_code == 2);
    }
    SUBCASE("unreadable input: 2") {
        const RunResult result =
            run_cli("reach " + (work_dir() / "missing.inst").string());
        CHECK(result.exit_code == 2);
        CHECK(result.err.find("cannot read") != std::string::npos);
    }
    SUBCASE("malformed instances: 2, with a line number") {
        const fs::path bad = work_dir() / "bad.inst";
        write_text(bad, "edge a a 1\n");
        const RunResult result = run_cli("reach " + bad.string());
        CHECK(result.exit_code == 2);
        CHECK(result.err.find("line 1") != std::string::npos);
    }
    SUBCASE("missing instance params: 2") {
        const fs::path bare = work_dir() / "bare.inst";
        write_text(bare, "edge a b 1\nsource a\n");
        const RunResult result =
            run_cli("solve-merge " + bare.string() + " --objective MinReach");
        CHECK(result.exit_code == 2);
        CHECK(result.err.find("lambda") != std::string::npos);
    }
    SUBCASE("evaluation budgets: 3") {
        const RunResult result = run_cli("solve-merge " + chain_path().string() +
                                         " --objective MinReach --limit 1");
        CHECK(result.exit_code == 3);
        CHECK(result.err.find("budget") != std::string::npos);
    }
    SUBCASE("unsupported requests: 4") {
        const RunResult result = run_cli("solve-delay " + frontier_path().string() +
                                         " --objective MaxReach --kappa 1");
        CHECK(result.exit_code == 4);
    }
    SUBCASE("invalid schemes: 5") {
        const fs::path scheme = work_dir() / "overlap.scheme.json";
        write_text(scheme,
                   R"({"merges": [{"start": 1, "len": 2}, {"start": 2, "len": 1}]})");
        const RunResult result = run_cli("verify " + chain_path().string() +
                                         " --scheme " + scheme.string());
        CHECK(result.exit_code == 5);
        CHECK(result.err.find("not independent") != std::string::npos);
    }
    SUBCASE("help: 0") {
        CHECK(run_cli("--help").exit_code == 0);
        CHECK(run_cli("solve-merge --help").exit_code == 0);
    }
}

TEST_CASE("solve-delay and greedy-delay answer on the frontier demo") {
    const RunResult solved = run_cli("solve-delay " + frontier_path().string() +
                                     " --objective MinReach --kappa 2");
    CHECK(solved.exit_code == 0);
    const json report = envelope_of(solved).at("report");
    CHECK(report.at("delta") == 1);
    CHECK(report.at("kappa") == 2);
    CHECK(report.at("value") == 3);
    CHECK(report.at("scheme").at("delays").size() == 2);

    const RunResult greedy = run_cli("greedy-delay " + frontier_path().string());
    CHECK(greedy.exit_code == 0);
    const json greport = envelope_of(greedy).at("report");
    CHECK(greport.at("entries") == 2);
    CHECK(greport.at("reach_before") == 4);
    CHECK(greport.at("reach_after") == 3);
    CHECK(greedy.err.find("union reach 4 -> 3") != std::string::npos);
}

TEST_CASE("verify round-trips a solver witness") {
    const fs::path scheme = work_dir() / "witness.scheme.json";
    const RunResult solved =
        run_cli("solve-merge " + chain_path().string() + " --objective MinReach");
    write_text(scheme, envelope_of(solved).at("report").at("scheme").dump());

    const RunResult verified =
        run_cli("verify " + chain_path().string() + " --scheme " + scheme.string());
    CHECK(verified.exit_code == 0);
    const json report = envelope_of(verified).at("report");
    CHECK(report.at("kind") == "merging");
    CHECK(report.at("valid") == true);
    CHECK(report.at("objectives").at("MinReach") == 2);
    CHECK(report.at("baseline_objectives").at("MinReach") == 3);
    CHECK(verified.err.find("merging scheme is valid") != std::string::npos);
}

TEST_CASE("gen writes the instance and its provenance next to it") {
    SUBCASE("demo family, no payload") {
        const fs::path out = work_dir() / "fig8.inst";
        const RunResult result =
            run_cli("gen --family fig8 --out " + out.string());
        CHECK(result.exit_code == 0);
        const json env = envelope_of(result);
        CHECK(env.at("command") == "gen");
        CHECK(env.at("input").is_null());
        CHECK(env.at("report").at("out") == out.string());

        REQUIRE(fs::exists(out));
        const auto inst = temporeach::parse_instance(read_text(out));
        CHECK(inst.graph.vertex_count() == 4);
        CHECK(inst.params.delta == 1);

        const fs::path prov = out.string() + ".provenance.json";
        REQUIRE(fs::exists(prov));
        const json doc = json::parse(read_text(prov), nullptr, false);
        REQUIRE_FALSE(doc.is_discarded());
        CHECK(doc.at("family") == "fig8");
    }
    SUBCASE("formula family from a payload file") {
        const fs::path formula = work_dir() / "phi.cnf";
        write_text(formula, "x1 -x2\nx2 -x1\n");
        const fs::path out = work_dir() / "minpath.inst";
        const RunResult result = run_cli("gen --family minreach-path --formula " +
                                         formula.string() + " --out " + out.string());
        CHECK(result.exit_code == 0);
        const json env = envelope_of(result);
        CHECK(env.at("input") == formula.string());
        CHECK(env.at("digest") == fnv1a64_hex(read_text(formula)));

        const auto inst = temporeach::parse_instance(read_text(out));
        CHECK(inst.graph.vertex_count() == 18);  // 9m with m = 2
        CHECK(inst.params.mu == 4);              // m + n
    }
    SUBCASE("clique family from a graph payload") {
        const fs::path graph = work_dir() / "triangle.graph";
        write_text(graph, "edge a b\nedge b c\nedge a c\n");
        const fs::path out = work_dir() / "clique.inst";
        const RunResult result = run_cli("gen --family clique-delay --graph " +
                                         graph.string() + " --k 3 --out " +
                                         out.string());
        CHECK(result.exit_code == 0);
        const auto inst = temporeach::parse_instance(read_text(out));
        CHECK(inst.graph.vertex_count() == 7);
        CHECK(inst.params.kappa == 3);
    }
    SUBCASE("gen failures: 2") {
        const fs::path out = work_dir() / "never.inst";
        CHECK(run_cli("gen --family bogus --out " + out.string()).exit_code == 2);
        CHECK(run_cli("gen --family minreach-path --out " + out.string()).exit_code ==
              2);
        CHECK_FALSE(fs::exists(out));
    }
}
