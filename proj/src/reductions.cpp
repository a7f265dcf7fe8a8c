// SPDX-License-Identifier: MIT
#include "temporeach/reductions.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "temporeach/errors.hpp"
#include "temporeach/merge.hpp"

namespace temporeach {

namespace {

using nlohmann::json;

std::string nm(const char* prefix, int k) { return prefix + std::to_string(k); }

void require_clauses(const Formula& phi) {
    validate_formula(phi);
    if (phi.clauses.empty())
        throw std::invalid_argument("formula must have at least one clause");
}

json params_json(const Params& p) {
    json out = json::object();
    if (p.lambda) out["lambda"] = *p.lambda;
    if (p.mu) out["mu"] = *p.mu;
    if (p.delta) out["delta"] = *p.delta;
    if (p.kappa) out["kappa"] = *p.kappa;
    return out;
}

std::string provenance(const std::string& family, const ReductionInstance& r,
                       const json& extra) {
    json doc{{"family", family},
             {"objective", objective_name(r.objective)},
             {"mode", solver_mode_name(r.mode)},
             {"params", params_json(r.instance.params)}};
    for (auto it = extra.begin(); it != extra.end(); ++it) doc[it.key()] = it.value();
    return doc.dump(2) + "\n";
}

// End-to-center labels of a variable-coded two-edge side (outer = the edge
// further from the center).
struct VarSide {
    int outer = 0;
    int inner = 0;
};

// Clause-gadget side for the min-reach path family: the variable's movement
// window sits at M+4i..M+4i+2; a positive literal uses the window's upper
// two steps, a negative one its lower two.
VarSide min_side(const Literal& lit, int M) {
    const int b = M + 4 * lit.variable;
    return lit.negated ? VarSide{b, b + 1} : VarSide{b + 1, b + 2};
}

// Clause-path side for the max-reach path family: the variable window sits
// at 3i-2..3i; positive literals use its lower two steps, negative its
// upper two. Labels run end-to-center.
VarSide max_side(const Literal& lit) {
    const int b = 3 * lit.variable;
    return lit.negated ? VarSide{b - 1, b} : VarSide{b - 2, b - 1};
}

// Clause-tree side for the forest family: variable windows sit at
// 3m+3i-2..3m+3i with the same polarity split as max_side.
VarSide forest_side(const Literal& lit, int m) {
    const int b = 3 * m + 3 * lit.variable;
    return lit.negated ? VarSide{b - 1, b} : VarSide{b - 2, b - 1};
}

// Nine-vertex clause gadget of the min-reach path family. `relabel` maps
// the schedule step to the final label (identity for the plain family,
// spacing/shifting for derived families).
template <typename Relabel>
void add_min_gadget(TemporalGraph& g, const Formula& phi, int k, Relabel relabel) {
    const Clause& clause = phi.clauses[static_cast<std::size_t>(k - 1)];
    const int m = static_cast<int>(phi.clauses.size());
    const int M = 4 * m + 4;
    const std::string c = nm("c", k);
    g.add_edge(c, nm("yl", k), {relabel(4 * k)});
    g.add_edge(nm("yl", k), nm("zl", k), {relabel(4 * k + 1)});
    g.add_edge(c, nm("yr", k), {relabel(4 * k + 1)});
    g.add_edge(nm("yr", k), nm("zr", k), {relabel(4 * k + 2)});
    const VarSide left = min_side(clause.first, M);
    g.add_edge(nm("zl", k), nm("wl", k), {relabel(left.outer)});
    g.add_edge(nm("wl", k), nm("vl", k), {relabel(left.inner)});
    const VarSide right = min_side(clause.second, M);
    g.add_edge(nm("zr", k), nm("wr", k), {relabel(right.outer)});
    g.add_edge(nm("wr", k), nm("vr", k), {relabel(right.inner)});
}

int spacing_offset(int lambda) { return std::max(0, 3 - lambda); }

}  // namespace

ReductionInstance build_minreach_path(const Formula& phi) {
    require_clauses(phi);
    const int m = static_cast<int>(phi.clauses.size());
    const int n = phi.variable_count;

    ReductionInstance r;
    r.family = "minreach-path";
    r.objective = Objective::MinReach;
    r.mode = SolverMode::Minimize;
    TemporalGraph& g = r.instance.graph;
    auto identity = [](int t) { return t; };
    for (int k = 1; k <= m; ++k) {
        add_min_gadget(g, phi, k, identity);
        r.instance.sources.push_back(nm("c", k));
    }
    for (int k = 1; k < m; ++k) g.add_edge(nm("vr", k), nm("vl", k + 1), {1});
    std::sort(r.instance.sources.begin(), r.instance.sources.end());
    r.instance.params.lambda = 2;
    r.instance.params.mu = m + n;
    r.provenance_json =
        provenance(r.family, r, {{"n", n}, {"m", m}, {"formula", serialize_formula(phi)}});
    return r;
}

TemporalGraph lambda_space(const TemporalGraph& g, int lambda) {
    if (lambda < 1) throw std::invalid_argument("lambda must be >= 1");
    const int c = spacing_offset(lambda);
    TemporalGraph out(g.directed());
    for (const auto& v : g.vertices()) out.add_vertex(v);
    for (const auto& e : g.edges()) {
        std::vector<int> labels;
        labels.reserve(e.labels.size());
        for (int l : e.labels) labels.push_back(lambda * l - 2 + c);
        out.add_edge(e.u, e.v, labels);
    }
    return out;
}

ReductionInstance build_minreach_tree_single_source(const Formula& phi, int lambda) {
    require_clauses(phi);
    if (lambda < 1) throw std::invalid_argument("lambda must be >= 1");
    const int m = static_cast<int>(phi.clauses.size());
    const int n = phi.variable_count;
    const int c = spacing_offset(lambda);
    const int shift = lambda * (m + 1);

    ReductionInstance r;
    r.family = "minreach-tree";
    r.objective = Objective::MinReach;
    r.mode = SolverMode::Minimize;
    TemporalGraph& g = r.instance.graph;

    // Spine: the single source walks cp0..cpm, handing each gadget center
    // its arrival no later than step lambda*(m+1); the lambda-spaced
    // gadgets start strictly afterwards.
    g.add_edge("cp0", "cp1", {lambda});
    for (int i = 2; i <= m; ++i) {
        g.add_edge(nm("cp", i - 1), nm("cp", i), {lambda * i});
        g.add_edge(nm("cp", i - 1), nm("c", i - 1), {lambda * i});
    }
    g.add_edge(nm("cp", m), nm("c", m), {lambda * (m + 1)});

    auto spaced_shifted = [&](int t) { return shift + lambda * t - 2 + c; };
    for (int k = 1; k <= m; ++k) add_min_gadget(g, phi, k, spaced_shifted);

    r.instance.sources = {"cp0"};
    r.instance.params.lambda = lambda;
    r.instance.params.mu = m + n;
    r.provenance_json = provenance(
        r.family, r,
        {{"n", n}, {"m", m}, {"lambda", lambda}, {"formula", serialize_formula(phi)}});
    return r;
}

ReductionInstance build_maxreach_path(const Formula& phi) {
    require_clauses(phi);
    const int m = static_cast<int>(phi.clauses.size());
    const int n = phi.variable_count;

    ReductionInstance r;
    r.family = "maxreach-path";
    r.objective = Objective::MaxReach;
    r.mode = SolverMode::Maximize;
    TemporalGraph& g = r.instance.graph;

    // Variable paths: junction j{i-1} ... j{i} with end edges at 3i and the
    // three interior edges at 3i+1. Merging (3i, 2) strands exactly the two
    // central interiors.
    for (int i = 1; i <= n; ++i) {
        g.add_edge(nm("j", i - 1), nm("vp", i) + "a", {3 * i});
        g.add_edge(nm("vp", i) + "a", nm("vp", i) + "b", {3 * i + 1});
        g.add_edge(nm("vp", i) + "b", nm("vp", i) + "c", {3 * i + 1});
        g.add_edge(nm("vp", i) + "c", nm("vp", i) + "d", {3 * i + 1});
        g.add_edge(nm("vp", i) + "d", nm("j", i), {3 * i});
    }
    // Clause paths: junction - dl - c - dr - junction, labels end-to-center
    // coding each side's literal.
    for (int k = 1; k <= m; ++k) {
        const Clause& clause = phi.clauses[static_cast<std::size_t>(k - 1)];
        const VarSide left = max_side(clause.first);
        const VarSide right = max_side(clause.second);
        g.add_edge(nm("j", n + k - 1), nm("dl", k), {left.outer});
        g.add_edge(nm("dl", k), nm("c", k), {left.inner});
        g.add_edge(nm("j", n + k), nm("dr", k), {right.outer});
        g.add_edge(nm("dr", k), nm("c", k), {right.inner});
    }
    for (int i = 0; i <= n + m; ++i) r.instance.sources.push_back(nm("j", i));
    std::sort(r.instance.sources.begin(), r.instance.sources.end());
    r.instance.params.lambda = 2;
    r.instance.params.mu = n;
    r.provenance_json =
        provenance(r.family, r, {{"n", n}, {"m", m}, {"formula", serialize_formula(phi)}});
    return r;
}

ReductionInstance build_maxreach_single_source(const Formula& phi) {
    require_clauses(phi);
    const int m = static_cast<int>(phi.clauses.size());
    const int n = phi.variable_count;
    const int S = 2 * n + 3 * m + 2;  // gadget label shift; spine top arrives here

    ReductionInstance r;
    r.family = "maxreach-1src";
    r.objective = Objective::MaxReach;
    r.mode = SolverMode::Maximize;
    TemporalGraph& g = r.instance.graph;

    // Spine: w_j arrives at j-1, so every attachment label below matches
    // its spine vertex's arrival plus one and stays alive.
    for (int i = 2; i <= 2 * n + 3 * m + 3; ++i)
        g.add_edge(nm("w", i - 1), nm("w", i), {i - 1});
    // Tail: four more spine vertices on steps >= S+2 spaced by three, kept
    // off the busiest shifted gadget steps.
    for (int j = 0; j < 4; ++j)
        g.add_edge(nm("w", 2 * n + 3 * m + 3 + j), nm("w", 2 * n + 3 * m + 4 + j),
                   {S + 2 + 3 * j});

    // Disjoint variable gadgets (six-vertex paths) and clause gadgets
    // (five-vertex paths), all labels shifted past the spine.
    for (int i = 1; i <= n; ++i) {
        g.add_edge(nm("yl", i), nm("vp", i) + "a", {S + 3 * i});
        g.add_edge(nm("vp", i) + "a", nm("vp", i) + "b", {S + 3 * i + 1});
        g.add_edge(nm("vp", i) + "b", nm("vp", i) + "c", {S + 3 * i + 1});
        g.add_edge(nm("vp", i) + "c", nm("vp", i) + "d", {S + 3 * i + 1});
        g.add_edge(nm("vp", i) + "d", nm("yr", i), {S + 3 * i});
        g.add_edge(nm("yl", i), nm("w", 2 * i - 1), {2 * i - 1});
        g.add_edge(nm("yr", i), nm("w", 2 * i), {2 * i});
    }
    for (int k = 1; k <= m; ++k) {
        const Clause& clause = phi.clauses[static_cast<std::size_t>(k - 1)];
        const VarSide left = max_side(clause.first);
        const VarSide right = max_side(clause.second);
        g.add_edge(nm("vl", k), nm("dl", k), {S + left.outer});
        g.add_edge(nm("dl", k), nm("c", k), {S + left.inner});
        g.add_edge(nm("vr", k), nm("dr", k), {S + right.outer});
        g.add_edge(nm("dr", k), nm("c", k), {S + right.inner});
        g.add_edge(nm("vl", k), nm("w", 2 * n + 3 * k), {2 * n + 3 * k});
        g.add_edge(nm("vr", k), nm("w", 2 * n + 3 * k + 2), {2 * n + 3 * k + 2});
    }

    r.instance.sources = {"w1"};
    r.instance.params.lambda = 2;
    r.instance.params.mu = n;
    r.provenance_json =
        provenance(r.family, r, {{"n", n}, {"m", m}, {"formula", serialize_formula(phi)}});
    return r;
}

ReductionInstance build_maxreach_forest(const Formula& phi) {
    require_clauses(phi);
    const int m = static_cast<int>(phi.clauses.size());
    const int n = phi.variable_count;

    ReductionInstance r;
    r.family = "maxreach-forest";
    r.objective = Objective::MaxReach;
    r.mode = SolverMode::Maximize;
    TemporalGraph& g = r.instance.graph;

    for (int k = 1; k <= m; ++k) {
        const Clause& clause = phi.clauses[static_cast<std::size_t>(k - 1)];
        const std::string c = nm("c", k);
        g.add_edge(c, nm("yl", k), {3 * k - 2});
        g.add_edge(nm("yl", k), nm("zl", k), {3 * k - 1});
        g.add_edge(c, nm("yr", k), {3 * k - 1});
        g.add_edge(nm("yr", k), nm("zr", k), {3 * k});
        const VarSide left = forest_side(clause.first, m);
        g.add_edge(nm("zl", k), nm("wl", k), {left.outer});
        g.add_edge(nm("wl", k), nm("vl", k), {left.inner});
        const VarSide right = forest_side(clause.second, m);
        g.add_edge(nm("zr", k), nm("wr", k), {right.outer});
        g.add_edge(nm("wr", k), nm("vr", k), {right.inner});
        r.instance.sources.push_back(c);
        // Six fresh two-edge paths whose labels ride the clause window.
        for (int t = 1; t <= 6; ++t) {
            const std::string base = nm("pk", k) + "t" + std::to_string(t);
            g.add_edge(base + "a", base + "b", {3 * k});
            g.add_edge(base + "b", base + "c", {3 * k + 1});
            r.instance.sources.push_back(base + "a");
        }
    }
    // Six fresh two-edge paths per variable riding the variable window.
    for (int i = 1; i <= n; ++i) {
        for (int t = 1; t <= 6; ++t) {
            const std::string base = nm("qv", i) + "t" + std::to_string(t);
            g.add_edge(base + "a", base + "b", {3 * m + 3 * i});
            g.add_edge(base + "b", base + "c", {3 * m + 3 * i + 1});
            r.instance.sources.push_back(base + "a");
        }
    }
    std::sort(r.instance.sources.begin(), r.instance.sources.end());
    r.instance.params.lambda = 2;
    r.instance.params.mu = m + n;
    r.provenance_json =
        provenance(r.family, r, {{"n", n}, {"m", m}, {"formula", serialize_formula(phi)}});
    return r;
}

ReductionInstance build_maxreach_tree_single_source(const Formula& phi) {
    require_clauses(phi);
    const int m = static_cast<int>(phi.clauses.size());
    const int n = phi.variable_count;
    const int B = 7 * m + 6 * n;  // forest label shift

    ReductionInstance forest = build_maxreach_forest(phi);

    ReductionInstance r;
    r.family = "maxreach-tree";
    r.objective = Objective::MaxReach;
    r.mode = SolverMode::Maximize;
    TemporalGraph& g = r.instance.graph;

    // Spine: clause stops, then clause-path stops, then variable-path
    // stops, then a ten-vertex tail on every third step.
    for (int i = 1; i < m; ++i) g.add_edge(nm("sc", i), nm("sc", i + 1), {i});
    g.add_edge(nm("sc", m), "sp1", {m});
    for (int i = 1; i < 6 * m; ++i) g.add_edge(nm("sp", i), nm("sp", i + 1), {m + i});
    g.add_edge(nm("sp", 6 * m), "sv1", {7 * m});
    for (int i = 1; i < 6 * n; ++i) g.add_edge(nm("sv", i), nm("sv", i + 1), {7 * m + i});
    g.add_edge(nm("sv", 6 * n), "sq1", {7 * m + 6 * n});
    for (int i = 1; i <= 9; ++i)
        g.add_edge(nm("sq", i), nm("sq", i + 1), {7 * m + 6 * n + 3 * i - 1});

    // Attachments: each former source hangs off its spine stop one step
    // after the stop's arrival.
    for (int k = 1; k <= m; ++k) g.add_edge(nm("sc", k), nm("c", k), {k});
    for (int i = 1; i <= 6 * m; ++i) {
        const int k = (i - 1) / 6 + 1, t = (i - 1) % 6 + 1;
        g.add_edge(nm("sp", i), nm("pk", k) + "t" + std::to_string(t) + "a", {m + i});
    }
    for (int i = 1; i <= 6 * n; ++i) {
        const int var = (i - 1) / 6 + 1, t = (i - 1) % 6 + 1;
        g.add_edge(nm("sv", i), nm("qv", var) + "t" + std::to_string(t) + "a", {7 * m + i});
    }

    // Forest edges, shifted past the spine.
    for (const auto& e : forest.instance.graph.edges()) {
        std::vector<int> labels;
        for (int l : e.labels) labels.push_back(B + l);
        g.add_edge(e.u, e.v, labels);
    }

    r.instance.sources = {"sc1"};
    r.instance.params.lambda = 2;
    r.instance.params.mu = m + n;
    r.provenance_json =
        provenance(r.family, r, {{"n", n}, {"m", m}, {"formula", serialize_formula(phi)}});
    return r;
}

MergingScheme assignment_to_min_scheme(const Formula& phi, Assignment assignment) {
    require_clauses(phi);
    const int m = static_cast<int>(phi.clauses.size());
    const int M = 4 * m + 4;
    MergingScheme scheme;
    for (int k = 1; k <= m; ++k) {
        const Clause& clause = phi.clauses[static_cast<std::size_t>(k - 1)];
        const bool left_true = literal_satisfied(clause.first, assignment);
        const bool right_true = literal_satisfied(clause.second, assignment);
        // Kill the side opposite a satisfied literal so the kept side's leaf
        // is the one its variable window already cuts; default to killing
        // the left side.
        if (left_true && !right_true)
            scheme.merges.push_back({4 * k + 1, 2});  // kills the right side
        else
            scheme.merges.push_back({4 * k, 2});      // kills the left side
    }
    for (int v = 1; v <= phi.variable_count; ++v) {
        const bool value = (assignment >> (v - 1)) & 1u;
        scheme.merges.push_back({M + 4 * v + (value ? 1 : 0), 2});
    }
    return scheme;  // clause starts < M+4 <= variable starts: already sorted
}

Assignment min_scheme_to_assignment(const Formula& phi, const MergingScheme& scheme) {
    require_clauses(phi);
    const int m = static_cast<int>(phi.clauses.size());
    const int n = phi.variable_count;
    const int M = 4 * m + 4;
    validate_scheme(scheme, 4 * m + 4 * n + 6, 2, m + n);
    Assignment assignment = 0;
    for (int v = 1; v <= n; ++v) assignment |= Assignment{1} << (v - 1);  // default true
    for (const auto& merge : scheme.merges) {
        const int offset = merge.start - M;
        if (offset < 4 || offset > 4 * n + 1) continue;  // not a variable window
        const int v = offset / 4;
        if (offset == 4 * v)                             // window's first step: false
            assignment &= ~(Assignment{1} << (v - 1));
        else if (offset == 4 * v + 1)                    // second step: true
            assignment |= Assignment{1} << (v - 1);
    }
    return assignment;
}

MergingScheme assignment_to_max_scheme(const Formula& phi, Assignment assignment) {
    require_clauses(phi);
    MergingScheme scheme;
    for (int v = 1; v <= phi.variable_count; ++v) {
        const bool value = (assignment >> (v - 1)) & 1u;
        scheme.merges.push_back({3 * v - (value ? 1 : 2), 2});
    }
    return scheme;
}

Assignment max_scheme_to_assignment(const Formula& phi, const MergingScheme& scheme) {
    require_clauses(phi);
    const int n = phi.variable_count;
    validate_scheme(scheme, 3 * n + 1, 2, n);
    Assignment assignment = 0;
    for (int v = 1; v <= n; ++v) assignment |= Assignment{1} << (v - 1);  // default true
    for (const auto& merge : scheme.merges) {
        if (merge.start < 1 || merge.start > 3 * n) continue;
        const int v = (merge.start + 2) / 3;
        if (merge.start == 3 * v - 2)
            assignment &= ~(Assignment{1} << (v - 1));  // false
        else if (merge.start == 3 * v - 1)
            assignment |= Assignment{1} << (v - 1);     // true
    }
    return assignment;
}

PlainGraph parse_plain_graph(std::string_view text) {
    PlainGraph g;
    int line_number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view raw =
            text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
        ++line_number;
        if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);

        std::istringstream iss{std::string(raw)};
        std::vector<std::string> tokens;
        std::string tok;
        while (iss >> tok) tokens.push_back(tok);
        if (tokens.empty() || tokens.front().front() == '#') continue;
        if (tokens.front() == "vertex") {
            if (tokens.size() != 2)
                throw ParseError("directive 'vertex' expects 1 argument", line_number);
            g.vertices.push_back(tokens[1]);
        } else if (tokens.front() == "edge") {
            if (tokens.size() != 3)
                throw ParseError("directive 'edge' expects 2 arguments", line_number);
            std::string a = tokens[1], b = tokens[2];
            if (a == b) throw ParseError("self-loop on vertex '" + a + "'", line_number);
            if (b < a) std::swap(a, b);
            g.vertices.push_back(a);
            g.vertices.push_back(b);
            g.edges.emplace_back(a, b);
        } else {
            throw ParseError("unknown directive '" + tokens.front() + "'", line_number);
        }
    }
    std::sort(g.vertices.begin(), g.vertices.end());
    g.vertices.erase(std::unique(g.vertices.begin(), g.vertices.end()), g.vertices.end());
    std::sort(g.edges.begin(), g.edges.end());
    g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
    return g;
}

std::string serialize_plain_graph(const PlainGraph& g) {
    std::ostringstream out;
    for (const auto& v : g.vertices) out << "vertex " << v << "\n";
    for (const auto& [a, b] : g.edges) out << "edge " << a << " " << b << "\n";
    return out.str();
}

ReductionInstance build_clique_delay(const PlainGraph& input, int k, int delta) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    if (delta < 1) throw std::invalid_argument("delta must be >= 1");
    if (input.vertices.empty()) throw std::invalid_argument("graph must have a vertex");

    ReductionInstance r;
    r.family = "clique-delay";
    r.objective = Objective::MinReach;
    r.mode = SolverMode::Minimize;
    TemporalGraph& g = r.instance.graph;

    // Hub joins every vertex stand-in at step 1; each edge stand-in joins
    // its endpoints at step 2. Delaying the hub edges of a clique to step 2
    // strands every inner edge stand-in.
    for (const auto& v : input.vertices) g.add_edge("vstar", "v_" + v, {1});
    for (const auto& [a, b] : input.edges) {
        const std::string ev = "e_" + a + "_" + b;
        g.add_edge("v_" + a, ev, {2});
        g.add_edge("v_" + b, ev, {2});
    }
    r.instance.sources = {"vstar"};
    r.instance.params.delta = delta;
    r.instance.params.kappa = k;
    r.provenance_json = provenance(
        r.family, r,
        {{"k", k},
         {"vertices", static_cast<int>(input.vertices.size())},
         {"edges", static_cast<int>(input.edges.size())},
         {"graph", serialize_plain_graph(input)}});
    return r;
}

namespace {

int best_edges_in_subset(const std::vector<std::vector<bool>>& adj, std::vector<int>& chosen,
                         int next, int remaining) {
    if (remaining == 0) {
        int edges = 0;
        for (std::size_t i = 0; i < chosen.size(); ++i)
            for (std::size_t j = i + 1; j < chosen.size(); ++j)
                if (adj[chosen[i]][chosen[j]]) ++edges;
        return edges;
    }
    const int n = static_cast<int>(adj.size());
    int best = -1;
    for (int v = next; v + remaining <= n; ++v) {
        chosen.push_back(v);
        best = std::max(best, best_edges_in_subset(adj, chosen, v + 1, remaining - 1));
        chosen.pop_back();
    }
    return best;
}

std::vector<std::vector<bool>> adjacency(const PlainGraph& g) {
    const int n = static_cast<int>(g.vertices.size());
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (const auto& [a, b] : g.edges) {
        const int i = static_cast<int>(
            std::lower_bound(g.vertices.begin(), g.vertices.end(), a) - g.vertices.begin());
        const int j = static_cast<int>(
            std::lower_bound(g.vertices.begin(), g.vertices.end(), b) - g.vertices.begin());
        adj[i][j] = adj[j][i] = true;
    }
    return adj;
}

void check_subset_guard(const PlainGraph& g) {
    if (g.vertices.size() > 20)
        throw BudgetError("subset sweep is guarded to 20 vertices, graph has " +
                          std::to_string(g.vertices.size()));
}

}  // namespace

int max_edges_within_k_subset(const PlainGraph& g, int k) {
    check_subset_guard(g);
    if (k < 0) throw std::invalid_argument("k must be >= 0");
    const int size = std::min<int>(k, static_cast<int>(g.vertices.size()));
    if (size <= 1) return 0;
    // Induced edge count is monotone in the subset, so only size-`size`
    // subsets need checking.
    const auto adj = adjacency(g);
    std::vector<int> chosen;
    return best_edges_in_subset(adj, chosen, 0, size);
}

bool clique_oracle(const PlainGraph& g, int k) {
    check_subset_guard(g);
    if (k < 0) throw std::invalid_argument("k must be >= 0");
    if (k > static_cast<int>(g.vertices.size())) return false;
    if (k <= 1) return true;
    return max_edges_within_k_subset(g, k) == k * (k - 1) / 2;
}

ReductionInstance build_demo_chain() {
    ReductionInstance r;
    r.family = "fig1";
    r.objective = Objective::MinReach;
    r.mode = SolverMode::Minimize;
    r.instance.graph.add_edge("x", "y", {1});
    r.instance.graph.add_edge("y", "z", {2});
    r.instance.sources = {"x"};
    r.instance.params.lambda = 2;
    r.instance.params.mu = 1;
    r.provenance_json = provenance(r.family, r, json::object());
    return r;
}

ReductionInstance build_demo_frontier() {
    ReductionInstance r;
    r.family = "fig8";
    r.objective = Objective::MinReach;
    r.mode = SolverMode::Minimize;
    r.instance.graph.add_edge("s", "x", {1});
    r.instance.graph.add_edge("s", "y", {1});
    r.instance.graph.add_edge("y", "z", {2});
    r.instance.sources = {"s"};
    r.instance.params.delta = 1;
    r.provenance_json = provenance(r.family, r, json::object());
    return r;
}

std::vector<std::string> reduction_family_names() {
    return {"minreach-path", "minreach-tree",   "maxreach-path",
            "maxreach-1src", "maxreach-forest", "maxreach-tree",
            "clique-delay",  "fig1",            "fig8"};
}

ReductionInstance build_reduction(const std::string& family,
                                  const std::optional<Formula>& formula,
                                  const std::optional<PlainGraph>& graph,
                                  std::optional<int> lambda,
                                  std::optional<int> delta,
                                  std::optional<int> k) {
    auto need_formula = [&]() -> const Formula& {
        if (!formula)
            throw std::invalid_argument("family '" + family + "' requires a formula payload");
        return *formula;
    };
    if (family == "minreach-path") return build_minreach_path(need_formula());
    if (family == "minreach-tree")
        return build_minreach_tree_single_source(need_formula(), lambda.value_or(2));
    if (family == "maxreach-path") return build_maxreach_path(need_formula());
    if (family == "maxreach-1src") return build_maxreach_single_source(need_formula());
    if (family == "maxreach-forest") return build_maxreach_forest(need_formula());
    if (family == "maxreach-tree") return build_maxreach_tree_single_source(need_formula());
    if (family == "clique-delay") {
        if (!graph)
            throw std::invalid_argument("family 'clique-delay' requires a graph payload");
        if (!k) throw std::invalid_argument("family 'clique-delay' requires k");
        return build_clique_delay(*graph, *k, delta.value_or(1));
    }
    if (family == "fig1") return build_demo_chain();
    if (family == "fig8") return build_demo_frontier();
    throw std::invalid_argument("unknown family '" + family + "'");
}

}  // namespace temporeach
