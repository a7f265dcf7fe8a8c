// SPDX-License-Identifier: MIT
// Instance generators: deterministic translations from restricted 2-CNF
// formulas (and from static graphs, for the clique family) into temporal
// reachability instances whose optimal merge/delay schemes encode the
// source problem's optimum. Also the assignment <-> scheme converters and
// the small fixed demo fixtures.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "temporeach/formula.hpp"
#include "temporeach/instance_io.hpp"
#include "temporeach/merge.hpp"
#include "temporeach/merge_solver.hpp"
#include "temporeach/objective.hpp"
#include "temporeach/temporal_graph.hpp"

namespace temporeach {

// A generated instance bundled with the query it encodes and a provenance
// JSON blob (family, parameters, input payload, vertex roles).
struct ReductionInstance {
    Instance instance;
    Objective objective = Objective::MinReach;
    SolverMode mode = SolverMode::Minimize;
    std::string family;
    std::string provenance_json;
};

// --- merge-based families over a formula phi (m clauses, n variables) ---

// Multi-source path family. Nine-vertex clause gadgets chained by label-1
// connectors; clause windows at steps 4k..4k+2, variable windows at
// M+4i..M+4i+2 with M = 4m+4. |V| = 9m, lifetime 4m+4n+6, params
// (lambda=2, mu=m+n), objective MinReach/Minimize, sources: the m gadget
// centers. The minimum union reach equals 9m - (3m + l*) where l* is the
// maximum satisfiable clause count.
ReductionInstance build_minreach_path(const Formula& phi);

// Stretches every label j to lambda*j - 2 + max(0, 3 - lambda), opening a
// gap >= lambda between consecutive active steps; any merge shorter than
// lambda then fits between steps and cannot change reachability.
TemporalGraph lambda_space(const TemporalGraph& g, int lambda);

// Single-source tree family: the lambda-spaced, connector-free clause
// gadgets hang off a fresh spine whose edges pace the single source so every
// gadget center is reached by step lambda*(m+1). Params (lambda, mu=m+n),
// objective MinReach/Minimize. Tree, max degree 3, <= 3 edges per step.
ReductionInstance build_minreach_tree_single_source(const Formula& phi, int lambda);

// Multi-source path family for maximization. Variable windows at steps
// 3i-2..3i, six-vertex variable paths and five-vertex clause paths
// concatenated through shared junction sources. |V| = 5n+4m+1, lifetime
// 3n+1, params (lambda=2, mu=n), objective MaxReach/Maximize. The maximum
// union reach equals 5n+3m+1+l*.
ReductionInstance build_maxreach_path(const Formula& phi);

// Single-source variant: the maximization gadgets, kept disjoint, hang off a
// 2n+3m+7-vertex spine path; gadget labels shift by 2n+3m+2. Bipartite,
// <= 4 edges per step. Params (lambda=2, mu=n), objective MaxReach/Maximize.
ReductionInstance build_maxreach_single_source(const Formula& phi);

// Multi-source forest family: per clause a nine-vertex tree (center is a
// source) with clause windows 3k-2..3k and variable windows 3m+3i-2..3m+3i,
// plus six fresh two-edge paths per clause and per variable (path starts are
// sources). |V| = 27m+18n, lifetime 3m+3n+1, params (lambda=2, mu=m+n),
// objective MaxReach/Maximize.
ReductionInstance build_maxreach_forest(const Formula& phi);

// Single-source tree variant of the forest: a spine visits every clause
// center and every path start; forest labels shift by 7m+6n. Tree, max
// degree 3, <= 8 edges per step. Params (lambda=2, mu=m+n), objective
// MaxReach/Maximize.
ReductionInstance build_maxreach_tree_single_source(const Formula& phi);

// --- assignment <-> scheme converters (path families) ---

// Valid (2, m+n)-scheme realizing the assignment on build_minreach_path:
// one merge per variable window (true -> the window cutting positive
// literal sides, false -> the one cutting negative sides) and one per
// clause window (killing a side whose literal the assignment satisfies, or
// the left side when the clause is unsatisfied). Leaves exactly
// 3m + (satisfied count) vertices unreached.
MergingScheme assignment_to_min_scheme(const Formula& phi, Assignment assignment);

// Reads the assignment back out of a scheme for build_minreach_path:
// variable windows merged at their first step mean false, at their second
// step mean true; variables without a recognizable merge default to true.
// The scheme must be a valid (2, m+n)-scheme for the instance
// (ValidationError otherwise).
Assignment min_scheme_to_assignment(const Formula& phi, const MergingScheme& scheme);

// Valid (2, n)-scheme realizing the assignment on build_maxreach_path
// (false -> merge (3i-2, 2), true -> merge (3i-1, 2)); reaches exactly
// 5n + 3m + 1 + (satisfied count) vertices.
MergingScheme assignment_to_max_scheme(const Formula& phi, Assignment assignment);

// Inverse direction for build_maxreach_path: merge at 3i-2 -> false, at
// 3i-1 -> true, otherwise default true. Scheme must be a valid (2, n)-
// scheme for the instance.
Assignment max_scheme_to_assignment(const Formula& phi, const MergingScheme& scheme);

// --- delay-based clique family over a static graph ---

// Plain undirected graph text: `vertex <id>` / `edge <u> <v>` / `#`
// comments. Endpoints implicitly declare vertices; duplicate edges
// collapse; self-loops are errors.
struct PlainGraph {
    std::vector<std::string> vertices;               // sorted unique
    std::vector<std::pair<std::string, std::string>> edges;  // canonical u < v

    bool operator==(const PlainGraph&) const = default;
};

PlainGraph parse_plain_graph(std::string_view text);
std::string serialize_plain_graph(const PlainGraph& g);

// Star-plus-incidence instance: hub vstar joins every vertex-vertex at step
// 1; each edge-vertex joins its two endpoints' vertex-vertices at step 2.
// |V| = |V'| + |E'| + 1, lifetime 2 (when E' is non-empty), params
// (delta, kappa=k), objective MinReach, source {vstar}. Delaying the k
// hub edges of a k-clique to step 2 cuts all C(k,2) inner edge-vertices,
// and no (delta, k)-scheme can cut more.
ReductionInstance build_clique_delay(const PlainGraph& g, int k, int delta);

// Exhaustive k-subset sweep; guarded to |V| <= 20 (BudgetError beyond).
bool clique_oracle(const PlainGraph& g, int k);

// Largest edge count induced by any subset of at most k vertices (same
// guard). Equals C(k,2) iff a k-clique exists (for k <= |V|).
int max_edges_within_k_subset(const PlainGraph& g, int k);

// --- fixed demo fixtures ---

// Three-vertex chain x-y (label 1), y-z (label 2), source {x}, params
// (lambda=2, mu=1), MinReach: merging (1, 2) makes both edges fire at step
// 2 and strict paths can no longer continue to z.
ReductionInstance build_demo_chain();

// Four-vertex frontier demo: s-x (1), s-y (1), y-z (2), source {s}, params
// (delta=1), MinReach. Step 1's frontier is {sx, sy}; step 2's is {yz}.
ReductionInstance build_demo_frontier();

// --- family registry (CLI `gen`) ---

// Known family names: minreach-path, minreach-tree, maxreach-path,
// maxreach-1src, maxreach-forest, maxreach-tree, clique-delay, fig1, fig8.
std::vector<std::string> reduction_family_names();

// Dispatches on family name. Formula families require `formula`;
// clique-delay requires `graph` and `k` (delta defaults to 1); minreach-tree
// takes `lambda` (default 2); the demo fixtures take nothing. Throws
// std::invalid_argument for an unknown family or missing payload.
ReductionInstance build_reduction(const std::string& family,
                                  const std::optional<Formula>& formula,
                                  const std::optional<PlainGraph>& graph,
                                  std::optional<int> lambda,
                                  std::optional<int> delta,
                                  std::optional<int> k);

}  // namespace temporeach
