// SPDX-License-Identifier: MIT
// Exact branch-and-bound search over merging schemes.
#pragma once

#include <string>
#include <vector>

#include "temporeach/merge.hpp"
#include "temporeach/objective.hpp"
#include "temporeach/temporal_graph.hpp"

namespace temporeach {

// Feasible scheme family:
//   Minimize  at most mu merges, each of length <= lambda (length-1 and
//             other graph-identity merges are never part of a witness);
//   Maximize  exactly mu merges, each of length exactly lambda (identity
//             placements are legal and searched).
// The optimization direction itself comes from the objective.
enum class SolverMode { Minimize, Maximize };

std::string solver_mode_name(SolverMode mode);
SolverMode solver_mode_from_name(const std::string& name);  // throws std::invalid_argument

struct MergeSolveOptions {
    // Hard cap on objective evaluations (bound computations included);
    // exceeding it throws BudgetError.
    long long eval_limit = 10'000'000;
};

struct MergeSolveResult {
    MergingScheme scheme;       // optimal witness, merges sorted by start
    long long value = 0;        // objective value of the witness
    long long baseline = 0;     // objective value of the empty scheme
    long long evaluations = 0;  // evaluations consumed (bounds included)
};

// Exhaustive search (with admissible pruning only) for the scheme optimizing
// the objective over the mode's family. Deterministic: among schemes with
// the optimal value the one whose start-sorted merge list is
// lexicographically smallest is returned.
//
// Throws: UnsupportedError for non-strict paths; std::invalid_argument for
// bad lambda/mu/sources or an infeasible exactly-mu family; BudgetError when
// the evaluation cap trips.
MergeSolveResult solve_merge_exact(const TemporalGraph& g,
                                   const std::vector<std::string>& sources,
                                   Objective objective,
                                   int lambda,
                                   int mu,
                                   SolverMode mode,
                                   Strictness strictness = Strictness::Strict,
                                   const MergeSolveOptions& options = {});

// Convenience: objective value of one scheme (validates bounds +
// independence, applies, evaluates).
long long evaluate_scheme(const TemporalGraph& g,
                          const std::vector<std::string>& sources,
                          const MergingScheme& scheme,
                          Objective objective,
                          Strictness strictness = Strictness::Strict);

}  // namespace temporeach
