// SPDX-License-Identifier: MIT
// Delay optimization: the frontier-driven greedy (unbounded entry count) and
// exact searches over bounded delay schemes.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "temporeach/delay.hpp"
#include "temporeach/objective.hpp"
#include "temporeach/temporal_graph.hpp"

namespace temporeach {

struct GreedyDelayResult {
    DelayScheme scheme;     // net displacements, sorted by (u, v, from)
    TemporalGraph delayed;  // graph after the greedy run
};

// Frontier-chasing greedy for delta-delays with no entry-count budget.
// For each step t = 1 .. original lifetime + delta - 1, it snapshots the
// propagating edge frontier at t on the current graph and pushes every
// member instance currently at t one step later when its delta budget
// allows. Deterministic: frontier edges are handled in canonical order.
// Strict paths only (UnsupportedError otherwise); delta >= 1.
GreedyDelayResult greedy_unbounded_delay(const TemporalGraph& g,
                                         const std::vector<std::string>& sources,
                                         int delta,
                                         Strictness strictness = Strictness::Strict);

struct DelaySolveOptions {
    // Hard cap on objective evaluations; exceeding it throws BudgetError.
    long long eval_limit = 10'000'000;
};

struct DelaySolveResult {
    DelayScheme scheme;         // optimal witness, sorted by (u, v, from)
    long long value = 0;        // objective value of the witness
    long long baseline = 0;     // objective value with no delays
    long long evaluations = 0;  // evaluations consumed
};

// Exact search over (delta, kappa)-schemes (at most kappa entries, each
// displaced by 1..delta) minimizing the objective. Minimization objectives
// only; maximization under delays is out of scope (UnsupportedError), as are
// non-strict paths. Deterministic: the witness is the first optimal scheme
// in enumeration order (instances in canonical order, smaller displacements
// first), which is the lexicographically least optimal assignment.
DelaySolveResult solve_delay_exact(const TemporalGraph& g,
                                   const std::vector<std::string>& sources,
                                   Objective objective,
                                   int delta,
                                   int kappa,
                                   Strictness strictness = Strictness::Strict,
                                   const DelaySolveOptions& options = {});

// Independent reference: sweeps ALL (delta+1)^L per-instance displacement
// vectors (L = label instance count) for the minimum union reach. Guarded:
// throws BudgetError when (delta+1)^L exceeds the evaluation cap. Strict
// paths only. The witness is the first minimizing assignment in
// odometer order.
DelaySolveResult brute_force_delay_oracle(const TemporalGraph& g,
                                          const std::vector<std::string>& sources,
                                          int delta,
                                          Strictness strictness = Strictness::Strict,
                                          const DelaySolveOptions& options = {});

}  // namespace temporeach
