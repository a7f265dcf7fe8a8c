// SPDX-License-Identifier: MIT
// Reachability objectives over a source set.
#pragma once

#include <string>
#include <vector>

#include "temporeach/reach.hpp"
#include "temporeach/temporal_graph.hpp"

namespace temporeach {

// Min*/Max* names give the optimization direction a solver applies to the
// value; evaluate_objective itself just measures:
//   MinReach / MaxReach       |union of reach sets over all sources|
//   MinMaxReach               max over sources of |reach(source)|
//   MaxMinReach               min over sources of |reach(source)|
//   MinAvgReach / MaxAvgReach sum over sources of |reach(source)|
// Average objectives use the per-source sum; dividing by the fixed source
// count would not change any comparison.
enum class Objective {
    MinReach,
    MaxReach,
    MinMaxReach,
    MaxMinReach,
    MinAvgReach,
    MaxAvgReach,
};

// True for MinReach, MinMaxReach, MinAvgReach (value should be driven down);
// false for MaxReach, MaxMinReach, MaxAvgReach.
bool is_minimization(Objective objective);

// Canonical names ("MinReach", ...) used in CLI flags and reports.
std::string objective_name(Objective objective);
Objective objective_from_name(const std::string& name);  // throws std::invalid_argument

// Measures the objective on g. Throws std::invalid_argument for an empty or
// invalid source set.
long long evaluate_objective(const TemporalGraph& g,
                             const std::vector<std::string>& sources,
                             Objective objective,
                             Strictness strictness = Strictness::Strict);

}  // namespace temporeach
