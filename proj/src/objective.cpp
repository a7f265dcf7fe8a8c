// SPDX-License-Identifier: MIT
#include "temporeach/objective.hpp"

#include <algorithm>
#include <stdexcept>

namespace temporeach {

bool is_minimization(Objective objective) {
    switch (objective) {
        case Objective::MinReach:
        case Objective::MinMaxReach:
        case Objective::MinAvgReach:
            return true;
        case Objective::MaxReach:
        case Objective::MaxMinReach:
        case Objective::MaxAvgReach:
            return false;
    }
    throw std::invalid_argument("unknown objective");
}

std::string objective_name(Objective objective) {
    switch (objective) {
        case Objective::MinReach: return "MinReach";
        case Objective::MaxReach: return "MaxReach";
        case Objective::MinMaxReach: return "MinMaxReach";
        case Objective::MaxMinReach: return "MaxMinReach";
        case Objective::MinAvgReach: return "MinAvgReach";
        case Objective::MaxAvgReach: return "MaxAvgReach";
    }
    throw std::invalid_argument("unknown objective");
}

Objective objective_from_name(const std::string& name) {
    if (name == "MinReach") return Objective::MinReach;
    if (name == "MaxReach") return Objective::MaxReach;
    if (name == "MinMaxReach") return Objective::MinMaxReach;
    if (name == "MaxMinReach") return Objective::MaxMinReach;
    if (name == "MinAvgReach") return Objective::MinAvgReach;
    if (name == "MaxAvgReach") return Objective::MaxAvgReach;
    throw std::invalid_argument("unknown objective '" + name + "'");
}

long long evaluate_objective(const TemporalGraph& g,
                             const std::vector<std::string>& sources,
                             Objective objective,
                             Strictness strictness) {
    switch (objective) {
        case Objective::MinReach:
        case Objective::MaxReach:
            return static_cast<long long>(reach_set(g, sources, strictness).size());
        case Objective::MinMaxReach:
        case Objective::MaxMinReach:
        case Objective::MinAvgReach:
        case Objective::MaxAvgReach:
            break;
    }
    if (sources.empty()) throw std::invalid_argument("source set must be non-empty");
    long long max_v = 0, min_v = 0, sum = 0;
    bool first = true;
    for (const auto& s : sources) {
        const long long r = static_cast<long long>(reach_set(g, {s}, strictness).size());
        if (first) { max_v = min_v = r; first = false; }
        max_v = std::max(max_v, r);
        min_v = std::min(min_v, r);
        sum += r;
    }
    switch (objective) {
        case Objective::MinMaxReach: return max_v;
        case Objective::MaxMinReach: return min_v;
        default: return sum;  // MinAvgReach / MaxAvgReach use the per-source sum
    }
}

}  // namespace temporeach
