// SPDX-License-Identifier: MIT
// Temporal reachability: earliest arrivals, reach sets, and per-step
// frontiers.
//
// A temporal path uses edges at increasing labels: strictly increasing under
// Strictness::Strict, non-decreasing under Strictness::NonStrict. Sources
// have arrival time 0, so an edge labeled t transmits from a vertex with
// arrival a when a < t (strict) or a <= t (non-strict). A vertex's reach set
// always contains the vertex itself.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "temporeach/temporal_graph.hpp"

namespace temporeach {

enum class Strictness { Strict, NonStrict };

// One (edge, label) pair on a frontier.
struct FrontierEdge {
    std::string u;
    std::string v;
    int label = 0;

    bool operator==(const FrontierEdge&) const = default;
};

// Earliest arrival time from the source set to every reached vertex
// (sources at 0). Vertices absent from the map are unreached. With `cutoff`,
// only arrivals <= cutoff count (paths are truncated at the cutoff).
// Throws std::invalid_argument if sources is empty or names unknown
// vertices.
std::map<std::string, int> earliest_arrival(const TemporalGraph& g,
                                            const std::vector<std::string>& sources,
                                            Strictness strictness = Strictness::Strict,
                                            std::optional<int> cutoff = std::nullopt);

// Sorted vertices reachable from the source set (always includes the
// sources themselves).
std::vector<std::string> reach_set(const TemporalGraph& g,
                                   const std::vector<std::string>& sources,
                                   Strictness strictness = Strictness::Strict,
                                   std::optional<int> cutoff = std::nullopt);

// Sorted vertices whose earliest arrival from the source set is exactly t
// (t >= 1; sources themselves arrive at 0 and are never in a frontier).
std::vector<std::string> frontier_vertices(const TemporalGraph& g,
                                           const std::vector<std::string>& sources,
                                           int t,
                                           Strictness strictness = Strictness::Strict);

// Propagating edge frontier at step t: the (edge, label == t) pairs that
// carry a new arrival at time t — one endpoint already reached before t
// (arrival < t under strict, <= t under non-strict) and the other endpoint
// unreached or not reached before t. Edges whose endpoints are both already
// reached earlier, and edges reaching no one, are excluded. Returned in
// canonical edge order.
std::vector<FrontierEdge> frontier_edges(const TemporalGraph& g,
                                         const std::vector<std::string>& sources,
                                         int t,
                                         Strictness strictness = Strictness::Strict);

}  // namespace temporeach
