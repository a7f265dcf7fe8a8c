// SPDX-License-Identifier: MIT
// Instance text format: a temporal graph plus a source set and optional
// named integer parameters, with a canonical serialization.
//
// Line-oriented format (tokens separated by whitespace, `#` starts a
// full-line comment, blank lines ignored):
//   directed                       graph is directed (applies globally)
//   vertex <id>                    declare a vertex
//   edge <u> <v> <l1>[,<l2>...]    edge with comma-separated positive labels
//   source <id>                    add a vertex to the source set
//   param <name> <int>             name in {lambda, mu, delta, kappa}
// Edge endpoints implicitly declare vertices. Repeated edge lines union
// their label sets; repeated sources deduplicate; repeating a param is an
// error. Canonical serialization: `directed` first (when set), then sorted
// vertex lines, edge lines in canonical edge order with ascending labels,
// sorted source lines, then params in the order lambda, mu, delta, kappa.
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "temporeach/temporal_graph.hpp"

namespace temporeach {

struct Params {
    std::optional<int> lambda;
    std::optional<int> mu;
    std::optional<int> delta;
    std::optional<int> kappa;

    bool operator==(const Params&) const = default;
};

struct Instance {
    TemporalGraph graph;
    std::vector<std::string> sources;  // sorted unique, each a graph vertex
    Params params;

    bool operator==(const Instance&) const = default;
};

// Parses the text format above. Throws ParseError (with 1-based line number)
// on malformed directives, non-positive or malformed labels, self-loops,
// unknown source vertices, unknown directives or param names, or repeated
// params.
Instance parse_instance(std::string_view text);

// Canonical serialization; parse_instance(serialize_instance(x)) == x.
std::string serialize_instance(const Instance& instance);

}  // namespace temporeach
