// SPDX-License-Identifier: MIT
// Temporal graph value type: a static graph whose edges carry sets of
// positive integer time labels.
#pragma once

#include <string>
#include <vector>

namespace temporeach {

// One edge with its sorted, duplicate-free label set. For undirected graphs
// the endpoints are stored in canonical order (u < v lexicographically);
// for directed graphs (u, v) is the edge's direction.
struct TemporalEdge {
    std::string u;
    std::string v;
    std::vector<int> labels;

    bool operator==(const TemporalEdge&) const = default;
};

// Value-semantic temporal graph. Vertices are non-empty whitespace-free
// string identifiers. An edge (u, v) appears at time step t iff t is in its
// label set; the graph's lifetime is the maximum label present.
class TemporalGraph {
public:
    TemporalGraph() = default;
    explicit TemporalGraph(bool directed) : directed_(directed) {}

    // Inserts a vertex (idempotent). Throws std::invalid_argument for an
    // empty or whitespace-containing identifier.
    void add_vertex(const std::string& id);

    // Adds labels to edge (u, v), creating the edge and any missing endpoint
    // vertices. Labels must be positive; u != v (no self-loops). Repeated
    // calls union label sets. Throws std::invalid_argument on violation.
    void add_edge(const std::string& u, const std::string& v, const std::vector<int>& labels);

    bool directed() const noexcept { return directed_; }
    bool has_vertex(const std::string& id) const;

    // Sorted vertex identifiers.
    const std::vector<std::string>& vertices() const noexcept { return vertices_; }
    // Edges sorted by (u, v); labels sorted ascending within each edge.
    const std::vector<TemporalEdge>& edges() const noexcept { return edges_; }

    std::size_t vertex_count() const noexcept { return vertices_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    // Number of (edge, label) pairs.
    std::size_t label_instance_count() const;

    // Maximum label present, 0 for a label-free graph.
    int lifetime() const noexcept { return lifetime_; }

    bool operator==(const TemporalGraph&) const = default;

private:
    bool directed_ = false;
    std::vector<std::string> vertices_;    // sorted unique
    std::vector<TemporalEdge> edges_;      // sorted by (u, v)
    int lifetime_ = 0;
};

}  // namespace temporeach
