// SPDX-License-Identifier: MIT
// Label delays: each (edge, original label) instance may be pushed to a
// later step, by at most delta in total. Delays are tracked against the
// ORIGINAL label, so repeated pushes of the same instance share one budget.
// Delayed labels may exceed the original lifetime.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "temporeach/temporal_graph.hpp"

namespace temporeach {

// One delayed label instance: edge (u, v)'s original label `from` now fires
// at `to` (from < to <= from + delta).
struct DelayEntry {
    std::string u;
    std::string v;
    int from = 0;
    int to = 0;

    bool operator==(const DelayEntry&) const = default;
};

struct DelayScheme {
    std::vector<DelayEntry> delays;

    bool operator==(const DelayScheme&) const = default;
};

// Mutable view of a graph under an accumulating set of delays.
class DelayState {
public:
    // delta >= 0. Tracks every (edge, original label) instance of g.
    DelayState(const TemporalGraph& g, int delta);

    int delta() const noexcept { return delta_; }

    // Number of instances currently displaced from their original label.
    int applied_count() const;

    // Whether (edge, original label) is an instance of the underlying graph.
    bool tracks(const std::string& u, const std::string& v, int original) const noexcept;

    // True iff `target` is a reachable label for the instance: original <=
    // target <= original + delta. (A target below the original label is not
    // a delay and yields false.) Throws std::invalid_argument for an unknown
    // (edge, original) instance.
    bool is_delta_possible(const std::string& u, const std::string& v,
                           int original, int target) const;

    // Moves the instance's current label to new_label. Requires new_label >=
    // current label (labels only move forward) and new_label - original <=
    // delta, else throws ValidationError; unknown instance throws
    // std::invalid_argument. new_label == current is a no-op.
    void apply_delay(const std::string& u, const std::string& v,
                     int original, int new_label);

    // Current label of the instance (original if never delayed).
    int current_label(const std::string& u, const std::string& v, int original) const;

    // Original labels of edge (u, v)'s instances currently firing at
    // `current`, ascending. Empty when the edge has none there.
    std::vector<int> originals_at(const std::string& u, const std::string& v, int current) const;

    // Graph with all current labels (duplicates produced on an edge
    // collapse). The lifetime may exceed the original graph's.
    TemporalGraph graph() const;

    // Net displacements as a scheme (entries with to > from only), sorted by
    // (u, v, from).
    DelayScheme scheme() const;

private:
    struct Tracked {
        std::string u;
        std::string v;
        int original = 0;
        int current = 0;
    };
    const Tracked* find(const std::string& u, const std::string& v, int original) const;
    Tracked* find(const std::string& u, const std::string& v, int original);

    bool directed_ = false;
    std::vector<std::string> vertices_;
    std::vector<Tracked> tracked_;  // sorted by (u, v, original)
    int delta_ = 0;
};

// Validates a (delta, kappa)-scheme against g and applies it. Violations, in
// the order checked: unknown (edge, original) instance; displacement outside
// [1, delta]; duplicate entry for one instance; more than kappa entries
// (when kappa is given). Throws ValidationError naming the first violation.
TemporalGraph apply_delay_scheme(const TemporalGraph& g,
                                 const DelayScheme& scheme,
                                 int delta,
                                 std::optional<int> kappa = std::nullopt);

}  // namespace temporeach
