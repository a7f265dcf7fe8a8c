// SPDX-License-Identifier: MIT
// Label-window merges: a merge [start, start+length-1] relabels every label
// in the window to the window's last step. Duplicate labels produced on an
// edge collapse. A length-1 merge is the identity. Two merges are
// independent when their windows are disjoint (touching windows are fine);
// schemes are sets of pairwise independent merges, so their order of
// application does not matter.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "temporeach/temporal_graph.hpp"

namespace temporeach {

struct Merge {
    int start = 0;
    int length = 0;

    int end() const noexcept { return start + length - 1; }
    bool operator==(const Merge&) const = default;
};

struct MergingScheme {
    std::vector<Merge> merges;

    bool operator==(const MergingScheme&) const = default;
};

// Relabels one window. The window must lie within [1, g.lifetime()]
// (start >= 1, length >= 1, end <= lifetime); throws ValidationError
// otherwise. The lifetime never grows (the last window step is an existing
// step); vertices, including isolated ones, are preserved.
TemporalGraph apply_merge(const TemporalGraph& g, const Merge& merge);

// Message for the first violated constraint, or nullopt if the scheme is a
// valid (lambda, mu)-scheme for the given horizon. Checks, in order:
// per-merge window bounds, pairwise independence, per-merge length cap
// (when lambda is given), merge count budget (when mu is given).
std::optional<std::string> scheme_violation(const MergingScheme& scheme,
                                            int horizon,
                                            std::optional<int> lambda = std::nullopt,
                                            std::optional<int> mu = std::nullopt);

// Throws ValidationError with the first violated constraint.
void validate_scheme(const MergingScheme& scheme,
                     int horizon,
                     std::optional<int> lambda = std::nullopt,
                     std::optional<int> mu = std::nullopt);

// Applies all merges of a scheme (bounds + independence validated; caps are
// the caller's concern since schemes do not carry lambda/mu). Independent
// merges commute, so the result is order-independent.
TemporalGraph apply_scheme(const TemporalGraph& g, const MergingScheme& scheme);

// A valid scheme is maximal for window length lambda when no further
// length-lambda merge fits inside [1, horizon] while staying independent of
// the existing merges.
bool is_maximal(const MergingScheme& scheme, int lambda, int horizon);

// Greedily inserts leftmost-feasible length-lambda merges until maximal.
// Returns the extended scheme with merges sorted by start.
MergingScheme extend_to_maximal(const MergingScheme& scheme, int lambda, int horizon);

}  // namespace temporeach
