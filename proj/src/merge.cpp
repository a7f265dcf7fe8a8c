// SPDX-License-Identifier: MIT
#include "temporeach/merge.hpp"

#include <algorithm>
#include <string>

#include "temporeach/errors.hpp"

namespace temporeach {

namespace {

std::string merge_text(const Merge& m) {
    return "(" + std::to_string(m.start) + ", len " + std::to_string(m.length) + ")";
}

std::optional<std::string> merge_bounds_violation(const Merge& m, int horizon) {
    if (m.start < 1) return "merge " + merge_text(m) + ": start must be >= 1";
    if (m.length < 1) return "merge " + merge_text(m) + ": length must be >= 1";
    if (m.end() > horizon)
        return "merge " + merge_text(m) + ": window end " + std::to_string(m.end()) +
               " exceeds lifetime " + std::to_string(horizon);
    return std::nullopt;
}

}  // namespace

TemporalGraph apply_merge(const TemporalGraph& g, const Merge& merge) {
    if (auto violation = merge_bounds_violation(merge, g.lifetime()))
        throw ValidationError(*violation);

    TemporalGraph out(g.directed());
    for (const auto& v : g.vertices()) out.add_vertex(v);
    for (const auto& e : g.edges()) {
        std::vector<int> labels;
        labels.reserve(e.labels.size());
        for (int l : e.labels)
            labels.push_back(l >= merge.start && l <= merge.end() ? merge.end() : l);
        out.add_edge(e.u, e.v, labels);  // add_edge dedupes collapsed labels
    }
    return out;
}

std::optional<std::string> scheme_violation(const MergingScheme& scheme,
                                            int horizon,
                                            std::optional<int> lambda,
                                            std::optional<int> mu) {
    for (const auto& m : scheme.merges) {
        if (auto violation = merge_bounds_violation(m, horizon)) return violation;
    }
    std::vector<Merge> sorted = scheme.merges;
    std::sort(sorted.begin(), sorted.end(), [](const Merge& a, const Merge& b) {
        return std::pair(a.start, a.length) < std::pair(b.start, b.length);
    });
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
        if (sorted[i].end() >= sorted[i + 1].start)
            return "merges " + merge_text(sorted[i]) + " and " + merge_text(sorted[i + 1]) +
                   " are not independent (windows overlap)";
    }
    if (lambda) {
        for (const auto& m : scheme.merges) {
            if (m.length > *lambda)
                return "merge " + merge_text(m) + ": length exceeds cap " +
                       std::to_string(*lambda);
        }
    }
    if (mu && static_cast<int>(scheme.merges.size()) > *mu)
        return "scheme has " + std::to_string(scheme.merges.size()) +
               " merges, exceeding budget " + std::to_string(*mu);
    return std::nullopt;
}

void validate_scheme(const MergingScheme& scheme, int horizon,
                     std::optional<int> lambda, std::optional<int> mu) {
    if (auto violation = scheme_violation(scheme, horizon, lambda, mu))
        throw ValidationError(*violation);
}

TemporalGraph apply_scheme(const TemporalGraph& g, const MergingScheme& scheme) {
    validate_scheme(scheme, g.lifetime());
    TemporalGraph out = g;
    for (const auto& m : scheme.merges) out = apply_merge(out, m);
    return out;
}

bool is_maximal(const MergingScheme& scheme, int lambda, int horizon) {
    if (lambda < 1) throw std::invalid_argument("lambda must be >= 1");
    std::vector<Merge> sorted = scheme.merges;
    std::sort(sorted.begin(), sorted.end(),
              [](const Merge& a, const Merge& b) { return a.start < b.start; });
    // Scan for any start where a fresh length-lambda window fits inside
    // [1, horizon] without touching an existing window.
    int s = 1;
    std::size_t i = 0;
    while (s + lambda - 1 <= horizon) {
        while (i < sorted.size() && sorted[i].end() < s) ++i;
        if (i < sorted.size() && sorted[i].start <= s + lambda - 1) {
            s = sorted[i].end() + 1;  // collides; resume past this window
            ++i;
            continue;
        }
        return false;  // a free slot exists
    }
    return true;
}

MergingScheme extend_to_maximal(const MergingScheme& scheme, int lambda, int horizon) {
    if (lambda < 1) throw std::invalid_argument("lambda must be >= 1");
    std::vector<Merge> merged = scheme.merges;
    std::sort(merged.begin(), merged.end(),
              [](const Merge& a, const Merge& b) { return a.start < b.start; });
    std::vector<Merge> result = merged;
    int s = 1;
    std::size_t i = 0;
    while (s + lambda - 1 <= horizon) {
        while (i < merged.size() && merged[i].end() < s) ++i;
        if (i < merged.size() && merged[i].start <= s + lambda - 1) {
            s = merged[i].end() + 1;
            ++i;
            continue;
        }
        result.push_back({s, lambda});  // leftmost feasible slot
        s += lambda;
    }
    std::sort(result.begin(), result.end(),
              [](const Merge& a, const Merge& b) { return a.start < b.start; });
    return MergingScheme{std::move(result)};
}

}  // namespace temporeach
