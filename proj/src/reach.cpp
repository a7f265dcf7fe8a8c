// SPDX-License-Identifier: MIT
#include "temporeach/reach.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace temporeach {

namespace {

constexpr int kUnreached = std::numeric_limits<int>::max();

struct FlatEdge {
    int u = 0;
    int v = 0;
    int label = 0;
};

int vertex_index(const TemporalGraph& g, const std::string& id) {
    const auto& vs = g.vertices();
    auto it = std::lower_bound(vs.begin(), vs.end(), id);
    if (it == vs.end() || *it != id) return -1;
    return static_cast<int>(it - vs.begin());
}

std::vector<FlatEdge> label_sorted_edges(const TemporalGraph& g) {
    std::vector<FlatEdge> flat;
    flat.reserve(g.label_instance_count());
    for (const auto& e : g.edges()) {
        int u = vertex_index(g, e.u);
        int v = vertex_index(g, e.v);
        for (int l : e.labels) flat.push_back({u, v, l});
    }
    std::stable_sort(flat.begin(), flat.end(),
                     [](const FlatEdge& a, const FlatEdge& b) { return a.label < b.label; });
    return flat;
}

std::vector<int> source_indices(const TemporalGraph& g, const std::vector<std::string>& sources) {
    if (sources.empty()) throw std::invalid_argument("source set must be non-empty");
    std::vector<int> idx;
    idx.reserve(sources.size());
    for (const auto& s : sources) {
        int i = vertex_index(g, s);
        if (i < 0) throw std::invalid_argument("source '" + s + "' is not a vertex of the graph");
        idx.push_back(i);
    }
    return idx;
}

// Earliest arrivals as a dense vector (kUnreached = never reached).
std::vector<int> arrival_sweep(const TemporalGraph& g, const std::vector<int>& sources,
                               Strictness strictness, std::optional<int> cutoff) {
    std::vector<int> arr(g.vertex_count(), kUnreached);
    for (int s : sources) arr[s] = 0;

    const std::vector<FlatEdge> flat = label_sorted_edges(g);
    const bool directed = g.directed();
    std::size_t i = 0;
    while (i < flat.size()) {
        const int t = flat[i].label;
        if (cutoff && t > *cutoff) break;
        std::size_t j = i;
        while (j < flat.size() && flat[j].label == t) ++j;

        if (strictness == Strictness::Strict) {
            // Labels strictly increase along a path, so an arrival at t can
            // never feed another label-t edge: collect first, commit after.
            std::vector<int> newly;
            for (std::size_t k = i; k < j; ++k) {
                const auto& e = flat[k];
                if (arr[e.u] < t && arr[e.v] > t) newly.push_back(e.v);
                if (!directed && arr[e.v] < t && arr[e.u] > t) newly.push_back(e.u);
            }
            for (int v : newly) arr[v] = std::min(arr[v], t);
        } else {
            // Non-decreasing labels admit same-step chains: iterate the
            // batch to a fixpoint.
            bool changed = true;
            while (changed) {
                changed = false;
                for (std::size_t k = i; k < j; ++k) {
                    const auto& e = flat[k];
                    if (arr[e.u] <= t && arr[e.v] > t) { arr[e.v] = t; changed = true; }
                    if (!directed && arr[e.v] <= t && arr[e.u] > t) { arr[e.u] = t; changed = true; }
                }
            }
        }
        i = j;
    }
    return arr;
}

}  // namespace

std::map<std::string, int> earliest_arrival(const TemporalGraph& g,
                                            const std::vector<std::string>& sources,
                                            Strictness strictness,
                                            std::optional<int> cutoff) {
    const std::vector<int> arr = arrival_sweep(g, source_indices(g, sources), strictness, cutoff);
    std::map<std::string, int> out;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        if (arr[i] != kUnreached) out.emplace(g.vertices()[i], arr[i]);
    }
    return out;
}

std::vector<std::string> reach_set(const TemporalGraph& g,
                                   const std::vector<std::string>& sources,
                                   Strictness strictness,
                                   std::optional<int> cutoff) {
    const std::vector<int> arr = arrival_sweep(g, source_indices(g, sources), strictness, cutoff);
    std::vector<std::string> out;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        if (arr[i] != kUnreached) out.push_back(g.vertices()[i]);
    }
    return out;
}

std::vector<std::string> frontier_vertices(const TemporalGraph& g,
                                           const std::vector<std::string>& sources,
                                           int t,
                                           Strictness strictness) {
    if (t < 1) throw std::invalid_argument("frontier step must be >= 1");
    const std::vector<int> arr =
        arrival_sweep(g, source_indices(g, sources), strictness, std::nullopt);
    std::vector<std::string> out;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        if (arr[i] == t) out.push_back(g.vertices()[i]);
    }
    return out;
}

std::vector<FrontierEdge> frontier_edges(const TemporalGraph& g,
                                         const std::vector<std::string>& sources,
                                         int t,
                                         Strictness strictness) {
    if (t < 1) throw std::invalid_argument("frontier step must be >= 1");
    const std::vector<int> arr =
        arrival_sweep(g, source_indices(g, sources), strictness, std::nullopt);
    const bool directed = g.directed();

    auto donor = [&](int x) {
        return strictness == Strictness::Strict ? arr[x] < t
                                                : (arr[x] != kUnreached && arr[x] <= t);
    };
    auto recipient = [&](int x) { return arr[x] >= t; };  // includes unreached

    std::vector<FrontierEdge> out;
    for (const auto& e : g.edges()) {
        if (!std::binary_search(e.labels.begin(), e.labels.end(), t)) continue;
        const int u = vertex_index(g, e.u);
        const int v = vertex_index(g, e.v);
        bool carries = donor(u) && recipient(v);
        if (!directed) carries = carries || (donor(v) && recipient(u));
        if (carries) out.push_back({e.u, e.v, t});
    }
    return out;
}

}  // namespace temporeach
