// SPDX-License-Identifier: MIT
#include "temporeach/temporal_graph.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace temporeach {

namespace {

void check_vertex_id(const std::string& id) {
    if (id.empty()) throw std::invalid_argument("vertex id must be non-empty");
    for (unsigned char c : id) {
        if (std::isspace(c))
            throw std::invalid_argument("vertex id must not contain whitespace: '" + id + "'");
    }
}

}  // namespace

void TemporalGraph::add_vertex(const std::string& id) {
    check_vertex_id(id);
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), id);
    if (it == vertices_.end() || *it != id) vertices_.insert(it, id);
}

bool TemporalGraph::has_vertex(const std::string& id) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), id);
}

void TemporalGraph::add_edge(const std::string& u, const std::string& v,
                             const std::vector<int>& labels) {
    check_vertex_id(u);
    check_vertex_id(v);
    if (u == v) throw std::invalid_argument("self-loop on vertex '" + u + "'");
    if (labels.empty()) throw std::invalid_argument("edge must carry at least one label");
    for (int l : labels) {
        if (l <= 0)
            throw std::invalid_argument("label must be a positive integer, got " +
                                        std::to_string(l));
    }
    add_vertex(u);
    add_vertex(v);

    std::string a = u, b = v;
    if (!directed_ && b < a) std::swap(a, b);

    auto key = [](const TemporalEdge& e) { return std::pair(e.u, e.v); };
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair(a, b),
                               [&](const TemporalEdge& e, const std::pair<std::string, std::string>& k) {
                                   return key(e) < k;
                               });
    if (it == edges_.end() || it->u != a || it->v != b) {
        it = edges_.insert(it, TemporalEdge{a, b, {}});
    }
    auto& ls = it->labels;
    for (int l : labels) {
        auto lit = std::lower_bound(ls.begin(), ls.end(), l);
        if (lit == ls.end() || *lit != l) ls.insert(lit, l);
        lifetime_ = std::max(lifetime_, l);
    }
}

std::size_t TemporalGraph::label_instance_count() const {
    std::size_t n = 0;
    for (const auto& e : edges_) n += e.labels.size();
    return n;
}

}  // namespace temporeach
