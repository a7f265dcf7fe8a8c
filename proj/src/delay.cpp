// SPDX-License-Identifier: MIT
#include "temporeach/delay.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "temporeach/errors.hpp"

namespace temporeach {

namespace {

std::string instance_text(const std::string& u, const std::string& v, int original) {
    return "(" + u + ", " + v + ") label " + std::to_string(original);
}

}  // namespace

DelayState::DelayState(const TemporalGraph& g, int delta) : delta_(delta) {
    if (delta < 0) throw std::invalid_argument("delta must be >= 0");
    directed_ = g.directed();
    vertices_ = g.vertices();
    for (const auto& e : g.edges()) {
        for (int l : e.labels) tracked_.push_back({e.u, e.v, l, l});
    }
    // Edges arrive sorted by (u, v) with ascending labels: already sorted by
    // (u, v, original).
}

const DelayState::Tracked* DelayState::find(const std::string& u, const std::string& v,
                                            int original) const {
    std::string a = u, b = v;
    if (!directed_ && b < a) std::swap(a, b);
    auto key = std::tuple(a, b, original);
    auto it = std::lower_bound(tracked_.begin(), tracked_.end(), key,
                               [](const Tracked& t, const std::tuple<std::string, std::string, int>& k) {
                                   return std::tuple(t.u, t.v, t.original) < k;
                               });
    if (it == tracked_.end() || std::tuple(it->u, it->v, it->original) != key) return nullptr;
    return &*it;
}

DelayState::Tracked* DelayState::find(const std::string& u, const std::string& v, int original) {
    return const_cast<Tracked*>(std::as_const(*this).find(u, v, original));
}

bool DelayState::tracks(const std::string& u, const std::string& v, int original) const noexcept {
    return find(u, v, original) != nullptr;
}

int DelayState::applied_count() const {
    int n = 0;
    for (const auto& t : tracked_)
        if (t.current != t.original) ++n;
    return n;
}

bool DelayState::is_delta_possible(const std::string& u, const std::string& v,
                                   int original, int target) const {
    const Tracked* t = find(u, v, original);
    if (!t)
        throw std::invalid_argument("unknown edge label instance " + instance_text(u, v, original));
    return target >= original && target - original <= delta_;
}

void DelayState::apply_delay(const std::string& u, const std::string& v,
                             int original, int new_label) {
    Tracked* t = find(u, v, original);
    if (!t)
        throw std::invalid_argument("unknown edge label instance " + instance_text(u, v, original));
    if (new_label < t->current)
        throw ValidationError("delay of " + instance_text(u, v, original) +
                              " to " + std::to_string(new_label) +
                              " would move the label backwards from " +
                              std::to_string(t->current));
    if (new_label - original > delta_)
        throw ValidationError("delay of " + instance_text(u, v, original) + " to " +
                              std::to_string(new_label) + " exceeds the budget delta = " +
                              std::to_string(delta_));
    t->current = new_label;
}

int DelayState::current_label(const std::string& u, const std::string& v, int original) const {
    const Tracked* t = find(u, v, original);
    if (!t)
        throw std::invalid_argument("unknown edge label instance " + instance_text(u, v, original));
    return t->current;
}

std::vector<int> DelayState::originals_at(const std::string& u, const std::string& v,
                                          int current) const {
    std::string a = u, b = v;
    if (!directed_ && b < a) std::swap(a, b);
    std::vector<int> out;
    for (const auto& t : tracked_) {
        if (t.u == a && t.v == b && t.current == current) out.push_back(t.original);
    }
    return out;  // tracked_ order gives ascending originals per edge
}

TemporalGraph DelayState::graph() const {
    TemporalGraph out(directed_);
    for (const auto& v : vertices_) out.add_vertex(v);
    for (const auto& t : tracked_) out.add_edge(t.u, t.v, {t.current});
    return out;
}

DelayScheme DelayState::scheme() const {
    DelayScheme out;
    for (const auto& t : tracked_) {
        if (t.current != t.original) out.delays.push_back({t.u, t.v, t.original, t.current});
    }
    return out;  // tracked_ is sorted by (u, v, original)
}

TemporalGraph apply_delay_scheme(const TemporalGraph& g,
                                 const DelayScheme& scheme,
                                 int delta,
                                 std::optional<int> kappa) {
    DelayState state(g, delta);
    std::vector<std::tuple<std::string, std::string, int>> seen;
    for (const auto& d : scheme.delays) {
        std::string a = d.u, b = d.v;
        if (!g.directed() && b < a) std::swap(a, b);
        if (!state.tracks(a, b, d.from))
            throw ValidationError("unknown edge label instance " + instance_text(a, b, d.from));
        if (d.to <= d.from)
            throw ValidationError("delay of " + instance_text(a, b, d.from) +
                                  ": target " + std::to_string(d.to) +
                                  " must exceed the original label");
        if (d.to - d.from > delta)
            throw ValidationError("delay of " + instance_text(a, b, d.from) + " to " +
                                  std::to_string(d.to) + " exceeds the budget delta = " +
                                  std::to_string(delta));
        auto key = std::tuple(a, b, d.from);
        if (std::find(seen.begin(), seen.end(), key) != seen.end())
            throw ValidationError("duplicate delay entry for " + instance_text(a, b, d.from));
        seen.push_back(key);
    }
    if (kappa && static_cast<int>(scheme.delays.size()) > *kappa)
        throw ValidationError("scheme has " + std::to_string(scheme.delays.size()) +
                              " delay entries, exceeding budget kappa = " +
                              std::to_string(*kappa));
    for (const auto& d : scheme.delays) state.apply_delay(d.u, d.v, d.from, d.to);
    return state.graph();
}

}  // namespace temporeach
