// SPDX-License-Identifier: MIT
#include "temporeach/delay_solver.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "temporeach/errors.hpp"
#include "temporeach/reach.hpp"

namespace temporeach {

namespace {

constexpr int kUnreached = std::numeric_limits<int>::max();

// Flat instance view with a mutable per-instance displacement. Displaced
// labels are no longer monotone in the original order, so evaluation
// re-buckets instances by current label each time (instances and horizons
// stay tiny in every supported workload).
struct DelayEvalContext {
    int vertex_count = 0;
    bool directed = false;
    std::vector<int> eu, ev, original;       // canonical (u, v, label) order
    std::vector<std::string> names_u, names_v;
    std::vector<int> extra;                  // current displacement, 0..delta
    std::vector<int> sources;
    Objective objective = Objective::MinReach;
    int delta = 0;
    int max_label = 0;  // original lifetime + delta
    long long evaluations = 0;
    long long eval_limit = 0;

    std::vector<std::vector<int>> buckets;  // instance indices by current label
    std::vector<int> arr;
    std::vector<int> pending;

    void charge() {
        if (++evaluations > eval_limit)
            throw BudgetError("evaluation budget of " + std::to_string(eval_limit) +
                              " exceeded");
    }

    long long sweep(const std::vector<int>& srcs) {
        for (auto& b : buckets) b.clear();
        for (std::size_t i = 0; i < original.size(); ++i)
            buckets[original[i] + extra[i]].push_back(static_cast<int>(i));

        arr.assign(vertex_count, kUnreached);
        long long reached = 0;
        for (int s : srcs) {
            if (arr[s] != 0) { arr[s] = 0; ++reached; }
        }
        for (int t = 1; t <= max_label; ++t) {
            pending.clear();
            for (int i : buckets[t]) {
                const int u = eu[i], v = ev[i];
                if (arr[u] < t && arr[v] > t) pending.push_back(v);
                if (!directed && arr[v] < t && arr[u] > t) pending.push_back(u);
            }
            for (int v : pending) {
                if (arr[v] > t) { arr[v] = t; ++reached; }
            }
        }
        return reached;
    }

    long long value() {
        charge();
        switch (objective) {
            case Objective::MinReach:
            case Objective::MaxReach:
                return sweep(sources);
            default:
                break;
        }
        long long max_v = 0, min_v = 0, sum = 0;
        bool first = true;
        std::vector<int> single(1);
        for (int s : sources) {
            single[0] = s;
            const long long r = sweep(single);
            if (first) { max_v = min_v = r; first = false; }
            max_v = std::max(max_v, r);
            min_v = std::min(min_v, r);
            sum += r;
        }
        switch (objective) {
            case Objective::MinMaxReach: return max_v;
            case Objective::MaxMinReach: return min_v;
            default: return sum;
        }
    }

    DelayScheme scheme_from(const std::vector<int>& displacement) const {
        DelayScheme out;
        for (std::size_t i = 0; i < displacement.size(); ++i) {
            if (displacement[i] > 0)
                out.delays.push_back({names_u[i], names_v[i], original[i],
                                      original[i] + displacement[i]});
        }
        return out;  // canonical order by construction
    }
};

DelayEvalContext make_context(const TemporalGraph& g,
                              const std::vector<std::string>& sources,
                              Objective objective,
                              int delta,
                              long long eval_limit) {
    if (delta < 0) throw std::invalid_argument("delta must be >= 0");
    if (eval_limit < 1) throw std::invalid_argument("eval limit must be >= 1");
    DelayEvalContext ctx;
    ctx.vertex_count = static_cast<int>(g.vertex_count());
    ctx.directed = g.directed();
    ctx.objective = objective;
    ctx.delta = delta;
    ctx.max_label = g.lifetime() + delta;
    ctx.eval_limit = eval_limit;
    ctx.buckets.resize(ctx.max_label + 1);

    if (sources.empty()) throw std::invalid_argument("source set must be non-empty");
    const auto& vs = g.vertices();
    for (const auto& s : sources) {
        auto it = std::lower_bound(vs.begin(), vs.end(), s);
        if (it == vs.end() || *it != s)
            throw std::invalid_argument("source '" + s + "' is not a vertex of the graph");
        const int idx = static_cast<int>(it - vs.begin());
        if (std::find(ctx.sources.begin(), ctx.sources.end(), idx) == ctx.sources.end())
            ctx.sources.push_back(idx);
    }
    for (const auto& e : g.edges()) {
        const int u = static_cast<int>(std::lower_bound(vs.begin(), vs.end(), e.u) - vs.begin());
        const int v = static_cast<int>(std::lower_bound(vs.begin(), vs.end(), e.v) - vs.begin());
        for (int l : e.labels) {
            ctx.eu.push_back(u);
            ctx.ev.push_back(v);
            ctx.original.push_back(l);
            ctx.names_u.push_back(e.u);
            ctx.names_v.push_back(e.v);
        }
    }
    ctx.extra.assign(ctx.original.size(), 0);
    return ctx;
}

struct DelaySearch {
    explicit DelaySearch(DelayEvalContext& context) : ctx(context) {}

    DelayEvalContext& ctx;
    int kappa = 0;
    std::vector<int> best;
    long long best_value = 0;
    bool has_best = false;

    void consider() {
        const long long v = ctx.value();
        if (!has_best || v < best_value) {
            has_best = true;
            best_value = v;
            best = ctx.extra;
        }
    }

    // Enumerates every scheme with at most kappa displaced instances,
    // instances in canonical order and smaller displacements first; the
    // first optimum found is the lexicographically least one.
    void dfs(std::size_t from, int used) {
        consider();
        if (used == kappa) return;
        for (std::size_t i = from; i < ctx.extra.size(); ++i) {
            for (int d = 1; d <= ctx.delta; ++d) {
                ctx.extra[i] = d;
                dfs(i + 1, used + 1);
            }
            ctx.extra[i] = 0;
        }
    }
};

}  // namespace

GreedyDelayResult greedy_unbounded_delay(const TemporalGraph& g,
                                         const std::vector<std::string>& sources,
                                         int delta,
                                         Strictness strictness) {
    if (strictness != Strictness::Strict)
        throw UnsupportedError("greedy delay supports strict paths only");
    if (delta < 1) throw std::invalid_argument("delta must be >= 1");
    (void)earliest_arrival(g, sources, strictness);  // validates the source set

    DelayState state(g, delta);
    const int original_lifetime = g.lifetime();
    for (int t = 1; t <= original_lifetime + delta - 1; ++t) {
        const TemporalGraph current = state.graph();
        // Snapshot the frontier before touching anything: pushes made at
        // step t must not influence step t's own frontier.
        const std::vector<FrontierEdge> frontier = frontier_edges(current, sources, t, strictness);
        for (const FrontierEdge& fe : frontier) {
            for (int original : state.originals_at(fe.u, fe.v, t)) {
                if (state.is_delta_possible(fe.u, fe.v, original, t + 1))
                    state.apply_delay(fe.u, fe.v, original, t + 1);
            }
        }
    }
    return {state.scheme(), state.graph()};
}

DelaySolveResult solve_delay_exact(const TemporalGraph& g,
                                   const std::vector<std::string>& sources,
                                   Objective objective,
                                   int delta,
                                   int kappa,
                                   Strictness strictness,
                                   const DelaySolveOptions& options) {
    if (strictness != Strictness::Strict)
        throw UnsupportedError("delay solving supports strict paths only");
    if (!is_minimization(objective))
        throw UnsupportedError("maximization objectives are not supported under delays");
    if (kappa < 0) throw std::invalid_argument("kappa must be >= 0");

    DelayEvalContext ctx = make_context(g, sources, objective, delta, options.eval_limit);
    DelaySearch search(ctx);
    search.kappa = kappa;

    DelaySolveResult result;
    result.baseline = ctx.value();
    search.dfs(0, 0);
    result.scheme = ctx.scheme_from(search.best);
    result.value = search.best_value;
    result.evaluations = ctx.evaluations;
    return result;
}

DelaySolveResult brute_force_delay_oracle(const TemporalGraph& g,
                                          const std::vector<std::string>& sources,
                                          int delta,
                                          Strictness strictness,
                                          const DelaySolveOptions& options) {
    if (strictness != Strictness::Strict)
        throw UnsupportedError("the delay oracle supports strict paths only");

    DelayEvalContext ctx =
        make_context(g, sources, Objective::MinReach, delta, options.eval_limit);

    long long total = 1;
    for (std::size_t i = 0; i < ctx.extra.size(); ++i) {
        total *= delta + 1;
        if (total > options.eval_limit)
            throw BudgetError("sweep of (delta+1)^" + std::to_string(ctx.extra.size()) +
                              " assignments exceeds the evaluation budget of " +
                              std::to_string(options.eval_limit));
    }

    DelaySolveResult result;
    std::vector<int> best = ctx.extra;
    long long best_value = ctx.value();
    result.baseline = best_value;

    // Odometer over all displacement vectors, rightmost digit fastest:
    // ascending lexicographic order, so the first minimum is the least one.
    while (true) {
        int pos = static_cast<int>(ctx.extra.size()) - 1;
        while (pos >= 0 && ctx.extra[pos] == delta) ctx.extra[pos--] = 0;
        if (pos < 0) break;
        ++ctx.extra[pos];
        const long long v = ctx.value();
        if (v < best_value) {
            best_value = v;
            best = ctx.extra;
        }
    }

    result.scheme = ctx.scheme_from(best);
    result.value = best_value;
    result.evaluations = ctx.evaluations;
    return result;
}

}  // namespace temporeach
