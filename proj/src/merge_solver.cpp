// SPDX-License-Identifier: MIT
#include "temporeach/merge_solver.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "temporeach/errors.hpp"

namespace temporeach {

namespace {

constexpr int kUnreached = std::numeric_limits<int>::max();

// Flat, index-based view of the instance plus the current label map.
// Merges are windows [start, end] relabelled to end; the map is therefore
// monotone non-decreasing, so instances sorted by original label stay
// sorted by mapped label and one forward sweep per evaluation suffices.
struct EvalContext {
    int vertex_count = 0;
    bool directed = false;
    std::vector<int> eu, ev, elabel;  // label instances sorted by original label
    std::vector<int> sources;         // vertex indices, unique
    int horizon = 0;
    Objective objective = Objective::MinReach;

    std::vector<int> map;  // map[t] = current step of original label t
    long long evaluations = 0;
    long long eval_limit = 0;

    // scratch buffers
    std::vector<int> arr;
    std::vector<int> pending;

    void charge() {
        if (++evaluations > eval_limit)
            throw BudgetError("evaluation budget of " + std::to_string(eval_limit) +
                              " exceeded");
    }

    // Reached-vertex count from `srcs` under the current map, strict paths,
    // counting only arrivals <= cutoff (cutoff < 0: unbounded).
    long long sweep(const std::vector<int>& srcs, int cutoff) {
        arr.assign(vertex_count, kUnreached);
        long long reached = 0;
        for (int s : srcs) {
            if (arr[s] != 0) { arr[s] = 0; ++reached; }
        }
        std::size_t i = 0;
        const std::size_t m = elabel.size();
        while (i < m) {
            const int t = map[elabel[i]];
            if (cutoff >= 0 && t > cutoff) break;
            std::size_t j = i;
            while (j < m && map[elabel[j]] == t) ++j;
            pending.clear();
            for (std::size_t k = i; k < j; ++k) {
                const int u = eu[k], v = ev[k];
                if (arr[u] < t && arr[v] > t) pending.push_back(v);
                if (!directed && arr[v] < t && arr[u] > t) pending.push_back(u);
            }
            for (int v : pending) {
                if (arr[v] > t) { arr[v] = t; ++reached; }
            }
            i = j;
        }
        return reached;
    }

    // Objective value under the current map (one budget charge).
    long long value(int cutoff = -1) {
        charge();
        switch (objective) {
            case Objective::MinReach:
            case Objective::MaxReach:
                return sweep(sources, cutoff);
            default:
                break;
        }
        long long max_v = 0, min_v = 0, sum = 0;
        bool first = true;
        std::vector<int> single(1);
        for (int s : sources) {
            single[0] = s;
            const long long r = sweep(single, cutoff);
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
};

struct Candidate {
    int start = 0;
    int length = 0;
    int end() const { return start + length - 1; }
};

struct Search {
    explicit Search(EvalContext& context) : ctx(context) {}

    EvalContext& ctx;
    std::vector<Candidate> candidates;
    bool minimize_direction = false;
    int mu = 0;
    int lambda = 0;

    std::vector<Merge> current;
    std::vector<Merge> best_scheme;
    long long best_value = 0;
    bool has_best = false;

    bool better(long long a, long long b) const {
        return minimize_direction ? a < b : a > b;
    }

    void consider(long long v) {
        if (!has_best || better(v, best_value)) {
            has_best = true;
            best_value = v;
            best_scheme = current;
        }
    }

    void apply(const Candidate& c) {
        for (int t = c.start; t < c.end(); ++t) ctx.map[t] = c.end();
    }
    void undo(const Candidate& c) {
        for (int t = c.start; t < c.end(); ++t) ctx.map[t] = t;
    }

    // "At most mu merges, lengths <= lambda": every node is a feasible
    // scheme, so each is evaluated on entry. Candidates are explored in
    // (start, length) order and the incumbent only improves strictly, which
    // pins the lexicographically least optimal witness.
    void dfs_at_most(std::size_t from) {
        const long long v = ctx.value();
        consider(v);
        if (static_cast<int>(current.size()) == mu) return;
        const int last_end = current.empty() ? 0 : current.back().start + current.back().length - 1;
        for (std::size_t idx = from; idx < candidates.size(); ++idx) {
            const Candidate& c = candidates[idx];
            if (c.start <= last_end) continue;  // not independent of the last merge
            if (has_best) {
                if (minimize_direction) {
                    // Arrivals before this window's start can never be
                    // undone by merges at or after it: a lower bound for
                    // the whole subtree, non-decreasing across siblings.
                    if (ctx.value(c.start - 1) >= best_value) break;
                } else {
                    // Merges only shrink reach: the current value is an
                    // upper bound for every descendant.
                    if (v <= best_value) break;
                }
            }
            apply(c);
            current.push_back({c.start, c.length});
            dfs_at_most(idx + 1);
            current.pop_back();
            undo(c);
        }
    }

    // "Exactly mu merges of length exactly lambda": only full placements
    // are feasible; prefixes are evaluated for bounds only.
    void dfs_exactly(std::size_t from) {
        if (static_cast<int>(current.size()) == mu) {
            consider(ctx.value());
            return;
        }
        const int remaining = mu - static_cast<int>(current.size());
        long long ub = 0;
        if (!minimize_direction) {
            ub = ctx.value();
            if (has_best && ub <= best_value) return;
        }
        const int last_end = current.empty() ? 0 : current.back().start + current.back().length - 1;
        const int latest_start = ctx.horizon - remaining * lambda + 1;
        for (std::size_t idx = from; idx < candidates.size(); ++idx) {
            const Candidate& c = candidates[idx];
            if (c.start <= last_end) continue;
            if (c.start > latest_start) break;  // no room left for the rest
            if (minimize_direction && has_best) {
                if (ctx.value(c.start - 1) >= best_value) break;
            }
            apply(c);
            current.push_back({c.start, c.length});
            dfs_exactly(idx + 1);
            current.pop_back();
            undo(c);
        }
    }
};

}  // namespace

std::string solver_mode_name(SolverMode mode) {
    return mode == SolverMode::Minimize ? "minimize" : "maximize";
}

SolverMode solver_mode_from_name(const std::string& name) {
    if (name == "minimize") return SolverMode::Minimize;
    if (name == "maximize") return SolverMode::Maximize;
    throw std::invalid_argument("unknown solver mode '" + name + "'");
}

MergeSolveResult solve_merge_exact(const TemporalGraph& g,
                                   const std::vector<std::string>& sources,
                                   Objective objective,
                                   int lambda,
                                   int mu,
                                   SolverMode mode,
                                   Strictness strictness,
                                   const MergeSolveOptions& options) {
    if (strictness != Strictness::Strict)
        throw UnsupportedError("merge solving supports strict paths only");
    if (lambda < 1) throw std::invalid_argument("lambda must be >= 1");
    if (mu < 0) throw std::invalid_argument("mu must be >= 0");
    if (options.eval_limit < 1) throw std::invalid_argument("eval limit must be >= 1");

    EvalContext ctx;
    ctx.vertex_count = static_cast<int>(g.vertex_count());
    ctx.directed = g.directed();
    ctx.horizon = g.lifetime();
    ctx.objective = objective;
    ctx.eval_limit = options.eval_limit;

    if (sources.empty()) throw std::invalid_argument("source set must be non-empty");
    for (const auto& s : sources) {
        const auto& vs = g.vertices();
        auto it = std::lower_bound(vs.begin(), vs.end(), s);
        if (it == vs.end() || *it != s)
            throw std::invalid_argument("source '" + s + "' is not a vertex of the graph");
        const int idx = static_cast<int>(it - vs.begin());
        if (std::find(ctx.sources.begin(), ctx.sources.end(), idx) == ctx.sources.end())
            ctx.sources.push_back(idx);
    }

    {
        struct Inst { int u, v, label; };
        std::vector<Inst> flat;
        const auto& vs = g.vertices();
        for (const auto& e : g.edges()) {
            const int u = static_cast<int>(std::lower_bound(vs.begin(), vs.end(), e.u) - vs.begin());
            const int v = static_cast<int>(std::lower_bound(vs.begin(), vs.end(), e.v) - vs.begin());
            for (int l : e.labels) flat.push_back({u, v, l});
        }
        std::stable_sort(flat.begin(), flat.end(),
                         [](const Inst& a, const Inst& b) { return a.label < b.label; });
        for (const auto& f : flat) {
            ctx.eu.push_back(f.u);
            ctx.ev.push_back(f.v);
            ctx.elabel.push_back(f.label);
        }
    }
    ctx.map.resize(ctx.horizon + 1);
    for (int t = 0; t <= ctx.horizon; ++t) ctx.map[t] = t;

    if (mode == SolverMode::Maximize && mu > 0 &&
        static_cast<long long>(mu) * lambda > ctx.horizon) {
        throw std::invalid_argument(
            "cannot place " + std::to_string(mu) + " independent merges of length " +
            std::to_string(lambda) + " within lifetime " + std::to_string(ctx.horizon));
    }

    Search search(ctx);
    search.minimize_direction = is_minimization(objective);
    search.mu = mu;
    search.lambda = lambda;

    if (mode == SolverMode::Minimize) {
        // Occupancy prefix sums: a merge whose movable steps [start, end-1]
        // carry no labels is the graph identity and never needed.
        std::vector<int> occupied(ctx.horizon + 2, 0);
        for (int l : ctx.elabel) occupied[l] = 1;
        std::vector<int> prefix(ctx.horizon + 2, 0);
        for (int t = 1; t <= ctx.horizon; ++t) prefix[t] = prefix[t - 1] + occupied[t];
        auto any_label = [&](int lo, int hi) { return prefix[hi] - prefix[lo - 1] > 0; };
        for (int start = 1; start <= ctx.horizon; ++start) {
            for (int length = 2; length <= lambda && start + length - 1 <= ctx.horizon; ++length) {
                if (any_label(start, start + length - 2))
                    search.candidates.push_back({start, length});
            }
        }
    } else {
        for (int start = 1; start + lambda - 1 <= ctx.horizon; ++start)
            search.candidates.push_back({start, lambda});
    }

    MergeSolveResult result;
    result.baseline = ctx.value();

    if (mode == SolverMode::Minimize) {
        search.dfs_at_most(0);
    } else {
        search.dfs_exactly(0);
    }
    if (!search.has_best)
        throw std::invalid_argument("no feasible scheme in the requested family");

    result.scheme.merges = search.best_scheme;  // built in ascending-start order
    result.value = search.best_value;
    result.evaluations = ctx.evaluations;
    return result;
}

long long evaluate_scheme(const TemporalGraph& g,
                          const std::vector<std::string>& sources,
                          const MergingScheme& scheme,
                          Objective objective,
                          Strictness strictness) {
    return evaluate_objective(apply_scheme(g, scheme), sources, objective, strictness);
}

}  // namespace temporeach
