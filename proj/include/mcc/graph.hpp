#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "mcc/errors.hpp"
#include "mcc/model.hpp"
#include "mcc/result.hpp"
#include "mcc/semantics.hpp"
#include "mcc/types.hpp"

namespace mcc {

inline constexpr std::int64_t kDefaultMaxStates = 1'000'000;

struct ExploreOptions {
    std::int64_t max_states{kDefaultMaxStates};
};

/// A labeled transition in the reachable graph. `action` indexes the
/// model's action table; -1 marks a stuttering self-loop added by
/// stutter-closure (never produced by exploration itself).
struct GraphEdge {
    int from{-1};
    int action{-1};
    int to{-1};

    friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

/// The reachable fragment of a model, closed under successors. State
/// indices are discovery order: initial states first (in enumeration
/// order), then BFS order. Predecessor links span a BFS tree, so the
/// path from an initial state along them is a shortest path.
struct StateGraph {
    std::vector<State> states;
    std::vector<GraphEdge> edges;  // grouped by `from` in discovery order
    std::vector<int> init_indices;
    std::vector<int> pred_state;   // -1 for initial states
    std::vector<int> pred_action;  // -1 for initial states
    std::vector<int> depth;        // BFS distance from the nearest initial state

    std::unordered_map<State, int, StateHash> index;

    int find(const State& s) const {
        auto it = index.find(s);
        return it == index.end() ? -1 : it->second;
    }

    std::int64_t diameter() const {
        std::int64_t d = 0;
        for (int x : depth)
            if (x > d) d = x;
        return d;
    }

    /// Out-edge indices per state, in edge order.
    std::vector<std::vector<int>> out_edges() const {
        std::vector<std::vector<int>> out(states.size());
        for (std::size_t i = 0; i < edges.size(); ++i)
            out[edges[i].from].push_back(static_cast<int>(i));
        return out;
    }
};

/// Name of the action behind an edge label; index -1 is the stutter loop.
inline std::string action_label(const Model& m, int action) {
    return action < 0 ? std::string(kStutterLabel) : m.actions[action].name;
}

/// Reconstructs the shortest path from an initial state to `target` along
/// the BFS predecessor tree.
inline Trace path_to(const Model& m, const StateGraph& g, int target) {
    std::vector<int> chain;
    for (int v = target; v != -1; v = g.pred_state[v]) chain.push_back(v);
    Trace t;
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
        t.states.push_back(g.states[*it]);
        if (g.pred_action[*it] >= 0) t.actions.push_back(m.actions[g.pred_action[*it]].name);
    }
    return t;
}

/// Breadth-first exploration from the initial states. Successors of each
/// dequeued state are generated action-by-action in declaration order, and
/// within one action in `apply` order, which fixes discovery order and
/// hence all trace tie-breaks. Duplicate (from, action, to) edges are kept
/// once.
inline StateGraph reachable(const Model& m, const ExploreOptions& opts = {}) {
    StateGraph g;
    const std::int64_t cap = opts.max_states > 0 ? opts.max_states : kDefaultMaxStates;
    auto add_state = [&](const State& s, int pred, int action) -> int {
        if (static_cast<std::int64_t>(g.states.size()) >= cap)
            throw StateLimitError(static_cast<std::size_t>(cap));
        int idx = static_cast<int>(g.states.size());
        g.states.push_back(s);
        g.index.emplace(s, idx);
        g.pred_state.push_back(pred);
        g.pred_action.push_back(action);
        g.depth.push_back(pred < 0 ? 0 : g.depth[pred] + 1);
        return idx;
    };

    for (const State& s : initial_states(m)) {
        if (g.find(s) < 0) g.init_indices.push_back(add_state(s, -1, -1));
    }

    for (int head = 0; head < static_cast<int>(g.states.size()); ++head) {
        const std::size_t first_edge = g.edges.size();
        for (std::size_t a = 0; a < m.actions.size(); ++a) {
            const Action& action = m.actions[a];
            if (!enabled(m, action, g.states[head])) continue;
            std::vector<State> succs;
            try {
                succs = apply(m, action, g.states[head]);
            } catch (RangeViolationError& err) {
                Trace t = path_to(m, g, head);
                err.trace_states = std::move(t.states);
                err.trace_actions = std::move(t.actions);
                throw;
            }
            for (const State& succ : succs) {
                int to = g.find(succ);
                if (to < 0) to = add_state(succ, head, static_cast<int>(a));
                GraphEdge e{head, static_cast<int>(a), to};
                bool seen = false;
                for (std::size_t k = first_edge; k < g.edges.size() && !seen; ++k)
                    seen = g.edges[k] == e;
                if (!seen) g.edges.push_back(e);
            }
        }
    }
    return g;
}

}  // namespace mcc
