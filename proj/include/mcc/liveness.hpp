#pragma once

#include <algorithm>
#include <deque>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mcc/explore.hpp"
#include "mcc/graph.hpp"
#include "mcc/model.hpp"
#include "mcc/result.hpp"
#include "mcc/scc.hpp"
#include "mcc/semantics.hpp"

namespace mcc {

namespace detail {

/// BFS over a subset of a graph's edges. Returns the path from `from` to
/// `to` as edge indices, or nullopt. Deterministic: vertices are expanded
/// FIFO and edges relaxed in list order.
inline std::optional<std::vector<int>> bfs_path(const StateGraph& g,
                                                const std::vector<int>& edge_indices, int from,
                                                int to) {
    if (from == to) return std::vector<int>{};
    std::vector<std::vector<int>> adj(g.states.size());
    for (int k : edge_indices) adj[g.edges[k].from].push_back(k);
    std::vector<int> pred_edge(g.states.size(), -1);
    std::vector<bool> seen(g.states.size(), false);
    std::deque<int> queue{from};
    seen[from] = true;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int k : adj[u]) {
            int v = g.edges[k].to;
            if (seen[v]) continue;
            seen[v] = true;
            pred_edge[v] = k;
            if (v == to) {
                std::vector<int> path;
                for (int x = to; x != from; x = g.edges[pred_edge[x]].from)
                    path.push_back(pred_edge[x]);
                std::reverse(path.begin(), path.end());
                return path;
            }
            queue.push_back(v);
        }
    }
    return std::nullopt;
}

}  // namespace detail

/// Checks `prop.premise ~> prop.goal` over an explored graph under weak
/// fairness of the named actions.
///
/// The search restricts the graph to ¬goal states, stutter-closes that
/// subgraph, and decomposes it into SCCs. An SCC is accepting when for
/// every fair action A, either A labels an internal edge or A is disabled
/// at some member state (stuttering guarantees every SCC contains an
/// edge). The property is violated iff some premise∧¬goal state reaches an
/// accepting SCC inside the restriction; the counterexample lasso is that
/// state's shortest stem plus a deterministically constructed fair cycle.
///
/// Stutter edges already present in `g` (action index -1) are ignored;
/// closure is applied conceptually.
inline PropertyResult check_leads_to(const Model& m, const StateGraph& g,
                                     const LeadsToProperty& prop,
                                     const std::vector<std::string>& fairness) {
    PropertyResult result;
    result.property = prop.name;
    result.kind = PropertyKind::LeadsTo;
    result.verdict = Verdict::Holds;

    const int n = static_cast<int>(g.states.size());
    std::vector<char> premise(n), keep(n);
    for (int i = 0; i < n; ++i) {
        premise[i] = eval_bool(m, prop.premise, g.states[i]);
        keep[i] = !eval_bool(m, prop.goal, g.states[i]);
    }

    // Real edges internal to the ¬goal restriction, in discovery order.
    std::vector<int> redges;
    std::vector<std::vector<int>> radj(n);        // successor states
    std::vector<std::vector<int>> radj_edges(n);  // the corresponding edge indices
    for (int k = 0; k < static_cast<int>(g.edges.size()); ++k) {
        const GraphEdge& e = g.edges[k];
        if (e.action < 0) continue;
        if (keep[e.from] && keep[e.to]) {
            redges.push_back(k);
            radj[e.from].push_back(e.to);
            radj_edges[e.from].push_back(k);
        }
    }

    auto sccs = compute_sccs(n, radj);
    std::vector<int> scc_id(n, -1);
    for (std::size_t c = 0; c < sccs.size(); ++c)
        for (int v : sccs[c]) scc_id[v] = static_cast<int>(c);

    std::vector<std::vector<int>> internal(sccs.size());
    for (int k : redges)
        if (scc_id[g.edges[k].from] == scc_id[g.edges[k].to])
            internal[scc_id[g.edges[k].from]].push_back(k);

    std::vector<int> fair_actions;
    for (const auto& name : fairness) {
        int a = m.action_index(name);
        if (a >= 0 && std::find(fair_actions.begin(), fair_actions.end(), a) ==
                          fair_actions.end())
            fair_actions.push_back(a);
    }

    // For each fair action and SCC, the obligation witness: a member state
    // where the action is disabled (preferred, smallest index), else an
    // internal edge taken by the action (first in edge order).
    auto disabled_witness = [&](const std::vector<int>& comp, int action) -> int {
        for (int v : comp)
            if (!enabled(m, m.actions[action], g.states[v])) return v;
        return -1;
    };
    auto edge_witness = [&](int c, int action) -> int {
        for (int k : internal[c])
            if (g.edges[k].action == action) return k;
        return -1;
    };

    std::vector<char> accepting(sccs.size(), 0);
    for (std::size_t c = 0; c < sccs.size(); ++c) {
        if (!keep[sccs[c].front()]) continue;  // component lies outside the restriction
        bool ok = true;
        for (int a : fair_actions) {
            if (disabled_witness(sccs[c], a) < 0 && edge_witness(static_cast<int>(c), a) < 0) {
                ok = false;
                break;
            }
        }
        accepting[c] = ok;
    }

    // Candidates in discovery order; the counterexample uses the first one
    // that reaches an accepting SCC inside the restriction.
    for (int s = 0; s < n; ++s) {
        if (!premise[s] || !keep[s]) continue;

        // BFS from s over restricted edges; stop at the first state (in
        // visit order) belonging to an accepting SCC.
        std::vector<int> pred_edge(n, -1);
        std::vector<bool> seen(n, false);
        std::deque<int> queue{s};
        seen[s] = true;
        int entry = -1;
        while (!queue.empty() && entry < 0) {
            int u = queue.front();
            queue.pop_front();
            if (accepting[scc_id[u]]) {
                entry = u;
                break;
            }
            for (int k : radj_edges[u]) {
                const GraphEdge& e = g.edges[k];
                if (seen[e.to]) continue;
                seen[e.to] = true;
                pred_edge[e.to] = k;
                queue.push_back(e.to);
            }
        }
        if (entry < 0) continue;

        result.verdict = Verdict::Violated;
        Lasso lasso;
        lasso.stem = path_to(m, g, s);
        std::vector<int> approach;
        for (int x = entry; x != s; x = g.edges[pred_edge[x]].from)
            approach.push_back(pred_edge[x]);
        std::reverse(approach.begin(), approach.end());
        for (int k : approach) {
            lasso.stem.states.push_back(g.states[g.edges[k].to]);
            lasso.stem.actions.push_back(action_label(m, g.edges[k].action));
        }

        // Fair cycle through the entry's SCC: visit one witness per fair
        // action (in fairness order), then close back to the entry.
        const int c = scc_id[entry];
        std::vector<State> seq_states{g.states[entry]};
        std::vector<std::string> seq_actions;
        int current = entry;
        auto walk_to = [&](int target) {
            auto path = detail::bfs_path(g, internal[c], current, target);
            if (!path) throw std::logic_error("fair cycle witness not connected");
            for (int k : *path) {
                seq_actions.push_back(action_label(m, g.edges[k].action));
                seq_states.push_back(g.states[g.edges[k].to]);
            }
            current = target;
        };
        for (int a : fair_actions) {
            int d = disabled_witness(sccs[c], a);
            if (d >= 0) {
                walk_to(d);
            } else {
                int k = edge_witness(c, a);
                walk_to(g.edges[k].from);
                seq_actions.push_back(action_label(m, a));
                seq_states.push_back(g.states[g.edges[k].to]);
                current = g.edges[k].to;
            }
        }
        walk_to(entry);

        if (seq_actions.empty()) {
            lasso.cycle_states = {g.states[entry]};
            lasso.cycle_actions = {kStutterLabel};
        } else {
            seq_states.pop_back();  // final entry state duplicates index 0
            lasso.cycle_states = std::move(seq_states);
            lasso.cycle_actions = std::move(seq_actions);
        }
        result.lasso = std::move(lasso);
        return result;
    }
    return result;
}

/// Explores the model and checks a single leads-to property.
inline CheckReport check_leads_to(const Model& m, const LeadsToProperty& prop,
                                  const std::vector<std::string>& fairness,
                                  const ExploreOptions& opts = {}) {
    StateGraph g = reachable(m, opts);
    CheckReport report;
    report.stats = graph_stats(g);
    report.results.push_back(check_leads_to(m, g, prop, fairness));
    return report;
}

}  // namespace mcc
