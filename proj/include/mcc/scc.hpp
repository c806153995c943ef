#pragma once

#include <algorithm>
#include <vector>

#include "mcc/graph.hpp"

namespace mcc {

/// Tarjan's strongly-connected-components algorithm, iterative to keep
/// desk-scale graphs off the call stack. `adj[v]` lists successors of v;
/// entries outside [0, n) are ignored. Returns a partition of 0..n-1:
/// members ascending within each component, components ordered by their
/// minimal member.
inline std::vector<std::vector<int>> compute_sccs(int n,
                                                  const std::vector<std::vector<int>>& adj) {
    std::vector<int> index(n, -1), lowlink(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<int> stack;
    std::vector<std::vector<int>> sccs;
    int next_index = 0;

    struct Frame {
        int v;
        std::size_t child;
    };
    std::vector<Frame> call;
    static const std::vector<int> no_succ;

    for (int root = 0; root < n; ++root) {
        if (index[root] != -1) continue;
        call.push_back({root, 0});
        index[root] = lowlink[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = true;

        while (!call.empty()) {
            Frame& f = call.back();
            const auto& succ =
                static_cast<std::size_t>(f.v) < adj.size() ? adj[f.v] : no_succ;
            if (f.child < succ.size()) {
                int w = succ[f.child++];
                if (w < 0 || w >= n) continue;
                if (index[w] == -1) {
                    index[w] = lowlink[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    lowlink[f.v] = std::min(lowlink[f.v], index[w]);
                }
            } else {
                int v = f.v;
                call.pop_back();
                if (!call.empty())
                    lowlink[call.back().v] = std::min(lowlink[call.back().v], lowlink[v]);
                if (lowlink[v] == index[v]) {
                    std::vector<int> comp;
                    int w;
                    do {
                        w = stack.back();
                        stack.pop_back();
                        on_stack[w] = false;
                        comp.push_back(w);
                    } while (w != v);
                    std::sort(comp.begin(), comp.end());
                    sccs.push_back(std::move(comp));
                }
            }
        }
    }
    std::sort(sccs.begin(), sccs.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  return a.front() < b.front();
              });
    return sccs;
}

/// SCCs of a state graph's real transition structure.
inline std::vector<std::vector<int>> compute_sccs(const StateGraph& g) {
    std::vector<std::vector<int>> adj(g.states.size());
    for (const auto& e : g.edges) adj[e.from].push_back(e.to);
    return compute_sccs(static_cast<int>(g.states.size()), adj);
}

}  // namespace mcc
