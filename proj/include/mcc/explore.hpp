#pragma once

#include <string>
#include <vector>

#include "mcc/graph.hpp"
#include "mcc/model.hpp"
#include "mcc/result.hpp"
#include "mcc/semantics.hpp"

namespace mcc {

/// Property name used for the opt-in deadlock check.
inline constexpr const char* kDeadlockProperty = "DeadlockFreedom";

inline Stats graph_stats(const StateGraph& g) {
    Stats s;
    s.states = static_cast<std::int64_t>(g.states.size());
    s.edges = static_cast<std::int64_t>(g.edges.size());
    s.diameter = g.diameter();
    return s;
}

/// Adds a self-loop labeled "stutter" (action index -1) at every state.
/// Idempotent: existing stutter loops are not duplicated.
inline StateGraph stutter_close(StateGraph g) {
    std::vector<bool> has_loop(g.states.size(), false);
    for (const auto& e : g.edges)
        if (e.action < 0 && e.from == e.to) has_loop[e.from] = true;
    for (int v = 0; v < static_cast<int>(g.states.size()); ++v)
        if (!has_loop[v]) g.edges.push_back(GraphEdge{v, -1, v});
    return g;
}

/// Checks one invariant over an explored graph. A violation is witnessed
/// by the shortest trace to the first violating state in discovery order
/// (BFS order, so minimal depth).
inline PropertyResult check_invariant(const Model& m, const StateGraph& g,
                                      const NamedPredicate& inv) {
    PropertyResult r;
    r.property = inv.name;
    r.kind = PropertyKind::Invariant;
    r.verdict = Verdict::Holds;
    for (int i = 0; i < static_cast<int>(g.states.size()); ++i) {
        if (!eval_bool(m, inv.condition, g.states[i])) {
            r.verdict = Verdict::Violated;
            r.trace = path_to(m, g, i);
            break;
        }
    }
    return r;
}

/// Deadlock: a reachable state where no action is enabled. Stuttering is
/// always possible and deliberately not counted as progress here.
inline PropertyResult check_deadlock(const Model& m, const StateGraph& g) {
    PropertyResult r;
    r.property = kDeadlockProperty;
    r.kind = PropertyKind::Deadlock;
    r.verdict = Verdict::Holds;
    for (int i = 0; i < static_cast<int>(g.states.size()); ++i) {
        bool any = false;
        for (const auto& a : m.actions) {
            if (enabled(m, a, g.states[i])) {
                any = true;
                break;
            }
        }
        if (!any) {
            r.verdict = Verdict::Violated;
            r.trace = path_to(m, g, i);
            break;
        }
    }
    return r;
}

inline CheckReport check_invariants(const Model& m, const ExploreOptions& opts = {}) {
    StateGraph g = reachable(m, opts);
    CheckReport report;
    report.stats = graph_stats(g);
    for (const auto& inv : m.invariants) report.results.push_back(check_invariant(m, g, inv));
    return report;
}

inline CheckReport check_deadlock(const Model& m, const ExploreOptions& opts = {}) {
    StateGraph g = reachable(m, opts);
    CheckReport report;
    report.stats = graph_stats(g);
    report.results.push_back(check_deadlock(m, g));
    return report;
}

}  // namespace mcc
