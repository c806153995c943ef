#pragma once

// Independent reference implementations used to validate the library: a
// naive fixpoint closure over the full domain product, BFS level sets, a
// product-construction fair-cycle search (no SCC machinery), and replay
// validators for counterexample traces and lassos.

#include <gtest/gtest.h>

#include <cstdint>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mcc/mcc.hpp"

namespace oracle {

/// Every syntactic state in the domain product, first variable most
/// significant, domain values in canonical order.
inline std::vector<mcc::State> domain_product(const mcc::Model& m) {
    std::vector<mcc::State> out;
    const std::size_t n = m.vars.size();
    std::vector<std::int64_t> counter(n, 0);
    while (true) {
        mcc::State s;
        s.values.resize(n);
        for (std::size_t i = 0; i < n; ++i)
            s.values[i] = m.domain_value(static_cast<int>(i), counter[i]);
        out.push_back(std::move(s));
        std::size_t i = n;
        bool done = (n == 0);
        while (i > 0) {
            --i;
            if (++counter[i] < m.domain_size(static_cast<int>(i))) break;
            counter[i] = 0;
            if (i == 0) done = true;
        }
        if (done) break;
    }
    return out;
}

/// Enabled successors of `s`, tagged with the index of the producing action.
inline std::vector<std::pair<int, mcc::State>> successors(const mcc::Model& m,
                                                          const mcc::State& s) {
    std::vector<std::pair<int, mcc::State>> out;
    for (std::size_t a = 0; a < m.actions.size(); ++a) {
        if (!mcc::enabled(m, m.actions[a], s)) continue;
        for (mcc::State& t : mcc::apply(m, m.actions[a], s))
            out.emplace_back(static_cast<int>(a), std::move(t));
    }
    return out;
}

/// Reachable states via saturation: filter the domain product through init,
/// then add successors until no state is new.
inline std::set<mcc::State> closure(const mcc::Model& m) {
    std::set<mcc::State> reach;
    for (const mcc::State& s : domain_product(m))
        if (mcc::eval(m, *m.init, s).as_bool()) reach.insert(s);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<mcc::State> snapshot(reach.begin(), reach.end());
        for (const mcc::State& s : snapshot)
            for (auto& [a, t] : successors(m, s))
                if (reach.insert(t).second) grew = true;
    }
    return reach;
}

/// BFS level sets: levels[k] holds exactly the states first reachable in k
/// transitions. The minimal counterexample length for a violated invariant
/// is the first level containing a violating state.
inline std::vector<std::set<mcc::State>> levels(const mcc::Model& m) {
    std::vector<std::set<mcc::State>> out;
    std::set<mcc::State> seen;
    std::set<mcc::State> frontier;
    for (const mcc::State& s : domain_product(m))
        if (mcc::eval(m, *m.init, s).as_bool()) frontier.insert(s);
    while (!frontier.empty()) {
        seen.insert(frontier.begin(), frontier.end());
        out.push_back(frontier);
        std::set<mcc::State> next;
        for (const mcc::State& s : frontier)
            for (auto& [a, t] : successors(m, s))
                if (!seen.count(t)) next.insert(t);
        frontier = std::move(next);
    }
    return out;
}

/// Index of the first level containing a state violating `inv`, or -1 if
/// every reachable state satisfies it.
inline int first_violating_level(const mcc::Model& m, const mcc::ExprPtr& inv) {
    auto lv = levels(m);
    for (std::size_t k = 0; k < lv.size(); ++k)
        for (const mcc::State& s : lv[k])
            if (!mcc::eval(m, *inv, s).as_bool()) return static_cast<int>(k);
    return -1;
}

/// True iff some reachable state has no enabled action.
inline bool has_deadlock(const mcc::Model& m) {
    for (const mcc::State& s : closure(m)) {
        bool any = false;
        for (const mcc::Action& a : m.actions)
            if (mcc::enabled(m, a, s)) { any = true; break; }
        if (!any) return true;
    }
    return false;
}

/// Leads-to verdict computed without any SCC machinery. The property is
/// violated iff some reachable state satisfies premise && !goal and can
/// reach (inside the !goal region) a state through which a weakly-fair
/// cycle closes. Fair-cycle existence is decided by a product search over
/// (state, obligation mask) pairs: an obligation for fair action A is met
/// by taking an A-labelled edge or visiting a state where A is disabled.
inline bool leads_to_holds(const mcc::Model& m, const mcc::LeadsToProperty& prop,
                           const std::vector<std::string>& fairness) {
    std::vector<mcc::State> states;
    for (const mcc::State& s : closure(m)) states.push_back(s);
    std::map<mcc::State, int> index;
    for (std::size_t i = 0; i < states.size(); ++i) index[states[i]] = static_cast<int>(i);
    const int n = static_cast<int>(states.size());

    std::vector<bool> prem(n), keep(n);
    for (int i = 0; i < n; ++i) {
        prem[i] = mcc::eval(m, *prop.premise, states[i]).as_bool();
        keep[i] = !mcc::eval(m, *prop.goal, states[i]).as_bool();
    }

    // Real edges restricted to the !goal region.
    struct KEdge { int to; int action; };
    std::vector<std::vector<KEdge>> adj(n);
    for (int i = 0; i < n; ++i) {
        if (!keep[i]) continue;
        for (auto& [a, t] : successors(m, states[i])) {
            int j = index.at(t);
            if (keep[j]) adj[i].push_back({j, a});
        }
    }

    // Deduplicated fair action indices, in fairness-declaration order.
    std::vector<int> fair;
    for (const std::string& name : fairness) {
        int a = m.action_index(name);
        if (a < 0) continue;
        bool dup = false;
        for (int f : fair) dup = dup || (f == a);
        if (!dup) fair.push_back(a);
    }
    const int k = static_cast<int>(fair.size());
    const unsigned full = (1u << k) - 1u;

    auto disabled_mask = [&](int v) {
        unsigned mask = 0;
        for (int b = 0; b < k; ++b)
            if (!mcc::enabled(m, m.actions[fair[b]], states[v])) mask |= 1u << b;
        return mask;
    };
    auto edge_bit = [&](int action) {
        for (int b = 0; b < k; ++b)
            if (fair[b] == action) return 1u << b;
        return 0u;
    };

    // A fair cycle closes through u iff (u, full) is product-reachable from
    // (u, disabled_mask(u)). A stutter self-loop never adds obligations, so
    // it only matters in the degenerate all-met case.
    auto fair_cycle_through = [&](int u) {
        const unsigned start = disabled_mask(u);
        if (start == full) return true;  // stutter loop at u is already fair
        std::set<std::pair<int, unsigned>> visited;
        std::queue<std::pair<int, unsigned>> q;
        visited.insert({u, start});
        q.push({u, start});
        while (!q.empty()) {
            auto [v, mask] = q.front();
            q.pop();
            for (const KEdge& e : adj[v]) {
                unsigned next = mask | edge_bit(e.action) | disabled_mask(e.to);
                if (e.to == u && next == full) return true;
                if (visited.insert({e.to, next}).second) q.push({e.to, next});
            }
        }
        return false;
    };

    for (int s = 0; s < n; ++s) {
        if (!prem[s] || !keep[s]) continue;
        // States reachable from s inside the !goal region (including s).
        std::vector<bool> seen(n, false);
        std::queue<int> q;
        seen[s] = true;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            if (fair_cycle_through(v)) return false;
            for (const KEdge& e : adj[v])
                if (!seen[e.to]) { seen[e.to] = true; q.push(e.to); }
        }
    }
    return true;
}

/// Checks that a trace starts in an initial state and that every step is a
/// transition of the model ("stutter" steps must not move).
inline ::testing::AssertionResult valid_trace(const mcc::Model& m, const mcc::Trace& t) {
    if (t.states.empty()) return ::testing::AssertionFailure() << "trace has no states";
    if (t.actions.size() + 1 != t.states.size())
        return ::testing::AssertionFailure()
               << "trace has " << t.states.size() << " states but " << t.actions.size()
               << " actions";
    if (!mcc::eval(m, *m.init, t.states.front()).as_bool())
        return ::testing::AssertionFailure()
               << "first state is not initial: " << mcc::state_to_string(m, t.states.front());
    for (std::size_t i = 0; i < t.states.size(); ++i)
        for (std::size_t v = 0; v < m.vars.size(); ++v)
            if (!m.in_domain(static_cast<int>(v), t.states[i].values[v]))
                return ::testing::AssertionFailure()
                       << "state #" << i << " leaves the domain of " << m.vars[v].name;
    for (std::size_t i = 0; i < t.actions.size(); ++i) {
        const mcc::State& from = t.states[i];
        const mcc::State& to = t.states[i + 1];
        if (t.actions[i] == mcc::kStutterLabel) {
            if (!(from == to))
                return ::testing::AssertionFailure() << "stutter step #" << i << " moves";
            continue;
        }
        int a = m.action_index(t.actions[i]);
        if (a < 0)
            return ::testing::AssertionFailure()
                   << "step #" << i << " names unknown action " << t.actions[i];
        if (!mcc::enabled(m, m.actions[a], from))
            return ::testing::AssertionFailure()
                   << t.actions[i] << " is disabled at " << mcc::state_to_string(m, from);
        bool hit = false;
        for (const mcc::State& succ : mcc::apply(m, m.actions[a], from))
            hit = hit || (succ == to);
        if (!hit)
            return ::testing::AssertionFailure()
                   << "step #" << i << " (" << t.actions[i] << ") does not reach "
                   << mcc::state_to_string(m, to);
    }
    return ::testing::AssertionSuccess();
}

/// Checks every lasso well-formedness and semantic requirement: the stem is
/// a real trace, the cycle closes with genuine transitions, every cycle
/// state falsifies the goal, some stem state satisfies the premise with no
/// goal state after it, and the cycle meets each weak-fairness obligation.
inline ::testing::AssertionResult valid_lasso(const mcc::Model& m,
                                              const mcc::LeadsToProperty& prop,
                                              const std::vector<std::string>& fairness,
                                              const mcc::Lasso& l) {
    auto stem = valid_trace(m, l.stem);
    if (!stem) return stem;
    if (l.cycle_states.empty()) return ::testing::AssertionFailure() << "cycle has no states";
    if (l.cycle_actions.size() != l.cycle_states.size())
        return ::testing::AssertionFailure()
               << "cycle has " << l.cycle_states.size() << " states but "
               << l.cycle_actions.size() << " actions";
    if (!(l.cycle_states.front() == l.stem.states.back()))
        return ::testing::AssertionFailure() << "cycle does not start at the stem's last state";

    const std::size_t len = l.cycle_states.size();
    for (std::size_t i = 0; i < len; ++i) {
        const mcc::State& from = l.cycle_states[i];
        const mcc::State& to = l.cycle_states[(i + 1) % len];
        const std::string& label = l.cycle_actions[i];
        if (label == mcc::kStutterLabel) {
            if (!(from == to))
                return ::testing::AssertionFailure() << "cycle stutter step #" << i << " moves";
            continue;
        }
        int a = m.action_index(label);
        if (a < 0)
            return ::testing::AssertionFailure()
                   << "cycle step #" << i << " names unknown action " << label;
        if (!mcc::enabled(m, m.actions[a], from))
            return ::testing::AssertionFailure()
                   << label << " is disabled at " << mcc::state_to_string(m, from);
        bool hit = false;
        for (const mcc::State& succ : mcc::apply(m, m.actions[a], from))
            hit = hit || (succ == to);
        if (!hit)
            return ::testing::AssertionFailure()
                   << "cycle step #" << i << " (" << label << ") does not reach "
                   << mcc::state_to_string(m, to);
    }

    for (const mcc::State& s : l.cycle_states)
        if (mcc::eval(m, *prop.goal, s).as_bool())
            return ::testing::AssertionFailure()
                   << "cycle state satisfies the goal: " << mcc::state_to_string(m, s);

    bool witnessed = false;
    for (std::size_t j = 0; j < l.stem.states.size() && !witnessed; ++j) {
        if (!mcc::eval(m, *prop.premise, l.stem.states[j]).as_bool()) continue;
        bool clean = true;
        for (std::size_t i = j; i < l.stem.states.size(); ++i)
            clean = clean && !mcc::eval(m, *prop.goal, l.stem.states[i]).as_bool();
        witnessed = clean;
    }
    if (!witnessed)
        return ::testing::AssertionFailure()
               << "no stem state satisfies the premise without a later goal state";

    for (const std::string& name : fairness) {
        int a = m.action_index(name);
        if (a < 0) continue;
        bool taken = false;
        for (const std::string& label : l.cycle_actions) taken = taken || (label == name);
        bool disabled_somewhere = false;
        for (const mcc::State& s : l.cycle_states)
            disabled_somewhere = disabled_somewhere || !mcc::enabled(m, m.actions[a], s);
        if (!taken && !disabled_somewhere)
            return ::testing::AssertionFailure()
                   << "cycle is unfair to " << name << ": never taken yet always enabled";
    }
    return ::testing::AssertionSuccess();
}

}  // namespace oracle
