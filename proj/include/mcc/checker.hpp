#pragma once

#include <string>

#include "mcc/explore.hpp"
#include "mcc/graph.hpp"
#include "mcc/liveness.hpp"
#include "mcc/model.hpp"
#include "mcc/result.hpp"

namespace mcc {

struct CheckOptions {
    bool invariants{true};
    bool liveness{true};
    bool deadlock{false};  // opt-in: stuttering keeps every behavior alive
    std::int64_t max_states{kDefaultMaxStates};
};

/// Runs the selected checks over a prebuilt graph. Result order: invariants
/// in declaration order, then leads-to properties in declaration order
/// (under the model's declared fairness), then the deadlock check.
inline CheckReport check_model(const Model& m, const StateGraph& g, const std::string& name,
                               const CheckOptions& opts = {}) {
    CheckReport report;
    report.model = name;
    report.stats = graph_stats(g);
    if (opts.invariants)
        for (const auto& inv : m.invariants)
            report.results.push_back(check_invariant(m, g, inv));
    if (opts.liveness)
        for (const auto& prop : m.liveness)
            report.results.push_back(check_leads_to(m, g, prop, m.fairness));
    if (opts.deadlock) report.results.push_back(check_deadlock(m, g));
    return report;
}

/// Explores the model, then checks it.
inline CheckReport check_model(const Model& m, const std::string& name,
                               const CheckOptions& opts = {}) {
    StateGraph g = reachable(m, ExploreOptions{opts.max_states});
    return check_model(m, g, name, opts);
}

}  // namespace mcc
