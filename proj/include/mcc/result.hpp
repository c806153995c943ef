#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mcc/model.hpp"
#include "mcc/types.hpp"

namespace mcc {

enum class Verdict { Holds, Violated, Error };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Holds: return "holds";
        case Verdict::Violated: return "violated";
        case Verdict::Error: return "error";
    }
    return "?";
}

enum class PropertyKind { Invariant, LeadsTo, Deadlock };

inline const char* to_string(PropertyKind k) {
    switch (k) {
        case PropertyKind::Invariant: return "invariant";
        case PropertyKind::LeadsTo: return "leads-to";
        case PropertyKind::Deadlock: return "deadlock";
    }
    return "?";
}

/// Name of the stuttering self-transition in traces and simulation.
inline constexpr const char* kStutterLabel = "stutter";

/// A finite behavior prefix: states.size() == actions.size() + 1 and
/// actions[i] relates states[i] to states[i+1]. The first state is initial.
struct Trace {
    std::vector<State> states;
    std::vector<std::string> actions;
};

/// A lasso-shaped behavior: `stem` ends at the cycle entry, which `cycle`
/// repeats forever. cycle.states[0] is the entry; cycle.actions has one
/// label per cycle state, the last one returning to the entry.
struct Lasso {
    Trace stem;
    std::vector<State> cycle_states;
    std::vector<std::string> cycle_actions;
};

struct PropertyResult {
    std::string property;
    PropertyKind kind{PropertyKind::Invariant};
    Verdict verdict{Verdict::Holds};
    std::optional<Trace> trace;  // safety / deadlock counterexample
    std::optional<Lasso> lasso;  // liveness counterexample
};

struct Stats {
    std::int64_t states{0};
    std::int64_t edges{0};
    std::int64_t diameter{0};  // longest shortest-path distance from an initial state
};

struct CheckReport {
    std::string model;
    Stats stats;
    std::vector<PropertyResult> results;

    bool all_hold() const {
        for (const auto& r : results)
            if (r.verdict != Verdict::Holds) return false;
        return true;
    }
};

}  // namespace mcc
