#pragma once

#include <string>

#include "json.hpp"
#include "mcc/model.hpp"
#include "mcc/result.hpp"

namespace mcc {

namespace detail {

inline void append_state_line(std::string& out, const Model& m, std::size_t number,
                              const State& s) {
    out += "  #" + std::to_string(number) + "  " + state_to_string(m, s) + "\n";
}

inline void append_arrow(std::string& out, const std::string& action) {
    out += "  --" + action + "-->\n";
}

inline nlohmann::ordered_json value_to_json(const Model& m, const Value& v) {
    switch (v.kind) {
        case Value::Kind::Bool: return v.as_bool();
        case Value::Kind::Int: return v.as_int();
        case Value::Kind::Enum: return m.enums[v.enum_type].members[v.member_index()];
    }
    return nullptr;
}

inline nlohmann::ordered_json state_to_json(const Model& m, const State& s) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < m.vars.size(); ++i)
        obj[m.vars[i].name] = value_to_json(m, s.values[i]);
    return obj;
}

inline nlohmann::ordered_json trace_to_json(const Model& m, const Trace& t) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    obj["states"] = nlohmann::ordered_json::array();
    for (const auto& s : t.states) obj["states"].push_back(state_to_json(m, s));
    obj["actions"] = t.actions;
    return obj;
}

}  // namespace detail

/// Human-readable report. Violations print the counterexample indented
/// under the verdict line; lasso cycles repeat the entry state (same
/// number) on the closing line.
inline std::string render_text(const Model& m, const CheckReport& report) {
    std::string out;
    out += "model: " + report.model + "\n";
    out += "states: " + std::to_string(report.stats.states) + "\n";
    out += "edges: " + std::to_string(report.stats.edges) + "\n";
    out += "diameter: " + std::to_string(report.stats.diameter) + "\n";
    for (const auto& r : report.results) {
        out += r.property + " (" + to_string(r.kind) + "): " + to_string(r.verdict) + "\n";
        if (r.trace) {
            for (std::size_t i = 0; i < r.trace->states.size(); ++i) {
                if (i) detail::append_arrow(out, r.trace->actions[i - 1]);
                detail::append_state_line(out, m, i, r.trace->states[i]);
            }
        }
        if (r.lasso) {
            const Trace& stem = r.lasso->stem;
            for (std::size_t i = 0; i < stem.states.size(); ++i) {
                if (i) detail::append_arrow(out, stem.actions[i - 1]);
                detail::append_state_line(out, m, i, stem.states[i]);
            }
            const std::size_t entry = stem.states.empty() ? 0 : stem.states.size() - 1;
            out += "  loop:\n";
            detail::append_state_line(out, m, entry, r.lasso->cycle_states[0]);
            for (std::size_t i = 1; i < r.lasso->cycle_states.size(); ++i) {
                detail::append_arrow(out, r.lasso->cycle_actions[i - 1]);
                detail::append_state_line(out, m, entry + i, r.lasso->cycle_states[i]);
            }
            detail::append_arrow(out, r.lasso->cycle_actions.back());
            detail::append_state_line(out, m, entry, r.lasso->cycle_states[0]);
        }
    }
    return out;
}

/// Machine-readable report:
/// {model, stats:{states,edges,diameter},
///  results:[{property, kind, verdict, trace?, lasso?}]}.
inline nlohmann::ordered_json render_json(const Model& m, const CheckReport& report) {
    nlohmann::ordered_json root = nlohmann::ordered_json::object();
    root["model"] = report.model;
    root["stats"] = {{"states", report.stats.states},
                     {"edges", report.stats.edges},
                     {"diameter", report.stats.diameter}};
    root["results"] = nlohmann::ordered_json::array();
    for (const auto& r : report.results) {
        nlohmann::ordered_json item = nlohmann::ordered_json::object();
        item["property"] = r.property;
        item["kind"] = to_string(r.kind);
        item["verdict"] = to_string(r.verdict);
        if (r.trace) item["trace"] = detail::trace_to_json(m, *r.trace);
        if (r.lasso) {
            nlohmann::ordered_json lasso = nlohmann::ordered_json::object();
            lasso["stem"] = detail::trace_to_json(m, r.lasso->stem);
            lasso["cycle"] = nlohmann::ordered_json::object();
            lasso["cycle"]["states"] = nlohmann::ordered_json::array();
            for (const auto& s : r.lasso->cycle_states)
                lasso["cycle"]["states"].push_back(detail::state_to_json(m, s));
            lasso["cycle"]["actions"] = r.lasso->cycle_actions;
            item["lasso"] = std::move(lasso);
        }
        root["results"].push_back(std::move(item));
    }
    return root;
}

}  // namespace mcc
