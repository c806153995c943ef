#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mcc/graph.hpp"
#include "mcc/model.hpp"
#include "mcc/result.hpp"

namespace mcc {

/// Renders the state graph as a Graphviz digraph. Node labels stack the
/// variable=value pairs; edge labels are action names; initial states get
/// a double border. When a trace is supplied, its edges and final state
/// are drawn in red. Output is byte-deterministic: nodes by index, edges
/// in discovery order.
inline std::string export_dot(const Model& m, const StateGraph& g,
                              const std::optional<Trace>& highlight = std::nullopt) {
    std::vector<bool> hot_edge(g.edges.size(), false);
    int hot_node = -1;
    if (highlight && !highlight->states.empty()) {
        hot_node = g.find(highlight->states.back());
        for (std::size_t i = 0; i < highlight->actions.size(); ++i) {
            int from = g.find(highlight->states[i]);
            int to = g.find(highlight->states[i + 1]);
            for (std::size_t k = 0; k < g.edges.size(); ++k) {
                const GraphEdge& e = g.edges[k];
                if (e.from == from && e.to == to &&
                    action_label(m, e.action) == highlight->actions[i]) {
                    hot_edge[k] = true;
                    break;
                }
            }
        }
    }

    std::vector<bool> is_init(g.states.size(), false);
    for (int i : g.init_indices) is_init[i] = true;

    std::string out = "digraph model {\n  rankdir=LR;\n  node [shape=box];\n";
    for (std::size_t v = 0; v < g.states.size(); ++v) {
        std::string label;
        for (std::size_t i = 0; i < m.vars.size(); ++i) {
            if (i) label += "\\n";
            label += m.vars[i].name + "=" + value_to_string(m, g.states[v].values[i]);
        }
        out += "  s" + std::to_string(v) + " [label=\"" + label + "\"";
        if (is_init[v]) out += ", peripheries=2";
        if (static_cast<int>(v) == hot_node) out += ", color=red";
        out += "];\n";
    }
    for (std::size_t k = 0; k < g.edges.size(); ++k) {
        const GraphEdge& e = g.edges[k];
        out += "  s" + std::to_string(e.from) + " -> s" + std::to_string(e.to) + " [label=\"" +
               action_label(m, e.action) + "\"";
        if (e.action < 0) out += ", style=dashed";
        if (hot_edge[k]) out += ", color=red, penwidth=2.0";
        out += "];\n";
    }
    out += "}\n";
    return out;
}

}  // namespace mcc
