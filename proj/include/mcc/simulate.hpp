#pragma once

#include <cctype>
#include <istream>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "mcc/model.hpp"
#include "mcc/result.hpp"
#include "mcc/semantics.hpp"

namespace mcc {

/// Interactive (or scripted) walk through a model's behaviors.
///
/// Each round prints the current state and the enabled actions numbered in
/// declaration order, with `stutter` always offered last, then reads one
/// selection: a number, an action name, `stutter`, `random` (uniform over
/// the enabled actions, seeded), or `quit`. Invalid input re-prompts; EOF
/// ends the walk. When a model has several initial states the first prompt
/// selects one by number. Input tokens are separated by whitespace or
/// commas, so scripts like "IncTime, Start, Tick, quit" replay verbatim.
/// Nondeterministic effects step to the first successor in `apply` order.
/// Returns the process exit code (0; model errors propagate as exceptions).
inline int simulate(const Model& m, std::istream& in, std::ostream& out, unsigned seed = 0) {
    auto next_token = [&in]() -> std::optional<std::string> {
        std::string tok;
        int c;
        while ((c = in.get()) != std::char_traits<char>::eof()) {
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == ',') {
                if (!tok.empty()) return tok;
            } else {
                tok += static_cast<char>(c);
            }
        }
        if (!tok.empty()) return tok;
        return std::nullopt;
    };
    auto as_number = [](const std::string& tok) -> std::optional<std::size_t> {
        if (tok.empty()) return std::nullopt;
        std::size_t n = 0;
        for (char c : tok) {
            if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
            n = n * 10 + static_cast<std::size_t>(c - '0');
            if (n > 1'000'000) return std::nullopt;
        }
        return n;
    };

    std::mt19937 rng(seed);
    std::vector<State> initials = initial_states(m);
    State current;
    if (initials.size() == 1) {
        current = initials.front();
    } else {
        out << "initial states:\n";
        for (std::size_t i = 0; i < initials.size(); ++i)
            out << "  " << (i + 1) << ". " << state_to_string(m, initials[i]) << "\n";
        for (;;) {
            out << "> ";
            auto tok = next_token();
            if (!tok || *tok == "quit") return 0;
            auto k = as_number(*tok);
            if (k && *k >= 1 && *k <= initials.size()) {
                current = initials[*k - 1];
                break;
            }
            out << "invalid choice: " << *tok << "\n";
        }
    }

    std::size_t step = 0;
    for (;;) {
        out << "#" << step << "  " << state_to_string(m, current) << "\n";
        std::vector<int> en;
        for (std::size_t i = 0; i < m.actions.size(); ++i)
            if (enabled(m, m.actions[i], current)) en.push_back(static_cast<int>(i));
        out << "enabled:";
        for (std::size_t j = 0; j < en.size(); ++j)
            out << " " << (j + 1) << ". " << m.actions[en[j]].name;
        out << " " << (en.size() + 1) << ". " << kStutterLabel << "\n";

        int chosen = -2;  // -1 selects the stutter step
        while (chosen == -2) {
            out << "> ";
            auto tok = next_token();
            if (!tok || *tok == "quit") return 0;
            if (*tok == kStutterLabel) {
                chosen = -1;
            } else if (*tok == "random") {
                chosen = en.empty() ? -1 : en[rng() % en.size()];
            } else if (auto k = as_number(*tok)) {
                if (*k >= 1 && *k <= en.size()) chosen = en[*k - 1];
                else if (*k == en.size() + 1) chosen = -1;
            }
            if (chosen == -2) {
                int ai = m.action_index(*tok);
                for (int e : en)
                    if (e == ai) chosen = ai;
            }
            if (chosen == -2) out << "invalid choice: " << *tok << "\n";
        }

        if (chosen == -1) {
            out << "--" << kStutterLabel << "-->\n";
            ++step;
            continue;
        }
        std::vector<State> succs = apply(m, m.actions[chosen], current);
        if (succs.empty()) {
            out << "action " << m.actions[chosen].name << " produced no successor\n";
            continue;
        }
        out << "--" << m.actions[chosen].name << "-->\n";
        current = succs.front();
        ++step;
    }
}

}  // namespace mcc
