#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

#include "CLI11.hpp"
#include "mcc/mcc.hpp"

namespace {

struct LoadedModel {
    std::string name;
    std::string source;
    mcc::Model model;
};

void print_available(std::ostream& os) {
    os << "available examples:";
    for (const auto& e : mcc::builtin_examples()) os << " " << e.name;
    os << "\n";
}

/// Resolves --example or a file path to parsed, validated model text.
/// On failure prints diagnostics to stderr and returns nullopt (exit 2).
std::optional<LoadedModel> load_model(const std::string& file, const std::string& example) {
    if (file.empty() == example.empty()) {
        std::cerr << "error: provide exactly one of a specification file or --example\n";
        return std::nullopt;
    }
    std::string name, source;
    if (!example.empty()) {
        const mcc::ExampleEntry* entry = mcc::find_builtin(example);
        if (!entry) {
            std::cerr << "error: unknown example '" << example << "'\n";
            print_available(std::cerr);
            return std::nullopt;
        }
        name = entry->name;
        source = entry->source;
    } else {
        std::ifstream in(file, std::ios::binary);
        if (!in) {
            std::cerr << "error: cannot open file '" << file << "'\n";
            return std::nullopt;
        }
        std::ostringstream buffer;
        buffer << in.rdbuf();
        name = file;
        source = buffer.str();
    }
    mcc::ParseResult parsed = mcc::parse_model(source);
    if (!parsed.ok()) {
        for (const auto& err : parsed.errors)
            std::cerr << name << ":" << err.span.line << ":" << err.span.column << ": "
                      << mcc::to_string(err.kind) << " error: " << err.message << "\n";
        return std::nullopt;
    }
    return LoadedModel{std::move(name), std::move(source), std::move(*parsed.model)};
}

std::int64_t resolve_max_states(const std::optional<std::int64_t>& flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("MCC_MAX_STATES")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        std::cerr << "warning: ignoring invalid MCC_MAX_STATES value '" << env << "'\n";
    }
    return mcc::kDefaultMaxStates;
}

void print_trace_stderr(const mcc::Model& m, const std::vector<mcc::State>& states,
                        const std::vector<std::string>& actions) {
    for (std::size_t i = 0; i < states.size(); ++i) {
        if (i) std::cerr << "  --" << actions[i - 1] << "-->\n";
        std::cerr << "  #" << i << "  " << mcc::state_to_string(m, states[i]) << "\n";
    }
}

int report_check_error(const mcc::Model& m, const mcc::CheckError& err) {
    std::cerr << "error: " << err.what() << "\n";
    if (const auto* range = dynamic_cast<const mcc::RangeViolationError*>(&err);
        range && !range->trace_states.empty()) {
        std::cerr << "trace:\n";
        print_trace_stderr(m, range->trace_states, range->trace_actions);
    }
    return 3;
}

int cmd_check(const std::string& file, const std::string& example, bool json,
              const std::string& dot_path, bool no_liveness, bool deadlock,
              const std::optional<std::int64_t>& max_states) {
    auto loaded = load_model(file, example);
    if (!loaded) return 2;
    const mcc::Model& m = loaded->model;

    mcc::CheckOptions opts;
    opts.liveness = !no_liveness;
    opts.deadlock = deadlock;
    opts.max_states = resolve_max_states(max_states);
    try {
        mcc::StateGraph g = mcc::reachable(m, mcc::ExploreOptions{opts.max_states});
        mcc::CheckReport report = mcc::check_model(m, g, loaded->name, opts);
        if (!dot_path.empty()) {
            std::optional<mcc::Trace> highlight;
            for (const auto& r : report.results) {
                if (r.verdict == mcc::Verdict::Violated && r.trace) {
                    highlight = r.trace;
                    break;
                }
            }
            std::ofstream out(dot_path, std::ios::binary);
            if (!out) {
                std::cerr << "error: cannot write DOT file '" << dot_path << "'\n";
                return 2;
            }
            out << mcc::export_dot(m, g, highlight);
        }
        if (json)
            std::cout << mcc::render_json(m, report).dump(2) << "\n";
        else
            std::cout << mcc::render_text(m, report);
        return report.all_hold() ? 0 : 1;
    } catch (const mcc::CheckError& err) {
        return report_check_error(m, err);
    }
}

int cmd_dot(const std::string& file, const std::string& example,
            const std::optional<std::int64_t>& max_states) {
    auto loaded = load_model(file, example);
    if (!loaded) return 2;
    try {
        mcc::StateGraph g =
            mcc::reachable(loaded->model, mcc::ExploreOptions{resolve_max_states(max_states)});
        std::cout << mcc::export_dot(loaded->model, g);
        return 0;
    } catch (const mcc::CheckError& err) {
        return report_check_error(loaded->model, err);
    }
}

int cmd_simulate(const std::string& file, const std::string& example,
                 const std::string& script, unsigned seed) {
    auto loaded = load_model(file, example);
    if (!loaded) return 2;
    try {
        if (!script.empty()) {
            std::ifstream in(script, std::ios::binary);
            if (!in) {
                std::cerr << "error: cannot open script '" << script << "'\n";
                return 2;
            }
            return mcc::simulate(loaded->model, in, std::cout, seed);
        }
        return mcc::simulate(loaded->model, std::cin, std::cout, seed);
    } catch (const mcc::CheckError& err) {
        return report_check_error(loaded->model, err);
    }
}

int cmd_examples_list() {
    std::size_t width = 0;
    for (const auto& e : mcc::builtin_examples()) width = std::max(width, e.name.size());
    for (const auto& e : mcc::builtin_examples())
        std::cout << e.name << std::string(width - e.name.size() + 2, ' ') << e.blurb << "\n";
    return 0;
}

int cmd_examples_show(const std::string& name) {
    const mcc::ExampleEntry* entry = mcc::find_builtin(name);
    if (!entry) {
        std::cerr << "error: unknown example '" << name << "'\n";
        print_available(std::cerr);
        return 2;
    }
    std::cout << entry->source;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mcc - explicit-state model checker for guarded-action specifications"};
    app.require_subcommand(1);

    std::string file, example, dot_path, script, show_name;
    bool json = false, no_liveness = false, deadlock = false;
    std::optional<std::int64_t> max_states;
    unsigned seed = 0;

    CLI::App* check = app.add_subcommand("check", "Check invariants, liveness, and deadlock");
    check->add_option("file", file, "specification file (.mc)");
    check->add_option("--example", example, "use a built-in example model");
    check->add_flag("--json", json, "emit the report as JSON");
    check->add_option("--dot", dot_path, "also write the state graph as DOT, highlighting the first counterexample");
    check->add_flag("--no-liveness", no_liveness, "skip leads-to properties");
    check->add_flag("--deadlock", deadlock, "also check for deadlock states");
    check->add_option("--max-states", max_states, "abort exploration beyond this many states");

    CLI::App* dot = app.add_subcommand("dot", "Export the reachable state graph as DOT");
    dot->add_option("file", file, "specification file (.mc)");
    dot->add_option("--example", example, "use a built-in example model");
    dot->add_option("--max-states", max_states, "abort exploration beyond this many states");

    CLI::App* sim = app.add_subcommand("simulate", "Step through behaviors interactively");
    sim->add_option("file", file, "specification file (.mc)");
    sim->add_option("--example", example, "use a built-in example model");
    sim->add_option("--script", script, "read selections from a file instead of stdin");
    sim->add_option("--seed", seed, "seed for 'random' selections");

    CLI::App* examples = app.add_subcommand("examples", "Built-in example models");
    examples->require_subcommand(1);
    CLI::App* list = examples->add_subcommand("list", "List example names and blurbs");
    CLI::App* show = examples->add_subcommand("show", "Print an example's source");
    show->add_option("name", show_name, "example name")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // bad usage is a user error, like a parse error
    }

    if (check->parsed())
        return cmd_check(file, example, json, dot_path, no_liveness, deadlock, max_states);
    if (dot->parsed()) return cmd_dot(file, example, max_states);
    if (sim->parsed()) return cmd_simulate(file, example, script, seed);
    if (list->parsed()) return cmd_examples_list();
    if (show->parsed()) return cmd_examples_show(show_name);
    return 2;
}
