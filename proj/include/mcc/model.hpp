#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mcc/expr.hpp"
#include "mcc/types.hpp"

namespace mcc {

/// Variable domain: a declared enum type or an inclusive integer range.
/// Range bounds keep their source form (IntLit or ConstRef) for printing;
/// `lo`/`hi` are the resolved values.
struct Domain {
    enum class Kind { Enum, IntRange };
    Kind kind{Kind::IntRange};
    std::string enum_name;
    std::int64_t lo{0}, hi{0};
    ExprPtr lo_expr, hi_expr;

    std::int64_t size() const { return kind == Kind::Enum ? 0 : hi - lo + 1; }

    friend bool operator==(const Domain& a, const Domain& b) {
        if (a.kind != b.kind) return false;
        if (a.kind == Domain::Kind::Enum) return a.enum_name == b.enum_name;
        return a.lo == b.lo && a.hi == b.hi && equal(a.lo_expr, b.lo_expr) &&
               equal(a.hi_expr, b.hi_expr);
    }
};

struct VarDecl {
    std::string name;
    Domain domain;
    SourceSpan span{};

    friend bool operator==(const VarDecl& a, const VarDecl& b) {
        return a.name == b.name && a.domain == b.domain;
    }
};

struct Constant {
    std::string name;
    std::int64_t value{};
    SourceSpan span{};

    friend bool operator==(const Constant& a, const Constant& b) {
        return a.name == b.name && a.value == b.value;
    }
};

/// One effect entry of an action: assignment `x' = expr` or a
/// nondeterministic choice `x' in set`.
struct Effect {
    std::string target;
    ExprPtr value;                  // assignment form; null when membership
    std::optional<SetSpec> choices; // membership form
    SourceSpan span{};

    bool is_membership() const { return choices.has_value(); }

    friend bool operator==(const Effect& a, const Effect& b) {
        if (a.target != b.target || a.is_membership() != b.is_membership()) return false;
        return a.is_membership() ? *a.choices == *b.choices : equal(a.value, b.value);
    }
};

/// A named guarded action. Variables without an effect entry keep their
/// value in every successor state.
struct Action {
    std::string name;
    ExprPtr guard;  // BoolLit(true) when the source has no `when` clause
    std::vector<Effect> effects;
    SourceSpan span{};

    friend bool operator==(const Action& a, const Action& b) {
        return a.name == b.name && equal(a.guard, b.guard) && a.effects == b.effects;
    }
};

struct NamedPredicate {
    std::string name;
    ExprPtr condition;
    SourceSpan span{};

    friend bool operator==(const NamedPredicate& a, const NamedPredicate& b) {
        return a.name == b.name && equal(a.condition, b.condition);
    }
};

/// A leads-to property: whenever `premise` holds, `goal` must hold then or
/// in some later state of the behavior.
struct LeadsToProperty {
    std::string name;
    ExprPtr premise;
    ExprPtr goal;
    SourceSpan span{};

    friend bool operator==(const LeadsToProperty& a, const LeadsToProperty& b) {
        return a.name == b.name && equal(a.premise, b.premise) && equal(a.goal, b.goal);
    }
};

struct Model {
    std::vector<Constant> constants;
    std::vector<EnumType> enums;
    std::vector<VarDecl> vars;
    ExprPtr init;
    std::vector<Action> actions;
    std::vector<NamedPredicate> invariants;
    std::vector<LeadsToProperty> liveness;
    std::vector<std::string> fairness;  // action names under weak fairness

    int var_index(const std::string& name) const {
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (vars[i].name == name) return static_cast<int>(i);
        return -1;
    }
    int enum_index(const std::string& name) const {
        for (std::size_t i = 0; i < enums.size(); ++i)
            if (enums[i].name == name) return static_cast<int>(i);
        return -1;
    }
    int action_index(const std::string& name) const {
        for (std::size_t i = 0; i < actions.size(); ++i)
            if (actions[i].name == name) return static_cast<int>(i);
        return -1;
    }
    const Constant* find_constant(const std::string& name) const {
        for (const auto& c : constants)
            if (c.name == name) return &c;
        return nullptr;
    }
    /// Locates the enum type declaring `member`; member names are globally
    /// unique across enum types.
    std::pair<int, int> find_enum_member(const std::string& member) const {
        for (std::size_t t = 0; t < enums.size(); ++t) {
            int m = enums[t].member_index(member);
            if (m >= 0) return {static_cast<int>(t), m};
        }
        return {-1, -1};
    }

    /// Number of values in a variable's domain.
    std::int64_t domain_size(int var) const {
        const Domain& d = vars[var].domain;
        if (d.kind == Domain::Kind::Enum)
            return static_cast<std::int64_t>(enums[enum_index(d.enum_name)].members.size());
        return d.hi - d.lo + 1;
    }

    /// The k-th value of a variable's domain in canonical order (enum
    /// members by declaration, integers ascending).
    Value domain_value(int var, std::int64_t k) const {
        const Domain& d = vars[var].domain;
        if (d.kind == Domain::Kind::Enum)
            return Value::enum_member(enum_index(d.enum_name), k);
        return Value::integer(d.lo + k);
    }

    bool in_domain(int var, const Value& v) const {
        const Domain& d = vars[var].domain;
        if (d.kind == Domain::Kind::Enum)
            return v.kind == Value::Kind::Enum && v.enum_type == enum_index(d.enum_name);
        return v.kind == Value::Kind::Int && v.payload >= d.lo && v.payload <= d.hi;
    }

    friend bool operator==(const Model& a, const Model& b) {
        return a.constants == b.constants && a.enums == b.enums && a.vars == b.vars &&
               equal(a.init, b.init) && a.actions == b.actions && a.invariants == b.invariants &&
               a.liveness == b.liveness && a.fairness == b.fairness;
    }
};

/// Renders a value using the model's enum tables, e.g. `OPEN` or `3`.
inline std::string value_to_string(const Model& m, const Value& v) {
    switch (v.kind) {
        case Value::Kind::Bool: return v.as_bool() ? "true" : "false";
        case Value::Kind::Int: return std::to_string(v.as_int());
        case Value::Kind::Enum: return m.enums[v.enum_type].members[v.member_index()];
    }
    return "?";
}

/// Renders a state as space-separated `var=value` pairs in declaration order.
inline std::string state_to_string(const Model& m, const State& s) {
    std::string out;
    for (std::size_t i = 0; i < m.vars.size(); ++i) {
        if (i) out += ' ';
        out += m.vars[i].name;
        out += '=';
        out += value_to_string(m, s.values[i]);
    }
    return out;
}

}  // namespace mcc
