#pragma once

#include <cassert>
#include <stdexcept>
#include <vector>

#include "mcc/errors.hpp"
#include "mcc/expr.hpp"
#include "mcc/model.hpp"

namespace mcc {

/// Evaluates an expression against `current`; primed variable references
/// read from `next`, which must be supplied iff the expression contains
/// any. Expressions are assumed validated: type mismatches cannot occur,
/// and intermediate integer results are unbounded (only effect assignment
/// is range-checked, in `apply`).
inline Value eval(const Model& m, const Expr& e, const State& current,
                  const State* next = nullptr) {
    struct Visitor {
        const Model& m;
        const State& current;
        const State* next;

        Value operator()(const Expr::BoolLit& n) const { return Value::boolean(n.value); }
        Value operator()(const Expr::IntLit& n) const { return Value::integer(n.value); }
        Value operator()(const Expr::ConstRef& n) const { return Value::integer(n.value); }
        Value operator()(const Expr::EnumRef& n) const {
            auto [type, member] = m.find_enum_member(n.member);
            if (type < 0) throw std::logic_error("unresolved enum member: " + n.member);
            return Value::enum_member(type, member);
        }
        Value operator()(const Expr::VarRef& n) const {
            int idx = m.var_index(n.name);
            if (idx < 0) throw std::logic_error("unresolved variable: " + n.name);
            if (n.primed) {
                if (!next) throw std::logic_error("primed reference without a next state");
                return next->values[idx];
            }
            return current.values[idx];
        }
        Value operator()(const Expr::Unary& n) const {
            Value v = eval(m, *n.operand, current, next);
            return Value::boolean(!v.as_bool());
        }
        Value operator()(const Expr::Binary& n) const {
            switch (n.op) {
                case BinaryOp::And: {
                    if (!eval(m, *n.lhs, current, next).as_bool()) return Value::boolean(false);
                    return eval(m, *n.rhs, current, next);
                }
                case BinaryOp::Or: {
                    if (eval(m, *n.lhs, current, next).as_bool()) return Value::boolean(true);
                    return eval(m, *n.rhs, current, next);
                }
                case BinaryOp::Implies: {
                    if (!eval(m, *n.lhs, current, next).as_bool()) return Value::boolean(true);
                    return eval(m, *n.rhs, current, next);
                }
                default: break;
            }
            Value a = eval(m, *n.lhs, current, next);
            Value b = eval(m, *n.rhs, current, next);
            switch (n.op) {
                case BinaryOp::Eq: return Value::boolean(a == b);
                case BinaryOp::Ne: return Value::boolean(!(a == b));
                case BinaryOp::Lt: return Value::boolean(a.as_int() < b.as_int());
                case BinaryOp::Le: return Value::boolean(a.as_int() <= b.as_int());
                case BinaryOp::Gt: return Value::boolean(a.as_int() > b.as_int());
                case BinaryOp::Ge: return Value::boolean(a.as_int() >= b.as_int());
                case BinaryOp::Add: return Value::integer(a.as_int() + b.as_int());
                case BinaryOp::Sub: return Value::integer(a.as_int() - b.as_int());
                default: throw std::logic_error("unhandled binary operator");
            }
        }
        Value operator()(const Expr::Membership& n) const {
            Value subject = eval(m, *n.subject, current, next);
            if (n.set.is_range) {
                std::int64_t lo = eval(m, *n.set.lo, current, next).as_int();
                std::int64_t hi = eval(m, *n.set.hi, current, next).as_int();
                return Value::boolean(subject.kind == Value::Kind::Int &&
                                      subject.as_int() >= lo && subject.as_int() <= hi);
            }
            for (const auto& el : n.set.elements)
                if (eval(m, *el, current, next) == subject) return Value::boolean(true);
            return Value::boolean(false);
        }
        Value operator()(const Expr::IfThenElse& n) const {
            return eval(m, *(eval(m, *n.condition, current, next).as_bool() ? n.then_value
                                                                            : n.else_value),
                        current, next);
        }
    };
    return std::visit(Visitor{m, current, next}, e.node);
}

inline bool eval_bool(const Model& m, const ExprPtr& e, const State& s) {
    return eval(m, *e, s).as_bool();
}

/// True iff the action's guard holds at `s`.
inline bool enabled(const Model& m, const Action& a, const State& s) {
    return eval(m, *a.guard, s).as_bool();
}

/// Successor states of `s` under `a`. One successor per combination of
/// membership-effect choices; deterministic assignments contribute exactly
/// one value. Choices enumerate in declaration order, earlier effects
/// varying slowest. Variables without an effect entry carry their value
/// over unchanged. Requires enabled(m, a, s).
inline std::vector<State> apply(const Model& m, const Action& a, const State& s) {
    // Per-effect (variable index, candidate values).
    std::vector<std::pair<int, std::vector<Value>>> slots;
    slots.reserve(a.effects.size());
    for (const Effect& eff : a.effects) {
        int idx = m.var_index(eff.target);
        if (idx < 0) throw std::logic_error("unresolved effect target: " + eff.target);
        std::vector<Value> candidates;
        if (eff.is_membership()) {
            const SetSpec& set = *eff.choices;
            if (set.is_range) {
                std::int64_t lo = eval(m, *set.lo, s).as_int();
                std::int64_t hi = eval(m, *set.hi, s).as_int();
                for (std::int64_t v = lo; v <= hi; ++v) candidates.push_back(Value::integer(v));
            } else {
                for (const auto& el : set.elements) candidates.push_back(eval(m, *el, s));
            }
        } else {
            candidates.push_back(eval(m, *eff.value, s));
        }
        for (const Value& v : candidates) {
            if (!m.in_domain(idx, v))
                throw RangeViolationError(
                    a.name, eff.target, value_to_string(m, v), s,
                    "action " + a.name + " assigns " + eff.target + " = " +
                        value_to_string(m, v) + ", outside its domain, at state [" +
                        state_to_string(m, s) + "]");
        }
        if (candidates.empty()) return {};  // empty membership set: no successor
        slots.emplace_back(idx, std::move(candidates));
    }

    std::vector<State> successors;
    std::vector<std::size_t> pick(slots.size(), 0);
    while (true) {
        State succ = s;  // frame rule: untouched variables keep their value
        for (std::size_t i = 0; i < slots.size(); ++i)
            succ.values[slots[i].first] = slots[i].second[pick[i]];
        successors.push_back(std::move(succ));
        // Odometer with the last effect cycling fastest.
        std::size_t i = slots.size();
        while (i > 0) {
            --i;
            if (++pick[i] < slots[i].second.size()) break;
            pick[i] = 0;
            if (i == 0) return successors;
        }
        if (slots.empty()) return successors;
    }
}

/// All assignments in the full domain product satisfying `init`, in
/// canonical enumeration order (first variable most significant; enum
/// members by declaration order, integers ascending).
inline std::vector<State> initial_states(const Model& m) {
    std::vector<State> result;
    const std::size_t n = m.vars.size();
    State s;
    s.values.resize(n);
    std::vector<std::int64_t> counter(n, 0);
    for (std::size_t i = 0; i < n; ++i) s.values[i] = m.domain_value(static_cast<int>(i), 0);
    while (true) {
        if (eval(m, *m.init, s).as_bool()) result.push_back(s);
        std::size_t i = n;
        bool done = (n == 0);
        while (i > 0) {
            --i;
            if (++counter[i] < m.domain_size(static_cast<int>(i))) {
                s.values[i] = m.domain_value(static_cast<int>(i), counter[i]);
                break;
            }
            counter[i] = 0;
            s.values[i] = m.domain_value(static_cast<int>(i), 0);
            if (i == 0) done = true;
        }
        if (done) break;
    }
    if (result.empty()) throw EmptyInitError();
    return result;
}

}  // namespace mcc
