#pragma once

#include <string>

#include "mcc/expr.hpp"
#include "mcc/model.hpp"

namespace mcc {

namespace detail {

// Precedence contexts, loosest binding first. `if-then-else` is printed at
// the loosest level because its else-branch would otherwise capture a
// following operand on reparse.
enum : int {
    kPrecExpr = 0,
    kPrecOr = 1,
    kPrecAnd = 2,
    kPrecNot = 3,
    kPrecCompare = 4,
    kPrecAdd = 5,
    kPrecPrimary = 6,
};

inline const char* op_text(BinaryOp op) {
    switch (op) {
        case BinaryOp::Implies: return "=>";
        case BinaryOp::Or: return "||";
        case BinaryOp::And: return "&&";
        case BinaryOp::Eq: return "=";
        case BinaryOp::Ne: return "!=";
        case BinaryOp::Lt: return "<";
        case BinaryOp::Le: return "<=";
        case BinaryOp::Gt: return ">";
        case BinaryOp::Ge: return ">=";
        case BinaryOp::Add: return "+";
        case BinaryOp::Sub: return "-";
    }
    return "?";
}

inline int op_level(BinaryOp op) {
    switch (op) {
        case BinaryOp::Implies: return kPrecExpr;
        case BinaryOp::Or: return kPrecOr;
        case BinaryOp::And: return kPrecAnd;
        case BinaryOp::Eq:
        case BinaryOp::Ne:
        case BinaryOp::Lt:
        case BinaryOp::Le:
        case BinaryOp::Gt:
        case BinaryOp::Ge: return kPrecCompare;
        case BinaryOp::Add:
        case BinaryOp::Sub: return kPrecAdd;
    }
    return kPrecPrimary;
}

std::string print_expr_at(const ExprPtr& e, int context);

inline std::string print_set(const SetSpec& s) {
    if (s.is_range) return print_expr_at(s.lo, kPrecPrimary) + ".." + print_expr_at(s.hi, kPrecPrimary);
    std::string out = "{";
    for (std::size_t i = 0; i < s.elements.size(); ++i) {
        if (i) out += ", ";
        out += print_expr_at(s.elements[i], kPrecExpr);
    }
    return out + "}";
}

inline std::string print_expr_at(const ExprPtr& e, int context) {
    if (!e) return "?";
    int level = kPrecPrimary;
    std::string text = std::visit(
        [&](const auto& n) -> std::string {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Expr::BoolLit>) {
                return n.value ? "true" : "false";
            } else if constexpr (std::is_same_v<T, Expr::IntLit>) {
                return std::to_string(n.value);
            } else if constexpr (std::is_same_v<T, Expr::ConstRef>) {
                return n.name;
            } else if constexpr (std::is_same_v<T, Expr::EnumRef>) {
                return n.member;
            } else if constexpr (std::is_same_v<T, Expr::VarRef>) {
                return n.primed ? n.name + "'" : n.name;
            } else if constexpr (std::is_same_v<T, Expr::Unary>) {
                level = kPrecNot;
                return "!" + print_expr_at(n.operand, kPrecNot);
            } else if constexpr (std::is_same_v<T, Expr::Binary>) {
                level = op_level(n.op);
                int lhs_ctx = level, rhs_ctx = level + 1;
                if (n.op == BinaryOp::Implies) std::swap(lhs_ctx, rhs_ctx);  // right-assoc
                if (level == kPrecCompare) lhs_ctx = level + 1;              // non-chaining
                return print_expr_at(n.lhs, lhs_ctx) + " " + op_text(n.op) + " " +
                       print_expr_at(n.rhs, rhs_ctx);
            } else if constexpr (std::is_same_v<T, Expr::Membership>) {
                level = kPrecCompare;
                return print_expr_at(n.subject, kPrecCompare + 1) + " in " + print_set(n.set);
            } else {
                level = kPrecExpr;
                return "if " + print_expr_at(n.condition, kPrecExpr) + " then " +
                       print_expr_at(n.then_value, kPrecExpr) + " else " +
                       print_expr_at(n.else_value, kPrecExpr);
            }
        },
        e->node);
    return level < context ? "(" + text + ")" : text;
}

}  // namespace detail

/// Renders an expression in concrete syntax with minimal parentheses.
inline std::string print_expr(const ExprPtr& e) {
    return detail::print_expr_at(e, detail::kPrecExpr);
}

/// Renders a model as specification source. Reparsing the result yields a
/// structurally equal Model (declarations are grouped by category, which
/// the equality relation does not observe).
inline std::string print_model(const Model& m) {
    std::string out;
    for (const auto& c : m.constants)
        out += "const " + c.name + " = " + std::to_string(c.value) + "\n";
    for (const auto& e : m.enums) {
        out += "enum " + e.name + " { ";
        for (std::size_t i = 0; i < e.members.size(); ++i) {
            if (i) out += ", ";
            out += e.members[i];
        }
        out += " }\n";
    }
    for (const auto& v : m.vars) {
        out += "var " + v.name + " : ";
        if (v.domain.kind == Domain::Kind::Enum) {
            out += v.domain.enum_name;
        } else {
            out += v.domain.lo_expr ? print_expr(v.domain.lo_expr)
                                    : std::to_string(v.domain.lo);
            out += "..";
            out += v.domain.hi_expr ? print_expr(v.domain.hi_expr)
                                    : std::to_string(v.domain.hi);
        }
        out += "\n";
    }
    if (m.init) out += "init { " + print_expr(m.init) + " }\n";
    for (const auto& a : m.actions) {
        out += "action " + a.name + " {";
        if (!equal(a.guard, make_bool(true))) out += " when " + print_expr(a.guard);
        for (const auto& eff : a.effects) {
            out += "  " + eff.target + "'";
            out += eff.is_membership() ? " in " + detail::print_set(*eff.choices)
                                       : " = " + print_expr(eff.value);
        }
        out += " }\n";
    }
    for (const auto& inv : m.invariants)
        out += "invariant " + inv.name + " { " + print_expr(inv.condition) + " }\n";
    for (const auto& lt : m.liveness)
        out += "liveness " + lt.name + " { " + print_expr(lt.premise) + " ~> " +
               print_expr(lt.goal) + " }\n";
    if (!m.fairness.empty()) {
        out += "fairness weak ";
        for (std::size_t i = 0; i < m.fairness.size(); ++i) {
            if (i) out += ", ";
            out += m.fairness[i];
        }
        out += "\n";
    }
    return out;
}

}  // namespace mcc
