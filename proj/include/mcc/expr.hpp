#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "mcc/diagnostics.hpp"

namespace mcc {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

enum class UnaryOp { Not };

enum class BinaryOp { Implies, Or, And, Eq, Ne, Lt, Le, Gt, Ge, Add, Sub };

/// A finite set literal: either a braced element list `{a, b}` or a
/// constant integer range `lo..hi`.
struct SetSpec {
    bool is_range{false};
    std::vector<ExprPtr> elements;  // braced form
    ExprPtr lo, hi;                 // range form; IntLit or ConstRef

    friend bool operator==(const SetSpec& a, const SetSpec& b);
};

/// Expression AST. Nodes are immutable; children are shared.
struct Expr {
    struct BoolLit {
        bool value{};
    };
    struct IntLit {
        std::int64_t value{};
    };
    /// Reference to a declared integer constant, value resolved at build time.
    struct ConstRef {
        std::string name;
        std::int64_t value{};
    };
    /// Reference to an enum member; the owning type is looked up in the model.
    struct EnumRef {
        std::string member;
    };
    struct VarRef {
        std::string name;
        bool primed{};
    };
    struct Unary {
        UnaryOp op{};
        ExprPtr operand;
    };
    struct Binary {
        BinaryOp op{};
        ExprPtr lhs, rhs;
    };
    /// `subject in {..}` or `subject in lo..hi`.
    struct Membership {
        ExprPtr subject;
        SetSpec set;
    };
    struct IfThenElse {
        ExprPtr condition, then_value, else_value;
    };

    using Node = std::variant<BoolLit, IntLit, ConstRef, EnumRef, VarRef, Unary, Binary,
                              Membership, IfThenElse>;

    Node node;
    SourceSpan span{};
};

inline ExprPtr make_bool(bool v, SourceSpan s = {}) {
    return std::make_shared<Expr>(Expr{Expr::BoolLit{v}, s});
}
inline ExprPtr make_int(std::int64_t v, SourceSpan s = {}) {
    return std::make_shared<Expr>(Expr{Expr::IntLit{v}, s});
}
inline ExprPtr make_const(std::string name, std::int64_t value, SourceSpan s = {}) {
    return std::make_shared<Expr>(Expr{Expr::ConstRef{std::move(name), value}, s});
}
inline ExprPtr make_enum(std::string member, SourceSpan s = {}) {
    return std::make_shared<Expr>(Expr{Expr::EnumRef{std::move(member)}, s});
}
inline ExprPtr make_var(std::string name, bool primed = false, SourceSpan s = {}) {
    return std::make_shared<Expr>(Expr{Expr::VarRef{std::move(name), primed}, s});
}
inline ExprPtr make_unary(UnaryOp op, ExprPtr operand, SourceSpan s = {}) {
    return std::make_shared<Expr>(Expr{Expr::Unary{op, std::move(operand)}, s});
}
inline ExprPtr make_binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs, SourceSpan s = {}) {
    return std::make_shared<Expr>(Expr{Expr::Binary{op, std::move(lhs), std::move(rhs)}, s});
}
inline ExprPtr make_membership(ExprPtr subject, SetSpec set, SourceSpan s = {}) {
    return std::make_shared<Expr>(Expr{Expr::Membership{std::move(subject), std::move(set)}, s});
}
inline ExprPtr make_if(ExprPtr c, ExprPtr t, ExprPtr e, SourceSpan s = {}) {
    return std::make_shared<Expr>(
        Expr{Expr::IfThenElse{std::move(c), std::move(t), std::move(e)}, s});
}

/// Structural equality; source spans are ignored.
inline bool equal(const ExprPtr& a, const ExprPtr& b);

inline bool operator==(const SetSpec& a, const SetSpec& b) {
    if (a.is_range != b.is_range) return false;
    if (a.is_range) return equal(a.lo, b.lo) && equal(a.hi, b.hi);
    if (a.elements.size() != b.elements.size()) return false;
    for (std::size_t i = 0; i < a.elements.size(); ++i)
        if (!equal(a.elements[i], b.elements[i])) return false;
    return true;
}

inline bool equal(const ExprPtr& a, const ExprPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->node.index() != b->node.index()) return false;
    return std::visit(
        [&b](const auto& x) -> bool {
            using T = std::decay_t<decltype(x)>;
            const auto& y = std::get<T>(b->node);
            if constexpr (std::is_same_v<T, Expr::BoolLit>) {
                return x.value == y.value;
            } else if constexpr (std::is_same_v<T, Expr::IntLit>) {
                return x.value == y.value;
            } else if constexpr (std::is_same_v<T, Expr::ConstRef>) {
                return x.name == y.name && x.value == y.value;
            } else if constexpr (std::is_same_v<T, Expr::EnumRef>) {
                return x.member == y.member;
            } else if constexpr (std::is_same_v<T, Expr::VarRef>) {
                return x.name == y.name && x.primed == y.primed;
            } else if constexpr (std::is_same_v<T, Expr::Unary>) {
                return x.op == y.op && equal(x.operand, y.operand);
            } else if constexpr (std::is_same_v<T, Expr::Binary>) {
                return x.op == y.op && equal(x.lhs, y.lhs) && equal(x.rhs, y.rhs);
            } else if constexpr (std::is_same_v<T, Expr::Membership>) {
                return equal(x.subject, y.subject) && x.set == y.set;
            } else {
                return equal(x.condition, y.condition) && equal(x.then_value, y.then_value) &&
                       equal(x.else_value, y.else_value);
            }
        },
        a->node);
}

/// True if the expression tree contains a primed variable reference.
inline bool has_primed_ref(const ExprPtr& e) {
    if (!e) return false;
    return std::visit(
        [](const auto& x) -> bool {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Expr::VarRef>) {
                return x.primed;
            } else if constexpr (std::is_same_v<T, Expr::Unary>) {
                return has_primed_ref(x.operand);
            } else if constexpr (std::is_same_v<T, Expr::Binary>) {
                return has_primed_ref(x.lhs) || has_primed_ref(x.rhs);
            } else if constexpr (std::is_same_v<T, Expr::Membership>) {
                if (has_primed_ref(x.subject)) return true;
                for (const auto& el : x.set.elements)
                    if (has_primed_ref(el)) return true;
                return has_primed_ref(x.set.lo) || has_primed_ref(x.set.hi);
            } else if constexpr (std::is_same_v<T, Expr::IfThenElse>) {
                return has_primed_ref(x.condition) || has_primed_ref(x.then_value) ||
                       has_primed_ref(x.else_value);
            } else {
                return false;
            }
        },
        e->node);
}

}  // namespace mcc
