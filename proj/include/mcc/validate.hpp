#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "mcc/diagnostics.hpp"
#include "mcc/model.hpp"

namespace mcc {

namespace detail {

struct Type {
    enum class Kind { Bool, Int, Enum };
    Kind kind{Kind::Bool};
    int enum_idx{-1};

    static Type boolean() { return {Kind::Bool, -1}; }
    static Type integer() { return {Kind::Int, -1}; }
    static Type enumeration(int idx) { return {Kind::Enum, idx}; }

    friend bool operator==(const Type&, const Type&) = default;
};

inline std::string type_name(const Model& m, const Type& t) {
    switch (t.kind) {
        case Type::Kind::Bool: return "bool";
        case Type::Kind::Int: return "int";
        case Type::Kind::Enum:
            return t.enum_idx >= 0 && t.enum_idx < static_cast<int>(m.enums.size())
                       ? m.enums[t.enum_idx].name
                       : "enum";
    }
    return "?";
}

class TypeChecker {
  public:
    TypeChecker(const Model& m, std::vector<ParseError>& errors) : m_(m), errors_(errors) {}

    /// Typechecks an expression; reports and returns nullopt on failure.
    /// Primed variable references are rejected everywhere: the only primed
    /// position in the language is an effect target, which is not an Expr.
    std::optional<Type> check(const ExprPtr& e) {
        if (!e) {
            error({}, ErrorKind::Type, "missing expression");
            return std::nullopt;
        }
        return std::visit([&](const auto& n) { return check_node(n, e->span); }, e->node);
    }

    void error(SourceSpan span, ErrorKind kind, std::string message) {
        errors_.push_back(ParseError{span, kind, std::move(message)});
    }

  private:
    std::optional<Type> check_node(const Expr::BoolLit&, SourceSpan) { return Type::boolean(); }
    std::optional<Type> check_node(const Expr::IntLit&, SourceSpan) { return Type::integer(); }

    std::optional<Type> check_node(const Expr::ConstRef& n, SourceSpan span) {
        const Constant* c = m_.find_constant(n.name);
        if (!c) {
            error(span, ErrorKind::NameResolution, "unknown constant '" + n.name + "'");
            return std::nullopt;
        }
        if (c->value != n.value) {
            error(span, ErrorKind::Type,
                  "constant '" + n.name + "' resolved to a stale value");
            return std::nullopt;
        }
        return Type::integer();
    }

    std::optional<Type> check_node(const Expr::EnumRef& n, SourceSpan span) {
        auto [type, member] = m_.find_enum_member(n.member);
        if (type < 0) {
            error(span, ErrorKind::NameResolution, "unknown identifier '" + n.member + "'");
            return std::nullopt;
        }
        return Type::enumeration(type);
    }

    std::optional<Type> check_node(const Expr::VarRef& n, SourceSpan span) {
        int idx = m_.var_index(n.name);
        if (idx < 0) {
            error(span, ErrorKind::NameResolution, "unknown identifier '" + n.name + "'");
            return std::nullopt;
        }
        if (n.primed) {
            error(span, ErrorKind::Type,
                  "primed reference to '" + n.name +
                      "' is only allowed as an effect target inside an action");
            return std::nullopt;
        }
        const Domain& d = m_.vars[idx].domain;
        if (d.kind == Domain::Kind::Enum) {
            int e = m_.enum_index(d.enum_name);
            if (e < 0) return std::nullopt;  // domain error reported separately
            return Type::enumeration(e);
        }
        return Type::integer();
    }

    std::optional<Type> check_node(const Expr::Unary& n, SourceSpan span) {
        auto t = check(n.operand);
        if (t && t->kind != Type::Kind::Bool) {
            error(span, ErrorKind::Type, "'!' requires a bool operand");
            return std::nullopt;
        }
        return t ? std::optional(Type::boolean()) : std::nullopt;
    }

    std::optional<Type> check_node(const Expr::Binary& n, SourceSpan span) {
        auto lhs = check(n.lhs);
        auto rhs = check(n.rhs);
        if (!lhs || !rhs) return std::nullopt;
        switch (n.op) {
            case BinaryOp::And:
            case BinaryOp::Or:
            case BinaryOp::Implies:
                if (lhs->kind != Type::Kind::Bool || rhs->kind != Type::Kind::Bool) {
                    error(span, ErrorKind::Type, "logical operator requires bool operands");
                    return std::nullopt;
                }
                return Type::boolean();
            case BinaryOp::Eq:
            case BinaryOp::Ne:
                if (!(*lhs == *rhs)) {
                    error(span, ErrorKind::Type,
                          "cannot compare " + type_name(m_, *lhs) + " with " +
                              type_name(m_, *rhs));
                    return std::nullopt;
                }
                return Type::boolean();
            case BinaryOp::Lt:
            case BinaryOp::Le:
            case BinaryOp::Gt:
            case BinaryOp::Ge:
                if (lhs->kind != Type::Kind::Int || rhs->kind != Type::Kind::Int) {
                    error(span, ErrorKind::Type, "ordering comparison requires int operands");
                    return std::nullopt;
                }
                return Type::boolean();
            case BinaryOp::Add:
            case BinaryOp::Sub:
                if (lhs->kind != Type::Kind::Int || rhs->kind != Type::Kind::Int) {
                    error(span, ErrorKind::Type, "arithmetic requires int operands");
                    return std::nullopt;
                }
                return Type::integer();
        }
        return std::nullopt;
    }

    std::optional<Type> check_node(const Expr::Membership& n, SourceSpan span) {
        auto subject = check(n.subject);
        if (!subject) return std::nullopt;
        if (!check_set(n.set, *subject, span)) return std::nullopt;
        return Type::boolean();
    }

    std::optional<Type> check_node(const Expr::IfThenElse& n, SourceSpan span) {
        auto c = check(n.condition);
        auto t = check(n.then_value);
        auto e = check(n.else_value);
        if (c && c->kind != Type::Kind::Bool) {
            error(span, ErrorKind::Type, "'if' condition must be bool");
            return std::nullopt;
        }
        if (!t || !e) return std::nullopt;
        if (!(*t == *e)) {
            error(span, ErrorKind::Type,
                  "'then' and 'else' branches have different types (" + type_name(m_, *t) +
                      " vs " + type_name(m_, *e) + ")");
            return std::nullopt;
        }
        return t;
    }

  public:
    /// Checks a set literal against the expected element type.
    bool check_set(const SetSpec& set, const Type& element, SourceSpan span) {
        if (set.is_range) {
            auto lo = check(set.lo);
            auto hi = check(set.hi);
            if (!lo || !hi) return false;
            if (lo->kind != Type::Kind::Int || hi->kind != Type::Kind::Int ||
                element.kind != Type::Kind::Int) {
                error(span, ErrorKind::Type, "range membership requires int operands");
                return false;
            }
            auto lob = static_bound(set.lo);
            auto hib = static_bound(set.hi);
            if (lob && hib && *lob > *hib) {
                error(span, ErrorKind::Type, "empty range " + std::to_string(*lob) + ".." +
                                                 std::to_string(*hib));
                return false;
            }
            return true;
        }
        bool ok = true;
        for (const auto& el : set.elements) {
            auto t = check(el);
            if (!t) {
                ok = false;
            } else if (!(*t == element)) {
                error(el->span, ErrorKind::Type,
                      "set element type " + type_name(m_, *t) + " does not match " +
                          type_name(m_, element));
                ok = false;
            }
        }
        return ok;
    }

    /// Resolves a constant range bound (IntLit or ConstRef) if statically known.
    static std::optional<std::int64_t> static_bound(const ExprPtr& e) {
        if (!e) return std::nullopt;
        if (const auto* i = std::get_if<Expr::IntLit>(&e->node)) return i->value;
        if (const auto* c = std::get_if<Expr::ConstRef>(&e->node)) return c->value;
        return std::nullopt;
    }

  private:
    const Model& m_;
    std::vector<ParseError>& errors_;
};

}  // namespace detail

/// Checks the model invariants: unique names, resolvable references,
/// well-typed expressions, primed references confined to effect targets,
/// per-action effect-target uniqueness, fairness over declared actions.
/// Idempotent; returns all diagnostics ordered by source position.
inline std::vector<ParseError> validate(const Model& m) {
    std::vector<ParseError> errors;
    detail::TypeChecker tc(m, errors);

    // One global namespace for constants, enum types, enum members,
    // variables, and actions.
    std::vector<std::pair<std::string, SourceSpan>> names;
    auto declare = [&](const std::string& name, SourceSpan span, const char* what) {
        for (auto& [seen, _] : names) {
            if (seen == name) {
                tc.error(span, ErrorKind::NameResolution,
                         std::string("duplicate ") + what + " name '" + name + "'");
                return;
            }
        }
        names.emplace_back(name, span);
    };
    for (const auto& c : m.constants) declare(c.name, c.span, "constant");
    for (const auto& e : m.enums) {
        declare(e.name, {}, "enum");
        for (const auto& member : e.members) declare(member, {}, "enum member");
    }
    for (const auto& v : m.vars) declare(v.name, v.span, "variable");
    for (const auto& a : m.actions) declare(a.name, a.span, "action");

    std::vector<std::string> property_names;
    auto declare_property = [&](const std::string& name, SourceSpan span) {
        if (std::find(property_names.begin(), property_names.end(), name) !=
            property_names.end()) {
            tc.error(span, ErrorKind::NameResolution,
                     "duplicate property name '" + name + "'");
        } else {
            property_names.push_back(name);
        }
    };

    for (const auto& v : m.vars) {
        if (v.domain.kind == Domain::Kind::Enum) {
            if (m.enum_index(v.domain.enum_name) < 0)
                tc.error(v.span, ErrorKind::NameResolution,
                         "unknown type '" + v.domain.enum_name + "' for variable '" + v.name +
                             "'");
        } else if (v.domain.lo > v.domain.hi) {
            tc.error(v.span, ErrorKind::Type,
                     "empty domain " + std::to_string(v.domain.lo) + ".." +
                         std::to_string(v.domain.hi) + " for variable '" + v.name + "'");
        }
    }

    if (!m.init) {
        tc.error({}, ErrorKind::Syntactic, "model has no init block");
    } else if (auto t = tc.check(m.init); t && t->kind != detail::Type::Kind::Bool) {
        tc.error(m.init->span, ErrorKind::Type, "init predicate must be bool");
    }

    for (const auto& a : m.actions) {
        if (auto t = tc.check(a.guard); t && t->kind != detail::Type::Kind::Bool)
            tc.error(a.guard ? a.guard->span : a.span, ErrorKind::Type,
                     "guard of action '" + a.name + "' must be bool");
        std::vector<std::string> targets;
        for (const auto& eff : a.effects) {
            if (std::find(targets.begin(), targets.end(), eff.target) != targets.end())
                tc.error(eff.span, ErrorKind::Type,
                         "variable '" + eff.target + "' has more than one effect in action '" +
                             a.name + "'");
            targets.push_back(eff.target);

            int idx = m.var_index(eff.target);
            if (idx < 0) {
                tc.error(eff.span, ErrorKind::NameResolution,
                         "unknown identifier '" + eff.target + "'");
                continue;
            }
            const Domain& d = m.vars[idx].domain;
            detail::Type var_type = d.kind == Domain::Kind::Enum
                                        ? detail::Type::enumeration(m.enum_index(d.enum_name))
                                        : detail::Type::integer();
            if (eff.is_membership()) {
                tc.check_set(*eff.choices, var_type, eff.span);
            } else if (auto t = tc.check(eff.value); t && !(*t == var_type)) {
                tc.error(eff.value->span, ErrorKind::Type,
                         "effect on '" + eff.target + "' has type " + detail::type_name(m, *t) +
                             ", expected " + detail::type_name(m, var_type));
            }
        }
    }

    for (const auto& inv : m.invariants) {
        declare_property(inv.name, inv.span);
        if (auto t = tc.check(inv.condition); t && t->kind != detail::Type::Kind::Bool)
            tc.error(inv.span, ErrorKind::Type,
                     "invariant '" + inv.name + "' must be bool");
    }
    for (const auto& lt : m.liveness) {
        declare_property(lt.name, lt.span);
        if (auto t = tc.check(lt.premise); t && t->kind != detail::Type::Kind::Bool)
            tc.error(lt.span, ErrorKind::Type,
                     "left side of '~>' in '" + lt.name + "' must be bool");
        if (auto t = tc.check(lt.goal); t && t->kind != detail::Type::Kind::Bool)
            tc.error(lt.span, ErrorKind::Type,
                     "right side of '~>' in '" + lt.name + "' must be bool");
    }

    for (const auto& f : m.fairness) {
        if (m.action_index(f) < 0)
            tc.error({}, ErrorKind::NameResolution,
                     "fairness names undeclared action '" + f + "'");
    }

    std::stable_sort(errors.begin(), errors.end(),
                     [](const ParseError& a, const ParseError& b) {
                         return span_before(a.span, b.span);
                     });
    return errors;
}

}  // namespace mcc
