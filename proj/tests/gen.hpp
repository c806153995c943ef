#pragma once

// Seeded random model generator for property tests. Generated models are
// small (state product <= 256, all domains non-negative), always satisfy
// their init predicate, and only assign in-domain values, so exploration
// never hits range violations or empty initial sets. Every generated model
// passes validation and survives a print/reparse round trip.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mcc/mcc.hpp"

namespace gen {

class Gen {
  public:
    explicit Gen(unsigned seed) : rng_(seed) {}

    mcc::Model random_model() {
        m_ = mcc::Model{};
        make_enums();
        make_vars();
        make_init();
        make_actions();
        make_properties();
        return m_;
    }

  private:
    std::mt19937 rng_;
    mcc::Model m_;
    int member_counter_ = 0;

    std::int64_t pick(std::int64_t n) { return static_cast<std::int64_t>(rng_() % n); }
    bool chance(int pct) { return pick(100) < pct; }

    void make_enums() {
        const int n = 1 + static_cast<int>(pick(2));
        for (int t = 0; t < n; ++t) {
            mcc::EnumType e;
            e.name = "T" + std::to_string(t);
            const int members = 2 + static_cast<int>(pick(2));
            for (int i = 0; i < members; ++i)
                e.members.push_back("M" + std::to_string(member_counter_++));
            m_.enums.push_back(std::move(e));
        }
    }

    void make_vars() {
        const int n = 2 + static_cast<int>(pick(3));
        for (int v = 0; v < n; ++v) {
            mcc::VarDecl d;
            d.name = "x" + std::to_string(v);
            if (chance(50)) {
                d.domain.kind = mcc::Domain::Kind::Enum;
                d.domain.enum_name = m_.enums[pick(m_.enums.size())].name;
            } else {
                d.domain.kind = mcc::Domain::Kind::IntRange;
                d.domain.lo = pick(2);
                d.domain.hi = d.domain.lo + pick(3);
                d.domain.lo_expr = mcc::make_int(d.domain.lo);
                d.domain.hi_expr = mcc::make_int(d.domain.hi);
            }
            m_.vars.push_back(std::move(d));
        }
    }

    const mcc::Domain& dom(int v) const { return m_.vars[v].domain; }
    bool is_enum(int v) const { return dom(v).kind == mcc::Domain::Kind::Enum; }
    const std::vector<std::string>& members_of(int v) const {
        return m_.enums[m_.enum_index(dom(v).enum_name)].members;
    }

    /// A literal expression drawn from the variable's domain.
    mcc::ExprPtr domain_literal(int v) {
        if (is_enum(v)) {
            const auto& ms = members_of(v);
            return mcc::make_enum(ms[pick(ms.size())]);
        }
        return mcc::make_int(dom(v).lo + pick(dom(v).size()));
    }

    void make_init() {
        mcc::ExprPtr init;
        auto add = [&](mcc::ExprPtr clause) {
            init = init ? mcc::make_binary(mcc::BinaryOp::And, init, clause) : clause;
        };
        for (int v = 0; v < static_cast<int>(m_.vars.size()); ++v) {
            const std::int64_t r = pick(10);
            if (r < 4) {
                add(mcc::make_binary(mcc::BinaryOp::Eq, mcc::make_var(m_.vars[v].name),
                                     domain_literal(v)));
            } else if (r < 6) {
                // Membership constraint keeps several initial states live.
                mcc::SetSpec set;
                if (!is_enum(v) && chance(50)) {
                    set.is_range = true;
                    set.lo = mcc::make_int(dom(v).lo + pick(dom(v).size()));
                    set.hi = mcc::make_int(dom(v).hi);
                } else {
                    set.elements.push_back(domain_literal(v));
                    set.elements.push_back(domain_literal(v));
                }
                add(mcc::make_membership(mcc::make_var(m_.vars[v].name), std::move(set)));
            }
        }
        m_.init = init ? init : mcc::make_bool(true);
    }

    mcc::ExprPtr atom() {
        if (chance(10)) return mcc::make_bool(chance(50));
        const int v = static_cast<int>(pick(m_.vars.size()));
        mcc::ExprPtr var = mcc::make_var(m_.vars[v].name);
        if (is_enum(v)) {
            const std::int64_t r = pick(3);
            if (r == 2) {
                for (int w = 0; w < static_cast<int>(m_.vars.size()); ++w)
                    if (w != v && is_enum(w) && dom(w).enum_name == dom(v).enum_name)
                        return mcc::make_binary(chance(50) ? mcc::BinaryOp::Eq : mcc::BinaryOp::Ne,
                                                var, mcc::make_var(m_.vars[w].name));
            }
            if (r == 1) {
                mcc::SetSpec set;
                const auto& ms = members_of(v);
                const std::size_t count = 1 + pick(ms.size());
                for (std::size_t i = 0; i < count; ++i)
                    set.elements.push_back(mcc::make_enum(ms[pick(ms.size())]));
                return mcc::make_membership(var, std::move(set));
            }
            return mcc::make_binary(chance(50) ? mcc::BinaryOp::Eq : mcc::BinaryOp::Ne, var,
                                    domain_literal(v));
        }
        static constexpr mcc::BinaryOp kCmp[] = {mcc::BinaryOp::Eq, mcc::BinaryOp::Ne,
                                                 mcc::BinaryOp::Lt, mcc::BinaryOp::Le,
                                                 mcc::BinaryOp::Gt, mcc::BinaryOp::Ge};
        const std::int64_t r = pick(4);
        if (r == 3) {
            // Arithmetic stays inside guards/properties where results are unbounded.
            mcc::ExprPtr sum = mcc::make_binary(chance(50) ? mcc::BinaryOp::Add : mcc::BinaryOp::Sub,
                                                var, mcc::make_int(pick(3)));
            return mcc::make_binary(kCmp[pick(6)], sum, mcc::make_int(pick(dom(v).hi + 2)));
        }
        if (r == 2) {
            mcc::SetSpec set;
            set.is_range = true;
            const std::int64_t lo = dom(v).lo + pick(dom(v).size());
            set.lo = mcc::make_int(lo);
            set.hi = mcc::make_int(lo + pick(dom(v).hi - lo + 1));
            return mcc::make_membership(var, std::move(set));
        }
        if (r == 1) {
            for (int w = 0; w < static_cast<int>(m_.vars.size()); ++w)
                if (w != v && !is_enum(w))
                    return mcc::make_binary(kCmp[pick(6)], var, mcc::make_var(m_.vars[w].name));
        }
        return mcc::make_binary(kCmp[pick(6)], var, mcc::make_int(pick(dom(v).hi + 2)));
    }

    mcc::ExprPtr bool_expr(int depth) {
        if (depth == 0 || chance(35)) return atom();
        switch (pick(4)) {
            case 0:
                return mcc::make_binary(mcc::BinaryOp::And, bool_expr(depth - 1),
                                        bool_expr(depth - 1));
            case 1:
                return mcc::make_binary(mcc::BinaryOp::Or, bool_expr(depth - 1),
                                        bool_expr(depth - 1));
            case 2:
                return mcc::make_binary(mcc::BinaryOp::Implies, bool_expr(depth - 1),
                                        bool_expr(depth - 1));
            default:
                return mcc::make_unary(mcc::UnaryOp::Not, bool_expr(depth - 1));
        }
    }

    /// An effect whose every candidate value lies inside the target domain.
    mcc::Effect make_effect(int v) {
        mcc::Effect eff;
        eff.target = m_.vars[v].name;
        const std::int64_t r = pick(10);
        if (r < 4) {
            eff.value = domain_literal(v);
        } else if (r < 6) {
            // Copy from a variable with an identical domain, if any.
            for (int w = 0; w < static_cast<int>(m_.vars.size()); ++w) {
                const bool same = is_enum(v)
                                      ? is_enum(w) && dom(w).enum_name == dom(v).enum_name
                                      : !is_enum(w) && dom(w).lo == dom(v).lo &&
                                            dom(w).hi == dom(v).hi;
                if (w != v && same) {
                    eff.value = mcc::make_var(m_.vars[w].name);
                    break;
                }
            }
            if (!eff.value) eff.value = domain_literal(v);
        } else if (r < 8) {
            eff.value = mcc::make_if(bool_expr(1), domain_literal(v), domain_literal(v));
        } else if (!is_enum(v) && chance(50)) {
            mcc::SetSpec set;
            set.is_range = true;
            const std::int64_t lo = dom(v).lo + pick(dom(v).size());
            set.lo = mcc::make_int(lo);
            set.hi = mcc::make_int(lo + pick(dom(v).hi - lo + 1));
            eff.choices = std::move(set);
        } else {
            mcc::SetSpec set;
            set.elements.push_back(domain_literal(v));
            set.elements.push_back(domain_literal(v));
            eff.choices = std::move(set);
        }
        return eff;
    }

    void make_actions() {
        const int n = 1 + static_cast<int>(pick(4));
        for (int a = 0; a < n; ++a) {
            mcc::Action act;
            act.name = "A" + std::to_string(a);
            act.guard = chance(20) ? mcc::make_bool(true) : bool_expr(2);
            for (int v = 0; v < static_cast<int>(m_.vars.size()); ++v)
                if (chance(40)) act.effects.push_back(make_effect(v));
            m_.actions.push_back(std::move(act));
        }
        for (const mcc::Action& act : m_.actions)
            if (chance(30)) m_.fairness.push_back(act.name);
    }

    void make_properties() {
        const int inv = static_cast<int>(pick(3));
        for (int i = 0; i < inv; ++i)
            m_.invariants.push_back(
                {"Inv" + std::to_string(i), bool_expr(2), mcc::SourceSpan{}});
        const int live = static_cast<int>(pick(3));
        for (int i = 0; i < live; ++i)
            m_.liveness.push_back({"Live" + std::to_string(i), bool_expr(2), bool_expr(2),
                                   mcc::SourceSpan{}});
    }
};

inline mcc::Model random_model(unsigned seed) { return Gen(seed).random_model(); }

}  // namespace gen
