#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mcc/diagnostics.hpp"
#include "mcc/expr.hpp"
#include "mcc/model.hpp"
#include "mcc/validate.hpp"

namespace mcc {

namespace detail {

enum class TokKind {
    Ident,
    IntLit,
    KwConst,
    KwEnum,
    KwVar,
    KwInit,
    KwAction,
    KwWhen,
    KwInvariant,
    KwLiveness,
    KwFairness,
    KwWeak,
    KwIf,
    KwThen,
    KwElse,
    KwIn,
    KwTrue,
    KwFalse,
    LBrace,
    RBrace,
    LParen,
    RParen,
    Comma,
    Colon,
    Prime,
    Eq,
    Ne,
    Lt,
    Le,
    Gt,
    Ge,
    Plus,
    Minus,
    AndAnd,
    OrOr,
    Bang,
    Implies,
    LeadsTo,
    DotDot,
    End,
};

struct Token {
    TokKind kind{TokKind::End};
    std::string text;
    std::int64_t value{0};
    SourceSpan span;
};

inline std::optional<TokKind> keyword(std::string_view word) {
    static const std::map<std::string_view, TokKind> table = {
        {"const", TokKind::KwConst},         {"enum", TokKind::KwEnum},
        {"var", TokKind::KwVar},             {"init", TokKind::KwInit},
        {"action", TokKind::KwAction},       {"when", TokKind::KwWhen},
        {"invariant", TokKind::KwInvariant}, {"liveness", TokKind::KwLiveness},
        {"fairness", TokKind::KwFairness},   {"weak", TokKind::KwWeak},
        {"if", TokKind::KwIf},               {"then", TokKind::KwThen},
        {"else", TokKind::KwElse},           {"in", TokKind::KwIn},
        {"true", TokKind::KwTrue},           {"false", TokKind::KwFalse},
    };
    auto it = table.find(word);
    if (it == table.end()) return std::nullopt;
    return it->second;
}

/// Describes a token for error messages.
inline std::string describe(const Token& t) {
    if (t.kind == TokKind::End) return "end of input";
    return "'" + t.text + "'";
}

inline std::vector<Token> lex(std::string_view src, std::vector<ParseError>& errors) {
    std::vector<Token> out;
    std::size_t i = 0;
    int line = 1, column = 1;

    auto push = [&](TokKind kind, std::size_t start, std::size_t len, std::int64_t value = 0) {
        out.push_back(Token{kind, std::string(src.substr(start, len)), value,
                            SourceSpan{line, column, static_cast<int>(len)}});
        i = start + len;
        column += static_cast<int>(len);
    };

    while (i < src.size()) {
        char c = src[i];
        if (c == '\n') {
            ++i;
            ++line;
            column = 1;
            continue;
        }
        if (c == ' ' || c == '\t' || c == '\r') {
            ++i;
            ++column;
            continue;
        }
        if (c == '\\' && i + 1 < src.size() && src[i + 1] == '*') {
            while (i < src.size() && src[i] != '\n') ++i;  // comment runs to end of line
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) ||
                                      src[j] == '_'))
                ++j;
            std::string_view word = src.substr(i, j - i);
            push(keyword(word).value_or(TokKind::Ident), i, j - i);
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            std::size_t len = j - i;
            if (len > 18) {
                errors.push_back(ParseError{SourceSpan{line, column, static_cast<int>(len)},
                                            ErrorKind::Lexical,
                                            "integer literal '" + std::string(src.substr(i, len)) +
                                                "' is too large"});
                push(TokKind::IntLit, i, len, 0);
            } else {
                push(TokKind::IntLit, i, len, std::stoll(std::string(src.substr(i, len))));
            }
            continue;
        }

        auto two = [&](char second) { return i + 1 < src.size() && src[i + 1] == second; };
        switch (c) {
            case '{': push(TokKind::LBrace, i, 1); continue;
            case '}': push(TokKind::RBrace, i, 1); continue;
            case '(': push(TokKind::LParen, i, 1); continue;
            case ')': push(TokKind::RParen, i, 1); continue;
            case ',': push(TokKind::Comma, i, 1); continue;
            case ':': push(TokKind::Colon, i, 1); continue;
            case '\'': push(TokKind::Prime, i, 1); continue;
            case '+': push(TokKind::Plus, i, 1); continue;
            case '-': push(TokKind::Minus, i, 1); continue;
            case '=':
                if (two('>')) push(TokKind::Implies, i, 2);
                else push(TokKind::Eq, i, 1);
                continue;
            case '!':
                if (two('=')) push(TokKind::Ne, i, 2);
                else push(TokKind::Bang, i, 1);
                continue;
            case '<':
                if (two('=')) push(TokKind::Le, i, 2);
                else push(TokKind::Lt, i, 1);
                continue;
            case '>':
                if (two('=')) push(TokKind::Ge, i, 2);
                else push(TokKind::Gt, i, 1);
                continue;
            case '&':
                if (two('&')) {
                    push(TokKind::AndAnd, i, 2);
                } else {
                    errors.push_back(ParseError{SourceSpan{line, column, 1}, ErrorKind::Lexical,
                                                "stray '&'; conjunction is spelled '&&'"});
                    ++i;
                    ++column;
                }
                continue;
            case '|':
                if (two('|')) {
                    push(TokKind::OrOr, i, 2);
                } else {
                    errors.push_back(ParseError{SourceSpan{line, column, 1}, ErrorKind::Lexical,
                                                "stray '|'; disjunction is spelled '||'"});
                    ++i;
                    ++column;
                }
                continue;
            case '~':
                if (two('>')) {
                    push(TokKind::LeadsTo, i, 2);
                } else {
                    errors.push_back(ParseError{SourceSpan{line, column, 1}, ErrorKind::Lexical,
                                                "stray '~'; leads-to is spelled '~>'"});
                    ++i;
                    ++column;
                }
                continue;
            case '.':
                if (two('.')) {
                    push(TokKind::DotDot, i, 2);
                } else {
                    errors.push_back(ParseError{SourceSpan{line, column, 1}, ErrorKind::Lexical,
                                                "stray '.'; ranges are spelled 'lo..hi'"});
                    ++i;
                    ++column;
                }
                continue;
            default:
                errors.push_back(ParseError{SourceSpan{line, column, 1}, ErrorKind::Lexical,
                                            std::string("unexpected character '") + c + "'"});
                ++i;
                ++column;
                continue;
        }
    }
    out.push_back(Token{TokKind::End, "", 0, SourceSpan{line, column, 0}});
    return out;
}

/// Recursive-descent parser. A prescan of the token stream collects all
/// declared names first, so references may appear before their declaration
/// and identifiers resolve to const/enum/var nodes during the main pass.
class Parser {
  public:
    Parser(std::vector<Token> tokens, std::vector<ParseError>& errors)
        : toks_(std::move(tokens)), errors_(errors) {
        prescan();
    }

    Model run() {
        while (!at(TokKind::End)) {
            try {
                item();
            } catch (const Abort&) {
                sync();
            }
        }
        return std::move(model_);
    }

  private:
    struct Abort {};

    // --- token plumbing -------------------------------------------------

    const Token& peek(std::size_t ahead = 0) const {
        std::size_t j = pos_ + ahead;
        return j < toks_.size() ? toks_[j] : toks_.back();
    }
    bool at(TokKind k) const { return peek().kind == k; }
    const Token& advance() {
        const Token& t = toks_[pos_];
        if (t.kind != TokKind::End) ++pos_;
        return t;
    }
    bool accept(TokKind k) {
        if (!at(k)) return false;
        advance();
        return true;
    }
    const Token& expect(TokKind k, const std::string& what) {
        if (!at(k))
            fail(peek().span, "expected " + what + ", got " + describe(peek()));
        return advance();
    }

    [[noreturn]] void fail(SourceSpan span, std::string message,
                           ErrorKind kind = ErrorKind::Syntactic) {
        errors_.push_back(ParseError{span, kind, std::move(message)});
        throw Abort{};
    }

    static bool starts_item(TokKind k) {
        switch (k) {
            case TokKind::KwConst:
            case TokKind::KwEnum:
            case TokKind::KwVar:
            case TokKind::KwInit:
            case TokKind::KwAction:
            case TokKind::KwInvariant:
            case TokKind::KwLiveness:
            case TokKind::KwFairness: return true;
            default: return false;
        }
    }

    /// Skips to the next top-level declaration after an error.
    void sync() {
        while (!at(TokKind::End) && !starts_item(peek().kind)) advance();
    }

    // --- prescan ---------------------------------------------------------

    void prescan() {
        for (std::size_t j = 0; j + 1 < toks_.size(); ++j) {
            const Token& t = toks_[j];
            const Token& n = toks_[j + 1];
            if (t.kind == TokKind::KwConst && n.kind == TokKind::Ident && j + 3 < toks_.size() &&
                toks_[j + 2].kind == TokKind::Eq && toks_[j + 3].kind == TokKind::IntLit) {
                consts_.emplace(n.text, toks_[j + 3].value);  // first binding wins
            } else if (t.kind == TokKind::KwEnum && n.kind == TokKind::Ident) {
                enum_types_.insert(n.text);
                std::size_t k = j + 2;
                if (k < toks_.size() && toks_[k].kind == TokKind::LBrace) {
                    for (++k; k < toks_.size() && toks_[k].kind != TokKind::RBrace &&
                              toks_[k].kind != TokKind::End;
                         ++k)
                        if (toks_[k].kind == TokKind::Ident) members_.insert(toks_[k].text);
                }
            } else if (t.kind == TokKind::KwVar && n.kind == TokKind::Ident) {
                vars_.insert(n.text);
            } else if (t.kind == TokKind::KwAction && n.kind == TokKind::Ident) {
                actions_.insert(n.text);
            }
        }
    }

    // --- items -----------------------------------------------------------

    void item() {
        switch (peek().kind) {
            case TokKind::KwConst: parse_const(); return;
            case TokKind::KwEnum: parse_enum(); return;
            case TokKind::KwVar: parse_var(); return;
            case TokKind::KwInit: parse_init(); return;
            case TokKind::KwAction: parse_action(); return;
            case TokKind::KwInvariant: parse_invariant(); return;
            case TokKind::KwLiveness: parse_liveness(); return;
            case TokKind::KwFairness: parse_fairness(); return;
            default:
                fail(peek().span, "expected a declaration (const, enum, var, init, action, "
                                  "invariant, liveness, or fairness), got " +
                                      describe(peek()));
        }
    }

    void parse_const() {
        advance();
        const Token& name = expect(TokKind::Ident, "a constant name");
        expect(TokKind::Eq, "'='");
        const Token& value = expect(TokKind::IntLit, "an integer");
        model_.constants.push_back(Constant{name.text, value.value, name.span});
    }

    void parse_enum() {
        advance();
        const Token& name = expect(TokKind::Ident, "a type name");
        expect(TokKind::LBrace, "'{'");
        EnumType e;
        e.name = name.text;
        e.members.push_back(expect(TokKind::Ident, "an enum member").text);
        while (accept(TokKind::Comma))
            e.members.push_back(expect(TokKind::Ident, "an enum member").text);
        expect(TokKind::RBrace, "'}'");
        model_.enums.push_back(std::move(e));
    }

    void parse_var() {
        advance();
        const Token& name = expect(TokKind::Ident, "a variable name");
        expect(TokKind::Colon, "':'");
        Domain d = parse_domain();
        model_.vars.push_back(VarDecl{name.text, std::move(d), name.span});
    }

    Domain parse_domain() {
        const Token& t = peek();
        if (t.kind == TokKind::IntLit ||
            (t.kind == TokKind::Ident && peek(1).kind == TokKind::DotDot)) {
            Domain d;
            d.kind = Domain::Kind::IntRange;
            d.lo_expr = parse_bound();
            expect(TokKind::DotDot, "'..'");
            d.hi_expr = parse_bound();
            d.lo = detail::TypeChecker::static_bound(d.lo_expr).value_or(0);
            d.hi = detail::TypeChecker::static_bound(d.hi_expr).value_or(0);
            return d;
        }
        if (t.kind == TokKind::Ident) {
            advance();
            Domain d;
            d.kind = Domain::Kind::Enum;
            d.enum_name = t.text;
            return d;
        }
        fail(t.span, "expected a type name or an integer range, got " + describe(t));
    }

    /// A range endpoint: an integer literal or a constant name.
    ExprPtr parse_bound() {
        const Token& t = peek();
        if (t.kind == TokKind::IntLit) {
            advance();
            return make_int(t.value, t.span);
        }
        if (t.kind == TokKind::Ident) {
            advance();
            auto it = consts_.find(t.text);
            if (it == consts_.end())
                fail(t.span, "unknown constant '" + t.text + "' in range",
                     ErrorKind::NameResolution);
            return make_const(t.text, it->second, t.span);
        }
        fail(t.span, "expected an integer or a constant name, got " + describe(t));
    }

    void parse_init() {
        const Token& kw = advance();
        expect(TokKind::LBrace, "'{'");
        ExprPtr e = parse_expr();
        expect(TokKind::RBrace, "'}'");
        if (model_.init)
            errors_.push_back(
                ParseError{kw.span, ErrorKind::Syntactic, "duplicate init block"});
        else
            model_.init = std::move(e);
    }

    void parse_action() {
        advance();
        const Token& name = expect(TokKind::Ident, "an action name");
        expect(TokKind::LBrace, "'{'");
        Action a;
        a.name = name.text;
        a.span = name.span;
        a.guard = accept(TokKind::KwWhen) ? parse_expr() : make_bool(true, name.span);
        while (!at(TokKind::RBrace) && !at(TokKind::End)) {
            const Token& target = expect(TokKind::Ident, "a primed variable or '}'");
            expect(TokKind::Prime, "\"'\"");
            Effect eff;
            eff.target = target.text;
            eff.span = target.span;
            if (accept(TokKind::Eq)) {
                eff.value = parse_expr();
            } else if (accept(TokKind::KwIn)) {
                eff.choices = parse_set();
            } else {
                fail(peek().span, "expected '=' or 'in' after primed variable, got " +
                                      describe(peek()));
            }
            a.effects.push_back(std::move(eff));
        }
        expect(TokKind::RBrace, "'}'");
        model_.actions.push_back(std::move(a));
    }

    void parse_invariant() {
        advance();
        const Token& name = expect(TokKind::Ident, "a property name");
        expect(TokKind::LBrace, "'{'");
        ExprPtr cond = parse_expr();
        expect(TokKind::RBrace, "'}'");
        model_.invariants.push_back(NamedPredicate{name.text, std::move(cond), name.span});
    }

    void parse_liveness() {
        advance();
        const Token& name = expect(TokKind::Ident, "a property name");
        expect(TokKind::LBrace, "'{'");
        ExprPtr premise = parse_expr();
        expect(TokKind::LeadsTo, "'~>'");
        ExprPtr goal = parse_expr();
        expect(TokKind::RBrace, "'}'");
        model_.liveness.push_back(
            LeadsToProperty{name.text, std::move(premise), std::move(goal), name.span});
    }

    void parse_fairness() {
        advance();
        expect(TokKind::KwWeak, "'weak'");
        auto add = [&](const Token& t) {
            if (std::find(model_.fairness.begin(), model_.fairness.end(), t.text) ==
                model_.fairness.end())
                model_.fairness.push_back(t.text);
        };
        add(expect(TokKind::Ident, "an action name"));
        while (accept(TokKind::Comma)) add(expect(TokKind::Ident, "an action name"));
    }

    // --- expressions -----------------------------------------------------
    // Precedence, loosest first: => (right), ||, &&, ! (prefix),
    // comparisons and `in` (non-chaining), + - (left), primaries.

    ExprPtr parse_expr() { return parse_implies(); }

    ExprPtr parse_implies() {
        ExprPtr lhs = parse_or();
        if (at(TokKind::Implies)) {
            const Token& op = advance();
            return make_binary(BinaryOp::Implies, std::move(lhs), parse_implies(), op.span);
        }
        return lhs;
    }

    ExprPtr parse_or() {
        ExprPtr e = parse_and();
        while (at(TokKind::OrOr)) {
            const Token& op = advance();
            e = make_binary(BinaryOp::Or, std::move(e), parse_and(), op.span);
        }
        return e;
    }

    ExprPtr parse_and() {
        ExprPtr e = parse_not();
        while (at(TokKind::AndAnd)) {
            const Token& op = advance();
            e = make_binary(BinaryOp::And, std::move(e), parse_not(), op.span);
        }
        return e;
    }

    ExprPtr parse_not() {
        if (at(TokKind::Bang)) {
            const Token& op = advance();
            return make_unary(UnaryOp::Not, parse_not(), op.span);
        }
        return parse_comparison();
    }

    static std::optional<BinaryOp> comparison_op(TokKind k) {
        switch (k) {
            case TokKind::Eq: return BinaryOp::Eq;
            case TokKind::Ne: return BinaryOp::Ne;
            case TokKind::Lt: return BinaryOp::Lt;
            case TokKind::Le: return BinaryOp::Le;
            case TokKind::Gt: return BinaryOp::Gt;
            case TokKind::Ge: return BinaryOp::Ge;
            default: return std::nullopt;
        }
    }

    ExprPtr parse_comparison() {
        ExprPtr lhs = parse_additive();
        if (at(TokKind::KwIn)) {
            const Token& op = advance();
            lhs = make_membership(std::move(lhs), parse_set(), op.span);
        } else if (auto op = comparison_op(peek().kind)) {
            const Token& tok = advance();
            lhs = make_binary(*op, std::move(lhs), parse_additive(), tok.span);
        } else {
            return lhs;
        }
        if (comparison_op(peek().kind) || at(TokKind::KwIn))
            fail(peek().span, "comparisons do not chain; join them with '&&'");
        return lhs;
    }

    ExprPtr parse_additive() {
        ExprPtr e = parse_primary();
        while (at(TokKind::Plus) || at(TokKind::Minus)) {
            const Token& op = advance();
            e = make_binary(op.kind == TokKind::Plus ? BinaryOp::Add : BinaryOp::Sub,
                            std::move(e), parse_primary(), op.span);
        }
        return e;
    }

    ExprPtr parse_primary() {
        const Token& t = peek();
        switch (t.kind) {
            case TokKind::IntLit: advance(); return make_int(t.value, t.span);
            case TokKind::KwTrue: advance(); return make_bool(true, t.span);
            case TokKind::KwFalse: advance(); return make_bool(false, t.span);
            case TokKind::LParen: {
                advance();
                ExprPtr e = parse_expr();
                expect(TokKind::RParen, "')'");
                return e;
            }
            case TokKind::KwIf: {
                advance();
                ExprPtr c = parse_expr();
                expect(TokKind::KwThen, "'then'");
                ExprPtr then_value = parse_expr();
                expect(TokKind::KwElse, "'else'");
                ExprPtr else_value = parse_expr();
                return make_if(std::move(c), std::move(then_value), std::move(else_value),
                               t.span);
            }
            case TokKind::Ident: {
                advance();
                if (accept(TokKind::Prime))
                    return make_var(t.text, true, t.span);  // rejected by validation
                if (vars_.count(t.text)) return make_var(t.text, false, t.span);
                if (auto it = consts_.find(t.text); it != consts_.end())
                    return make_const(t.text, it->second, t.span);
                if (members_.count(t.text)) return make_enum(t.text, t.span);
                fail(t.span, "unknown identifier '" + t.text + "'", ErrorKind::NameResolution);
            }
            default:
                fail(t.span, "expected an expression, got " + describe(t));
        }
    }

    SetSpec parse_set() {
        if (accept(TokKind::LBrace)) {
            SetSpec s;
            s.is_range = false;
            s.elements.push_back(parse_expr());
            while (accept(TokKind::Comma)) s.elements.push_back(parse_expr());
            expect(TokKind::RBrace, "'}'");
            return s;
        }
        if (at(TokKind::IntLit) || at(TokKind::Ident)) {
            SetSpec s;
            s.is_range = true;
            s.lo = parse_bound();
            expect(TokKind::DotDot, "'..'");
            s.hi = parse_bound();
            return s;
        }
        fail(peek().span,
             "expected a set ('{ ... }' or 'lo..hi'), got " + describe(peek()));
    }

    std::vector<Token> toks_;
    std::vector<ParseError>& errors_;
    std::size_t pos_{0};
    Model model_;

    std::map<std::string, std::int64_t> consts_;
    std::set<std::string> enum_types_;
    std::set<std::string> members_;
    std::set<std::string> vars_;
    std::set<std::string> actions_;
};

}  // namespace detail

struct ParseResult {
    std::optional<Model> model;  // present only when errors is empty
    std::vector<ParseError> errors;

    bool ok() const { return model.has_value(); }
};

/// Parses and validates `.mc` source. Collects as many diagnostics as it
/// can: the parser recovers at declaration boundaries, and validation runs
/// on whatever was built. Diagnostics are ordered by source position.
inline ParseResult parse_model(std::string_view source) {
    ParseResult result;
    auto tokens = detail::lex(source, result.errors);
    detail::Parser parser(std::move(tokens), result.errors);
    Model m = parser.run();
    auto semantic = validate(m);
    result.errors.insert(result.errors.end(), semantic.begin(), semantic.end());
    std::stable_sort(result.errors.begin(), result.errors.end(),
                     [](const ParseError& a, const ParseError& b) {
                         return span_before(a.span, b.span);
                     });
    if (result.errors.empty()) result.model = std::move(m);
    return result;
}

}  // namespace mcc
