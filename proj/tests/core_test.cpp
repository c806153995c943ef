#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "mcc/mcc.hpp"
#include "properties.hpp"

namespace {

using namespace mcc;

Model parse_or_die(const std::string& src) {
    ParseResult r = parse_model(src);
    EXPECT_TRUE(r.ok());
    for (const ParseError& e : r.errors) ADD_FAILURE() << e.message;
    return *r.model;
}

const char* kTiny = R"(
enum Color { RED, GREEN }
var c : Color
var n : 0..3
init { c = RED && n = 0 }
action Inc  { when n < 3  n' = n + 1 }
action Flip { c' = if c = RED then GREEN else RED }
)";

State mk(const Model& m, int color, std::int64_t n) {
    State s;
    s.values = {Value::enum_member(0, color), Value::integer(n)};
    return s;
}

TEST(Value, EqualityAndOrdering) {
    EXPECT_TRUE(Value::integer(2) == Value::integer(2));
    EXPECT_FALSE(Value::integer(2) == Value::integer(3));
    EXPECT_FALSE(Value::integer(1) == Value::boolean(true));
    EXPECT_TRUE(Value::enum_member(0, 1) == Value::enum_member(0, 1));
    EXPECT_FALSE(Value::enum_member(0, 1) == Value::enum_member(1, 1));
    EXPECT_TRUE(Value::integer(1) < Value::integer(2));
    EXPECT_FALSE(Value::integer(2) < Value::integer(2));
}

TEST(Value, Accessors) {
    EXPECT_EQ(Value::integer(7).as_int(), 7);
    EXPECT_TRUE(Value::boolean(true).as_bool());
    EXPECT_FALSE(Value::boolean(false).as_bool());
    EXPECT_EQ(Value::enum_member(2, 1).enum_type, 2);
    EXPECT_EQ(Value::enum_member(2, 1).member_index(), 1);
}

TEST(State, EqualityAndHash) {
    Model m = parse_or_die(kTiny);
    State a = mk(m, 0, 2), b = mk(m, 0, 2), c = mk(m, 1, 2);
    EXPECT_TRUE(a == b);
    EXPECT_FALSE(a == c);
    EXPECT_EQ(StateHash{}(a), StateHash{}(b));
    EXPECT_EQ(state_to_string(m, c), "c=GREEN n=2");
}

TEST(Eval, LiteralsAndArithmetic) {
    Model m = parse_or_die(kTiny);
    State s = mk(m, 0, 2);
    EXPECT_EQ(eval(m, *make_binary(BinaryOp::Add, make_int(2), make_int(3)), s).as_int(), 5);
    EXPECT_EQ(eval(m, *make_binary(BinaryOp::Sub, make_var("n"), make_int(5)), s).as_int(), -3);
    EXPECT_TRUE(eval(m, *make_bool(true), s).as_bool());
}

TEST(Eval, Comparisons) {
    Model m = parse_or_die(kTiny);
    State s = mk(m, 1, 2);
    auto cmp = [&](BinaryOp op, std::int64_t a, std::int64_t b) {
        return eval(m, *make_binary(op, make_int(a), make_int(b)), s).as_bool();
    };
    EXPECT_TRUE(cmp(BinaryOp::Eq, 2, 2));
    EXPECT_TRUE(cmp(BinaryOp::Ne, 2, 3));
    EXPECT_TRUE(cmp(BinaryOp::Lt, 2, 3));
    EXPECT_TRUE(cmp(BinaryOp::Le, 3, 3));
    EXPECT_TRUE(cmp(BinaryOp::Gt, 4, 3));
    EXPECT_TRUE(cmp(BinaryOp::Ge, 3, 3));
    EXPECT_FALSE(cmp(BinaryOp::Lt, 3, 3));
    EXPECT_TRUE(eval(m, *make_binary(BinaryOp::Eq, make_var("c"), make_enum("GREEN")), s)
                    .as_bool());
    EXPECT_FALSE(eval(m, *make_binary(BinaryOp::Eq, make_var("c"), make_enum("RED")), s)
                     .as_bool());
}

TEST(Eval, ShortCircuit) {
    Model m = parse_or_die(kTiny);
    State s = mk(m, 0, 0);
    // The right operand references an unknown variable: evaluating it throws,
    // so these only pass if the left operand short-circuits.
    ExprPtr bad = make_var("nope");
    EXPECT_FALSE(eval(m, *make_binary(BinaryOp::And, make_bool(false), bad), s).as_bool());
    EXPECT_TRUE(eval(m, *make_binary(BinaryOp::Or, make_bool(true), bad), s).as_bool());
    EXPECT_TRUE(eval(m, *make_binary(BinaryOp::Implies, make_bool(false), bad), s).as_bool());
    EXPECT_THROW(eval(m, *make_binary(BinaryOp::And, make_bool(true), bad), s),
                 std::logic_error);
}

TEST(Eval, ImpliesTruthTable) {
    Model m = parse_or_die(kTiny);
    State s = mk(m, 0, 0);
    auto imp = [&](bool a, bool b) {
        return eval(m, *make_binary(BinaryOp::Implies, make_bool(a), make_bool(b)), s).as_bool();
    };
    EXPECT_TRUE(imp(false, false));
    EXPECT_TRUE(imp(false, true));
    EXPECT_FALSE(imp(true, false));
    EXPECT_TRUE(imp(true, true));
}

TEST(Eval, IfThenElse) {
    Model m = parse_or_die(kTiny);
    State s = mk(m, 0, 1);
    ExprPtr e = make_if(make_binary(BinaryOp::Eq, make_var("n"), make_int(1)), make_int(10),
                        make_int(20));
    EXPECT_EQ(eval(m, *e, s).as_int(), 10);
    s.values[1] = Value::integer(2);
    EXPECT_EQ(eval(m, *e, s).as_int(), 20);
}

TEST(Eval, Membership) {
    Model m = parse_or_die(kTiny);
    State s = mk(m, 0, 2);
    SetSpec lits;
    lits.elements = {make_int(1), make_int(2)};
    EXPECT_TRUE(eval(m, *make_membership(make_var("n"), lits), s).as_bool());
    s.values[1] = Value::integer(3);
    EXPECT_FALSE(eval(m, *make_membership(make_var("n"), lits), s).as_bool());

    SetSpec range;
    range.is_range = true;
    range.lo = make_int(0);
    range.hi = make_int(2);
    s.values[1] = Value::integer(2);
    EXPECT_TRUE(eval(m, *make_membership(make_var("n"), range), s).as_bool());
    s.values[1] = Value::integer(3);
    EXPECT_FALSE(eval(m, *make_membership(make_var("n"), range), s).as_bool());

    SetSpec members;
    members.elements = {make_enum("RED"), make_enum("GREEN")};
    EXPECT_TRUE(eval(m, *make_membership(make_var("c"), members), s).as_bool());
}

TEST(Eval, PrimedReadsNextState) {
    Model m = parse_or_die(kTiny);
    State cur = mk(m, 0, 1), next = mk(m, 1, 2);
    ExprPtr e = make_binary(BinaryOp::Eq, make_var("n", true), make_int(2));
    EXPECT_TRUE(eval(m, *e, cur, &next).as_bool());
    EXPECT_THROW(eval(m, *e, cur), std::logic_error);  // no next state supplied
}

TEST(Semantics, EnabledFollowsGuard) {
    Model m = parse_or_die(kTiny);
    EXPECT_TRUE(enabled(m, m.actions[0], mk(m, 0, 2)));
    EXPECT_FALSE(enabled(m, m.actions[0], mk(m, 0, 3)));
    EXPECT_TRUE(enabled(m, m.actions[1], mk(m, 0, 3)));  // guardless: always enabled
}

TEST(Semantics, ApplyKeepsUntouchedVariables) {
    Model m = parse_or_die(kTiny);
    auto succs = apply(m, m.actions[0], mk(m, 1, 1));  // Inc
    ASSERT_EQ(succs.size(), 1u);
    EXPECT_TRUE(succs[0] == mk(m, 1, 2));  // c untouched, n bumped
}

TEST(Semantics, IfEffectSwitchesOnCurrentState) {
    Model m = parse_or_die(kTiny);
    auto succs = apply(m, m.actions[1], mk(m, 0, 1));  // Flip from RED
    ASSERT_EQ(succs.size(), 1u);
    EXPECT_TRUE(succs[0] == mk(m, 1, 1));
}

TEST(Semantics, MembershipEffectsEnumerateInListedOrder) {
    Model m = parse_or_die(R"(
var x : 0..2
init { x = 0 }
action Pick { x' in {2, 0, 1} }
)");
    auto succs = apply(m, m.actions[0], State{{Value::integer(0)}});
    ASSERT_EQ(succs.size(), 3u);
    EXPECT_EQ(succs[0].values[0].as_int(), 2);
    EXPECT_EQ(succs[1].values[0].as_int(), 0);
    EXPECT_EQ(succs[2].values[0].as_int(), 1);
}

TEST(Semantics, MembershipOdometerLastEffectFastest) {
    Model m = parse_or_die(R"(
var x : 0..1
var y : 0..1
init { x = 0 && y = 0 }
action Both { x' in 0..1  y' in 0..1 }
)");
    State s{{Value::integer(0), Value::integer(0)}};
    auto succs = apply(m, m.actions[0], s);
    ASSERT_EQ(succs.size(), 4u);
    const std::vector<std::pair<int, int>> want = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    for (std::size_t i = 0; i < want.size(); ++i) {
        EXPECT_EQ(succs[i].values[0].as_int(), want[i].first);
        EXPECT_EQ(succs[i].values[1].as_int(), want[i].second);
    }
}

TEST(Semantics, EmptyMembershipSetYieldsNoSuccessor) {
    // Built by hand: a statically empty range is rejected at validation, so
    // apply's empty-choice behavior is exercised directly.
    Model m = parse_or_die(R"(
var x : 0..1
init { x = 0 }
action Stay { x' = x }
)");
    Action a;
    a.name = "Weird";
    a.guard = make_bool(true);
    SetSpec empty;
    empty.is_range = true;
    empty.lo = make_int(1);
    empty.hi = make_int(0);
    a.effects.push_back(Effect{"x", nullptr, empty, {}});
    EXPECT_TRUE(apply(m, a, State{{Value::integer(0)}}).empty());
}

TEST(Semantics, OutOfRangeAssignmentThrows) {
    Model m = parse_or_die(R"(
var x : 0..3
init { x = 0 }
action Bump { x' = x + 2 }
)");
    State s{{Value::integer(2)}};
    try {
        apply(m, m.actions[0], s);
        FAIL() << "expected RangeViolationError";
    } catch (const RangeViolationError& e) {
        EXPECT_EQ(e.action, "Bump");
        EXPECT_EQ(e.variable, "x");
        EXPECT_EQ(e.value, "4");
        EXPECT_TRUE(e.state == s);
        EXPECT_NE(std::string(e.what()).find("outside its domain"), std::string::npos);
    }
}

TEST(Semantics, InitialStatesEnumerateFirstVariableMostSignificant) {
    Model m = parse_or_die(R"(
enum Flag { LO, HI }
var a : Flag
var b : 0..1
init { a = a }
)");
    auto init = initial_states(m);
    ASSERT_EQ(init.size(), 4u);
    EXPECT_EQ(state_to_string(m, init[0]), "a=LO b=0");
    EXPECT_EQ(state_to_string(m, init[1]), "a=LO b=1");
    EXPECT_EQ(state_to_string(m, init[2]), "a=HI b=0");
    EXPECT_EQ(state_to_string(m, init[3]), "a=HI b=1");
}

TEST(Semantics, InitFilterKeepsOrder) {
    Model m = parse_or_die(R"(
var a : 0..2
var b : 0..1
init { a > 0 && b = 1 }
)");
    auto init = initial_states(m);
    ASSERT_EQ(init.size(), 2u);
    EXPECT_EQ(state_to_string(m, init[0]), "a=1 b=1");
    EXPECT_EQ(state_to_string(m, init[1]), "a=2 b=1");
}

TEST(Semantics, UnsatisfiableInitThrows) {
    Model m = parse_or_die(R"(
var x : 0..3
init { x > 5 }
)");
    EXPECT_THROW(initial_states(m), EmptyInitError);
}

TEST(Properties, GeneratedModelsValidate) { suites::generated_models_validate(60); }

TEST(Properties, FrameRule) { suites::frame_rule(60); }

}  // namespace
