#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace mcc {

/// A runtime value: boolean, bounded integer, or a member of a declared
/// enum type. Enum members are stored as (type index, member index) into
/// the owning model's enum table.
struct Value {
    enum class Kind : std::uint8_t { Bool, Int, Enum };

    Kind kind{Kind::Bool};
    std::int32_t enum_type{-1};
    std::int64_t payload{0};

    static Value boolean(bool b) { return Value{Kind::Bool, -1, b ? 1 : 0}; }
    static Value integer(std::int64_t v) { return Value{Kind::Int, -1, v}; }
    static Value enum_member(std::int32_t type_index, std::int64_t member_index) {
        return Value{Kind::Enum, type_index, member_index};
    }

    bool as_bool() const { return payload != 0; }
    std::int64_t as_int() const { return payload; }
    int member_index() const { return static_cast<int>(payload); }

    friend bool operator==(const Value& a, const Value& b) {
        return a.kind == b.kind && a.enum_type == b.enum_type && a.payload == b.payload;
    }
    friend bool operator<(const Value& a, const Value& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        if (a.enum_type != b.enum_type) return a.enum_type < b.enum_type;
        return a.payload < b.payload;
    }
};

/// A declared finite symbol set, e.g. `enum Door { OPEN, CLOSED }`.
struct EnumType {
    std::string name;
    std::vector<std::string> members;

    int member_index(const std::string& member) const {
        for (std::size_t i = 0; i < members.size(); ++i)
            if (members[i] == member) return static_cast<int>(i);
        return -1;
    }

    friend bool operator==(const EnumType&, const EnumType&) = default;
};

/// A total assignment of values to the model's variables, one slot per
/// declared variable in declaration order.
struct State {
    std::vector<Value> values;

    friend bool operator==(const State& a, const State& b) { return a.values == b.values; }
    friend bool operator<(const State& a, const State& b) {
        return std::lexicographical_compare(a.values.begin(), a.values.end(),
                                            b.values.begin(), b.values.end());
    }
};

struct StateHash {
    std::size_t operator()(const State& s) const {
        // FNV-1a over the packed value payloads.
        std::uint64_t h = 1469598103934665603ull;
        auto mix = [&h](std::uint64_t x) {
            h ^= x;
            h *= 1099511628211ull;
        };
        for (const Value& v : s.values) {
            mix(static_cast<std::uint64_t>(v.kind));
            mix(static_cast<std::uint64_t>(static_cast<std::int64_t>(v.enum_type)));
            mix(static_cast<std::uint64_t>(v.payload));
        }
        return static_cast<std::size_t>(h);
    }
};

}  // namespace mcc
