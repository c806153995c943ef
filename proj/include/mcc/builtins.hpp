#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mcc/errors.hpp"
#include "mcc/result.hpp"

namespace mcc {

/// A built-in teaching model: name, specification source, one-line blurb,
/// and the expected verdict per declared property.
struct ExampleEntry {
    std::string name;
    std::string source;
    std::string blurb;
    std::vector<std::pair<std::string, Verdict>> expected;
};

namespace detail {

inline constexpr const char* kMicrowaveV0 = R"mc(const MAXTIME = 3

enum Door { OPEN, CLOSED }
enum Power { ON, OFF }

var door : Door
var radiation : Power
var timeRemaining : 0..MAXTIME

init { door in {OPEN, CLOSED} && radiation = OFF && timeRemaining = 0 }

action OpenDoor  { when door = CLOSED  door' = OPEN }
action CloseDoor { when door = OPEN  door' = CLOSED }
action IncTime   { when timeRemaining < MAXTIME && radiation = OFF  timeRemaining' = timeRemaining + 1 }
action Start     { when radiation = OFF && timeRemaining > 0  radiation' = ON }
action Cancel    { radiation' = OFF  timeRemaining' = 0 }
action Tick      { when radiation = ON && timeRemaining > 0
                   timeRemaining' = timeRemaining - 1
                   radiation' = if timeRemaining - 1 = 0 then OFF else radiation }

invariant DoorSafety { door = OPEN => radiation = OFF }

liveness HeatLiveness { radiation = ON ~> radiation = OFF }
)mc";

inline constexpr const char* kMicrowaveV1 = R"mc(const MAXTIME = 3

enum Door { OPEN, CLOSED }
enum Power { ON, OFF }

var door : Door
var radiation : Power
var timeRemaining : 0..MAXTIME

init { door in {OPEN, CLOSED} && radiation = OFF && timeRemaining = 0 }

action OpenDoor  { when door = CLOSED  door' = OPEN }
action CloseDoor { when door = OPEN  door' = CLOSED }
action IncTime   { when timeRemaining < MAXTIME && radiation = OFF  timeRemaining' = timeRemaining + 1 }
action Start     { when door = CLOSED && radiation = OFF && timeRemaining > 0  radiation' = ON }
action Cancel    { radiation' = OFF  timeRemaining' = 0 }
action Tick      { when radiation = ON && timeRemaining > 0
                   timeRemaining' = timeRemaining - 1
                   radiation' = if timeRemaining - 1 = 0 then OFF else radiation }

invariant DoorSafety { door = OPEN => radiation = OFF }

liveness HeatLiveness { radiation = ON ~> radiation = OFF }
)mc";

inline constexpr const char* kMicrowaveV2 = R"mc(const MAXTIME = 3

enum Door { OPEN, CLOSED }
enum Power { ON, OFF }

var door : Door
var radiation : Power
var timeRemaining : 0..MAXTIME

init { door in {OPEN, CLOSED} && radiation = OFF && timeRemaining = 0 }

action OpenDoor  { when door = CLOSED  door' = OPEN  radiation' = OFF }
action CloseDoor { when door = OPEN  door' = CLOSED }
action IncTime   { when timeRemaining < MAXTIME && radiation = OFF  timeRemaining' = timeRemaining + 1 }
action Start     { when door = CLOSED && radiation = OFF && timeRemaining > 0  radiation' = ON }
action Cancel    { radiation' = OFF  timeRemaining' = 0 }
action Tick      { when radiation = ON && timeRemaining > 0
                   timeRemaining' = timeRemaining - 1
                   radiation' = if timeRemaining - 1 = 0 then OFF else radiation }

invariant DoorSafety { door = OPEN => radiation = OFF }

liveness HeatLiveness { radiation = ON ~> radiation = OFF }

fairness weak Tick
)mc";

inline constexpr const char* kCounter = R"mc(enum Phase { READ, WRITE, DONE }

var pc1 : Phase
var pc2 : Phase
var tmp1 : 0..2
var tmp2 : 0..2
var count : 0..2

init { pc1 = READ && pc2 = READ && tmp1 = 0 && tmp2 = 0 && count = 0 }

action Read1  { when pc1 = READ  tmp1' = count  pc1' = WRITE }
action Write1 { when pc1 = WRITE  count' = tmp1 + 1  pc1' = DONE }
action Read2  { when pc2 = READ  tmp2' = count  pc2' = WRITE }
action Write2 { when pc2 = WRITE  count' = tmp2 + 1  pc2' = DONE }

invariant NoLostUpdate { (pc1 = DONE && pc2 = DONE) => count = 2 }
)mc";

inline constexpr const char* kBoundedBuffer = R"mc(const C = 3

var count : 0..C

init { count = 0 }

action Produce { when count < C  count' = count + 1 }
action Consume { when count > 0  count' = count - 1 }

invariant Occupancy { count >= 0 && count <= C }

liveness Drain { count = C ~> count < C }

fairness weak Consume
)mc";

}  // namespace detail

inline const std::vector<ExampleEntry>& builtin_examples() {
    static const std::vector<ExampleEntry> entries = {
        {"microwave-v0", detail::kMicrowaveV0,
         "Microwave oven, first cut: Start ignores the door, so it can radiate while open.",
         {{"DoorSafety", Verdict::Violated}, {"HeatLiveness", Verdict::Violated}}},
        {"microwave-v1", detail::kMicrowaveV1,
         "Microwave oven with a door-interlocked Start; opening mid-heat still leaks.",
         {{"DoorSafety", Verdict::Violated}, {"HeatLiveness", Verdict::Violated}}},
        {"microwave-v2", detail::kMicrowaveV2,
         "Microwave oven where opening the door shuts off radiation; live under a fair Tick.",
         {{"DoorSafety", Verdict::Holds}, {"HeatLiveness", Verdict::Holds}}},
        {"counter", detail::kCounter,
         "Two threads bump a shared counter via read/write steps; the classic lost update.",
         {{"NoLostUpdate", Verdict::Violated}}},
        {"bounded-buffer", detail::kBoundedBuffer,
         "Producer/consumer occupancy counter with capacity C; drains under a fair Consume.",
         {{"Occupancy", Verdict::Holds}, {"Drain", Verdict::Holds}}},
    };
    return entries;
}

inline const ExampleEntry* find_builtin(const std::string& name) {
    for (const auto& e : builtin_examples())
        if (e.name == name) return &e;
    return nullptr;
}

/// Looks up a built-in example; unknown names raise UnknownExampleError
/// listing what is available.
inline const ExampleEntry& builtin(const std::string& name) {
    if (const ExampleEntry* e = find_builtin(name)) return *e;
    std::string available;
    for (const auto& e : builtin_examples()) {
        if (!available.empty()) available += ", ";
        available += e.name;
    }
    throw UnknownExampleError("unknown example '" + name + "'; available: " + available);
}

}  // namespace mcc
