#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "mcc/types.hpp"

namespace mcc {

/// Base for model-level failures raised while checking (as opposed to
/// parse/validation diagnostics, which are returned as ParseError lists).
class CheckError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// An effect assigned a value outside the target variable's domain.
/// Carries the offending state and action; the explorer attaches the
/// trace of states leading there.
class RangeViolationError : public CheckError {
  public:
    RangeViolationError(std::string action, std::string variable, std::string value,
                        State state, std::string what)
        : CheckError(std::move(what)),
          action(std::move(action)),
          variable(std::move(variable)),
          value(std::move(value)),
          state(std::move(state)) {}

    std::string action;
    std::string variable;
    std::string value;
    State state;
    std::vector<State> trace_states;       // filled during exploration
    std::vector<std::string> trace_actions;
};

/// No state in the domain product satisfies the init predicate.
class EmptyInitError : public CheckError {
  public:
    EmptyInitError() : CheckError("no state satisfies the init predicate") {}
};

/// Exploration exceeded the configured state cap.
class StateLimitError : public CheckError {
  public:
    explicit StateLimitError(std::size_t cap)
        : CheckError("state limit exceeded: more than " + std::to_string(cap) +
                     " reachable states"),
          cap(cap) {}

    std::size_t cap;
};

class UnknownExampleError : public CheckError {
  public:
    using CheckError::CheckError;
};

}  // namespace mcc
