#pragma once

// Explicit-state model checker for finite guarded-action state machines:
// specification DSL front end, breadth-first reachability with shortest
// counterexample traces, deadlock detection, leads-to liveness under
// stuttering and weak fairness, built-in teaching models, DOT export, and
// report rendering.

#include "mcc/builtins.hpp"
#include "mcc/checker.hpp"
#include "mcc/diagnostics.hpp"
#include "mcc/dot.hpp"
#include "mcc/errors.hpp"
#include "mcc/explore.hpp"
#include "mcc/expr.hpp"
#include "mcc/graph.hpp"
#include "mcc/liveness.hpp"
#include "mcc/model.hpp"
#include "mcc/parser.hpp"
#include "mcc/printer.hpp"
#include "mcc/report.hpp"
#include "mcc/result.hpp"
#include "mcc/scc.hpp"
#include "mcc/semantics.hpp"
#include "mcc/simulate.hpp"
#include "mcc/types.hpp"
#include "mcc/validate.hpp"

