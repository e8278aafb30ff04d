#pragma once

#include "flux/ast.hpp"
#include "flux/query.hpp"
#include "flux/value.hpp"

namespace flux {

/// Big-step execution of a core statement on a focus forest. Throws Error
/// with kind Stuck (and `focus` set to the index trail), ConditionNotBool,
/// UnboundProcedure, UnboundVariable or FuelExhausted.
Forest exec_update(const QueryEnv& env, const Forest& v, const StmtPtr& s, const ProcEnv& procs,
                   const ExecOptions& opts = {});

}  // namespace flux
