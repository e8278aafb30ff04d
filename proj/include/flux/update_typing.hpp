#pragma once

#include "flux/ast.hpp"
#include "flux/query.hpp"

namespace flux {

enum class Arity { Singular, Plural };

/// Synthesizes the output type of `s` at input `t`.
///
/// Constructs that need a single tree (tests, children, rename) accept any
/// input that `as_atom` reduces to an atom, at either arity; `insert` accepts
/// any input equivalent to `()`; `iter` is accepted at either arity.
Type infer_update_type(const QueryTypeEnv& env, Arity a, const Type& t, const StmtPtr& s,
                       const ProcEnv& procs, const Signature& sig);

Type infer_iter_type(const QueryTypeEnv& env, const Type& t, const StmtPtr& s, const ProcEnv& procs,
                     const Signature& sig);

/// Throws SubtypeFailure when the inferred type is not below `expected`.
void check_update_type(const QueryTypeEnv& env, Arity a, const Type& t, const StmtPtr& s,
                       const Type& expected, const ProcEnv& procs, const Signature& sig);

void check_declarations(const ProcEnv& procs, const Signature& sig);

}  // namespace flux
