#pragma once

#include <map>
#include <string>

#include "flux/ast.hpp"
#include "flux/types.hpp"
#include "flux/value.hpp"

namespace flux {

/// Forest variables map to sequence types, tree variables to atoms.
struct QueryTypeEnv {
  std::map<std::string, Type> forests;
  std::map<std::string, Type> trees;
};

struct ExecOptions {
  long long fuel = 1'000'000;
  /// Visit iteration items last-to-first; results are still assembled in
  /// document order.
  bool reverse_iteration = false;
  bool enable_transform = true;
};

Forest eval_query(const QueryEnv& env, const QueryPtr& e, const ProcEnv& procs,
                  const ExecOptions& opts = {});

Type infer_query_type(const QueryTypeEnv& env, const QueryPtr& e, const Signature& sig,
                      const ProcEnv& procs);

/// `τ::n`: keeps the `n` elements of a type, everything else becomes `()`.
Type label_project(const Type& t, const std::string& label, const Signature& sig);

/// Type of `for x̄ in (τ1) return body`, by structural recursion on τ1.
Type iterate_query_type(const QueryTypeEnv& env, const std::string& x, const Type& t1,
                        const QueryPtr& body, const Signature& sig, const ProcEnv& procs);

}  // namespace flux
