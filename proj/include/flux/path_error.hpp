#pragma once

#include <set>
#include <vector>

#include "flux/ast.hpp"
#include "flux/update_typing.hpp"

namespace flux {

using LocationSet = std::set<int>;

/// Fresh copy of `s` whose nodes carry distinct preorder locations from 0.
StmtPtr label_statement(const StmtPtr& s);
/// Copy with every location reset to -1.
StmtPtr strip_labels(const StmtPtr& s);

/// Subterm carrying location `l`; throws UnknownLabel.
StmtPtr subterm_at(const StmtPtr& s, int l);
/// `s` with the subterm at `l` replaced by skip; throws UnknownLabel.
StmtPtr replace_at(const StmtPtr& s, int l);

/// L ∪ {l} when every trigger is in L, otherwise L.
LocationSet cond_union(const LocationSet& set, const std::vector<int>& triggers, int l);

struct Analysis {
  Type type;
  LocationSet unproductive;
  /// Input type seen at each location (alternatives joined), for reports.
  std::map<int, Type> inputs;
};

/// Expects a labeled statement; computes the output type (identical to
/// infer_update_type) and the set of unproductive locations.
Analysis analyze(const QueryTypeEnv& env, Arity a, const Type& t, const StmtPtr& s,
                 const ProcEnv& procs, const Signature& sig);

/// Locations in `set` whose subterm is not already skip, in preorder.
std::vector<int> report_errors(const StmtPtr& s, const LocationSet& set);

/// Replaces each reported location by skip, outermost first.
StmtPtr optimize(const StmtPtr& s, const LocationSet& set);

}  // namespace flux
