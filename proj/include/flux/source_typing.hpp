#pragma once

#include <map>
#include <utility>
#include <vector>

#include "flux/query.hpp"
#include "flux/source.hpp"
#include "flux/update_typing.hpp"

namespace flux {

/// One binding `Z ↦ (Γ ▷ τ)`; `z` is the flex index of Z.
struct CtxBinding {
  int z = -1;
  QueryTypeEnv ctx;
  Type type;
};

/// Context-tagged substitution. Bindings are kept sorted by `z`, which is
/// also creation order.
struct CtxSubst {
  std::vector<CtxBinding> bindings;

  bool empty() const { return bindings.empty(); }
  std::size_t size() const { return bindings.size(); }
  const CtxBinding* find(int z) const;
};

/// Mints Z0, Z1, ... for one typechecking run.
class FreshGen {
public:
  int next() { return next_++; }
  int peek() const { return next_; }

private:
  int next_ = 0;
};

/// Replaces every flex variable bound in `theta` by its type, in one pass.
Type apply_subst(const Type& t, const CtxSubst& theta);
/// `Θ[Θ']`: applies `by` to every type of `theta`, keeping contexts.
CtxSubst apply_subst(const CtxSubst& theta, const CtxSubst& by);

/// Throws DomainOverlap.
CtxSubst merge_disjoint(const CtxSubst& a, const CtxSubst& b);
/// `Θ|Θ'`; throws DomainMismatch unless domains and contexts agree.
CtxSubst merge_or(const CtxSubst& a, const CtxSubst& b);
/// `Θ ⊕ x`: binds forest variable x to each binding's own type.
CtxSubst extend_scope(const CtxSubst& theta, const std::string& x);
/// `Z ↦ (Γ ▷ Z|τ)` for every binding.
CtxSubst maybe(const CtxSubst& theta);

struct PathSplit {
  Type type;
  CtxSubst theta;
};

/// Source-level typechecker. One instance is one run: fresh variables are
/// never reused within it.
class SourceChecker {
public:
  SourceChecker(const Signature& sig, const ProcEnv& procs) : sig_(sig), procs_(procs) {}

  PathSplit check_filter(const QueryTypeEnv& g, const Type& t, const Test& phi);
  /// Accepts any input type. A `.` path binds a fresh Z to the whole input;
  /// a step needs an input reducible to an element.
  PathSplit check_path(const QueryTypeEnv& g, const Type& t, const PathPtr& p);
  Type check_simple(const QueryTypeEnv& g, const Type& t, const SourceUpd& u);
  Type check_compound(const QueryTypeEnv& g, const Type& t, const SStmtPtr& s);

  void simult_expr(const CtxSubst& theta, const QueryPtr& e, const Type& expected);
  CtxSubst simult_core(const CtxSubst& theta, const StmtPtr& s);
  CtxSubst simult_stmt(const CtxSubst& theta, const SStmtPtr& s);
  /// Returns (Θ', Θ''): each binding's residual type and the union of the
  /// new bindings.
  std::pair<CtxSubst, CtxSubst> simult_path(const CtxSubst& theta, const PathPtr& p);

  FreshGen& fresh() { return fresh_; }

  /// Locations of simple updates whose path selected nothing in every check
  /// so far.
  std::vector<Span> unmatched_updates() const;

private:
  const Signature& sig_;
  const ProcEnv& procs_;
  FreshGen fresh_;
  std::map<std::pair<int, int>, bool> matched_;
};

/// Typechecks a source statement at input `t`. The result has no flex
/// variables.
Type check_source(const QueryTypeEnv& g, const Type& t, const SStmtPtr& s, const Signature& sig,
                  const ProcEnv& procs);

}  // namespace flux
