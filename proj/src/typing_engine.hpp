#pragma once

// Shared engine for query typing, update typing and the path-error analysis.
// With tracking off the location sets stay empty.

#include <initializer_list>
#include <map>
#include <vector>

#include "flux/path_error.hpp"
#include "flux/query.hpp"
#include "flux/update_typing.hpp"

namespace flux::detail {

struct UpdResult {
  Type type;
  LocationSet L;
};

LocationSet cond_union_impl(const LocationSet& set, const std::vector<int>& triggers, int l);

class Typer {
public:
  Typer(const ProcEnv& procs, const Signature& sig, bool track) : procs_(procs), sig_(sig), track_(track) {}

  Type query(const QueryTypeEnv& env, const QueryPtr& e);
  Type label_project(const Type& t, const std::string& n);
  Type iter_query(const QueryTypeEnv& env, const std::string& x, const Type& t, const QueryPtr& body);

  UpdResult upd(const QueryTypeEnv& env, Arity a, const Type& t, const StmtPtr& s);
  UpdResult iter(const QueryTypeEnv& env, const Type& t, const StmtPtr& s);

  const std::map<int, Type>& inputs() const { return inputs_; }

private:
  Type query_impl(const QueryTypeEnv& env, const QueryPtr& e);
  UpdResult upd_impl(const QueryTypeEnv& env, Arity a, const Type& t, const StmtPtr& s);
  Type tree_var(const QueryTypeEnv& env, const QueryPtr& e);
  Type single(const Type& t, const char* what, Span span);
  Type element(const Type& t, const char* what, Span span);
  void require(const Type& found, const Type& expected, const std::string& what, Span span);
  LocationSet cu(const LocationSet& set, std::initializer_list<int> triggers, int l) const;

  const ProcEnv& procs_;
  const Signature& sig_;
  bool track_;
  std::map<int, Type> inputs_;
};

}  // namespace flux::detail
