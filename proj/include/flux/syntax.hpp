#pragma once

#include <string>
#include <string_view>

#include "flux/ast.hpp"
#include "flux/types.hpp"
#include "flux/value.hpp"

namespace flux {

struct ParseOptions {
  bool enable_transform = false;
};

/// A schema file: `type X = ty` declarations followed by `schema ty`.
struct Schema {
  Signature sig;
  Type root;
};

Type parse_type(std::string_view text);
Schema parse_schema(std::string_view text);
std::string print_schema(const Schema& s);

/// Native value syntax: `a[b[],"x",true]`, `()`.
Forest parse_value(std::string_view text);

QueryPtr parse_query(std::string_view text, const ParseOptions& opts = {});
std::string print_query(const QueryPtr& q);

StmtPtr parse_stmt(std::string_view text, const ParseOptions& opts = {});
std::string print_stmt(const StmtPtr& s);

/// Procedure declarations followed by an optional main statement.
struct CoreScript {
  ProcEnv procs;
  StmtPtr main;
};

CoreScript parse_core_script(std::string_view text, const ParseOptions& opts = {});
std::string print_proc(const ProcDecl& p);
std::string print_core_script(const CoreScript& s);

}  // namespace flux
