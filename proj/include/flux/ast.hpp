#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "flux/error.hpp"
#include "flux/types.hpp"

namespace flux {

struct Query;
struct Stmt;
using QueryPtr = std::shared_ptr<const Query>;
using StmtPtr = std::shared_ptr<const Stmt>;

struct Query {
  enum class Kind {
    Empty,
    Seq,
    Element,
    String,
    ForestVar,
    Let,
    True,
    False,
    If,
    StrEq,
    TreeVar,
    Child,  // x̄/child
    LabelFilter,
    For,
    Transform,
  };

  Kind kind = Kind::Empty;
  std::string name;  // label, literal text, or variable
  QueryPtr a, b, c;
  StmtPtr stmt;  // Transform body
  Span span;
};

QueryPtr q_empty();
QueryPtr q_seq(QueryPtr a, QueryPtr b);
QueryPtr q_elem(std::string label, QueryPtr body);
QueryPtr q_str(std::string text);
QueryPtr q_fvar(std::string x);
QueryPtr q_let(std::string x, QueryPtr bound, QueryPtr body);
QueryPtr q_bool(bool b);
QueryPtr q_if(QueryPtr c, QueryPtr then_q, QueryPtr else_q);
QueryPtr q_eq(QueryPtr a, QueryPtr b);
QueryPtr q_tvar(std::string x);
QueryPtr q_child(std::string x);
QueryPtr q_filter(QueryPtr e, std::string label);
QueryPtr q_for(std::string x, QueryPtr in, QueryPtr body);
QueryPtr q_transform(QueryPtr e, StmtPtr s);

struct Stmt {
  enum class Kind {
    Skip,
    Seq,
    If,
    Let,
    Insert,
    Delete,
    Rename,
    Snapshot,
    Test,
    Left,
    Right,
    Children,
    Iter,
    Call,
  };

  Kind kind = Kind::Skip;
  std::string name;  // variable, label, or procedure
  Test test;
  QueryPtr query;
  std::vector<QueryPtr> args;
  StmtPtr a, b;
  Span span;
  int label = -1;  // location, assigned by label_statement
};

StmtPtr s_skip();
StmtPtr s_seq(StmtPtr a, StmtPtr b);
StmtPtr s_if(QueryPtr c, StmtPtr then_s, StmtPtr else_s);
StmtPtr s_let(std::string x, QueryPtr e, StmtPtr body);
StmtPtr s_insert(QueryPtr e);
StmtPtr s_delete();
StmtPtr s_rename(std::string label);
StmtPtr s_snapshot(std::string x, StmtPtr body);
StmtPtr s_test(Test phi, StmtPtr body);
StmtPtr s_left(StmtPtr body);
StmtPtr s_right(StmtPtr body);
StmtPtr s_children(StmtPtr body);
StmtPtr s_iter(StmtPtr body);
StmtPtr s_call(std::string proc, std::vector<QueryPtr> args);

/// Copy of `s` with a new span (the node itself is shared otherwise).
StmtPtr with_span(const StmtPtr& s, Span span);
QueryPtr with_span(const QueryPtr& q, Span span);

bool same_query(const QueryPtr& a, const QueryPtr& b);
/// Structural equality ignoring spans and labels.
bool same_stmt(const StmtPtr& a, const StmtPtr& b);

std::size_t stmt_size(const StmtPtr& s);

struct ProcDecl {
  std::string name;
  std::vector<std::pair<std::string, Type>> params;
  Type in;
  Type out;
  StmtPtr body;
  Span span;
};

struct ProcEnv {
  std::map<std::string, ProcDecl> decls;

  const ProcDecl* find(const std::string& name) const {
    auto it = decls.find(name);
    return it == decls.end() ? nullptr : &it->second;
  }
};

}  // namespace flux
