#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "flux/ast.hpp"
#include "flux/syntax.hpp"

namespace flux {

struct SourcePath;
struct SourceStmt;
using PathPtr = std::shared_ptr<const SourcePath>;
using SStmtPtr = std::shared_ptr<const SourceStmt>;

struct SourcePath {
  enum class Kind { Here, Step, Slash, Filter, Bind };

  Kind kind = Kind::Here;
  Test test;        // Step
  PathPtr a, b;     // Slash: a/b; Filter, Bind: a
  QueryPtr cond;    // Filter
  std::string var;  // Bind
  Span span;
};

PathPtr p_here();
PathPtr p_step(Test phi);
PathPtr p_slash(PathPtr a, PathPtr b);
PathPtr p_filter(PathPtr p, QueryPtr cond);
PathPtr p_bind(std::string x, PathPtr p);

struct SourceUpd {
  enum class Kind {
    InsertBefore,
    InsertAfter,
    InsertFirst,
    InsertLast,
    Delete,
    DeleteFrom,
    Rename,
    Replace,
    ReplaceIn,
    UpdateBy,
  };

  Kind kind = Kind::Delete;
  PathPtr path;
  QueryPtr value;     // inserts and replaces
  std::string label;  // Rename
  SStmtPtr body;      // UpdateBy
  Span span;
};

struct SourceStmt {
  enum class Kind { Upd, IfThen, Seq, Let, Block };

  Kind kind = Kind::Upd;
  SourceUpd upd;
  QueryPtr where;  // optional, Upd only
  QueryPtr cond;   // IfThen; bound expression for Let
  std::string var;
  SStmtPtr a, b;
  Span span;
};

SStmtPtr ss_upd(SourceUpd u, QueryPtr where = nullptr);
SStmtPtr ss_if(QueryPtr cond, SStmtPtr body);
SStmtPtr ss_seq(SStmtPtr a, SStmtPtr b);
SStmtPtr ss_let(std::string x, QueryPtr e, SStmtPtr body);
SStmtPtr ss_block(SStmtPtr body);

SourceUpd su(SourceUpd::Kind kind, PathPtr path, QueryPtr value = nullptr);

bool same_path(const PathPtr& a, const PathPtr& b);
/// Structural equality ignoring spans.
bool same_source(const SStmtPtr& a, const SStmtPtr& b);

/// Keywords are case-insensitive; `*` is accepted for node().
SStmtPtr parse_source(std::string_view text, const ParseOptions& opts = {});
std::string print_source(const SStmtPtr& s);
std::string print_path(const PathPtr& p);

/// `u WHERE c` as `u` with its path `p` replaced by `p[c]`.
SourceUpd desugar_where(const SourceUpd& u, const QueryPtr& cond);
/// Applies desugar_where everywhere.
SStmtPtr desugar(const SStmtPtr& s);

/// The core statement a simple update runs at each selected node.
StmtPtr kernel_of(const SourceUpd& u);

StmtPtr normalize_stmt(const SStmtPtr& s);
StmtPtr normalize_upd(const SourceUpd& u);
StmtPtr normalize_path(const PathPtr& p, const StmtPtr& k);

}  // namespace flux
