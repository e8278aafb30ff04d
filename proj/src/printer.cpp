// Printers whose output parses back to a structurally equal term.

#include <sstream>

#include "flux/source.hpp"
#include "flux/syntax.hpp"

namespace flux {

namespace {

using QK = Query::Kind;
using SK = Stmt::Kind;

// Query levels: 0 sequence, 1 single expression, 2 path or primary.
int query_level(const QueryPtr& q) {
  switch (q->kind) {
    case QK::Seq: return 0;
    case QK::For:
    case QK::Let:
    case QK::If:
    case QK::Transform:
    case QK::StrEq: return 1;
    default: return 2;
  }
}

void pq(std::ostream& os, const QueryPtr& q, int level);
void ps(std::ostream& os, const StmtPtr& s, bool unit);

void pq(std::ostream& os, const QueryPtr& q, int level) {
  if (query_level(q) < level) {
    os << '(';
    pq(os, q, 0);
    os << ')';
    return;
  }
  switch (q->kind) {
    case QK::Empty: os << "()"; break;
    case QK::Seq:
      pq(os, q->a, 0);
      os << ", ";
      pq(os, q->b, 1);
      break;
    case QK::Element:
      os << q->name << '[';
      if (q->a->kind != QK::Empty) pq(os, q->a, 0);
      os << ']';
      break;
    case QK::String: os << to_string(Tree::string(q->name)); break;
    case QK::ForestVar:
    case QK::TreeVar: os << '$' << q->name; break;
    case QK::Let:
      os << "let $" << q->name << " := ";
      pq(os, q->a, 1);
      os << " return ";
      pq(os, q->b, 1);
      break;
    case QK::True: os << "true"; break;
    case QK::False: os << "false"; break;
    case QK::If:
      os << "if ";
      pq(os, q->a, 1);
      os << " then ";
      pq(os, q->b, 1);
      os << " else ";
      pq(os, q->c, 1);
      break;
    case QK::StrEq:
      pq(os, q->a, 2);
      os << " = ";
      pq(os, q->b, 2);
      break;
    case QK::Child: os << '$' << q->name << "/child"; break;
    case QK::LabelFilter:
      pq(os, q->a, 2);
      os << "::" << q->name;
      break;
    case QK::For:
      os << "for $" << q->name << " in ";
      pq(os, q->a, 1);
      os << " return ";
      pq(os, q->b, 1);
      break;
    case QK::Transform:
      os << "transform ";
      pq(os, q->a, 1);
      os << " by {";
      ps(os, q->stmt, false);
      os << '}';
      break;
  }
}

void bracket(std::ostream& os, const char* kw, const StmtPtr& body) {
  os << kw << " [";
  ps(os, body, false);
  os << ']';
}

// `unit` requests a form that parses as a single unit; sequences get braces.
void ps(std::ostream& os, const StmtPtr& s, bool unit) {
  switch (s->kind) {
    case SK::Seq:
      if (unit) {
        os << '{';
        ps(os, s, false);
        os << '}';
        return;
      }
      ps(os, s->a, false);
      os << "; ";
      ps(os, s->b, true);
      break;
    case SK::Skip: os << "skip"; break;
    case SK::Delete: os << "delete"; break;
    case SK::Insert:
      os << "insert ";
      pq(os, s->query, 0);
      break;
    case SK::Rename: os << "rename " << s->name; break;
    case SK::If:
      os << "if ";
      pq(os, s->query, 1);
      os << " then ";
      ps(os, s->a, true);
      os << " else ";
      ps(os, s->b, true);
      break;
    case SK::Let:
      os << "let $" << s->name << " := ";
      pq(os, s->query, 1);
      os << " in ";
      ps(os, s->a, true);
      break;
    case SK::Snapshot:
      os << "snapshot $" << s->name << " in ";
      ps(os, s->a, true);
      break;
    case SK::Test:
      os << to_string(s->test) << "? ";
      ps(os, s->a, true);
      break;
    case SK::Left: bracket(os, "left", s->a); break;
    case SK::Right: bracket(os, "right", s->a); break;
    case SK::Children: bracket(os, "children", s->a); break;
    case SK::Iter: bracket(os, "iter", s->a); break;
    case SK::Call:
      os << s->name << '(';
      for (std::size_t i = 0; i < s->args.size(); ++i) {
        if (i) os << ", ";
        pq(os, s->args[i], 1);
      }
      os << ')';
      break;
  }
}

std::string param_type(const Type& t) {
  using K = TypeNode::Kind;
  std::string text = to_string(t);
  return (t->kind == K::Seq || t->kind == K::Alt) ? "(" + text + ")" : text;
}

// ---- source ---------------------------------------------------------------

using PK = SourcePath::Kind;
using UK = SourceUpd::Kind;
using TK = SourceStmt::Kind;

// Path levels: 0 full path, 2 postfix (left of `/`, operand of a filter).
void pp(std::ostream& os, const PathPtr& p, int level) {
  int own = (p->kind == PK::Bind || p->kind == PK::Slash) ? 0 : 2;
  if (own < level) {
    os << '(';
    pp(os, p, 0);
    os << ')';
    return;
  }
  switch (p->kind) {
    case PK::Here: os << '.'; break;
    case PK::Step: os << to_string(p->test); break;
    case PK::Slash:
      pp(os, p->a, 2);
      os << '/';
      pp(os, p->b, 0);
      break;
    case PK::Filter:
      pp(os, p->a, 2);
      os << '[';
      pq(os, p->cond, 0);
      os << ']';
      break;
    case PK::Bind:
      os << '$' << p->var << " AS ";
      pp(os, p->a, 0);
      break;
  }
}

void pss(std::ostream& os, const SStmtPtr& s, bool unit, bool allow_where);

bool has_where_tail(const SStmtPtr& s) {
  switch (s->kind) {
    case TK::Upd: return s->where != nullptr;
    case TK::IfThen:
    case TK::Let: return has_where_tail(s->a);
    default: return false;
  }
}

void pupd(std::ostream& os, const SourceUpd& u) {
  switch (u.kind) {
    case UK::InsertBefore: os << "INSERT BEFORE "; break;
    case UK::InsertAfter: os << "INSERT AFTER "; break;
    case UK::InsertFirst: os << "INSERT AS FIRST INTO "; break;
    case UK::InsertLast: os << "INSERT AS LAST INTO "; break;
    case UK::Delete: os << "DELETE "; break;
    case UK::DeleteFrom: os << "DELETE FROM "; break;
    case UK::Rename: os << "RENAME "; break;
    case UK::Replace: os << "REPLACE "; break;
    case UK::ReplaceIn: os << "REPLACE IN "; break;
    case UK::UpdateBy: os << "UPDATE "; break;
  }
  pp(os, u.path, 0);
  switch (u.kind) {
    case UK::InsertBefore:
    case UK::InsertAfter:
    case UK::InsertFirst:
    case UK::InsertLast:
      os << " VALUE ";
      pq(os, u.value, 0);
      break;
    case UK::Rename: os << " TO " << u.label; break;
    case UK::Replace:
    case UK::ReplaceIn:
      os << " WITH ";
      pq(os, u.value, 0);
      break;
    case UK::UpdateBy:
      os << " BY ";
      pss(os, u.body, true, false);
      break;
    default: break;
  }
}

void pss(std::ostream& os, const SStmtPtr& s, bool unit, bool allow_where) {
  if (s->kind == TK::Block) {
    pss(os, s->a, unit, allow_where);
    return;
  }
  if ((unit && s->kind == TK::Seq) || (!allow_where && has_where_tail(s))) {
    os << '{';
    pss(os, s, false, true);
    os << '}';
    return;
  }
  switch (s->kind) {
    case TK::Seq:
      pss(os, s->a, false, true);
      os << "; ";
      pss(os, s->b, true, true);
      break;
    case TK::Upd:
      pupd(os, s->upd);
      if (s->where) {
        os << " WHERE ";
        pq(os, s->where, 1);
      }
      break;
    case TK::IfThen:
      os << "IF ";
      pq(os, s->cond, 1);
      os << " THEN ";
      pss(os, s->a, true, allow_where);
      break;
    case TK::Let:
      os << "LET $" << s->var << " := ";
      pq(os, s->cond, 1);
      os << " IN ";
      pss(os, s->a, true, allow_where);
      break;
    case TK::Block: break;
  }
}

}  // namespace

std::string print_query(const QueryPtr& q) {
  std::ostringstream os;
  pq(os, q, 0);
  return os.str();
}

std::string print_stmt(const StmtPtr& s) {
  std::ostringstream os;
  ps(os, s, false);
  return os.str();
}

std::string print_schema(const Schema& s) {
  std::ostringstream os;
  for (const auto& [name, def] : s.sig.defs) os << "type " << name << " = " << to_string(def) << ";\n";
  os << "schema " << to_string(s.root) << ";\n";
  return os.str();
}

std::string print_proc(const ProcDecl& p) {
  std::ostringstream os;
  os << "procedure " << p.name << '(';
  for (std::size_t i = 0; i < p.params.size(); ++i) {
    if (i) os << ", ";
    os << '$' << p.params[i].first << ": " << param_type(p.params[i].second);
  }
  os << "): " << to_string(p.in) << " => " << to_string(p.out) << " = ";
  ps(os, p.body, true);
  os << ';';
  return os.str();
}

std::string print_core_script(const CoreScript& s) {
  std::ostringstream os;
  for (const auto& [name, p] : s.procs.decls) os << print_proc(p) << '\n';
  if (s.main) os << print_stmt(s.main) << '\n';
  return os.str();
}

std::string print_path(const PathPtr& p) {
  std::ostringstream os;
  pp(os, p, 0);
  return os.str();
}

std::string print_source(const SStmtPtr& s) {
  std::ostringstream os;
  pss(os, s, false, true);
  return os.str();
}

}  // namespace flux
