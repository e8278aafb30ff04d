#include "flux/source.hpp"

namespace flux {

namespace {

using PK = SourcePath::Kind;
using UK = SourceUpd::Kind;
using TK = SourceStmt::Kind;

std::shared_ptr<SourcePath> mp(PK kind) {
  auto p = std::make_shared<SourcePath>();
  p->kind = kind;
  return p;
}

std::shared_ptr<SourceStmt> mst(TK kind) {
  auto s = std::make_shared<SourceStmt>();
  s->kind = kind;
  return s;
}

bool same_opt_query(const QueryPtr& a, const QueryPtr& b) {
  if (!a || !b) return !a && !b;
  return same_query(a, b);
}

const SStmtPtr& through_blocks(const SStmtPtr& s) {
  const SStmtPtr* cur = &s;
  while ((*cur)->kind == TK::Block) cur = &(*cur)->a;
  return *cur;
}

// Gives every node of `s` without a location the span `sp`.
StmtPtr located(const StmtPtr& s, Span sp) {
  if (s->span.known() && !s->a && !s->b) return s;
  auto c = std::make_shared<Stmt>(*s);
  if (!c->span.known()) c->span = sp;
  if (s->a) c->a = located(s->a, sp);
  if (s->b) c->b = located(s->b, sp);
  return c;
}

bool same_upd(const SourceUpd& a, const SourceUpd& b) {
  if (a.kind != b.kind || a.label != b.label) return false;
  if (!same_path(a.path, b.path) || !same_opt_query(a.value, b.value)) return false;
  if (!a.body || !b.body) return !a.body && !b.body;
  return same_source(a.body, b.body);
}

}  // namespace

PathPtr p_here() { return mp(PK::Here); }

PathPtr p_step(Test phi) {
  auto p = mp(PK::Step);
  p->test = std::move(phi);
  return p;
}

PathPtr p_slash(PathPtr a, PathPtr b) {
  auto p = mp(PK::Slash);
  p->a = std::move(a);
  p->b = std::move(b);
  return p;
}

PathPtr p_filter(PathPtr inner, QueryPtr cond) {
  auto p = mp(PK::Filter);
  p->a = std::move(inner);
  p->cond = std::move(cond);
  return p;
}

PathPtr p_bind(std::string x, PathPtr inner) {
  auto p = mp(PK::Bind);
  p->var = std::move(x);
  p->a = std::move(inner);
  return p;
}

SStmtPtr ss_upd(SourceUpd u, QueryPtr where) {
  auto s = mst(TK::Upd);
  s->upd = std::move(u);
  s->where = std::move(where);
  return s;
}

SStmtPtr ss_if(QueryPtr cond, SStmtPtr body) {
  auto s = mst(TK::IfThen);
  s->cond = std::move(cond);
  s->a = std::move(body);
  return s;
}

SStmtPtr ss_seq(SStmtPtr a, SStmtPtr b) {
  auto s = mst(TK::Seq);
  s->a = std::move(a);
  s->b = std::move(b);
  return s;
}

SStmtPtr ss_let(std::string x, QueryPtr e, SStmtPtr body) {
  auto s = mst(TK::Let);
  s->var = std::move(x);
  s->cond = std::move(e);
  s->a = std::move(body);
  return s;
}

SStmtPtr ss_block(SStmtPtr body) {
  auto s = mst(TK::Block);
  s->a = std::move(body);
  return s;
}

SourceUpd su(SourceUpd::Kind kind, PathPtr path, QueryPtr value) {
  SourceUpd u;
  u.kind = kind;
  u.path = std::move(path);
  u.value = std::move(value);
  return u;
}

bool same_path(const PathPtr& a, const PathPtr& b) {
  if (!a || !b) return !a && !b;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case PK::Here: return true;
    case PK::Step: return a->test == b->test;
    case PK::Slash: return same_path(a->a, b->a) && same_path(a->b, b->b);
    case PK::Filter: return same_path(a->a, b->a) && same_query(a->cond, b->cond);
    case PK::Bind: return a->var == b->var && same_path(a->a, b->a);
  }
  return false;
}

bool same_source(const SStmtPtr& a0, const SStmtPtr& b0) {
  const SStmtPtr& a = through_blocks(a0);
  const SStmtPtr& b = through_blocks(b0);
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case TK::Upd: return same_upd(a->upd, b->upd) && same_opt_query(a->where, b->where);
    case TK::IfThen: return same_query(a->cond, b->cond) && same_source(a->a, b->a);
    case TK::Seq: return same_source(a->a, b->a) && same_source(a->b, b->b);
    case TK::Let: return a->var == b->var && same_query(a->cond, b->cond) && same_source(a->a, b->a);
    case TK::Block: break;
  }
  return false;
}

SourceUpd desugar_where(const SourceUpd& u, const QueryPtr& cond) {
  SourceUpd out = u;
  auto f = std::make_shared<SourcePath>(*p_filter(u.path, cond));
  f->span = u.path->span;
  out.path = f;
  return out;
}

SStmtPtr desugar(const SStmtPtr& s) {
  switch (s->kind) {
    case TK::Upd: {
      SourceUpd u = s->upd;
      if (u.body) u.body = desugar(u.body);
      if (s->where) u = desugar_where(u, s->where);
      auto c = std::make_shared<SourceStmt>(*s);
      c->upd = std::move(u);
      c->where = nullptr;
      return c;
    }
    case TK::Block: return desugar(s->a);
    default: {
      auto c = std::make_shared<SourceStmt>(*s);
      if (s->a) c->a = desugar(s->a);
      if (s->b) c->b = desugar(s->b);
      return c;
    }
  }
}

StmtPtr kernel_of(const SourceUpd& u) {
  StmtPtr k;
  switch (u.kind) {
    case UK::InsertBefore: k = s_left(s_insert(u.value)); break;
    case UK::InsertAfter: k = s_right(s_insert(u.value)); break;
    case UK::InsertFirst: k = s_children(s_left(s_insert(u.value))); break;
    case UK::InsertLast: k = s_children(s_right(s_insert(u.value))); break;
    case UK::Delete: k = s_delete(); break;
    case UK::DeleteFrom: k = s_children(s_delete()); break;
    case UK::Rename: k = s_rename(u.label); break;
    case UK::Replace: k = s_seq(s_delete(), s_insert(u.value)); break;
    case UK::ReplaceIn: k = s_children(s_seq(s_delete(), s_insert(u.value))); break;
    case UK::UpdateBy: k = normalize_stmt(u.body); break;
  }
  return located(k, u.span);
}

StmtPtr normalize_path(const PathPtr& p, const StmtPtr& k) {
  switch (p->kind) {
    case PK::Here: return k;
    case PK::Step: return located(s_children(s_iter(s_test(p->test, k))), p->span);
    case PK::Slash: return normalize_path(p->a, normalize_path(p->b, k));
    case PK::Filter: return normalize_path(p->a, with_span(s_if(p->cond, k, with_span(s_skip(), p->span)), p->span));
    case PK::Bind: return normalize_path(p->a, with_span(s_snapshot(p->var, k), p->span));
  }
  return k;
}

StmtPtr normalize_upd(const SourceUpd& u) { return normalize_path(u.path, kernel_of(u)); }

StmtPtr normalize_stmt(const SStmtPtr& s) {
  switch (s->kind) {
    case TK::Upd: return normalize_upd(s->where ? desugar_where(s->upd, s->where) : s->upd);
    case TK::IfThen: return with_span(s_if(s->cond, normalize_stmt(s->a), with_span(s_skip(), s->span)), s->span);
    case TK::Seq: return with_span(s_seq(normalize_stmt(s->a), normalize_stmt(s->b)), s->span);
    case TK::Let: return with_span(s_let(s->var, s->cond, normalize_stmt(s->a)), s->span);
    case TK::Block: return normalize_stmt(s->a);
  }
  return s_skip();
}

}  // namespace flux
