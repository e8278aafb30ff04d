#include "flux/ast.hpp"

namespace flux {

namespace {

using QK = Query::Kind;
using SK = Stmt::Kind;

QueryPtr mq(QK kind, std::string name = {}, QueryPtr a = nullptr, QueryPtr b = nullptr,
            QueryPtr c = nullptr) {
  auto q = std::make_shared<Query>();
  q->kind = kind;
  q->name = std::move(name);
  q->a = std::move(a);
  q->b = std::move(b);
  q->c = std::move(c);
  return q;
}

StmtPtr ms(SK kind, std::string name = {}, StmtPtr a = nullptr, StmtPtr b = nullptr) {
  auto s = std::make_shared<Stmt>();
  s->kind = kind;
  s->name = std::move(name);
  s->a = std::move(a);
  s->b = std::move(b);
  return s;
}

bool same_opt_query(const QueryPtr& a, const QueryPtr& b) {
  if (!a || !b) return !a && !b;
  return same_query(a, b);
}

bool same_opt_stmt(const StmtPtr& a, const StmtPtr& b) {
  if (!a || !b) return !a && !b;
  return same_stmt(a, b);
}

}  // namespace

QueryPtr q_empty() { return mq(QK::Empty); }
QueryPtr q_seq(QueryPtr a, QueryPtr b) { return mq(QK::Seq, {}, std::move(a), std::move(b)); }
QueryPtr q_elem(std::string label, QueryPtr body) { return mq(QK::Element, std::move(label), std::move(body)); }
QueryPtr q_str(std::string text) { return mq(QK::String, std::move(text)); }
QueryPtr q_fvar(std::string x) { return mq(QK::ForestVar, std::move(x)); }
QueryPtr q_let(std::string x, QueryPtr bound, QueryPtr body) {
  return mq(QK::Let, std::move(x), std::move(bound), std::move(body));
}
QueryPtr q_bool(bool b) { return mq(b ? QK::True : QK::False); }
QueryPtr q_if(QueryPtr c, QueryPtr then_q, QueryPtr else_q) {
  return mq(QK::If, {}, std::move(c), std::move(then_q), std::move(else_q));
}
QueryPtr q_eq(QueryPtr a, QueryPtr b) { return mq(QK::StrEq, {}, std::move(a), std::move(b)); }
QueryPtr q_tvar(std::string x) { return mq(QK::TreeVar, std::move(x)); }
QueryPtr q_child(std::string x) { return mq(QK::Child, std::move(x)); }
QueryPtr q_filter(QueryPtr e, std::string label) { return mq(QK::LabelFilter, std::move(label), std::move(e)); }
QueryPtr q_for(std::string x, QueryPtr in, QueryPtr body) {
  return mq(QK::For, std::move(x), std::move(in), std::move(body));
}
QueryPtr q_transform(QueryPtr e, StmtPtr s) {
  auto q = std::make_shared<Query>();
  q->kind = QK::Transform;
  q->a = std::move(e);
  q->stmt = std::move(s);
  return q;
}

StmtPtr s_skip() { return ms(SK::Skip); }
StmtPtr s_seq(StmtPtr a, StmtPtr b) { return ms(SK::Seq, {}, std::move(a), std::move(b)); }
StmtPtr s_if(QueryPtr c, StmtPtr then_s, StmtPtr else_s) {
  auto s = std::make_shared<Stmt>();
  s->kind = SK::If;
  s->query = std::move(c);
  s->a = std::move(then_s);
  s->b = std::move(else_s);
  return s;
}
StmtPtr s_let(std::string x, QueryPtr e, StmtPtr body) {
  auto s = std::make_shared<Stmt>();
  s->kind = SK::Let;
  s->name = std::move(x);
  s->query = std::move(e);
  s->a = std::move(body);
  return s;
}
StmtPtr s_insert(QueryPtr e) {
  auto s = std::make_shared<Stmt>();
  s->kind = SK::Insert;
  s->query = std::move(e);
  return s;
}
StmtPtr s_delete() { return ms(SK::Delete); }
StmtPtr s_rename(std::string label) { return ms(SK::Rename, std::move(label)); }
StmtPtr s_snapshot(std::string x, StmtPtr body) { return ms(SK::Snapshot, std::move(x), std::move(body)); }
StmtPtr s_test(Test phi, StmtPtr body) {
  auto s = std::make_shared<Stmt>();
  s->kind = SK::Test;
  s->test = std::move(phi);
  s->a = std::move(body);
  return s;
}
StmtPtr s_left(StmtPtr body) { return ms(SK::Left, {}, std::move(body)); }
StmtPtr s_right(StmtPtr body) { return ms(SK::Right, {}, std::move(body)); }
StmtPtr s_children(StmtPtr body) { return ms(SK::Children, {}, std::move(body)); }
StmtPtr s_iter(StmtPtr body) { return ms(SK::Iter, {}, std::move(body)); }
StmtPtr s_call(std::string proc, std::vector<QueryPtr> args) {
  auto s = std::make_shared<Stmt>();
  s->kind = SK::Call;
  s->name = std::move(proc);
  s->args = std::move(args);
  return s;
}

StmtPtr with_span(const StmtPtr& s, Span span) {
  auto c = std::make_shared<Stmt>(*s);
  c->span = span;
  return c;
}

QueryPtr with_span(const QueryPtr& q, Span span) {
  auto c = std::make_shared<Query>(*q);
  c->span = span;
  return c;
}

bool same_query(const QueryPtr& a, const QueryPtr& b) {
  if (a == b) return true;
  if (a->kind != b->kind || a->name != b->name) return false;
  return same_opt_query(a->a, b->a) && same_opt_query(a->b, b->b) && same_opt_query(a->c, b->c) &&
         same_opt_stmt(a->stmt, b->stmt);
}

bool same_stmt(const StmtPtr& a, const StmtPtr& b) {
  if (a == b) return true;
  if (a->kind != b->kind || a->name != b->name || !(a->test == b->test)) return false;
  if (!same_opt_query(a->query, b->query)) return false;
  if (a->args.size() != b->args.size()) return false;
  for (std::size_t i = 0; i < a->args.size(); ++i)
    if (!same_query(a->args[i], b->args[i])) return false;
  return same_opt_stmt(a->a, b->a) && same_opt_stmt(a->b, b->b);
}

std::size_t stmt_size(const StmtPtr& s) {
  if (!s) return 0;
  return 1 + stmt_size(s->a) + stmt_size(s->b);
}

}  // namespace flux
