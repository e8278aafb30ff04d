#include "flux/path_error.hpp"

#include "typing_engine.hpp"

namespace flux {

namespace {

using SK = Stmt::Kind;

StmtPtr relabel(const StmtPtr& s, int& next) {
  auto c = std::make_shared<Stmt>(*s);
  c->label = next++;
  if (s->a) c->a = relabel(s->a, next);
  if (s->b) c->b = relabel(s->b, next);
  return c;
}

StmtPtr unlabel(const StmtPtr& s) {
  auto c = std::make_shared<Stmt>(*s);
  c->label = -1;
  if (s->a) c->a = unlabel(s->a);
  if (s->b) c->b = unlabel(s->b);
  return c;
}

StmtPtr find(const StmtPtr& s, int l) {
  if (!s) return nullptr;
  if (s->label == l) return s;
  if (StmtPtr r = find(s->a, l)) return r;
  return find(s->b, l);
}

// Returns nullptr when `l` does not occur below `s`.
StmtPtr replace(const StmtPtr& s, int l) {
  if (!s) return nullptr;
  if (s->label == l) {
    auto k = std::make_shared<Stmt>(*s_skip());
    k->label = l;
    k->span = s->span;
    return k;
  }
  StmtPtr na = replace(s->a, l);
  StmtPtr nb = na ? nullptr : replace(s->b, l);
  if (!na && !nb) return nullptr;
  auto c = std::make_shared<Stmt>(*s);
  if (na) c->a = na;
  if (nb) c->b = nb;
  return c;
}

void collect_reported(const StmtPtr& s, const LocationSet& set, std::vector<int>& out) {
  if (!s) return;
  if (set.count(s->label) && s->kind != SK::Skip) out.push_back(s->label);
  collect_reported(s->a, set, out);
  collect_reported(s->b, set, out);
}

StmtPtr prune(const StmtPtr& s, const LocationSet& set) {
  if (set.count(s->label) && s->kind != SK::Skip) {
    auto k = std::make_shared<Stmt>(*s_skip());
    k->label = s->label;
    k->span = s->span;
    return k;
  }
  if (!s->a && !s->b) return s;
  auto c = std::make_shared<Stmt>(*s);
  if (s->a) c->a = prune(s->a, set);
  if (s->b) c->b = prune(s->b, set);
  return c;
}

}  // namespace

StmtPtr label_statement(const StmtPtr& s) {
  int next = 0;
  return relabel(s, next);
}

StmtPtr strip_labels(const StmtPtr& s) { return unlabel(s); }

StmtPtr subterm_at(const StmtPtr& s, int l) {
  StmtPtr r = find(s, l);
  if (!r) throw Error(ErrorKind::UnknownLabel, "no subterm at location " + std::to_string(l));
  return r;
}

StmtPtr replace_at(const StmtPtr& s, int l) {
  StmtPtr r = replace(s, l);
  if (!r) throw Error(ErrorKind::UnknownLabel, "no subterm at location " + std::to_string(l));
  return r;
}

LocationSet cond_union(const LocationSet& set, const std::vector<int>& triggers, int l) {
  return detail::cond_union_impl(set, triggers, l);
}

Analysis analyze(const QueryTypeEnv& env, Arity a, const Type& t, const StmtPtr& s, const ProcEnv& procs,
                 const Signature& sig) {
  detail::Typer ty(procs, sig, true);
  detail::UpdResult r = ty.upd(env, a, t, s);
  return {r.type, r.L, ty.inputs()};
}

std::vector<int> report_errors(const StmtPtr& s, const LocationSet& set) {
  std::vector<int> out;
  collect_reported(s, set, out);
  return out;
}

StmtPtr optimize(const StmtPtr& s, const LocationSet& set) { return prune(s, set); }

}  // namespace flux
