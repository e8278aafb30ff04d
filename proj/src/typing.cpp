#include "typing_engine.hpp"

#include <algorithm>
#include <set>

#include "flux/type_algebra.hpp"

namespace flux::detail {

using QK = Query::Kind;
using SK = Stmt::Kind;
using K = TypeNode::Kind;

namespace {

Error type_error(ErrorKind kind, std::string msg, Span span, const Type& expected, const Type& found) {
  Error e(kind, std::move(msg), span);
  if (expected) e.expected = to_string(expected);
  if (found) e.found = to_string(found);
  return e;
}

LocationSet join(const LocationSet& a, const LocationSet& b) {
  LocationSet out = a;
  out.insert(b.begin(), b.end());
  return out;
}

LocationSet meet(const LocationSet& a, const LocationSet& b) {
  LocationSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

}  // namespace

LocationSet cond_union_impl(const LocationSet& set, const std::vector<int>& triggers, int l) {
  for (int t : triggers)
    if (!set.count(t)) return set;
  LocationSet out = set;
  out.insert(l);
  return out;
}

void Typer::require(const Type& found, const Type& expected, const std::string& what, Span span) {
  if (!subtype(found, expected, sig_))
    throw type_error(ErrorKind::TypeError, what + " must have type " + to_string(expected) + " but has type " +
                                               to_string(found),
                     span, expected, found);
}

Type Typer::query(const QueryTypeEnv& env, const QueryPtr& e) {
  try {
    return query_impl(env, e);
  } catch (Error& err) {
    err.with_span(e->span);
    throw;
  }
}

Type Typer::query_impl(const QueryTypeEnv& env, const QueryPtr& e) {
  switch (e->kind) {
    case QK::Empty: return t_empty();
    case QK::Seq: return t_seq(query(env, e->a), query(env, e->b));
    case QK::Element: return t_elem(e->name, query(env, e->a));
    case QK::String: return t_string();
    case QK::ForestVar: {
      auto it = env.forests.find(e->name);
      if (it != env.forests.end()) return it->second;
      // A free tree variable read as a forest of one tree.
      auto tt = env.trees.find(e->name);
      if (tt != env.trees.end()) return tt->second;
      throw Error(ErrorKind::TypeError, "variable $" + e->name + " is not bound", e->span);
    }
    case QK::Let: {
      QueryTypeEnv inner = env;
      inner.forests[e->name] = query(env, e->a);
      return query(inner, e->b);
    }
    case QK::True:
    case QK::False: return t_bool();
    case QK::If:
      require(query(env, e->a), t_bool(), "condition", e->span);
      return t_alt(query(env, e->b), query(env, e->c));
    case QK::StrEq:
      require(query(env, e->a), t_string(), "left operand of =", e->span);
      require(query(env, e->b), t_string(), "right operand of =", e->span);
      return t_bool();
    case QK::TreeVar: return tree_var(env, e);
    case QK::Child: {
      Type t = tree_var(env, e);
      if (t->kind != K::Element)
        throw type_error(ErrorKind::TypeError, "$" + e->name + "/child needs an element but $" + e->name +
                                                   " has type " + to_string(t),
                         e->span, nullptr, t);
      return t->left;
    }
    case QK::LabelFilter: return label_project(query(env, e->a), e->name);
    case QK::For: return iter_query(env, e->name, query(env, e->a), e->b);
    case QK::Transform: {
      Type t = query(env, e->a);
      return upd(env, Arity::Plural, t, e->stmt).type;
    }
  }
  return t_empty();
}

Type Typer::tree_var(const QueryTypeEnv& env, const QueryPtr& e) {
  auto it = env.trees.find(e->name);
  if (it == env.trees.end()) throw Error(ErrorKind::TypeError, "tree variable $" + e->name + " is not bound", e->span);
  return it->second;
}

Type Typer::label_project(const Type& t, const std::string& n) {
  switch (t->kind) {
    case K::Element: return t->name == n ? t : t_empty();
    case K::Bool:
    case K::String:
    case K::Flex:
    case K::Empty: return t_empty();
    case K::Star: return t_star(label_project(t->left, n));
    case K::Seq: return t_seq(label_project(t->left, n), label_project(t->right, n));
    case K::Alt: return t_alt(label_project(t->left, n), label_project(t->right, n));
    case K::Var: return label_project(unfold(t, sig_), n);
  }
  return t_empty();
}

Type Typer::iter_query(const QueryTypeEnv& env, const std::string& x, const Type& t, const QueryPtr& body) {
  switch (t->kind) {
    case K::Empty: return t_empty();
    case K::Bool:
    case K::String:
    case K::Element:
    case K::Flex: {
      QueryTypeEnv inner = env;
      inner.trees[x] = t;
      return query(inner, body);
    }
    case K::Star: return t_star(iter_query(env, x, t->left, body));
    case K::Seq: return t_seq(iter_query(env, x, t->left, body), iter_query(env, x, t->right, body));
    case K::Alt: return t_alt(iter_query(env, x, t->left, body), iter_query(env, x, t->right, body));
    case K::Var: return iter_query(env, x, unfold(t, sig_), body);
  }
  return t_empty();
}

Type Typer::single(const Type& t, const char* what, Span span) {
  Type a = as_atom(t, sig_);
  if (!a)
    throw type_error(ErrorKind::ArityError,
                     std::string(what) + " needs a single tree but the input type is " + to_string(t), span, nullptr,
                     t);
  return a;
}

Type Typer::element(const Type& t, const char* what, Span span) {
  Type a = single(t, what, span);
  if (a->kind != K::Element)
    throw type_error(ErrorKind::TypeError, std::string(what) + " needs an element but the input type is " + to_string(a),
                     span, nullptr, a);
  return a;
}

LocationSet Typer::cu(const LocationSet& set, std::initializer_list<int> triggers, int l) const {
  if (!track_) return {};
  return cond_union_impl(set, std::vector<int>(triggers), l);
}

UpdResult Typer::upd(const QueryTypeEnv& env, Arity a, const Type& t, const StmtPtr& s) {
  try {
    return upd_impl(env, a, t, s);
  } catch (Error& err) {
    err.with_span(s->span);
    throw;
  }
}

UpdResult Typer::upd_impl(const QueryTypeEnv& env, Arity a, const Type& t, const StmtPtr& s) {
  const int l = s->label;
  if (track_ && l >= 0) {
    auto [it, fresh] = inputs_.emplace(l, t);
    if (!fresh && !same_type(it->second, t)) it->second = t_alt(it->second, t);
  }
  auto only_if = [&](bool c) { return (track_ && c) ? LocationSet{l} : LocationSet{}; };
  switch (s->kind) {
    case SK::Skip: return {t, only_if(true)};
    case SK::Seq: {
      UpdResult r1 = upd(env, a, t, s->a);
      UpdResult r2 = upd(env, a, r1.type, s->b);
      return {r2.type, cu(join(r1.L, r2.L), {s->a->label, s->b->label}, l)};
    }
    case SK::If: {
      require(query(env, s->query), t_bool(), "condition", s->span);
      UpdResult r1 = upd(env, a, t, s->a);
      UpdResult r2 = upd(env, a, t, s->b);
      return {t_alt(r1.type, r2.type), cu(join(r1.L, r2.L), {s->a->label, s->b->label}, l)};
    }
    case SK::Let: {
      QueryTypeEnv inner = env;
      inner.forests[s->name] = query(env, s->query);
      UpdResult r = upd(inner, a, t, s->a);
      return {r.type, cu(r.L, {s->a->label}, l)};
    }
    case SK::Insert: {
      if (!type_equiv(t, t_empty(), sig_))
        throw type_error(ErrorKind::TypeError, "insert needs an empty focus but the input type is " + to_string(t),
                         s->span, t_empty(), t);
      Type q = query(env, s->query);
      return {q, only_if(subtype(q, t_empty(), sig_))};
    }
    case SK::Delete: return {t_empty(), only_if(subtype(t, t_empty(), sig_))};
    case SK::Rename: {
      Type e = element(t, "rename", s->span);
      return {t_elem(s->name, e->left), only_if(e->name == s->name)};
    }
    case SK::Snapshot: {
      QueryTypeEnv inner = env;
      inner.forests[s->name] = t;
      UpdResult r = upd(inner, a, t, s->a);
      return {r.type, cu(r.L, {s->a->label}, l)};
    }
    case SK::Test: {
      Type atom = single(t, "test", s->span);
      if (!test_match(atom, s->test)) return {atom, only_if(true)};
      UpdResult r = upd(env, Arity::Singular, atom, s->a);
      return {r.type, cu(r.L, {s->a->label}, l)};
    }
    case SK::Children: {
      Type e = element(t, "children", s->span);
      UpdResult r = upd(env, Arity::Plural, e->left, s->a);
      return {t_elem(e->name, r.type), cu(r.L, {s->a->label}, l)};
    }
    case SK::Left: {
      UpdResult r = upd(env, Arity::Plural, t_empty(), s->a);
      return {t_seq(r.type, t), cu(r.L, {s->a->label}, l)};
    }
    case SK::Right: {
      UpdResult r = upd(env, Arity::Plural, t_empty(), s->a);
      return {t_seq(t, r.type), cu(r.L, {s->a->label}, l)};
    }
    case SK::Iter: {
      UpdResult r = iter(env, t, s->a);
      return {r.type, cu(r.L, {s->a->label}, l)};
    }
    case SK::Call: {
      const ProcDecl* p = procs_.find(s->name);
      if (!p) throw Error(ErrorKind::UnknownProcedure, "procedure " + s->name + " is not declared", s->span);
      if (p->params.size() != s->args.size())
        throw Error(ErrorKind::TypeError,
                    "procedure " + s->name + " takes " + std::to_string(p->params.size()) + " arguments but got " +
                        std::to_string(s->args.size()),
                    s->span);
      for (std::size_t i = 0; i < s->args.size(); ++i) {
        Type at = query(env, s->args[i]);
        if (!subtype(at, p->params[i].second, sig_))
          throw type_error(ErrorKind::SubtypeFailure,
                           "argument $" + p->params[i].first + " of " + s->name + " has type " + to_string(at) +
                               ", expected " + to_string(p->params[i].second),
                           s->span, p->params[i].second, at);
      }
      if (!subtype(t, p->in, sig_))
        throw type_error(ErrorKind::SubtypeFailure,
                         "input type " + to_string(t) + " of " + s->name + " is not a subtype of " + to_string(p->in),
                         s->span, p->in, t);
      return {p->out, {}};
    }
  }
  return {t, {}};
}

UpdResult Typer::iter(const QueryTypeEnv& env, const Type& t, const StmtPtr& s) {
  switch (t->kind) {
    case K::Empty: return {t_empty(), track_ && s->label >= 0 ? LocationSet{s->label} : LocationSet{}};
    case K::Bool:
    case K::String:
    case K::Element:
    case K::Flex: return upd(env, Arity::Singular, t, s);
    case K::Star: {
      UpdResult r = iter(env, t->left, s);
      return {t_star(r.type), r.L};
    }
    case K::Seq: {
      UpdResult r1 = iter(env, t->left, s);
      UpdResult r2 = iter(env, t->right, s);
      return {t_seq(r1.type, r2.type), meet(r1.L, r2.L)};
    }
    case K::Alt: {
      UpdResult r1 = iter(env, t->left, s);
      UpdResult r2 = iter(env, t->right, s);
      return {t_alt(r1.type, r2.type), meet(r1.L, r2.L)};
    }
    case K::Var: return iter(env, unfold(t, sig_), s);
  }
  return {t, {}};
}

}  // namespace flux::detail

namespace flux {

Type infer_query_type(const QueryTypeEnv& env, const QueryPtr& e, const Signature& sig, const ProcEnv& procs) {
  detail::Typer ty(procs, sig, false);
  return ty.query(env, e);
}

Type label_project(const Type& t, const std::string& label, const Signature& sig) {
  static const ProcEnv kNoProcs;
  detail::Typer ty(kNoProcs, sig, false);
  return ty.label_project(t, label);
}

Type iterate_query_type(const QueryTypeEnv& env, const std::string& x, const Type& t1, const QueryPtr& body,
                        const Signature& sig, const ProcEnv& procs) {
  detail::Typer ty(procs, sig, false);
  return ty.iter_query(env, x, t1, body);
}

Type infer_update_type(const QueryTypeEnv& env, Arity a, const Type& t, const StmtPtr& s, const ProcEnv& procs,
                       const Signature& sig) {
  detail::Typer ty(procs, sig, false);
  return ty.upd(env, a, t, s).type;
}

Type infer_iter_type(const QueryTypeEnv& env, const Type& t, const StmtPtr& s, const ProcEnv& procs,
                     const Signature& sig) {
  detail::Typer ty(procs, sig, false);
  return ty.iter(env, t, s).type;
}

void check_update_type(const QueryTypeEnv& env, Arity a, const Type& t, const StmtPtr& s, const Type& expected,
                       const ProcEnv& procs, const Signature& sig) {
  Type got = infer_update_type(env, a, t, s, procs, sig);
  if (!subtype(got, expected, sig)) {
    Error e(ErrorKind::SubtypeFailure,
            "update produces " + to_string(got) + " which is not a subtype of " + to_string(expected), s->span);
    e.expected = to_string(expected);
    e.found = to_string(got);
    throw e;
  }
}

void check_declarations(const ProcEnv& procs, const Signature& sig) {
  for (const auto& [name, p] : procs.decls) {
    try {
      QueryTypeEnv env;
      for (const auto& [x, t] : p.params) {
        check_type(t, sig);
        if (env.forests.count(x)) throw Error(ErrorKind::TypeError, "parameter $" + x + " is declared twice", p.span);
        env.forests[x] = t;
      }
      check_type(p.in, sig);
      check_type(p.out, sig);
      check_update_type(env, Arity::Plural, p.in, p.body, p.out, procs, sig);
    } catch (Error& e) {
      e.with_span(p.span);
      if (e.context.empty()) e.context = "in procedure " + name;
      throw;
    }
  }
}

}  // namespace flux
