#include "flux/source_typing.hpp"

#include <algorithm>

#include "flux/type_algebra.hpp"

namespace flux {

namespace {

using K = TypeNode::Kind;
using PK = SourcePath::Kind;
using UK = SourceUpd::Kind;
using TK = SourceStmt::Kind;

bool same_env(const QueryTypeEnv& a, const QueryTypeEnv& b) {
  auto same_map = [](const std::map<std::string, Type>& x, const std::map<std::string, Type>& y) {
    if (x.size() != y.size()) return false;
    for (auto i = x.begin(), j = y.begin(); i != x.end(); ++i, ++j)
      if (i->first != j->first || !same_type(i->second, j->second)) return false;
    return true;
  };
  return same_map(a.forests, b.forests) && same_map(a.trees, b.trees);
}

std::string zname(int z) { return "%Z" + std::to_string(z); }

void annotate(Error& e, const CtxBinding& b) {
  if (e.context.empty()) e.context = "at " + zname(b.z) + " with input type " + to_string(b.type);
}

}  // namespace

const CtxBinding* CtxSubst::find(int z) const {
  auto it = std::lower_bound(bindings.begin(), bindings.end(), z,
                             [](const CtxBinding& b, int key) { return b.z < key; });
  return (it != bindings.end() && it->z == z) ? &*it : nullptr;
}

Type apply_subst(const Type& t, const CtxSubst& theta) {
  if (theta.empty()) return t;
  switch (t->kind) {
    case K::Flex: {
      const CtxBinding* b = theta.find(t->flex);
      return b ? b->type : t;
    }
    case K::Element: {
      Type body = apply_subst(t->left, theta);
      return body == t->left ? t : t_elem(t->name, body);
    }
    case K::Star: {
      Type inner = apply_subst(t->left, theta);
      return inner == t->left ? t : t_star(inner);
    }
    case K::Seq:
    case K::Alt: {
      Type l = apply_subst(t->left, theta);
      Type r = apply_subst(t->right, theta);
      if (l == t->left && r == t->right) return t;
      return t->kind == K::Seq ? t_seq(l, r) : t_alt(l, r);
    }
    default: return t;
  }
}

CtxSubst apply_subst(const CtxSubst& theta, const CtxSubst& by) {
  CtxSubst out = theta;
  for (CtxBinding& b : out.bindings) b.type = apply_subst(b.type, by);
  return out;
}

CtxSubst merge_disjoint(const CtxSubst& a, const CtxSubst& b) {
  CtxSubst out;
  out.bindings.reserve(a.size() + b.size());
  auto i = a.bindings.begin(), j = b.bindings.begin();
  while (i != a.bindings.end() || j != b.bindings.end()) {
    if (j == b.bindings.end() || (i != a.bindings.end() && i->z < j->z)) {
      out.bindings.push_back(*i++);
    } else if (i == a.bindings.end() || j->z < i->z) {
      out.bindings.push_back(*j++);
    } else {
      throw Error(ErrorKind::DomainOverlap, "both substitutions bind " + zname(i->z));
    }
  }
  return out;
}

CtxSubst merge_or(const CtxSubst& a, const CtxSubst& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DomainMismatch, "substitutions have different domains");
  CtxSubst out;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const CtxBinding& x = a.bindings[k];
    const CtxBinding& y = b.bindings[k];
    if (x.z != y.z) throw Error(ErrorKind::DomainMismatch, "substitutions have different domains");
    if (!same_env(x.ctx, y.ctx))
      throw Error(ErrorKind::DomainMismatch, "bindings of " + zname(x.z) + " have different contexts");
    out.bindings.push_back({x.z, x.ctx, t_alt(x.type, y.type)});
  }
  return out;
}

CtxSubst extend_scope(const CtxSubst& theta, const std::string& x) {
  CtxSubst out = theta;
  for (CtxBinding& b : out.bindings) b.ctx.forests[x] = b.type;
  return out;
}

CtxSubst maybe(const CtxSubst& theta) {
  CtxSubst out = theta;
  for (CtxBinding& b : out.bindings) b.type = t_alt(t_flex(b.z), b.type);
  return out;
}

PathSplit SourceChecker::check_filter(const QueryTypeEnv& g, const Type& t, const Test& phi) {
  switch (t->kind) {
    case K::Empty: return {t, {}};
    case K::Bool:
    case K::String:
    case K::Element: {
      if (!test_match(t, phi)) return {t, {}};
      int z = fresh_.next();
      CtxSubst theta;
      theta.bindings.push_back({z, g, t});
      return {t_flex(z), theta};
    }
    case K::Flex: return {t, {}};
    case K::Seq:
    case K::Alt: {
      PathSplit l = check_filter(g, t->left, phi);
      PathSplit r = check_filter(g, t->right, phi);
      Type out = t->kind == K::Seq ? t_seq(l.type, r.type) : t_alt(l.type, r.type);
      return {out, merge_disjoint(l.theta, r.theta)};
    }
    case K::Star: {
      PathSplit inner = check_filter(g, t->left, phi);
      return {t_star(inner.type), inner.theta};
    }
    case K::Var: return check_filter(g, sig_.lookup(t->name), phi);
  }
  return {t, {}};
}

PathSplit SourceChecker::check_path(const QueryTypeEnv& g, const Type& t, const PathPtr& p) {
  try {
    switch (p->kind) {
      case PK::Here: {
        int z = fresh_.next();
        CtxSubst theta;
        theta.bindings.push_back({z, g, t});
        return {t_flex(z), theta};
      }
      case PK::Step: {
        Type a = as_atom(t, sig_);
        if (!a) {
          Error e(ErrorKind::NonAtomicSimpleUpdate,
                  "path step " + to_string(p->test) + " needs a single tree but the input type is " + to_string(t));
          e.found = to_string(t);
          throw e;
        }
        if (a->kind != K::Element) {
          Error e(ErrorKind::PathTypeError,
                  "path step " + to_string(p->test) + " needs an element but the input type is " + to_string(a));
          e.found = to_string(a);
          throw e;
        }
        PathSplit body = check_filter(g, a->left, p->test);
        return {t_elem(a->name, body.type), body.theta};
      }
      case PK::Slash: {
        PathSplit first = check_path(g, t, p->a);
        auto [residual, inner] = simult_path(first.theta, p->b);
        return {apply_subst(first.type, residual), inner};
      }
      case PK::Filter: {
        PathSplit inner = check_path(g, t, p->a);
        simult_expr(inner.theta, p->cond, t_bool());
        return {apply_subst(inner.type, maybe(inner.theta)), inner.theta};
      }
      case PK::Bind: {
        PathSplit inner = check_path(g, t, p->a);
        return {inner.type, extend_scope(inner.theta, p->var)};
      }
    }
  } catch (Error& e) {
    e.with_span(p->span);
    throw;
  }
  return {t, {}};
}

void SourceChecker::simult_expr(const CtxSubst& theta, const QueryPtr& e, const Type& expected) {
  for (const CtxBinding& b : theta.bindings) {
    try {
      Type found = infer_query_type(b.ctx, e, sig_, procs_);
      if (!subtype(found, expected, sig_)) {
        Error err(ErrorKind::TypeError, "condition must have type " + to_string(expected) + " but has type " +
                                            to_string(found),
                  e->span);
        err.expected = to_string(expected);
        err.found = to_string(found);
        throw err;
      }
    } catch (Error& err) {
      annotate(err, b);
      throw;
    }
  }
}

CtxSubst SourceChecker::simult_core(const CtxSubst& theta, const StmtPtr& s) {
  CtxSubst out;
  for (const CtxBinding& b : theta.bindings) {
    try {
      out.bindings.push_back({b.z, b.ctx, infer_update_type(b.ctx, Arity::Singular, b.type, s, procs_, sig_)});
    } catch (Error& err) {
      annotate(err, b);
      throw;
    }
  }
  return out;
}

CtxSubst SourceChecker::simult_stmt(const CtxSubst& theta, const SStmtPtr& s) {
  CtxSubst out;
  for (const CtxBinding& b : theta.bindings) {
    try {
      out.bindings.push_back({b.z, b.ctx, check_compound(b.ctx, b.type, s)});
    } catch (Error& err) {
      annotate(err, b);
      throw;
    }
  }
  return out;
}

std::pair<CtxSubst, CtxSubst> SourceChecker::simult_path(const CtxSubst& theta, const PathPtr& p) {
  CtxSubst residual, inner;
  for (const CtxBinding& b : theta.bindings) {
    try {
      PathSplit r = check_path(b.ctx, b.type, p);
      residual.bindings.push_back({b.z, b.ctx, r.type});
      inner = merge_disjoint(inner, r.theta);
    } catch (Error& err) {
      annotate(err, b);
      throw;
    }
  }
  return {residual, inner};
}

Type SourceChecker::check_simple(const QueryTypeEnv& g, const Type& t, const SourceUpd& u) {
  try {
    PathSplit split = check_path(g, t, u.path);
    if (u.span.known()) matched_[{u.span.line, u.span.column}] |= !split.theta.empty();
    CtxSubst after = u.kind == UK::UpdateBy ? simult_stmt(split.theta, u.body)
                                            : simult_core(split.theta, kernel_of(u));
    return apply_subst(split.type, after);
  } catch (Error& e) {
    e.with_span(u.span);
    throw;
  }
}

Type SourceChecker::check_compound(const QueryTypeEnv& g, const Type& t, const SStmtPtr& s) {
  try {
    switch (s->kind) {
      case TK::Upd: return check_simple(g, t, s->where ? desugar_where(s->upd, s->where) : s->upd);
      case TK::IfThen: {
        Type c = infer_query_type(g, s->cond, sig_, procs_);
        if (!subtype(c, t_bool(), sig_)) {
          Error err(ErrorKind::TypeError, "condition must have type bool but has type " + to_string(c), s->cond->span);
          err.expected = "bool";
          err.found = to_string(c);
          throw err;
        }
        return t_alt(t, check_compound(g, t, s->a));
      }
      case TK::Seq: return check_compound(g, check_compound(g, t, s->a), s->b);
      case TK::Let: {
        QueryTypeEnv inner = g;
        inner.forests[s->var] = infer_query_type(g, s->cond, sig_, procs_);
        return check_compound(inner, t, s->a);
      }
      case TK::Block: return check_compound(g, t, s->a);
    }
  } catch (Error& e) {
    e.with_span(s->span);
    throw;
  }
  return t;
}

std::vector<Span> SourceChecker::unmatched_updates() const {
  std::vector<Span> out;
  for (const auto& [pos, any] : matched_)
    if (!any) out.push_back({pos.first, pos.second});
  return out;
}

Type check_source(const QueryTypeEnv& g, const Type& t, const SStmtPtr& s, const Signature& sig,
                  const ProcEnv& procs) {
  SourceChecker checker(sig, procs);
  return checker.check_compound(g, t, s);
}

}  // namespace flux
