#include <algorithm>
#include <sstream>

#include "flux/type_algebra.hpp"
#include "flux/update.hpp"

namespace flux {

namespace {

using QK = Query::Kind;
using SK = Stmt::Kind;

class Interpreter {
public:
  Interpreter(const ProcEnv& procs, const ExecOptions& opts) : procs_(procs), opts_(opts), fuel_(opts.fuel) {}

  Forest eval(const QueryEnv& env, const QueryPtr& e) {
    tick();
    switch (e->kind) {
      case QK::Empty: return {};
      case QK::Seq: return concat(eval(env, e->a), eval(env, e->b));
      case QK::Element: return {Tree::element(e->name, eval(env, e->a))};
      case QK::String: return {Tree::string(e->name)};
      case QK::ForestVar: {
        auto it = env.forests.find(e->name);
        if (it != env.forests.end()) return it->second;
        auto tt = env.trees.find(e->name);
        if (tt != env.trees.end()) return {tt->second};
        throw Error(ErrorKind::UnboundVariable, "variable $" + e->name + " is not bound", e->span);
      }
      case QK::Let: {
        QueryEnv inner = env;
        inner.forests[e->name] = eval(env, e->a);
        return eval(inner, e->b);
      }
      case QK::True: return {Tree::boolean(true)};
      case QK::False: return {Tree::boolean(false)};
      case QK::If: return cond(env, e->a, e->span) ? eval(env, e->b) : eval(env, e->c);
      case QK::StrEq: return {Tree::boolean(value_eq(eval(env, e->a), eval(env, e->b)))};
      case QK::TreeVar: return {tree_var(env, e)};
      case QK::Child: return children_of(tree_var(env, e));
      case QK::LabelFilter: {
        Forest out;
        for (Tree& t : eval(env, e->a))
          if (t.is_element() && t.label() == e->name) out.push_back(std::move(t));
        return out;
      }
      case QK::For: {
        Forest items = eval(env, e->a);
        QueryEnv inner = env;
        return for_each(items, [&](const Tree& t) {
          inner.trees[e->name] = t;
          return eval(inner, e->b);
        });
      }
      case QK::Transform: {
        if (!opts_.enable_transform)
          throw Error(ErrorKind::TransformDisabled, "transform queries are not enabled", e->span);
        Forest v = eval(env, e->a);
        return exec(env, v, e->stmt);
      }
    }
    return {};
  }

  Forest exec(const QueryEnv& env, const Forest& v, const StmtPtr& s) {
    tick();
    switch (s->kind) {
      case SK::Skip: return v;
      case SK::Seq: return exec(env, exec(env, v, s->a), s->b);
      case SK::If: return cond(env, s->query, s->span) ? exec(env, v, s->a) : exec(env, v, s->b);
      case SK::Let: {
        QueryEnv inner = env;
        inner.forests[s->name] = eval(env, s->query);
        return exec(inner, v, s->a);
      }
      case SK::Insert:
        if (!v.empty()) stuck(s, "insert needs an empty focus but found " + to_string(v));
        return eval(env, s->query);
      case SK::Delete: return {};
      case SK::Rename: {
        const Tree& t = single_element(s, v, "rename");
        return {Tree::element(s->name, t.kids())};
      }
      case SK::Snapshot: {
        QueryEnv inner = env;
        inner.forests[s->name] = v;
        return exec(inner, v, s->a);
      }
      case SK::Test: {
        if (v.size() != 1) stuck(s, "test " + to_string(s->test) + " needs a single tree but found " + to_string(v));
        return test_member(v.front(), s->test) ? exec(env, v, s->a) : v;
      }
      case SK::Children: {
        const Tree& t = single_element(s, v, "children");
        Forest out = exec(env, t.kids(), s->a);
        return {Tree::element(t.label(), std::move(out))};
      }
      case SK::Left: return concat(exec(env, {}, s->a), v);
      case SK::Right: return concat(v, exec(env, {}, s->a));
      case SK::Iter: return iter(env, v, s->a);
      case SK::Call: {
        const ProcDecl* p = procs_.find(s->name);
        if (!p) throw Error(ErrorKind::UnboundProcedure, "procedure " + s->name + " is not declared", s->span);
        if (p->params.size() != s->args.size())
          throw Error(ErrorKind::UnboundProcedure,
                      "procedure " + s->name + " takes " + std::to_string(p->params.size()) + " arguments",
                      s->span);
        QueryEnv inner = env;
        for (std::size_t i = 0; i < s->args.size(); ++i) inner.forests[p->params[i].first] = eval(env, s->args[i]);
        if (++call_depth_ > kMaxCallDepth)
          throw Error(ErrorKind::FuelExhausted, "procedure calls nested deeper than " + std::to_string(kMaxCallDepth),
                      s->span);
        Forest out = exec(inner, v, p->body);
        --call_depth_;
        return out;
      }
    }
    return v;
  }

private:
  Forest iter(const QueryEnv& env, const Forest& v, const StmtPtr& body) {
    std::vector<Forest> parts(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) {
      std::size_t i = opts_.reverse_iteration ? v.size() - 1 - k : k;
      focus_.push_back(static_cast<int>(i));
      parts[i] = exec(env, Forest{v[i]}, body);
      focus_.pop_back();
    }
    Forest out;
    for (Forest& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
  }

  bool cond(const QueryEnv& env, const QueryPtr& c, Span span) {
    Forest r = eval(env, c);
    if (r.size() != 1 || !r.front().is_bool())
      throw Error(ErrorKind::ConditionNotBool, "condition evaluated to " + to_string(r), span);
    return r.front().flag;
  }

  const Tree& tree_var(const QueryEnv& env, const QueryPtr& e) {
    auto it = env.trees.find(e->name);
    if (it == env.trees.end())
      throw Error(ErrorKind::UnboundVariable, "tree variable $" + e->name + " is not bound", e->span);
    return it->second;
  }

  const Tree& single_element(const StmtPtr& s, const Forest& v, const char* what) {
    if (v.size() != 1 || !v.front().is_element())
      stuck(s, std::string(what) + " needs a single element but found " + to_string(v));
    return v.front();
  }

  [[noreturn]] void stuck(const StmtPtr& s, const std::string& why) {
    Error err(ErrorKind::Stuck, why, s->span);
    std::ostringstream os;
    for (int i : focus_) os << '/' << i;
    err.focus = focus_.empty() ? "/" : os.str();
    throw err;
  }

  void tick() {
    if (--fuel_ < 0) throw Error(ErrorKind::FuelExhausted, "step budget of " + std::to_string(opts_.fuel) + " exhausted");
  }

  const ProcEnv& procs_;
  ExecOptions opts_;
  long long fuel_;
  std::vector<int> focus_;
  int call_depth_ = 0;
  // Keeps runaway recursion from exhausting the native stack before the fuel.
  static constexpr int kMaxCallDepth = 4000;
};

}  // namespace

Forest eval_query(const QueryEnv& env, const QueryPtr& e, const ProcEnv& procs, const ExecOptions& opts) {
  Interpreter in(procs, opts);
  return in.eval(env, e);
}

Forest exec_update(const QueryEnv& env, const Forest& v, const StmtPtr& s, const ProcEnv& procs,
                   const ExecOptions& opts) {
  Interpreter in(procs, opts);
  return in.exec(env, v, s);
}

}  // namespace flux
