#include "flux/types.hpp"

#include <sstream>

#include "flux/error.hpp"

namespace flux {

using K = TypeNode::Kind;

namespace {

Type make(K kind, std::string name = {}, Type l = nullptr, Type r = nullptr, int flex = -1) {
  auto n = std::make_shared<TypeNode>();
  n->kind = kind;
  n->name = std::move(name);
  n->left = std::move(l);
  n->right = std::move(r);
  n->flex = flex;
  return n;
}

int prec(const Type& t) {
  switch (t->kind) {
    case K::Alt: return 0;
    case K::Seq: return 1;
    default: return 2;
  }
}

void print(std::ostream& os, const Type& t);

void print_at(std::ostream& os, const Type& t, int min_prec) {
  if (prec(t) < min_prec) {
    os << '(';
    print(os, t);
    os << ')';
  } else {
    print(os, t);
  }
}

void print(std::ostream& os, const Type& t) {
  switch (t->kind) {
    case K::Empty: os << "()"; break;
    case K::Bool: os << "bool"; break;
    case K::String: os << "string"; break;
    case K::Element:
      os << t->name << '[';
      if (t->left->kind != K::Empty) print(os, t->left);
      os << ']';
      break;
    case K::Alt:
      print_at(os, t->left, 0);
      os << '|';
      print_at(os, t->right, 1);
      break;
    case K::Seq:
      print_at(os, t->left, 1);
      os << ',';
      print_at(os, t->right, 2);
      break;
    case K::Star:
      print_at(os, t->left, 2);
      os << '*';
      break;
    case K::Var: os << t->name; break;
    case K::Flex: os << "%Z" << t->flex; break;
  }
}

bool top_level_var(const Type& t, std::string& which) {
  switch (t->kind) {
    case K::Var: which = t->name; return true;
    case K::Alt:
    case K::Seq: return top_level_var(t->left, which) || top_level_var(t->right, which);
    case K::Star: return top_level_var(t->left, which);
    default: return false;
  }
}

void flatten_alt(const Type& t, const Signature& sig, std::vector<Type>& out, int depth) {
  Type u = simplify(unfold(t, sig));
  if (u->kind == K::Alt && depth < 64) {
    flatten_alt(u->left, sig, out, depth + 1);
    flatten_alt(u->right, sig, out, depth + 1);
  } else {
    out.push_back(u);
  }
}

}  // namespace

Type t_empty() {
  static const Type k = make(K::Empty);
  return k;
}
Type t_bool() {
  static const Type k = make(K::Bool);
  return k;
}
Type t_string() {
  static const Type k = make(K::String);
  return k;
}
Type t_elem(std::string label, Type body) { return make(K::Element, std::move(label), std::move(body)); }
Type t_elem(std::string label) { return t_elem(std::move(label), t_empty()); }
Type t_alt(Type a, Type b) { return make(K::Alt, {}, std::move(a), std::move(b)); }
Type t_seq(Type a, Type b) { return make(K::Seq, {}, std::move(a), std::move(b)); }
Type t_star(Type a) { return make(K::Star, {}, std::move(a)); }
Type t_plus(Type a) { return t_seq(a, t_star(a)); }
Type t_opt(Type a) { return t_alt(std::move(a), t_empty()); }
Type t_var(std::string name) { return make(K::Var, std::move(name)); }
Type t_flex(int id) { return make(K::Flex, {}, nullptr, nullptr, id); }

Type t_seq_all(const std::vector<Type>& parts) {
  if (parts.empty()) return t_empty();
  Type acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = t_seq(acc, parts[i]);
  return acc;
}

Type t_alt_all(const std::vector<Type>& parts) {
  if (parts.empty()) return nullptr;
  Type acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = t_alt(acc, parts[i]);
  return acc;
}

bool same_type(const Type& a, const Type& b) {
  if (a == b) return true;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case K::Empty:
    case K::Bool:
    case K::String: return true;
    case K::Element: return a->name == b->name && same_type(a->left, b->left);
    case K::Alt:
    case K::Seq: return same_type(a->left, b->left) && same_type(a->right, b->right);
    case K::Star: return same_type(a->left, b->left);
    case K::Var: return a->name == b->name;
    case K::Flex: return a->flex == b->flex;
  }
  return false;
}

std::string to_string(const Type& t) {
  std::ostringstream os;
  print(os, t);
  return os.str();
}

const Type& Signature::lookup(const std::string& name) const {
  auto it = defs.find(name);
  if (it == defs.end()) throw Error(ErrorKind::UndeclaredTypeVar, "type variable " + name + " is not declared");
  return it->second;
}

void collect_vars(const Type& t, std::set<std::string>& out) {
  switch (t->kind) {
    case K::Var: out.insert(t->name); break;
    case K::Element:
    case K::Star: collect_vars(t->left, out); break;
    case K::Alt:
    case K::Seq:
      collect_vars(t->left, out);
      collect_vars(t->right, out);
      break;
    default: break;
  }
}

bool has_flex(const Type& t) {
  switch (t->kind) {
    case K::Flex: return true;
    case K::Element:
    case K::Star: return has_flex(t->left);
    case K::Alt:
    case K::Seq: return has_flex(t->left) || has_flex(t->right);
    default: return false;
  }
}

void check_type(const Type& t, const Signature& sig) {
  std::set<std::string> vars;
  collect_vars(t, vars);
  for (const auto& v : vars) sig.lookup(v);
}

void check_signature(const Signature& sig) {
  for (const auto& [name, def] : sig.defs) {
    check_type(def, sig);
    std::string which;
    if (top_level_var(def, which))
      throw Error(ErrorKind::UnguardedTypeVar,
                  "definition of " + name + " uses " + which + " outside an element");
  }
}

Type unfold(const Type& t, const Signature& sig) {
  Type cur = t;
  // Bounded by the number of definitions; a cycle means an unguarded signature.
  for (std::size_t i = 0; cur->kind == K::Var; ++i) {
    if (i > sig.defs.size())
      throw Error(ErrorKind::UnguardedTypeVar, "type variable " + t->name + " unfolds to itself");
    cur = sig.lookup(cur->name);
  }
  return cur;
}

Type simplify(const Type& t, bool deep) {
  switch (t->kind) {
    case K::Element:
      if (!deep) return t;
      {
        Type b = simplify(t->left, true);
        return b == t->left ? t : t_elem(t->name, b);
      }
    case K::Seq: {
      Type a = simplify(t->left, deep);
      Type b = simplify(t->right, deep);
      if (a->kind == K::Empty) return b;
      if (b->kind == K::Empty) return a;
      if (a == t->left && b == t->right) return t;
      return t_seq(a, b);
    }
    case K::Alt: {
      Type a = simplify(t->left, deep);
      Type b = simplify(t->right, deep);
      if (same_type(a, b)) return a;
      if (a == t->left && b == t->right) return t;
      return t_alt(a, b);
    }
    case K::Star: {
      Type a = simplify(t->left, deep);
      if (a->kind == K::Empty) return a;
      if (a->kind == K::Star) return a;
      return a == t->left ? t : t_star(a);
    }
    default: return t;
  }
}

Type as_atom(const Type& t, const Signature& sig) {
  std::vector<Type> alts;
  flatten_alt(t, sig, alts, 0);
  for (const Type& a : alts)
    if (!is_atomic(a)) return nullptr;
  if (alts.size() == 1) return alts.front();
  const Type& first = alts.front();
  for (const Type& a : alts) {
    if (a->kind != first->kind) return nullptr;
    if (a->kind == K::Element && a->name != first->name) return nullptr;
    if (a->kind == K::Flex && a->flex != first->flex) return nullptr;
  }
  if (first->kind != K::Element) return first;
  std::vector<Type> bodies;
  for (const Type& a : alts) bodies.push_back(a->left);
  return t_elem(first->name, t_alt_all(bodies));
}

std::string to_string(const Test& t) {
  switch (t.kind) {
    case Test::Kind::Label: return t.label;
    case Test::Kind::Node: return "node()";
    case Test::Kind::Text: return "text()";
  }
  return "?";
}

bool test_match(const Type& atom, const Test& phi) {
  switch (phi.kind) {
    case Test::Kind::Node: return true;
    case Test::Kind::Text: return atom->kind == K::String;
    case Test::Kind::Label: return atom->kind == K::Element && atom->name == phi.label;
  }
  return false;
}

}  // namespace flux
