#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace flux {

struct TypeNode;
using Type = std::shared_ptr<const TypeNode>;

/// Regular expression types over atoms. `Flex` marks a placeholder variable
/// minted during source typechecking; it never appears in a signature.
struct TypeNode {
  enum class Kind { Empty, Bool, String, Element, Alt, Seq, Star, Var, Flex };

  Kind kind = Kind::Empty;
  std::string name;  // element label or variable name
  int flex = -1;
  Type left;   // Alt/Seq lhs, Star operand, Element body
  Type right;  // Alt/Seq rhs
};

Type t_empty();
Type t_bool();
Type t_string();
Type t_elem(std::string label, Type body);
Type t_elem(std::string label);
Type t_alt(Type a, Type b);
Type t_seq(Type a, Type b);
Type t_star(Type a);
Type t_plus(Type a);
Type t_opt(Type a);
Type t_var(std::string name);
Type t_flex(int id);

/// Left-nested fold; empty list gives `()`.
Type t_seq_all(const std::vector<Type>& parts);
/// Empty list gives nullptr.
Type t_alt_all(const std::vector<Type>& parts);

inline bool is_atomic(const Type& t) {
  using K = TypeNode::Kind;
  return t->kind == K::Bool || t->kind == K::String || t->kind == K::Element ||
         t->kind == K::Flex;
}

bool same_type(const Type& a, const Type& b);

/// Printer with precedence `|` < `,` < postfix. Flex variables print as %Zn.
std::string to_string(const Type& t);

struct Signature {
  std::map<std::string, Type> defs;

  bool has(const std::string& name) const { return defs.count(name) != 0; }
  /// Throws UndeclaredTypeVar.
  const Type& lookup(const std::string& name) const;
};

/// Every variable declared, and no definition with a top-level variable.
void check_signature(const Signature& sig);

/// Every variable occurring in `t` is declared in `sig`.
void check_type(const Type& t, const Signature& sig);

void collect_vars(const Type& t, std::set<std::string>& out);
bool has_flex(const Type& t);

/// Replaces a top-level variable by its definition until the head is not a
/// variable.
Type unfold(const Type& t, const Signature& sig);

/// Language-preserving cleanup: drops `()` inside sequences, collapses
/// syntactically equal alternatives, `()*` and `(t*)*`. Element bodies are
/// rewritten only when `deep` is set.
Type simplify(const Type& t, bool deep = false);

/// An atomic type equivalent to `t`, if one is found by unfolding,
/// simplifying, and merging alternatives of elements with one label.
Type as_atom(const Type& t, const Signature& sig);

struct Test {
  enum class Kind { Label, Node, Text };
  Kind kind = Kind::Node;
  std::string label;

  static Test named(std::string n) { return {Kind::Label, std::move(n)}; }
  static Test node() { return {Kind::Node, {}}; }
  static Test text() { return {Kind::Text, {}}; }

  bool operator==(const Test& o) const { return kind == o.kind && label == o.label; }
};

std::string to_string(const Test& t);

/// Static matching of an atomic type against a test.
bool test_match(const Type& atom, const Test& phi);

}  // namespace flux
