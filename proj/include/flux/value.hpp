#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace flux {

struct Tree;
using Forest = std::vector<Tree>;

/// A single item of the data model: a string leaf, a boolean leaf, or an
/// element with a label and a child forest. Children are shared and never
/// mutated after construction.
struct Tree {
  enum class Kind { String, Bool, Element };

  Kind kind = Kind::String;
  std::string text;  // string contents, or the element label
  bool flag = false;
  std::shared_ptr<const Forest> children;

  static Tree string(std::string s);
  static Tree boolean(bool b);
  static Tree element(std::string label, Forest kids = {});

  bool is_string() const { return kind == Kind::String; }
  bool is_bool() const { return kind == Kind::Bool; }
  bool is_element() const { return kind == Kind::Element; }
  const std::string& label() const { return text; }
  const Forest& kids() const;
};

/// Child forest of an element; the empty forest for leaves.
Forest children_of(const Tree& t);

Forest concat(const Forest& a, const Forest& b);

template <class F>
Forest for_each(const Forest& v, F&& f) {
  Forest out;
  for (const Tree& t : v) {
    Forest part = f(t);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

bool value_eq(const Tree& a, const Tree& b);
bool value_eq(const Forest& a, const Forest& b);

/// Native syntax: `a[b[],"x",true]`, `()` for the empty forest.
std::string to_string(const Tree& t);
std::string to_string(const Forest& v);

/// Number of nodes, counting every tree in the forest recursively.
std::size_t value_size(const Forest& v);

struct QueryEnv {
  std::map<std::string, Forest> forests;
  std::map<std::string, Tree> trees;
};

}  // namespace flux
