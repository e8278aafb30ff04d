#include "flux/value.hpp"

#include <sstream>

namespace flux {

namespace {

const Forest& empty_forest() {
  static const Forest kEmpty;
  return kEmpty;
}

void quote(std::ostream& os, const std::string& s) {
  os << '"';
  for (char c : s) {
    switch (c) {
      case '"': os << "\\\""; break;
      case '\\': os << "\\\\"; break;
      case '\n': os << "\\n"; break;
      case '\t': os << "\\t"; break;
      default: os << c;
    }
  }
  os << '"';
}

void print(std::ostream& os, const Tree& t);

void print(std::ostream& os, const Forest& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    print(os, v[i]);
  }
}

void print(std::ostream& os, const Tree& t) {
  switch (t.kind) {
    case Tree::Kind::String: quote(os, t.text); break;
    case Tree::Kind::Bool: os << (t.flag ? "true" : "false"); break;
    case Tree::Kind::Element:
      os << t.text << '[';
      print(os, t.kids());
      os << ']';
      break;
  }
}

}  // namespace

Tree Tree::string(std::string s) {
  Tree t;
  t.kind = Kind::String;
  t.text = std::move(s);
  return t;
}

Tree Tree::boolean(bool b) {
  Tree t;
  t.kind = Kind::Bool;
  t.flag = b;
  return t;
}

Tree Tree::element(std::string label, Forest kids) {
  Tree t;
  t.kind = Kind::Element;
  t.text = std::move(label);
  t.children = std::make_shared<const Forest>(std::move(kids));
  return t;
}

const Forest& Tree::kids() const {
  return (kind == Kind::Element && children) ? *children : empty_forest();
}

Forest children_of(const Tree& t) { return t.kids(); }

Forest concat(const Forest& a, const Forest& b) {
  Forest out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

bool value_eq(const Tree& a, const Tree& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Tree::Kind::String: return a.text == b.text;
    case Tree::Kind::Bool: return a.flag == b.flag;
    case Tree::Kind::Element:
      if (a.text != b.text) return false;
      if (a.children == b.children) return true;
      return value_eq(a.kids(), b.kids());
  }
  return false;
}

bool value_eq(const Forest& a, const Forest& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!value_eq(a[i], b[i])) return false;
  return true;
}

std::string to_string(const Tree& t) {
  std::ostringstream os;
  print(os, t);
  return os.str();
}

std::string to_string(const Forest& v) {
  if (v.empty()) return "()";
  std::ostringstream os;
  print(os, v);
  return os.str();
}

std::size_t value_size(const Forest& v) {
  std::size_t n = 0;
  for (const Tree& t : v) n += 1 + value_size(t.kids());
  return n;
}

}  // namespace flux
