#include "automata.hpp"

#include <algorithm>

#include "flux/error.hpp"

namespace flux::detail {

using K = TypeNode::Kind;

namespace {

void append(std::vector<int>& dst, const std::vector<int>& src) {
  dst.insert(dst.end(), src.begin(), src.end());
}

}  // namespace

int Automata::intern(const Type& t) {
  std::string key = to_string(t);
  auto it = ids_.find(key);
  if (it != ids_.end()) return it->second;
  int id = static_cast<int>(bodies_.size());
  bodies_.push_back(t);
  nfas_.push_back(nullptr);
  ids_.emplace(std::move(key), id);
  return id;
}

const Nfa& Automata::nfa(int id) {
  if (!nfas_[id]) {
    auto a = std::make_unique<Nfa>();
    a->letters.emplace_back();
    a->next.emplace_back();
    Type body = bodies_[id];  // build() may grow bodies_
    Frag f = build(*a, body, 0);
    append(a->next[0], f.first);
    a->accept.assign(a->letters.size(), 0);
    a->accept[0] = f.nullable;
    for (int p : f.last) a->accept[p] = 1;
    for (auto& succ : a->next) {
      std::sort(succ.begin(), succ.end());
      succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
    }
    nfas_[id] = std::move(a);
  }
  return *nfas_[id];
}

Automata::Frag Automata::build(Nfa& a, const Type& t, int var_depth) {
  Frag f;
  switch (t->kind) {
    case K::Empty:
      f.nullable = true;
      return f;
    case K::Bool:
    case K::String:
    case K::Element:
    case K::Flex: {
      Letter l;
      l.kind = t->kind;
      if (t->kind == K::Element) {
        l.label = t->name;
        l.body = intern(t->left);
      }
      l.flex = t->flex;
      int p = static_cast<int>(a.letters.size());
      a.letters.push_back(std::move(l));
      a.next.emplace_back();
      f.first = {p};
      f.last = {p};
      return f;
    }
    case K::Var:
      if (var_depth > static_cast<int>(sig_.defs.size()))
        throw Error(ErrorKind::UnguardedTypeVar, "type variable " + t->name + " is not guarded");
      return build(a, sig_.lookup(t->name), var_depth + 1);
    case K::Alt: {
      Frag l = build(a, t->left, var_depth);
      Frag r = build(a, t->right, var_depth);
      f.nullable = l.nullable || r.nullable;
      f.first = l.first;
      append(f.first, r.first);
      f.last = l.last;
      append(f.last, r.last);
      return f;
    }
    case K::Seq: {
      Frag l = build(a, t->left, var_depth);
      Frag r = build(a, t->right, var_depth);
      for (int p : l.last) append(a.next[p], r.first);
      f.nullable = l.nullable && r.nullable;
      f.first = l.first;
      if (l.nullable) append(f.first, r.first);
      f.last = r.last;
      if (r.nullable) append(f.last, l.last);
      return f;
    }
    case K::Star: {
      Frag b = build(a, t->left, var_depth);
      for (int p : b.last) append(a.next[p], b.first);
      b.nullable = true;
      return b;
    }
  }
  return f;
}

}  // namespace flux::detail
