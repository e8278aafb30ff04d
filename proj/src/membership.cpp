#include <map>

#include "automata.hpp"
#include "flux/type_algebra.hpp"

namespace flux {

namespace {

using detail::Automata;
using detail::Letter;
using K = TypeNode::Kind;

class Matcher {
public:
  explicit Matcher(const Signature& sig) : auto_(sig) {}

  bool forest(const Forest& v, int body) {
    const detail::Nfa& a = auto_.nfa(body);
    std::vector<char> cur(a.letters.size(), 0), nxt(a.letters.size(), 0);
    cur[0] = 1;
    for (const Tree& t : v) {
      std::fill(nxt.begin(), nxt.end(), 0);
      bool any = false;
      for (std::size_t s = 0; s < cur.size(); ++s) {
        if (!cur[s]) continue;
        for (int p : a.next[s]) {
          if (nxt[p]) continue;
          if (tree(t, a.letters[p])) nxt[p] = 1, any = true;
        }
      }
      if (!any) return false;
      cur.swap(nxt);
    }
    for (std::size_t s = 0; s < cur.size(); ++s)
      if (cur[s] && a.accept[s]) return true;
    return false;
  }

  int intern(const Type& t) { return auto_.intern(t); }

private:
  bool tree(const Tree& t, const Letter& l) {
    switch (l.kind) {
      case K::String: return t.is_string();
      case K::Bool: return t.is_bool();
      case K::Element: {
        if (!t.is_element() || t.label() != l.label) return false;
        auto key = std::make_pair(static_cast<const void*>(&t.kids()), l.body);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        bool r = forest(t.kids(), l.body);
        memo_.emplace(key, r);
        return r;
      }
      default: return false;
    }
  }

  Automata auto_;
  std::map<std::pair<const void*, int>, bool> memo_;
};

}  // namespace

bool member(const Forest& v, const Type& t, const Signature& sig) {
  Matcher m(sig);
  return m.forest(v, m.intern(t));
}

bool member(const Tree& v, const Type& t, const Signature& sig) {
  return member(Forest{v}, t, sig);
}

bool test_member(const Tree& t, const Test& phi) {
  switch (phi.kind) {
    case Test::Kind::Node: return true;
    case Test::Kind::Text: return t.is_string();
    case Test::Kind::Label: return t.is_element() && t.label() == phi.label;
  }
  return false;
}

}  // namespace flux
