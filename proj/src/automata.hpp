#pragma once

// Position automata over atoms, shared by membership and subtyping.

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "flux/types.hpp"

namespace flux::detail {

struct Letter {
  TypeNode::Kind kind = TypeNode::Kind::Bool;
  std::string label;
  int body = -1;  // interned element body
  int flex = -1;

  bool same_symbol(const Letter& o) const {
    if (kind != o.kind) return false;
    if (kind == TypeNode::Kind::Element) return label == o.label;
    if (kind == TypeNode::Kind::Flex) return flex == o.flex;
    return true;
  }
};

/// State 0 is initial; state i > 0 is reached by reading `letters[i]`.
struct Nfa {
  std::vector<Letter> letters;
  std::vector<std::vector<int>> next;
  std::vector<char> accept;
};

class Automata {
public:
  explicit Automata(const Signature& sig) : sig_(sig) {}

  int intern(const Type& t);
  const Nfa& nfa(int id);
  const Signature& sig() const { return sig_; }

private:
  struct Frag {
    bool nullable = false;
    std::vector<int> first;
    std::vector<int> last;
  };

  Frag build(Nfa& a, const Type& t, int var_depth);

  const Signature& sig_;
  std::vector<Type> bodies_;
  std::unordered_map<std::string, int> ids_;
  std::vector<std::unique_ptr<Nfa>> nfas_;
};

}  // namespace flux::detail
