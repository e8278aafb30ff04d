#include <algorithm>
#include <climits>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>

#include "automata.hpp"
#include "flux/type_algebra.hpp"

namespace flux {

namespace {

using detail::Automata;
using detail::Letter;
using K = TypeNode::Kind;

// Inclusion of one body in a union of bodies, decided on pairs
// (left state, set of right states). Element letters use the subset
// condition: for each subset J of the candidate right bodies, either the
// left body is covered by J or the run continues with the targets outside J.
class Includer {
public:
  explicit Includer(const Signature& sig) : auto_(sig) {}

  int intern(const Type& t) { return auto_.intern(t); }

  bool incl(int left, std::vector<int> rights) {
    std::sort(rights.begin(), rights.end());
    rights.erase(std::unique(rights.begin(), rights.end()), rights.end());
    Key key{left, rights};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    if (auto it = active_.find(key); it != active_.end()) {
      min_hit_ = std::min(min_hit_, it->second);
      return true;
    }
    int depth = static_cast<int>(active_.size());
    active_.emplace(key, depth);
    int saved = min_hit_;
    min_hit_ = INT_MAX;
    bool r = search(left, rights);
    active_.erase(key);
    if (!r) {
      memo_.emplace(key, false);
    } else if (min_hit_ >= depth) {
      memo_.emplace(key, true);
    }
    int inherited = min_hit_ < depth ? min_hit_ : INT_MAX;
    min_hit_ = std::min(saved, inherited);
    return r;
  }

private:
  using RState = std::pair<int, int>;  // (body, state)
  using RSet = std::vector<RState>;
  using Key = std::pair<int, std::vector<int>>;

  static void normalize(RSet& s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }

  bool search(int left, const std::vector<int>& rights) {
    const detail::Nfa& a = auto_.nfa(left);
    RSet start;
    for (int u : rights) {
      auto_.nfa(u);
      start.emplace_back(u, 0);
    }
    normalize(start);
    std::set<std::pair<int, RSet>> seen;
    std::vector<std::pair<int, RSet>> work;
    auto push = [&](int q, RSet s) {
      normalize(s);
      auto item = std::make_pair(q, std::move(s));
      if (seen.insert(item).second) work.push_back(std::move(item));
    };
    push(0, start);
    while (!work.empty()) {
      auto [q, s] = std::move(work.back());
      work.pop_back();
      if (a.accept[q]) {
        bool ok = false;
        for (auto [u, p] : s)
          if (auto_.nfa(u).accept[p]) ok = true;
        if (!ok) return false;
      }
      for (int qn : a.next[q]) {
        const Letter& l = auto_.nfa(left).letters[qn];
        struct Edge {
          int body;
          RState target;
        };
        std::vector<Edge> edges;
        for (auto [u, p] : s) {
          const detail::Nfa& b = auto_.nfa(u);
          for (int pn : b.next[p])
            if (b.letters[pn].same_symbol(l)) edges.push_back({b.letters[pn].body, {u, pn}});
        }
        if (l.kind != K::Element) {
          RSet nxt;
          for (const Edge& e : edges) nxt.push_back(e.target);
          push(qn, std::move(nxt));
          continue;
        }
        std::vector<int> bodies;
        for (const Edge& e : edges) bodies.push_back(e.body);
        std::sort(bodies.begin(), bodies.end());
        bodies.erase(std::unique(bodies.begin(), bodies.end()), bodies.end());
        const std::size_t k = bodies.size();
        if (k > 20) throw std::length_error("subtype: too many competing element transitions");
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
          std::vector<int> j;
          for (std::size_t i = 0; i < k; ++i)
            if (mask >> i & 1) j.push_back(bodies[i]);
          if (incl(l.body, j)) continue;
          RSet nxt;
          for (const Edge& e : edges) {
            auto idx = std::lower_bound(bodies.begin(), bodies.end(), e.body) - bodies.begin();
            if (!(mask >> idx & 1)) nxt.push_back(e.target);
          }
          push(qn, std::move(nxt));
        }
      }
    }
    return true;
  }

  Automata auto_;
  std::map<Key, bool> memo_;
  std::map<Key, int> active_;
  int min_hit_ = INT_MAX;
};

}  // namespace

bool subtype(const Type& a, const Type& b, const Signature& sig) {
  Includer inc(sig);
  int l = inc.intern(a);
  int r = inc.intern(b);
  return inc.incl(l, {r});
}

bool type_equiv(const Type& a, const Type& b, const Signature& sig) {
  Includer inc(sig);
  int l = inc.intern(a);
  int r = inc.intern(b);
  return inc.incl(l, {r}) && inc.incl(r, {l});
}

bool is_uninhabited(const Type& t, const Signature& sig) {
  Includer inc(sig);
  return inc.incl(inc.intern(t), {});
}

}  // namespace flux
