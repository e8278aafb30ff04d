#include "flux/sampling.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <vector>

namespace flux {

namespace {

using K = TypeNode::Kind;
constexpr int kInf = std::numeric_limits<int>::max() / 4;

class Sampler {
public:
  Sampler(const Signature& sig, std::mt19937_64& rng, const SampleOptions& opts)
      : sig_(sig), rng_(rng), opts_(opts) {
    // Least fixpoint of the minimal member height per variable.
    for (const auto& [name, def] : sig.defs) height_[name] = kInf;
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& [name, def] : sig.defs) {
        int h = height(def);
        if (h < height_[name]) {
          height_[name] = h;
          changed = true;
        }
      }
    }
  }

  // Minimal nesting depth of a member; kInf when uninhabited.
  int height(const Type& t) const {
    switch (t->kind) {
      case K::Empty:
      case K::Star: return 0;
      case K::Bool:
      case K::String: return 1;
      case K::Flex: return kInf;
      case K::Element: {
        int h = height(t->left);
        return h >= kInf ? kInf : h + 1;
      }
      case K::Seq: return std::max(height(t->left), height(t->right));
      case K::Alt: return std::min(height(t->left), height(t->right));
      case K::Var: {
        auto it = height_.find(t->name);
        return it == height_.end() ? kInf : it->second;
      }
    }
    return kInf;
  }

  void sample(const Type& t, int budget, Forest& out) {
    budget = std::max(budget, height(t));
    switch (t->kind) {
      case K::Empty: return;
      case K::Bool: out.push_back(Tree::boolean(coin(0.5))); return;
      case K::String: out.push_back(Tree::string(word())); return;
      case K::Flex: return;
      case K::Element: {
        Forest kids;
        sample(t->left, budget - 1, kids);
        out.push_back(Tree::element(t->name, std::move(kids)));
        return;
      }
      case K::Seq:
        sample(t->left, budget, out);
        sample(t->right, budget, out);
        return;
      case K::Alt: {
        std::vector<Type> ok;
        collect_alts(t, budget, ok);
        std::uniform_int_distribution<std::size_t> pick(0, ok.size() - 1);
        sample(ok[pick(rng_)], budget, out);
        return;
      }
      case K::Star: {
        if (height(t->left) > budget) return;
        for (int i = 0; i < opts_.max_repeat && coin(opts_.star_continue); ++i) sample(t->left, budget, out);
        return;
      }
      case K::Var: sample(sig_.lookup(t->name), budget, out); return;
    }
  }

private:
  // Flattened alternatives that fit the budget; never empty for a budget at
  // least the height of `t`.
  void collect_alts(const Type& t, int budget, std::vector<Type>& out) const {
    if (t->kind == K::Alt) {
      collect_alts(t->left, budget, out);
      collect_alts(t->right, budget, out);
    } else if (height(t) <= budget) {
      out.push_back(t);
    }
  }

  bool coin(double p) { return std::bernoulli_distribution(p)(rng_); }

  std::string word() {
    static const char* const kWords[] = {"", "a", "b", "x", "1859", "Lewis Carroll"};
    std::uniform_int_distribution<std::size_t> pick(0, std::size(kWords) - 1);
    return kWords[pick(rng_)];
  }

  const Signature& sig_;
  std::mt19937_64& rng_;
  SampleOptions opts_;
  std::map<std::string, int> height_;
};

}  // namespace

std::optional<Forest> sample_member(const Type& t, const Signature& sig, std::mt19937_64& rng,
                                    const SampleOptions& opts) {
  Sampler s(sig, rng, opts);
  if (s.height(t) >= kInf) return std::nullopt;
  Forest out;
  s.sample(t, opts.max_depth, out);
  return out;
}

}  // namespace flux
