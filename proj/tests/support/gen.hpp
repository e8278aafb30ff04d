#pragma once

// Random generators for property tests. Every generator is driven by an
// explicit seed so failures replay.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "flux/ast.hpp"
#include "flux/query.hpp"
#include "flux/source.hpp"
#include "flux/types.hpp"
#include "flux/update_typing.hpp"
#include "flux/value.hpp"

namespace flux::testing {

class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  int below(int n) { return std::uniform_int_distribution<int>(0, n - 1)(eng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(eng_); }
  template <class T>
  const T& pick(const std::vector<T>& xs) {
    return xs[static_cast<std::size_t>(below(static_cast<int>(xs.size())))];
  }
  std::mt19937_64& engine() { return eng_; }

private:
  std::mt19937_64 eng_;
};

inline const std::vector<std::string> kLabels = {"a", "b", "c"};

/// Any regular type over `labels`, strings and booleans; `vars` may be
/// referenced at atom positions.
Type random_type(Rng& r, int depth, const std::vector<std::string>& labels = kLabels,
                 const std::vector<std::string>& vars = {});

/// An atomic type: string, bool or an element with a random body.
Type random_atom(Rng& r, int depth, const std::vector<std::string>& labels = kLabels,
                 const std::vector<std::string>& vars = {});

/// Star-free type whose members have element depth <= `depth` and width
/// <= 3 at every level.
Type bounded_type(Rng& r, int depth, const std::vector<std::string>& labels = kLabels);

/// A type related to `t`: generalised, narrowed or perturbed, so that both
/// outcomes of an inclusion test are common.
Type mutate_type(Rng& r, const Type& t, const std::vector<std::string>& labels = kLabels);

/// Non-recursive signature with up to three definitions X0..X2, each
/// referring only to later ones.
Signature random_signature(Rng& r, const std::vector<std::string>& labels = kLabels);

/// Adds `Any = (a[Any]|b[Any]|c[Any]|string|bool)*` and three procedures over
/// it: drop(), tag($s : string) and swap().
void add_library(Signature& sig, ProcEnv& procs);

/// Random query well-typed in `env`; `()` when no candidate typechecks.
QueryPtr random_query(Rng& r, const QueryTypeEnv& env, const Signature& sig, const ProcEnv& procs,
                      int depth);
/// Random query of type bool; `true` when no candidate typechecks.
QueryPtr random_bool_query(Rng& r, const QueryTypeEnv& env, const Signature& sig,
                           const ProcEnv& procs, int depth);

/// Type-directed generation of a core statement well-typed at (`a`, `t`).
/// Returns nullptr when no well-typed candidate is found.
StmtPtr random_stmt(Rng& r, const QueryTypeEnv& env, Arity a, const Type& t, const Signature& sig,
                    const ProcEnv& procs, int depth);

/// Random source statement; paths mostly follow `focus` (an element type),
/// so it is often but not always well-typed there.
SStmtPtr random_source(Rng& r, int depth, const Type& focus, const Signature& sig,
                       const std::vector<std::string>& labels = kLabels);

/// Values for every variable of `env`; false when some type is uninhabited.
bool sample_env(Rng& r, const QueryTypeEnv& env, const Signature& sig, QueryEnv& out);

}  // namespace flux::testing
