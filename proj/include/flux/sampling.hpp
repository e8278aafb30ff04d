#pragma once

#include <optional>
#include <random>

#include "flux/types.hpp"
#include "flux/value.hpp"

namespace flux {

struct SampleOptions {
  /// Maximum element nesting; types whose shortest member is deeper still
  /// sample their shortest shape.
  int max_depth = 4;
  /// Probability of one more repetition under `*`.
  double star_continue = 0.5;
  int max_repeat = 4;
};

/// A random member of `t`, or nullopt when `t` is uninhabited.
std::optional<Forest> sample_member(const Type& t, const Signature& sig, std::mt19937_64& rng,
                                    const SampleOptions& opts = {});

}  // namespace flux
