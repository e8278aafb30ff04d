#pragma once

// Reference implementations used to cross-check the library. They share no
// code with the automata-based algorithms.

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "flux/types.hpp"
#include "flux/value.hpp"

namespace flux::testing {

/// Backtracking membership: tries every split of the forest.
bool oracle_member(const Forest& v, const Type& t, const Signature& sig);

/// Every member of a star-free, non-recursive type, with strings represented
/// by "s" and both booleans. Returns nullopt when there are more than
/// `limit` members.
std::optional<std::vector<Forest>> enumerate_members(const Type& t, const Signature& sig, std::size_t limit);

/// Maximum element nesting and sequence width over all members of a
/// star-free type; used to assert generator bounds.
int max_depth(const Type& t);
int max_width(const Type& t);

}  // namespace flux::testing
