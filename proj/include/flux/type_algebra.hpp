#pragma once

#include "flux/types.hpp"
#include "flux/value.hpp"

namespace flux {

/// Denotation membership (least fixed point for variables).
bool member(const Forest& v, const Type& t, const Signature& sig);
bool member(const Tree& v, const Type& t, const Signature& sig);

/// Language inclusion. Sound and complete for guarded signatures.
bool subtype(const Type& a, const Type& b, const Signature& sig);
bool type_equiv(const Type& a, const Type& b, const Signature& sig);

/// True iff the type denotes no value at all.
bool is_uninhabited(const Type& t, const Signature& sig);

/// Dynamic test membership.
bool test_member(const Tree& t, const Test& phi);

}  // namespace flux
