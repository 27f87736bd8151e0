#pragma once

#include "pi/comb.hpp"
#include "pi/perm.hpp"
#include "pi/rewrite.hpp"
#include "pi/typing.hpp"
#include "pi/value.hpp"

namespace pi {

/// Runs `c` on `v` by structural recursion, without typing. Backward
/// evaluation runs the adjoint. Throws Error{ValueTypeMismatch} when a
/// primitive meets a value of the wrong shape.
Value run(const Comb& c, const Value& v, Direction dir = Direction::Forward);

/// Type-checks `c` (under `hint`), requires `v` to inhabit the domain and
/// evaluates forward.
Value eval(const Comb& c, const Value& v, const TypeHint& hint = {});
/// Requires `v` to inhabit the codomain and evaluates backward.
Value eval_backward(const Comb& c, const Value& v, const TypeHint& hint = {});

/// The bijection denoted by `c` against the canonical enumerations.
Perm to_perm(const Comb& c, const TypeHint& hint = {});
Perm to_perm(const Comb& c, const Signature& sig);

/// Extensional equality over every element of the shared domain. A side left
/// ambiguous by `hint` takes the other side's signature. Throws
/// Error{EndpointMismatch} if the two signatures differ.
bool semantically_equal(const Comb& a, const Comb& b, const TypeHint& hint = {});

}  // namespace pi
