#pragma once

#include <optional>
#include <string>

#include "pi/comb.hpp"
#include "pi/fin_type.hpp"

namespace pi {

/// Optional endpoint constraints applied before residual variables are
/// checked. Either side may be left open.
struct TypeHint {
  std::optional<FinType> dom;
  std::optional<FinType> cod;

  static TypeHint none() { return {}; }
  static TypeHint domain(FinType t) { return {std::move(t), std::nullopt}; }
  static TypeHint endo(const FinType& t) { return {t, t}; }
  static TypeHint exact(const Signature& s) { return {s.dom, s.cod}; }
};

/// Infers the monomorphic signature of `c` by local unification of the
/// primitive schemes. Throws Error{TypeMismatch} when constraints clash and
/// Error{Ambiguous} when type variables remain after applying `hint`.
Signature infer(const Comb& c, const TypeHint& hint = {});

/// Most general polymorphic signature, variables rendered as 'a, 'b, ...
/// Throws Error{TypeMismatch} if `c` is ill typed.
std::string infer_scheme(const Comb& c);

/// Whether `infer(c, hint)` succeeds.
bool well_typed(const Comb& c, const TypeHint& hint = {});

}  // namespace pi
