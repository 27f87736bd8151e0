#pragma once

#include <cstddef>
#include <memory>
#include <initializer_list>
#include <string_view>

namespace pi {

enum class CombKind {
  Id,
  SwapPlus,
  SwapStar,
  UniteStar,
  UnitiStar,
  Dist,
  Factor,
  FoldBool,
  UnfoldBool,
  Inv,
  Seq,
  ParPlus,
  ParStar,
};

/// Number of children a node of the given kind carries (0, 1 or 2).
std::size_t arity(CombKind kind) noexcept;
bool is_primitive(CombKind kind) noexcept;

/// A 1-combinator of the extended finite Π fragment.
///
/// Values are immutable trees with shared structure. Equality is structural.
/// `not` is not a constructor here; see `library.hpp`.
class Comb {
 public:
  static Comb id();
  static Comb swap_plus();
  static Comb swap_star();
  static Comb unite_star();
  static Comb uniti_star();
  static Comb dist();
  static Comb factor();
  static Comb fold_bool();
  static Comb unfold_bool();
  static Comb inv(Comb c);
  static Comb seq(Comb first, Comb second);
  static Comb par_plus(Comb left, Comb right);
  static Comb par_star(Comb left, Comb right);

  static Comb primitive(CombKind kind);
  /// Rebuilds a node of `kind` from children; `children` must match arity.
  static Comb make(CombKind kind, const Comb* children);

  CombKind kind() const noexcept;
  std::size_t arity() const noexcept { return pi::arity(kind()); }
  const Comb& child(std::size_t i) const;

  /// Number of AST nodes.
  std::size_t size() const noexcept;

  friend bool operator==(const Comb& a, const Comb& b);
  friend bool operator!=(const Comb& a, const Comb& b) { return !(a == b); }

 private:
  struct Node;
  explicit Comb(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Left-nested sequential composition of a non-empty list.
Comb seq_all(std::initializer_list<Comb> parts);

/// Structural inverse. Self-inverse primitives map to themselves, paired
/// primitives swap, sequences reverse, `Inv p` collapses to `p`.
Comb adjoint(const Comb& c);

}  // namespace pi
