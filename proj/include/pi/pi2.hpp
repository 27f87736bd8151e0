#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pi/comb.hpp"
#include "pi/perm.hpp"

namespace pi {

enum class Comb1Kind { Id, Not, Inv, Seq };

/// A 1-combinator of the one-type language over 2: `id` and `not` closed
/// under inverse and sequencing. Every Comb1 has type 2 <-> 2.
class Comb1 {
 public:
  static Comb1 id();
  static Comb1 not_();
  static Comb1 inv(Comb1 p);
  static Comb1 seq(Comb1 p, Comb1 q);

  Comb1Kind kind() const noexcept;
  const Comb1& child(std::size_t i) const;
  std::size_t size() const noexcept;

  friend bool operator==(const Comb1& a, const Comb1& b);
  friend bool operator!=(const Comb1& a, const Comb1& b) { return !(a == b); }

 private:
  struct Node;
  explicit Comb1(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Into the extended fragment; `not` expands to its library definition.
Comb embed(const Comb1& p);
/// Recognizes the image of `embed`; nullopt for anything else.
std::optional<Comb1> project(const Comb& c);
/// As `project`, throwing Error{NotPi2} with the offending subterm.
Comb1 require_pi2(const Comb& c);

/// Surface syntax, e.g. `not ; !id`.
std::string pretty(const Comb1& p);

/// Permutation on the two-element carrier.
Perm to_perm(const Comb1& p);

enum class Which { ID, NOT };

std::string_view to_string(Which w);
Comb1 refine(Which w);

enum class Comb2Kind {
  Id2,           // p <=> p
  Inv2,          // flips a 2-combinator
  Seq2,          // chains u : p <=> q and v : q <=> r
  Idl,           // id ; p <=> p
  Idr,           // p ; id <=> p
  Assoc,         // (p ; q) ; r <=> p ; (q ; r)
  Par2,          // u ; v congruence
  InvCong,       // !p <=> !q from p <=> q
  InvRightUnit,  // p ; !p <=> id
  InvLeftUnit,   // !p ; p <=> id
  InvId,         // !id <=> id
  InvNot,        // !not <=> not
  InvSeq,        // !(p ; q) <=> !q ; !p
  InvInv,        // !!p <=> p
};

/// Number of level-1 arguments and level-2 sub-proofs a kind takes.
std::pair<std::size_t, std::size_t> comb2_arity(Comb2Kind kind) noexcept;
inline constexpr std::size_t kComb2KindCount = 14;

/// A level-2 proof term relating two Comb1 programs.
class Comb2 {
 public:
  static Comb2 id2(Comb1 p);
  static Comb2 inv2(Comb2 u);
  static Comb2 seq2(Comb2 u, Comb2 v);
  static Comb2 idl(Comb1 p);
  static Comb2 idr(Comb1 p);
  static Comb2 assoc(Comb1 p, Comb1 q, Comb1 r);
  static Comb2 par2(Comb2 u, Comb2 v);
  static Comb2 inv_cong(Comb2 u);
  static Comb2 inv_right_unit(Comb1 p);
  static Comb2 inv_left_unit(Comb1 p);
  static Comb2 inv_id();
  static Comb2 inv_not();
  static Comb2 inv_seq(Comb1 p, Comb1 q);
  static Comb2 inv_inv(Comb1 p);
  /// Generic constructor; argument counts must match the kind's shape.
  static Comb2 make(Comb2Kind kind, std::vector<Comb1> terms, std::vector<Comb2> proofs);

  Comb2Kind kind() const noexcept;
  /// Level-1 arguments (p, q, r) in constructor order.
  const std::vector<Comb1>& terms() const noexcept;
  /// Level-2 sub-proofs in constructor order.
  const std::vector<Comb2>& proofs() const noexcept;
  /// Node count, including the level-1 arguments.
  std::size_t size() const noexcept;

  friend bool operator==(const Comb2& a, const Comb2& b);
  friend bool operator!=(const Comb2& a, const Comb2& b) { return !(a == b); }

 private:
  struct Node;
  explicit Comb2(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Endpoints {
  Comb1 lhs;
  Comb1 rhs;

  friend bool operator==(const Endpoints&, const Endpoints&) = default;
};

/// Source and target of a 2-combinator. The only failing clause is Seq2,
/// whose inner endpoints must agree structurally (Error{EndpointMismatch}).
Endpoints endpoints2(const Comb2& u);

/// Well-formedness plus extensional equality of the endpoints. Throws
/// Error{EndpointMismatch}, or Error{SoundnessViolation} if a well-formed
/// term relates programs with different meanings (a toolkit bug).
void check2(const Comb2& u);
bool well_formed(const Comb2& u);

/// `not ; not <=> id`: rewrite the first `not` as `!not`, then cancel.
Comb2 not_not_id();

struct Canonical {
  Which which;
  /// Endpoints (c, refine(which)).
  Comb2 witness;
};

/// The canonical form of `c` with a proof, by structural recursion.
Canonical canonical(const Comb1& c);

/// A 2-combinator p <=> q. Throws Error{SemanticMismatch} when p and q have
/// different canonical forms, in which case none exists.
Comb2 complete1(const Comb1& p, const Comb1& q);

/// The unique level-3 cell between parallel 2-combinators.
class Comb3 {
 public:
  /// Throws Error{EndpointMismatch} unless u and v are well formed and
  /// parallel.
  static Comb3 trunc(Comb2 u, Comb2 v);

  const Comb2& source() const noexcept { return source_; }
  const Comb2& target() const noexcept { return target_; }
  /// Endpoints shared by source and target.
  const Endpoints& boundary() const noexcept { return boundary_; }

 private:
  Comb3(Comb2 u, Comb2 v, Endpoints e)
      : source_(std::move(u)), target_(std::move(v)), boundary_(std::move(e)) {}
  Comb2 source_;
  Comb2 target_;
  Endpoints boundary_;
};

/// S-expressions: `id`, `not`, `(inv p)`, `(seq p q)` at level 1; at level 2
/// `(id2 p)`, `(seq2 u v)`, `inv-not`, `(inv-left-unit p)`, ...
std::string to_sexpr(const Comb1& p);
std::string to_sexpr(const Comb2& u);
Comb1 parse_comb1_sexpr(std::string_view text);
Comb2 parse_comb2_sexpr(std::string_view text);

}  // namespace pi
