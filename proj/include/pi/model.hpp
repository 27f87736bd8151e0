#pragma once

#include <array>

#include "pi/perm.hpp"
#include "pi/pi2.hpp"

namespace pi {

/// A loop at the base point of the universe of 2-element types, realized as
/// an automorphism of 2. There are exactly two: identity and negation.
class Loop {
 public:
  static Loop identity();
  static Loop negation();
  /// Throws Error{InvalidLoop} unless `p` is a permutation of {0, 1}.
  static Loop from_perm(const Perm& p);

  const Perm& perm() const noexcept { return perm_; }

  friend bool operator==(const Loop&, const Loop&) = default;

 private:
  explicit Loop(Perm p) : perm_(std::move(p)) {}
  Perm perm_;
};

/// Both loops, identity first.
std::array<Loop, 2> all_loops();

/// Path concatenation: `first`, then `second`.
Loop compose(const Loop& first, const Loop& second);
Loop invert(const Loop& l);

/// Every loop is the identity or negation.
Which classify(const Loop& l);

/// A 2-path between loops. One exists exactly when the loops are equal, and
/// then it is unique, so a cell carries no data beyond its boundary.
class TwoCell {
 public:
  const Loop& source() const noexcept { return loop_; }
  const Loop& target() const noexcept { return loop_; }

  friend bool operator==(const TwoCell&, const TwoCell&) = default;

 private:
  friend TwoCell mk_two_cell(const Loop& s, const Loop& t);
  explicit TwoCell(Loop l) : loop_(std::move(l)) {}
  Loop loop_;
};

/// Throws Error{NoCell} when `s != t`.
TwoCell mk_two_cell(const Loop& s, const Loop& t);

}  // namespace pi
