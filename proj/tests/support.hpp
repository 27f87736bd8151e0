#pragma once

#include <random>

#include "pi/comb.hpp"
#include "pi/error.hpp"

namespace pi::test {

// Arbitrary (possibly ill-typed) trees for syntax-level properties.
inline Comb random_tree(std::mt19937_64& rng, int depth) {
  static const CombKind leaves[] = {CombKind::Id,        CombKind::SwapPlus, CombKind::SwapStar,
                                    CombKind::UniteStar, CombKind::UnitiStar, CombKind::Dist,
                                    CombKind::Factor,    CombKind::FoldBool, CombKind::UnfoldBool};
  std::uniform_int_distribution<int> d(0, depth <= 0 ? 0 : 4);
  const int pick = d(rng);
  if (pick == 0) return Comb::primitive(leaves[std::uniform_int_distribution<int>(0, 8)(rng)]);
  Comb a = random_tree(rng, depth - 1);
  if (pick == 1) return Comb::inv(a);
  Comb b = random_tree(rng, depth - 1);
  if (pick == 2) return Comb::seq(a, b);
  if (pick == 3) return Comb::par_plus(a, b);
  return Comb::par_star(a, b);
}

template <class F>
ErrorKind error_kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  throw std::runtime_error("expected a pi::Error");
}

}  // namespace pi::test
