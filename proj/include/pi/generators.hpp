#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "pi/comb.hpp"
#include "pi/fin_type.hpp"
#include "pi/pi2.hpp"
#include "pi/rewrite.hpp"

namespace pi {

using Rng = std::mt19937_64;

/// Every Comb1 with exactly `size` nodes, in a fixed order.
std::vector<Comb1> enumerate_comb1(std::size_t size);
/// Every Comb1 with 1..max_size nodes.
std::vector<Comb1> enumerate_comb1_up_to(std::size_t max_size);

/// Every Comb2 with exactly `size` nodes (level-1 arguments included),
/// well formed or not.
std::vector<Comb2> enumerate_comb2(std::size_t size);

/// A uniformly shaped random Comb1 with exactly `size` nodes (size >= 1).
Comb1 random_comb1(Rng& rng, std::size_t size);

/// A random finite type with between 1 and `max_size` inhabitants.
FinType random_type(Rng& rng, std::size_t max_size);

struct TypedComb {
  Comb comb;
  Signature sig;
};

/// A random well-typed combinator with domain `dom`, built type-directed
/// with roughly `budget` nodes. Uses every constructor of the fragment.
TypedComb random_typed_comb(Rng& rng, const FinType& dom, std::size_t budget);

/// Applies up to `steps` randomly chosen applicable rewrite steps to `start`
/// (typed at `sig`); claimed_end is the replayed result.
Derivation random_derivation(Rng& rng, const Comb& start, const Signature& sig,
                             std::size_t steps);

/// All positions of `c` in preorder.
std::vector<Position> positions(const Comb& c);

}  // namespace pi
