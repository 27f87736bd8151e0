#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace pi {

struct RoundtripOptions {
  /// Exhaustive bound on Comb1 size.
  std::size_t max_size = 7;
  /// Random Comb1 terms drawn above max_size, and random pairs for complete1.
  std::size_t random_terms = 1000;
  /// Exhaustive bound on Comb2 size for interp2 and level-3 checks.
  std::size_t comb2_max_size = 5;
  std::uint64_t seed = 20240601;
};

struct PropertyResult {
  std::string name;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::string first_failure;
};

/// Correspondence invariants between the one-type language and the model,
/// checked exhaustively up to the bounds and on seeded random terms.
std::vector<PropertyResult> run_roundtrip_suite(const RoundtripOptions& opts = {});

}  // namespace pi
