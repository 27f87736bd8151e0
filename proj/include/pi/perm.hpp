#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace pi {

/// A bijection between two enumerated carriers, stored as image indices:
/// element i of the domain maps to element map()[i] of the codomain.
class Perm {
 public:
  /// Throws std::invalid_argument unless `map` is a bijection onto
  /// {0..map.size()-1}.
  explicit Perm(std::vector<std::size_t> map);

  static Perm identity(std::size_t n);

  std::size_t size() const noexcept { return map_.size(); }
  std::span<const std::size_t> map() const noexcept { return map_; }
  std::size_t operator[](std::size_t i) const { return map_.at(i); }

  /// Apply `*this`, then `next` (diagrammatic order).
  Perm then(const Perm& next) const;
  Perm inverse() const;
  bool is_identity() const noexcept;

  /// Cycle notation including fixed points, e.g. "(0)(1 2)".
  std::string cycles() const;

  friend bool operator==(const Perm&, const Perm&) = default;

 private:
  std::vector<std::size_t> map_;
};

/// One `i -> map[i]` line per index, then `cycles: ...`.
std::string format_perm(const Perm& p);

}  // namespace pi
