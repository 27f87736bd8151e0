#pragma once

#include <cstddef>
#include <memory>
#include <ostream>
#include <string>
#include <string_view>

namespace pi {

enum class TypeKind { Zero, One, Two, Sum, Prod };

/// A finite type of the Π fragment: 0, 1, 2 closed under + and *.
/// Immutable; copies share structure.
class FinType {
 public:
  static FinType zero();
  static FinType one();
  static FinType two();
  static FinType sum(FinType left, FinType right);
  static FinType prod(FinType left, FinType right);

  TypeKind kind() const noexcept;
  // Only valid for Sum and Prod.
  const FinType& left() const;
  const FinType& right() const;

  /// Number of inhabitants.
  std::size_t size() const noexcept;

  friend bool operator==(const FinType& a, const FinType& b);
  friend bool operator!=(const FinType& a, const FinType& b) {
    return !(a == b);
  }

 private:
  struct Node;
  explicit FinType(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Renders with `*` binding tighter than `+`, both left-associative.
std::string to_string(const FinType& t);
std::ostream& operator<<(std::ostream& os, const FinType& t);

/// Parses the type grammar (`0`, `1`, `2`, `+`, `*`, parentheses).
FinType parse_type(std::string_view text);

struct Signature {
  FinType dom;
  FinType cod;

  friend bool operator==(const Signature& a, const Signature& b) {
    return a.dom == b.dom && a.cod == b.cod;
  }
  friend bool operator!=(const Signature& a, const Signature& b) {
    return !(a == b);
  }
};

std::string to_string(const Signature& sig);

}  // namespace pi
