#pragma once

#include <cstddef>
#include <memory>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "pi/fin_type.hpp"

namespace pi {

enum class ValueKind { Unit, Zero2, One2, InL, InR, Pair };

/// An inhabitant of a finite type. `0b` and `1b` are the two booleans;
/// they are distinct constructors, so equality on them is decidable.
class Value {
 public:
  static Value unit();
  static Value zero2();
  static Value one2();
  static Value boolean(bool b) { return b ? one2() : zero2(); }
  static Value inl(Value v);
  static Value inr(Value v);
  static Value pair(Value first, Value second);

  ValueKind kind() const noexcept;
  /// Payload of InL/InR, or first component of a Pair.
  const Value& first() const;
  /// Second component of a Pair.
  const Value& second() const;

  friend bool operator==(const Value& a, const Value& b);
  friend bool operator!=(const Value& a, const Value& b) { return !(a == b); }

 private:
  struct Node;
  explicit Value(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// `()`, `0b`, `1b`, `inl v`, `inr v`, `(v,w)`.
std::string to_string(const Value& v);
std::ostream& operator<<(std::ostream& os, const Value& v);
Value parse_value(std::string_view text);

bool inhabits(const Value& v, const FinType& t);

/// Carrier in canonical order: left injections before right ones, products
/// lexicographic with the left component outermost.
std::vector<Value> enumerate(const FinType& t);

/// Position of `v` in enumerate(t). Throws Error{ValueTypeMismatch}.
std::size_t index_of(const Value& v, const FinType& t);

}  // namespace pi
