#include "pi/semantics.hpp"

#include <optional>

#include "pi/error.hpp"
#include "pi/syntax.hpp"

namespace pi {

namespace {

[[noreturn]] void shape_error(const Comb& c, const Value& v) {
  throw Error(ErrorKind::ValueTypeMismatch,
              "'" + pretty(c) + "' cannot be applied to " + to_string(v));
}

Direction flip(Direction d) {
  return d == Direction::Forward ? Direction::Backward : Direction::Forward;
}

Value unite(const Comb& c, const Value& v) {
  if (v.kind() != ValueKind::Pair || v.first().kind() != ValueKind::Unit) shape_error(c, v);
  return v.second();
}

Value distribute(const Comb& c, const Value& v) {
  if (v.kind() != ValueKind::Pair) shape_error(c, v);
  const Value& tag = v.first();
  if (tag.kind() == ValueKind::InL) return Value::inl(Value::pair(tag.first(), v.second()));
  if (tag.kind() == ValueKind::InR) return Value::inr(Value::pair(tag.first(), v.second()));
  shape_error(c, v);
}

Value factor(const Comb& c, const Value& v) {
  bool left = v.kind() == ValueKind::InL;
  if (!left && v.kind() != ValueKind::InR) shape_error(c, v);
  const Value& inner = v.first();
  if (inner.kind() != ValueKind::Pair) shape_error(c, v);
  Value tag = left ? Value::inl(inner.first()) : Value::inr(inner.first());
  return Value::pair(std::move(tag), inner.second());
}

Value fold(const Comb& c, const Value& v) {
  bool left = v.kind() == ValueKind::InL;
  if ((!left && v.kind() != ValueKind::InR) || v.first().kind() != ValueKind::Unit) {
    shape_error(c, v);
  }
  return left ? Value::zero2() : Value::one2();
}

Value unfold(const Comb& c, const Value& v) {
  if (v.kind() == ValueKind::Zero2) return Value::inl(Value::unit());
  if (v.kind() == ValueKind::One2) return Value::inr(Value::unit());
  shape_error(c, v);
}

}  // namespace

Value run(const Comb& c, const Value& v, Direction dir) {
  const bool fwd = dir == Direction::Forward;
  switch (c.kind()) {
    case CombKind::Id: return v;
    case CombKind::SwapPlus:
      if (v.kind() == ValueKind::InL) return Value::inr(v.first());
      if (v.kind() == ValueKind::InR) return Value::inl(v.first());
      shape_error(c, v);
    case CombKind::SwapStar:
      if (v.kind() != ValueKind::Pair) shape_error(c, v);
      return Value::pair(v.second(), v.first());
    case CombKind::UniteStar: return fwd ? unite(c, v) : Value::pair(Value::unit(), v);
    case CombKind::UnitiStar: return fwd ? Value::pair(Value::unit(), v) : unite(c, v);
    case CombKind::Dist: return fwd ? distribute(c, v) : factor(c, v);
    case CombKind::Factor: return fwd ? factor(c, v) : distribute(c, v);
    case CombKind::FoldBool: return fwd ? fold(c, v) : unfold(c, v);
    case CombKind::UnfoldBool: return fwd ? unfold(c, v) : fold(c, v);
    case CombKind::Inv: return run(c.child(0), v, flip(dir));
    case CombKind::Seq:
      if (fwd) return run(c.child(1), run(c.child(0), v, dir), dir);
      return run(c.child(0), run(c.child(1), v, dir), dir);
    case CombKind::ParPlus:
      if (v.kind() == ValueKind::InL) return Value::inl(run(c.child(0), v.first(), dir));
      if (v.kind() == ValueKind::InR) return Value::inr(run(c.child(1), v.first(), dir));
      shape_error(c, v);
    case CombKind::ParStar:
      if (v.kind() != ValueKind::Pair) shape_error(c, v);
      return Value::pair(run(c.child(0), v.first(), dir), run(c.child(1), v.second(), dir));
  }
  throw std::logic_error("run: unknown combinator kind");
}

Value eval(const Comb& c, const Value& v, const TypeHint& hint) {
  Signature sig = infer(c, hint);
  if (!inhabits(v, sig.dom)) {
    throw Error(ErrorKind::ValueTypeMismatch,
                "input " + to_string(v) + " does not inhabit the domain " + to_string(sig.dom));
  }
  return run(c, v, Direction::Forward);
}

Value eval_backward(const Comb& c, const Value& v, const TypeHint& hint) {
  Signature sig = infer(c, hint);
  if (!inhabits(v, sig.cod)) {
    throw Error(ErrorKind::ValueTypeMismatch,
                "input " + to_string(v) + " does not inhabit the codomain " + to_string(sig.cod));
  }
  return run(c, v, Direction::Backward);
}

Perm to_perm(const Comb& c, const Signature& sig) {
  std::vector<std::size_t> map;
  map.reserve(sig.dom.size());
  for (const Value& v : enumerate(sig.dom)) map.push_back(index_of(run(c, v), sig.cod));
  return Perm(std::move(map));
}

Perm to_perm(const Comb& c, const TypeHint& hint) { return to_perm(c, infer(c, hint)); }

namespace {

std::optional<Signature> infer_if_determined(const Comb& c, const TypeHint& hint) {
  try {
    return infer(c, hint);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Ambiguous) throw;
    return std::nullopt;
  }
}

// Instantiates a polymorphic side at the other side's signature.
Signature pin_to(const Comb& c, const Comb& other, const Signature& sig) {
  try {
    return infer(c, TypeHint::exact(sig));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::TypeMismatch) throw;
    throw Error(ErrorKind::EndpointMismatch, "cannot compare '" + pretty(c) + "' with '" +
                                                 pretty(other) + "' : " + to_string(sig) +
                                                 ": " + e.what());
  }
}

}  // namespace

bool semantically_equal(const Comb& a, const Comb& b, const TypeHint& hint) {
  auto sa = infer_if_determined(a, hint);
  auto sb = infer_if_determined(b, hint);
  if (!sa && !sb) infer(a, hint);  // reports the ambiguity
  if (!sa) sa = pin_to(a, b, *sb);
  if (!sb) sb = pin_to(b, a, *sa);
  if (*sa != *sb) {
    throw Error(ErrorKind::EndpointMismatch,
                "cannot compare '" + pretty(a) + "' : " + to_string(*sa) + " with '" +
                    pretty(b) + "' : " + to_string(*sb));
  }
  for (const Value& v : enumerate(sa->dom)) {
    if (run(a, v) != run(b, v)) return false;
  }
  return true;
}

}  // namespace pi
