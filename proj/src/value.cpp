#include "pi/value.hpp"

#include <sstream>
#include <stdexcept>

#include "lexer.hpp"
#include "pi/error.hpp"

namespace pi {

struct Value::Node {
  ValueKind kind;
  std::vector<Value> kids;
};

Value Value::unit() {
  static const Value v(std::make_shared<const Node>(Node{ValueKind::Unit, {}}));
  return v;
}

Value Value::zero2() {
  static const Value v(std::make_shared<const Node>(Node{ValueKind::Zero2, {}}));
  return v;
}

Value Value::one2() {
  static const Value v(std::make_shared<const Node>(Node{ValueKind::One2, {}}));
  return v;
}

Value Value::inl(Value v) {
  return Value(std::make_shared<const Node>(Node{ValueKind::InL, {std::move(v)}}));
}

Value Value::inr(Value v) {
  return Value(std::make_shared<const Node>(Node{ValueKind::InR, {std::move(v)}}));
}

Value Value::pair(Value first, Value second) {
  return Value(std::make_shared<const Node>(
      Node{ValueKind::Pair, {std::move(first), std::move(second)}}));
}

ValueKind Value::kind() const noexcept { return node_->kind; }

const Value& Value::first() const {
  if (node_->kids.empty()) throw std::logic_error("Value::first on a leaf");
  return node_->kids[0];
}

const Value& Value::second() const {
  if (node_->kids.size() < 2) throw std::logic_error("Value::second on a non-pair");
  return node_->kids[1];
}

bool operator==(const Value& a, const Value& b) {
  if (a.node_ == b.node_) return true;
  return a.kind() == b.kind() && a.node_->kids == b.node_->kids;
}

namespace {

void render(std::ostream& os, const Value& v) {
  switch (v.kind()) {
    case ValueKind::Unit: os << "()"; break;
    case ValueKind::Zero2: os << "0b"; break;
    case ValueKind::One2: os << "1b"; break;
    case ValueKind::InL:
    case ValueKind::InR:
      os << (v.kind() == ValueKind::InL ? "inl " : "inr ");
      render(os, v.first());
      break;
    case ValueKind::Pair:
      os << '(';
      render(os, v.first());
      os << ',';
      render(os, v.second());
      os << ')';
      break;
  }
}

Value parse_value_at(detail::Cursor& in) {
  if (in.accept("0b")) return Value::zero2();
  if (in.accept("1b")) return Value::one2();
  if (in.accept("inl")) return Value::inl(parse_value_at(in));
  if (in.accept("inr")) return Value::inr(parse_value_at(in));
  if (in.accept("(")) {
    if (in.accept(")")) return Value::unit();
    Value first = parse_value_at(in);
    if (in.accept(")")) return first;
    in.expect(",");
    Value second = parse_value_at(in);
    in.expect(")");
    return Value::pair(std::move(first), std::move(second));
  }
  in.fail();
}

void enumerate_into(const FinType& t, std::vector<Value>& out) {
  switch (t.kind()) {
    case TypeKind::Zero: return;
    case TypeKind::One: out.push_back(Value::unit()); return;
    case TypeKind::Two:
      out.push_back(Value::zero2());
      out.push_back(Value::one2());
      return;
    case TypeKind::Sum:
      for (auto& v : enumerate(t.left())) out.push_back(Value::inl(std::move(v)));
      for (auto& v : enumerate(t.right())) out.push_back(Value::inr(std::move(v)));
      return;
    case TypeKind::Prod: {
      auto lefts = enumerate(t.left());
      auto rights = enumerate(t.right());
      for (const auto& a : lefts) {
        for (const auto& b : rights) out.push_back(Value::pair(a, b));
      }
      return;
    }
  }
}

[[noreturn]] void value_mismatch(const Value& v, const FinType& t) {
  throw Error(ErrorKind::ValueTypeMismatch,
              "value " + to_string(v) + " does not inhabit type " + to_string(t));
}

std::size_t index_in(const Value& v, const FinType& t, const Value& whole,
                     const FinType& whole_type) {
  switch (t.kind()) {
    case TypeKind::Zero: break;
    case TypeKind::One:
      if (v.kind() == ValueKind::Unit) return 0;
      break;
    case TypeKind::Two:
      if (v.kind() == ValueKind::Zero2) return 0;
      if (v.kind() == ValueKind::One2) return 1;
      break;
    case TypeKind::Sum:
      if (v.kind() == ValueKind::InL) return index_in(v.first(), t.left(), whole, whole_type);
      if (v.kind() == ValueKind::InR) {
        return t.left().size() + index_in(v.first(), t.right(), whole, whole_type);
      }
      break;
    case TypeKind::Prod:
      if (v.kind() == ValueKind::Pair) {
        return index_in(v.first(), t.left(), whole, whole_type) * t.right().size() +
               index_in(v.second(), t.right(), whole, whole_type);
      }
      break;
  }
  value_mismatch(whole, whole_type);
}

}  // namespace

std::string to_string(const Value& v) {
  std::ostringstream os;
  render(os, v);
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Value& v) {
  render(os, v);
  return os;
}

Value parse_value(std::string_view text) {
  detail::Cursor in(detail::tokenize(text));
  Value v = parse_value_at(in);
  in.note("end of input");
  if (!in.at_end()) in.fail();
  return v;
}

bool inhabits(const Value& v, const FinType& t) {
  switch (t.kind()) {
    case TypeKind::Zero: return false;
    case TypeKind::One: return v.kind() == ValueKind::Unit;
    case TypeKind::Two: return v.kind() == ValueKind::Zero2 || v.kind() == ValueKind::One2;
    case TypeKind::Sum:
      if (v.kind() == ValueKind::InL) return inhabits(v.first(), t.left());
      if (v.kind() == ValueKind::InR) return inhabits(v.first(), t.right());
      return false;
    case TypeKind::Prod:
      return v.kind() == ValueKind::Pair && inhabits(v.first(), t.left()) &&
             inhabits(v.second(), t.right());
  }
  return false;
}

std::vector<Value> enumerate(const FinType& t) {
  std::vector<Value> out;
  out.reserve(t.size());
  enumerate_into(t, out);
  return out;
}

std::size_t index_of(const Value& v, const FinType& t) { return index_in(v, t, v, t); }

}  // namespace pi
