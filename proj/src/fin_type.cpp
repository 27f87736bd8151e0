#include "pi/fin_type.hpp"

#include <sstream>
#include <vector>

#include "lexer.hpp"
#include "pi/error.hpp"

namespace pi {

struct FinType::Node {
  TypeKind kind;
  std::size_t size;
  std::vector<FinType> kids;
};

FinType FinType::zero() {
  static const FinType t(std::make_shared<const Node>(Node{TypeKind::Zero, 0, {}}));
  return t;
}

FinType FinType::one() {
  static const FinType t(std::make_shared<const Node>(Node{TypeKind::One, 1, {}}));
  return t;
}

FinType FinType::two() {
  static const FinType t(std::make_shared<const Node>(Node{TypeKind::Two, 2, {}}));
  return t;
}

FinType FinType::sum(FinType left, FinType right) {
  std::size_t n = left.size() + right.size();
  return FinType(std::make_shared<const Node>(
      Node{TypeKind::Sum, n, {std::move(left), std::move(right)}}));
}

FinType FinType::prod(FinType left, FinType right) {
  std::size_t n = left.size() * right.size();
  return FinType(std::make_shared<const Node>(
      Node{TypeKind::Prod, n, {std::move(left), std::move(right)}}));
}

TypeKind FinType::kind() const noexcept { return node_->kind; }

const FinType& FinType::left() const {
  if (node_->kids.size() != 2) throw std::logic_error("FinType::left on a base type");
  return node_->kids[0];
}

const FinType& FinType::right() const {
  if (node_->kids.size() != 2) throw std::logic_error("FinType::right on a base type");
  return node_->kids[1];
}

std::size_t FinType::size() const noexcept { return node_->size; }

bool operator==(const FinType& a, const FinType& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.size() != b.size()) return false;
  return a.node_->kids == b.node_->kids;
}

namespace {

// Precedence: + is 1, * is 2, atoms 3.
int precedence(TypeKind k) {
  switch (k) {
    case TypeKind::Sum: return 1;
    case TypeKind::Prod: return 2;
    default: return 3;
  }
}

void render(std::ostream& os, const FinType& t, int context) {
  int prec = precedence(t.kind());
  bool parens = prec < context;
  if (parens) os << '(';
  switch (t.kind()) {
    case TypeKind::Zero: os << '0'; break;
    case TypeKind::One: os << '1'; break;
    case TypeKind::Two: os << '2'; break;
    case TypeKind::Sum:
    case TypeKind::Prod:
      render(os, t.left(), prec);
      os << (t.kind() == TypeKind::Sum ? " + " : " * ");
      render(os, t.right(), prec + 1);
      break;
  }
  if (parens) os << ')';
}

FinType parse_type_expr(detail::Cursor& in, int min_prec);

FinType parse_type_atom(detail::Cursor& in) {
  if (in.accept("(")) {
    FinType t = parse_type_expr(in, 1);
    in.expect(")");
    return t;
  }
  if (in.accept("0")) return FinType::zero();
  if (in.accept("1")) return FinType::one();
  if (in.accept("2")) return FinType::two();
  in.fail();
}

FinType parse_type_expr(detail::Cursor& in, int min_prec) {
  FinType lhs = parse_type_atom(in);
  for (;;) {
    int prec = 0;
    bool is_sum = false;
    if (min_prec <= 2 && in.check("*")) {
      prec = 2;
    } else if (min_prec <= 1 && in.check("+")) {
      prec = 1;
      is_sum = true;
    } else {
      return lhs;
    }
    in.advance();
    FinType rhs = parse_type_expr(in, prec + 1);
    lhs = is_sum ? FinType::sum(std::move(lhs), std::move(rhs))
                 : FinType::prod(std::move(lhs), std::move(rhs));
  }
}

}  // namespace

std::string to_string(const FinType& t) {
  std::ostringstream os;
  render(os, t, 0);
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const FinType& t) {
  render(os, t, 0);
  return os;
}

FinType parse_type(std::string_view text) {
  detail::Cursor in(detail::tokenize(text));
  FinType t = parse_type_expr(in, 1);
  in.note("end of input");
  if (!in.at_end()) in.fail();
  return t;
}

std::string to_string(const Signature& sig) {
  return to_string(sig.dom) + " <-> " + to_string(sig.cod);
}

}  // namespace pi
