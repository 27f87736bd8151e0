#include "pi/comb.hpp"

#include <array>
#include <stdexcept>
#include <vector>

namespace pi {

struct Comb::Node {
  CombKind kind;
  std::size_t size;
  std::vector<Comb> kids;
};

std::size_t arity(CombKind kind) noexcept {
  switch (kind) {
    case CombKind::Inv: return 1;
    case CombKind::Seq:
    case CombKind::ParPlus:
    case CombKind::ParStar: return 2;
    default: return 0;
  }
}

bool is_primitive(CombKind kind) noexcept { return arity(kind) == 0; }

Comb Comb::primitive(CombKind kind) {
  if (!is_primitive(kind)) throw std::invalid_argument("Comb::primitive: not a leaf kind");
  // Leaves are shared singletons, one per kind.
  static const std::vector<Comb> leaves = [] {
    std::vector<Comb> v;
    for (int k = 0; k <= static_cast<int>(CombKind::UnfoldBool); ++k) {
      v.push_back(Comb(std::make_shared<const Node>(
          Node{static_cast<CombKind>(k), 1, {}})));
    }
    return v;
  }();
  return leaves[static_cast<std::size_t>(kind)];
}

Comb Comb::id() { return primitive(CombKind::Id); }
Comb Comb::swap_plus() { return primitive(CombKind::SwapPlus); }
Comb Comb::swap_star() { return primitive(CombKind::SwapStar); }
Comb Comb::unite_star() { return primitive(CombKind::UniteStar); }
Comb Comb::uniti_star() { return primitive(CombKind::UnitiStar); }
Comb Comb::dist() { return primitive(CombKind::Dist); }
Comb Comb::factor() { return primitive(CombKind::Factor); }
Comb Comb::fold_bool() { return primitive(CombKind::FoldBool); }
Comb Comb::unfold_bool() { return primitive(CombKind::UnfoldBool); }

Comb Comb::inv(Comb c) {
  std::size_t n = 1 + c.size();
  return Comb(std::make_shared<const Node>(Node{CombKind::Inv, n, {std::move(c)}}));
}

Comb Comb::seq(Comb first, Comb second) {
  return make(CombKind::Seq, std::array<Comb, 2>{std::move(first), std::move(second)}.data());
}

Comb Comb::par_plus(Comb left, Comb right) {
  return make(CombKind::ParPlus, std::array<Comb, 2>{std::move(left), std::move(right)}.data());
}

Comb Comb::par_star(Comb left, Comb right) {
  return make(CombKind::ParStar, std::array<Comb, 2>{std::move(left), std::move(right)}.data());
}

Comb Comb::make(CombKind kind, const Comb* children) {
  switch (pi::arity(kind)) {
    case 0: return primitive(kind);
    case 1: return inv(children[0]);
    default: {
      std::size_t n = 1 + children[0].size() + children[1].size();
      return Comb(std::make_shared<const Node>(
          Node{kind, n, {children[0], children[1]}}));
    }
  }
}

CombKind Comb::kind() const noexcept { return node_->kind; }

const Comb& Comb::child(std::size_t i) const {
  if (i >= node_->kids.size()) throw std::out_of_range("Comb::child");
  return node_->kids[i];
}

std::size_t Comb::size() const noexcept { return node_->size; }

bool operator==(const Comb& a, const Comb& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.size() != b.size()) return false;
  return a.node_->kids == b.node_->kids;
}

Comb seq_all(std::initializer_list<Comb> parts) {
  if (parts.size() == 0) throw std::invalid_argument("seq_all: empty");
  auto it = parts.begin();
  Comb acc = *it++;
  for (; it != parts.end(); ++it) acc = Comb::seq(std::move(acc), *it);
  return acc;
}

Comb adjoint(const Comb& c) {
  switch (c.kind()) {
    case CombKind::Id:
    case CombKind::SwapPlus:
    case CombKind::SwapStar: return c;
    case CombKind::UniteStar: return Comb::uniti_star();
    case CombKind::UnitiStar: return Comb::unite_star();
    case CombKind::Dist: return Comb::factor();
    case CombKind::Factor: return Comb::dist();
    case CombKind::FoldBool: return Comb::unfold_bool();
    case CombKind::UnfoldBool: return Comb::fold_bool();
    case CombKind::Inv: return c.child(0);
    case CombKind::Seq: return Comb::seq(adjoint(c.child(1)), adjoint(c.child(0)));
    case CombKind::ParPlus: return Comb::par_plus(adjoint(c.child(0)), adjoint(c.child(1)));
    case CombKind::ParStar: return Comb::par_star(adjoint(c.child(0)), adjoint(c.child(1)));
  }
  throw std::logic_error("adjoint: unknown kind");
}

}  // namespace pi
