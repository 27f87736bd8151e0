#include "pi/generators.hpp"

#include <map>

#include "pi/error.hpp"

namespace pi {

namespace {

std::size_t pick(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

bool coin(Rng& rng) { return pick(rng, 2) == 0; }

}  // namespace

std::vector<Comb1> enumerate_comb1(std::size_t size) {
  static std::map<std::size_t, std::vector<Comb1>> memo;
  if (auto it = memo.find(size); it != memo.end()) return it->second;
  std::vector<Comb1> out;
  if (size == 1) {
    out = {Comb1::id(), Comb1::not_()};
  } else if (size > 1) {
    for (const auto& p : enumerate_comb1(size - 1)) out.push_back(Comb1::inv(p));
    for (std::size_t left = 1; left + 1 < size; ++left) {
      auto lefts = enumerate_comb1(left);
      auto rights = enumerate_comb1(size - 1 - left);
      for (const auto& p : lefts) {
        for (const auto& q : rights) out.push_back(Comb1::seq(p, q));
      }
    }
  }
  memo.emplace(size, out);
  return out;
}

std::vector<Comb1> enumerate_comb1_up_to(std::size_t max_size) {
  std::vector<Comb1> out;
  for (std::size_t n = 1; n <= max_size; ++n) {
    auto level = enumerate_comb1(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

namespace {

// Distribute `budget` nodes over the argument slots of one constructor: the
// level-1 slots first, then the level-2 slots, each getting at least one.
void fill_slots(std::size_t budget, std::size_t n_terms, std::size_t n_proofs,
                std::vector<Comb1>& terms, std::vector<Comb2>& proofs, Comb2Kind kind,
                std::vector<Comb2>& out) {
  const std::size_t slot = terms.size() + proofs.size();
  const std::size_t total = n_terms + n_proofs;
  if (slot == total) {
    if (budget == 0) out.push_back(Comb2::make(kind, terms, proofs));
    return;
  }
  const std::size_t remaining_slots = total - slot - 1;
  if (budget < remaining_slots + 1) return;
  for (std::size_t take = 1; take + remaining_slots <= budget; ++take) {
    if (slot < n_terms) {
      for (const auto& t : enumerate_comb1(take)) {
        terms.push_back(t);
        fill_slots(budget - take, n_terms, n_proofs, terms, proofs, kind, out);
        terms.pop_back();
      }
    } else {
      for (const auto& u : enumerate_comb2(take)) {
        proofs.push_back(u);
        fill_slots(budget - take, n_terms, n_proofs, terms, proofs, kind, out);
        proofs.pop_back();
      }
    }
  }
}

}  // namespace

std::vector<Comb2> enumerate_comb2(std::size_t size) {
  static std::map<std::size_t, std::vector<Comb2>> memo;
  if (auto it = memo.find(size); it != memo.end()) return it->second;
  std::vector<Comb2> out;
  if (size >= 1) {
    for (std::size_t k = 0; k < kComb2KindCount; ++k) {
      const auto kind = static_cast<Comb2Kind>(k);
      auto [n_terms, n_proofs] = comb2_arity(kind);
      std::vector<Comb1> terms;
      std::vector<Comb2> proofs;
      fill_slots(size - 1, n_terms, n_proofs, terms, proofs, kind, out);
    }
  }
  memo.emplace(size, out);
  return out;
}

Comb1 random_comb1(Rng& rng, std::size_t size) {
  if (size <= 1) return coin(rng) ? Comb1::id() : Comb1::not_();
  if (size == 2 || pick(rng, 4) == 0) return Comb1::inv(random_comb1(rng, size - 1));
  std::size_t left = 1 + pick(rng, size - 2);
  Comb1 first = random_comb1(rng, left);
  return Comb1::seq(std::move(first), random_comb1(rng, size - 1 - left));
}

namespace {

FinType random_type(Rng& rng, std::size_t max_size, int depth) {
  for (;;) {
    std::size_t choice = depth <= 0 ? pick(rng, 2) : pick(rng, 5);
    switch (choice) {
      case 0: return FinType::one();
      case 1:
        if (max_size >= 2) return FinType::two();
        if (depth <= 0) return FinType::one();
        break;
      case 2:
      case 3: {
        if (max_size < 2) break;
        FinType a = random_type(rng, max_size - 1, depth - 1);
        FinType b = random_type(rng, max_size - a.size(), depth - 1);
        if (a.size() + b.size() <= max_size) return FinType::sum(a, b);
        break;
      }
      default: {
        FinType a = random_type(rng, max_size, depth - 1);
        FinType b = random_type(rng, std::max<std::size_t>(1, max_size / a.size()), depth - 1);
        if (a.size() * b.size() <= max_size) return FinType::prod(a, b);
        break;
      }
    }
  }
}

}  // namespace

FinType random_type(Rng& rng, std::size_t max_size) { return random_type(rng, max_size, 4); }

namespace {

bool is_one_plus_one(const FinType& t) {
  return t.kind() == TypeKind::Sum && t.left().kind() == TypeKind::One &&
         t.right().kind() == TypeKind::One;
}

TypedComb leaf(Rng& rng, const FinType& dom) {
  std::vector<TypedComb> options;
  options.push_back({Comb::id(), {dom, dom}});
  options.push_back({Comb::uniti_star(), {dom, FinType::prod(FinType::one(), dom)}});
  switch (dom.kind()) {
    case TypeKind::Two:
      options.push_back({Comb::unfold_bool(), {dom, FinType::sum(FinType::one(), FinType::one())}});
      break;
    case TypeKind::Sum: {
      options.push_back({Comb::swap_plus(), {dom, FinType::sum(dom.right(), dom.left())}});
      if (is_one_plus_one(dom)) options.push_back({Comb::fold_bool(), {dom, FinType::two()}});
      const FinType& l = dom.left();
      const FinType& r = dom.right();
      if (l.kind() == TypeKind::Prod && r.kind() == TypeKind::Prod && l.right() == r.right()) {
        options.push_back({Comb::factor(),
                           {dom, FinType::prod(FinType::sum(l.left(), r.left()), l.right())}});
      }
      break;
    }
    case TypeKind::Prod: {
      const FinType& l = dom.left();
      const FinType& r = dom.right();
      options.push_back({Comb::swap_star(), {dom, FinType::prod(r, l)}});
      if (l.kind() == TypeKind::One) options.push_back({Comb::unite_star(), {dom, r}});
      if (l.kind() == TypeKind::Sum) {
        options.push_back({Comb::dist(),
                           {dom, FinType::sum(FinType::prod(l.left(), r),
                                              FinType::prod(l.right(), r))}});
      }
      break;
    }
    default: break;
  }
  // Favor the type-changing primitives over id and uniti*.
  if (options.size() > 2 && pick(rng, 3) != 0) return options[2 + pick(rng, options.size() - 2)];
  return options[pick(rng, options.size())];
}

}  // namespace

TypedComb random_typed_comb(Rng& rng, const FinType& dom, std::size_t budget) {
  if (budget <= 1) return leaf(rng, dom);
  switch (pick(rng, 6)) {
    case 0: {
      // Inv(adjoint g) has the same signature as g.
      TypedComb g = random_typed_comb(rng, dom, budget - 1);
      return {Comb::inv(adjoint(g.comb)), g.sig};
    }
    case 1:
    case 2:
    case 3: {
      std::size_t left = 1 + pick(rng, budget - 1);
      TypedComb a = random_typed_comb(rng, dom, left);
      TypedComb b = random_typed_comb(rng, a.sig.cod, budget - left);
      return {Comb::seq(a.comb, b.comb), {dom, b.sig.cod}};
    }
    default: {
      if (dom.kind() != TypeKind::Sum && dom.kind() != TypeKind::Prod) {
        return random_typed_comb(rng, dom, budget - 1);
      }
      std::size_t left = 1 + pick(rng, budget - 1);
      TypedComb a = random_typed_comb(rng, dom.left(), left);
      TypedComb b = random_typed_comb(rng, dom.right(), std::max<std::size_t>(1, budget - 1 - left));
      if (dom.kind() == TypeKind::Sum) {
        return {Comb::par_plus(a.comb, b.comb), {dom, FinType::sum(a.sig.cod, b.sig.cod)}};
      }
      return {Comb::par_star(a.comb, b.comb), {dom, FinType::prod(a.sig.cod, b.sig.cod)}};
    }
  }
}

std::vector<Position> positions(const Comb& c) {
  std::vector<Position> out;
  Position cur;
  auto walk = [&](auto&& self, const Comb& node) -> void {
    out.push_back(cur);
    for (std::size_t i = 0; i < node.arity(); ++i) {
      cur.push_back(i);
      self(self, node.child(i));
      cur.pop_back();
    }
  };
  walk(walk, c);
  return out;
}

Derivation random_derivation(Rng& rng, const Comb& start, const Signature& sig,
                             std::size_t steps) {
  Derivation d{"random", start, {}, start, sig.dom};
  Comb cur = start;
  for (std::size_t k = 0; k < steps; ++k) {
    std::vector<std::pair<Step, Comb>> candidates;
    for (const Position& pos : positions(cur)) {
      for (Rule rule : kAllRules) {
        for (Direction dir : {Direction::Forward, Direction::Backward}) {
          // Backward identity steps apply everywhere; keep them rarer.
          if (dir == Direction::Backward && (rule == Rule::IdL || rule == Rule::IdR) &&
              pick(rng, 8) != 0) {
            continue;
          }
          Step s{rule, pos, dir};
          try {
            candidates.emplace_back(s, apply_step(cur, s, sig));
          } catch (const Error&) {
          }
        }
      }
    }
    if (candidates.empty()) break;
    auto& chosen = candidates[pick(rng, candidates.size())];
    d.steps.push_back(chosen.first);
    cur = chosen.second;
  }
  d.claimed_end = cur;
  return d;
}

}  // namespace pi
