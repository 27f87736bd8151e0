#include "pi/typing.hpp"

#include <map>
#include <vector>

#include "pi/error.hpp"
#include "pi/syntax.hpp"

namespace pi {

namespace {

enum class TermKind { Var, Zero, One, Two, Sum, Prod };

struct TermNode {
  TermKind kind;
  int left = -1;
  int right = -1;
  int binding = -1;  // node it was merged into
};

/// Type terms with variables, stored in an arena and unified in place.
class Unifier {
 public:
  int fresh() { return add({TermKind::Var}); }
  int zero() { return add({TermKind::Zero}); }
  int one() { return add({TermKind::One}); }
  int two() { return add({TermKind::Two}); }
  int sum(int a, int b) { return add({TermKind::Sum, a, b}); }
  int prod(int a, int b) { return add({TermKind::Prod, a, b}); }

  int from(const FinType& t) {
    switch (t.kind()) {
      case TypeKind::Zero: return zero();
      case TypeKind::One: return one();
      case TypeKind::Two: return two();
      case TypeKind::Sum: return sum(from(t.left()), from(t.right()));
      case TypeKind::Prod: return prod(from(t.left()), from(t.right()));
    }
    return zero();
  }

  // Every node can be merged into another, so a shared subterm is unified once.
  int find(int t) {
    int root = t;
    while (nodes_[root].binding >= 0) root = nodes_[root].binding;
    while (nodes_[t].binding >= 0) {
      int next = nodes_[t].binding;
      nodes_[t].binding = root;
      t = next;
    }
    return root;
  }

  /// Returns false on constructor clash or occurs-check failure.
  bool unify(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return true;
    const TermNode na = nodes_[a];
    const TermNode nb = nodes_[b];
    if (na.kind == TermKind::Var) return bind(a, b);
    if (nb.kind == TermKind::Var) return bind(b, a);
    if (na.kind != nb.kind) return false;
    nodes_[a].binding = b;
    if (na.kind == TermKind::Sum || na.kind == TermKind::Prod) {
      return unify(na.left, nb.left) && unify(na.right, nb.right);
    }
    return true;
  }

  /// Concrete type, or nullopt when a variable is still free.
  std::optional<FinType> resolve(int t) {
    std::map<int, std::optional<FinType>> memo;
    return resolve(t, memo);
  }

  // `prec` is the binding strength required by the context: 0 top level,
  // 1 operand of +, 2 operand of *. Both operators associate to the left.
  std::string show(int t, std::map<int, std::string>& names, int prec = 0) {
    t = find(t);
    const TermNode n = nodes_[t];
    switch (n.kind) {
      case TermKind::Var: {
        auto it = names.find(t);
        if (it != names.end()) return it->second;
        std::string name = "'";
        std::size_t k = names.size();
        name += static_cast<char>('a' + k % 26);
        if (k >= 26) name += std::to_string(k / 26);
        names.emplace(t, name);
        return name;
      }
      case TermKind::Zero: return "0";
      case TermKind::One: return "1";
      case TermKind::Two: return "2";
      case TermKind::Sum:
      case TermKind::Prod: {
        const int own = n.kind == TermKind::Sum ? 1 : 2;
        std::string left = show(n.left, names, own);
        std::string right = show(n.right, names, own + 1);
        std::string text = left + (own == 1 ? " + " : " * ") + right;
        return own < prec ? "(" + text + ")" : text;
      }
    }
    return "?";
  }

 private:
  int add(TermNode n) {
    nodes_.push_back(n);
    return static_cast<int>(nodes_.size()) - 1;
  }

  std::optional<FinType> resolve(int t, std::map<int, std::optional<FinType>>& memo) {
    t = find(t);
    if (auto it = memo.find(t); it != memo.end()) return it->second;
    const TermNode n = nodes_[t];
    std::optional<FinType> out;
    switch (n.kind) {
      case TermKind::Var: break;
      case TermKind::Zero: out = FinType::zero(); break;
      case TermKind::One: out = FinType::one(); break;
      case TermKind::Two: out = FinType::two(); break;
      case TermKind::Sum:
      case TermKind::Prod: {
        auto l = resolve(n.left, memo);
        auto r = resolve(n.right, memo);
        if (l && r) out = n.kind == TermKind::Sum ? FinType::sum(*l, *r) : FinType::prod(*l, *r);
        break;
      }
    }
    memo.emplace(t, out);
    return out;
  }

  bool occurs(int var, int t) {
    ++stamp_;
    seen_.resize(nodes_.size(), 0);
    std::vector<int> todo{t};
    while (!todo.empty()) {
      int x = find(todo.back());
      todo.pop_back();
      if (x == var) return true;
      if (seen_[x] == stamp_) continue;
      seen_[x] = stamp_;
      const TermNode& n = nodes_[x];
      if (n.kind == TermKind::Sum || n.kind == TermKind::Prod) {
        todo.push_back(n.left);
        todo.push_back(n.right);
      }
    }
    return false;
  }

  bool bind(int var, int t) {
    if (occurs(var, t)) return false;
    nodes_[var].binding = t;
    return true;
  }

  std::vector<TermNode> nodes_;
  std::vector<unsigned> seen_;
  unsigned stamp_ = 0;
};

struct Ends {
  int dom;
  int cod;
};

class Inference {
 public:
  Ends run(const Comb& c) {
    Unifier& u = unifier;
    switch (c.kind()) {
      case CombKind::Id: {
        int a = u.fresh();
        return {a, a};
      }
      case CombKind::SwapPlus: {
        int a = u.fresh(), b = u.fresh();
        return {u.sum(a, b), u.sum(b, a)};
      }
      case CombKind::SwapStar: {
        int a = u.fresh(), b = u.fresh();
        return {u.prod(a, b), u.prod(b, a)};
      }
      case CombKind::UniteStar: {
        int a = u.fresh();
        return {u.prod(u.one(), a), a};
      }
      case CombKind::UnitiStar: {
        int a = u.fresh();
        return {a, u.prod(u.one(), a)};
      }
      case CombKind::Dist:
      case CombKind::Factor: {
        int a = u.fresh(), b = u.fresh(), cc = u.fresh();
        int lhs = u.prod(u.sum(a, b), cc);
        int rhs = u.sum(u.prod(a, cc), u.prod(b, cc));
        return c.kind() == CombKind::Dist ? Ends{lhs, rhs} : Ends{rhs, lhs};
      }
      case CombKind::FoldBool: return {u.sum(u.one(), u.one()), u.two()};
      case CombKind::UnfoldBool: return {u.two(), u.sum(u.one(), u.one())};
      case CombKind::Inv: {
        Ends e = run(c.child(0));
        return {e.cod, e.dom};
      }
      case CombKind::Seq: {
        Ends first = run(c.child(0));
        Ends second = run(c.child(1));
        if (!u.unify(first.cod, second.dom)) {
          std::map<int, std::string> names;
          throw Error(ErrorKind::TypeMismatch,
                      "type mismatch in sequence: '" + pretty(c.child(0)) +
                          "' produces " + u.show(first.cod, names) + " but '" +
                          pretty(c.child(1)) + "' expects " +
                          u.show(second.dom, names));
        }
        return {first.dom, second.cod};
      }
      case CombKind::ParPlus:
      case CombKind::ParStar: {
        Ends l = run(c.child(0));
        Ends r = run(c.child(1));
        if (c.kind() == CombKind::ParPlus) {
          return {u.sum(l.dom, r.dom), u.sum(l.cod, r.cod)};
        }
        return {u.prod(l.dom, r.dom), u.prod(l.cod, r.cod)};
      }
    }
    throw std::logic_error("infer: unknown combinator kind");
  }

  Unifier unifier;
};

void constrain(Unifier& u, int end, const std::optional<FinType>& hint,
               const char* side) {
  if (!hint) return;
  if (!u.unify(end, u.from(*hint))) {
    std::map<int, std::string> names;
    throw Error(ErrorKind::TypeMismatch, std::string(side) + " is " +
                                             u.show(end, names) +
                                             ", which does not match " +
                                             to_string(*hint));
  }
}

}  // namespace

Signature infer(const Comb& c, const TypeHint& hint) {
  Inference inf;
  Ends e = inf.run(c);
  constrain(inf.unifier, e.dom, hint.dom, "domain");
  constrain(inf.unifier, e.cod, hint.cod, "codomain");
  auto dom = inf.unifier.resolve(e.dom);
  auto cod = inf.unifier.resolve(e.cod);
  if (!dom || !cod) {
    std::map<int, std::string> names;
    std::string scheme = inf.unifier.show(e.dom, names);
    scheme += " <-> " + inf.unifier.show(e.cod, names);
    throw Error(ErrorKind::Ambiguous,
                "ambiguous type: '" + pretty(c) + "' only has the polymorphic type " + scheme);
  }
  return {*dom, *cod};
}

std::string infer_scheme(const Comb& c) {
  Inference inf;
  Ends e = inf.run(c);
  std::map<int, std::string> names;
  std::string dom = inf.unifier.show(e.dom, names);
  return dom + " <-> " + inf.unifier.show(e.cod, names);
}

bool well_typed(const Comb& c, const TypeHint& hint) {
  try {
    infer(c, hint);
    return true;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace pi
