#include "pi/pi2.hpp"

#include <array>
#include <cctype>
#include <stdexcept>

#include "pi/error.hpp"
#include "pi/library.hpp"
#include "pi/semantics.hpp"
#include "pi/syntax.hpp"

namespace pi {

// ---------------------------------------------------------------- Comb1

struct Comb1::Node {
  Comb1Kind kind;
  std::size_t size;
  std::vector<Comb1> kids;
};

Comb1 Comb1::id() {
  static const Comb1 c(std::make_shared<const Node>(Node{Comb1Kind::Id, 1, {}}));
  return c;
}

Comb1 Comb1::not_() {
  static const Comb1 c(std::make_shared<const Node>(Node{Comb1Kind::Not, 1, {}}));
  return c;
}

Comb1 Comb1::inv(Comb1 p) {
  std::size_t n = 1 + p.size();
  return Comb1(std::make_shared<const Node>(Node{Comb1Kind::Inv, n, {std::move(p)}}));
}

Comb1 Comb1::seq(Comb1 p, Comb1 q) {
  std::size_t n = 1 + p.size() + q.size();
  return Comb1(
      std::make_shared<const Node>(Node{Comb1Kind::Seq, n, {std::move(p), std::move(q)}}));
}

Comb1Kind Comb1::kind() const noexcept { return node_->kind; }

const Comb1& Comb1::child(std::size_t i) const { return node_->kids.at(i); }

std::size_t Comb1::size() const noexcept { return node_->size; }

bool operator==(const Comb1& a, const Comb1& b) {
  if (a.node_ == b.node_) return true;
  return a.kind() == b.kind() && a.size() == b.size() && a.node_->kids == b.node_->kids;
}

Comb embed(const Comb1& p) {
  switch (p.kind()) {
    case Comb1Kind::Id: return Comb::id();
    case Comb1Kind::Not: return not_comb();
    case Comb1Kind::Inv: return Comb::inv(embed(p.child(0)));
    case Comb1Kind::Seq: return Comb::seq(embed(p.child(0)), embed(p.child(1)));
  }
  throw std::logic_error("embed: unknown kind");
}

namespace {

// On failure `bad` points at the first subterm outside the fragment.
std::optional<Comb1> project_rec(const Comb& c, const Comb*& bad) {
  if (c == not_comb()) return Comb1::not_();
  switch (c.kind()) {
    case CombKind::Id: return Comb1::id();
    case CombKind::Inv: {
      auto p = project_rec(c.child(0), bad);
      if (!p) return std::nullopt;
      return Comb1::inv(std::move(*p));
    }
    case CombKind::Seq: {
      auto p = project_rec(c.child(0), bad);
      if (!p) return std::nullopt;
      auto q = project_rec(c.child(1), bad);
      if (!q) return std::nullopt;
      return Comb1::seq(std::move(*p), std::move(*q));
    }
    default:
      bad = &c;
      return std::nullopt;
  }
}

}  // namespace

std::optional<Comb1> project(const Comb& c) {
  const Comb* bad = nullptr;
  return project_rec(c, bad);
}

Comb1 require_pi2(const Comb& c) {
  const Comb* bad = nullptr;
  auto p = project_rec(c, bad);
  if (!p) {
    throw Error(ErrorKind::NotPi2, "'" + pretty(c, &display_names()) +
                                       "' is outside the id/not fragment: '" +
                                       pretty(*bad, &display_names()) +
                                       "' is not id, not, ! or ;");
  }
  return *p;
}

std::string pretty(const Comb1& p) { return pretty(embed(p), &display_names()); }

Perm to_perm(const Comb1& p) {
  const FinType two = FinType::two();
  return to_perm(embed(p), Signature{two, two});
}

std::string_view to_string(Which w) { return w == Which::ID ? "ID" : "NOT"; }

Comb1 refine(Which w) { return w == Which::ID ? Comb1::id() : Comb1::not_(); }

// ---------------------------------------------------------------- Comb2

struct Comb2::Node {
  Comb2Kind kind;
  std::size_t size;
  std::vector<Comb1> terms;
  std::vector<Comb2> proofs;
};

namespace {

struct Comb2Shape {
  Comb2Kind kind;
  std::string_view head;
  std::size_t terms;
  std::size_t proofs;
};

constexpr std::array<Comb2Shape, kComb2KindCount> kComb2Shapes{{
    {Comb2Kind::Id2, "id2", 1, 0},
    {Comb2Kind::Inv2, "inv2", 0, 1},
    {Comb2Kind::Seq2, "seq2", 0, 2},
    {Comb2Kind::Idl, "idl", 1, 0},
    {Comb2Kind::Idr, "idr", 1, 0},
    {Comb2Kind::Assoc, "assoc", 3, 0},
    {Comb2Kind::Par2, "par2", 0, 2},
    {Comb2Kind::InvCong, "inv-cong", 0, 1},
    {Comb2Kind::InvRightUnit, "inv-right-unit", 1, 0},
    {Comb2Kind::InvLeftUnit, "inv-left-unit", 1, 0},
    {Comb2Kind::InvId, "inv-id", 0, 0},
    {Comb2Kind::InvNot, "inv-not", 0, 0},
    {Comb2Kind::InvSeq, "inv-seq", 2, 0},
    {Comb2Kind::InvInv, "inv-inv", 1, 0},
}};

const Comb2Shape& shape_of(Comb2Kind k) { return kComb2Shapes[static_cast<std::size_t>(k)]; }

}  // namespace

std::pair<std::size_t, std::size_t> comb2_arity(Comb2Kind kind) noexcept {
  const auto& s = shape_of(kind);
  return {s.terms, s.proofs};
}

Comb2 Comb2::make(Comb2Kind kind, std::vector<Comb1> terms, std::vector<Comb2> proofs) {
  const auto& s = shape_of(kind);
  if (terms.size() != s.terms || proofs.size() != s.proofs) {
    throw std::invalid_argument("Comb2::make: wrong argument count for " + std::string(s.head));
  }
  std::size_t n = 1;
  for (const auto& t : terms) n += t.size();
  for (const auto& u : proofs) n += u.size();
  return Comb2(std::make_shared<const Node>(Node{kind, n, std::move(terms), std::move(proofs)}));
}

Comb2 Comb2::id2(Comb1 p) { return make(Comb2Kind::Id2, {std::move(p)}, {}); }
Comb2 Comb2::inv2(Comb2 u) { return make(Comb2Kind::Inv2, {}, {std::move(u)}); }
Comb2 Comb2::seq2(Comb2 u, Comb2 v) {
  return make(Comb2Kind::Seq2, {}, {std::move(u), std::move(v)});
}
Comb2 Comb2::idl(Comb1 p) { return make(Comb2Kind::Idl, {std::move(p)}, {}); }
Comb2 Comb2::idr(Comb1 p) { return make(Comb2Kind::Idr, {std::move(p)}, {}); }
Comb2 Comb2::assoc(Comb1 p, Comb1 q, Comb1 r) {
  return make(Comb2Kind::Assoc, {std::move(p), std::move(q), std::move(r)}, {});
}
Comb2 Comb2::par2(Comb2 u, Comb2 v) {
  return make(Comb2Kind::Par2, {}, {std::move(u), std::move(v)});
}
Comb2 Comb2::inv_cong(Comb2 u) { return make(Comb2Kind::InvCong, {}, {std::move(u)}); }
Comb2 Comb2::inv_right_unit(Comb1 p) {
  return make(Comb2Kind::InvRightUnit, {std::move(p)}, {});
}
Comb2 Comb2::inv_left_unit(Comb1 p) {
  return make(Comb2Kind::InvLeftUnit, {std::move(p)}, {});
}
Comb2 Comb2::inv_id() {
  static const Comb2 u = make(Comb2Kind::InvId, {}, {});
  return u;
}
Comb2 Comb2::inv_not() {
  static const Comb2 u = make(Comb2Kind::InvNot, {}, {});
  return u;
}
Comb2 Comb2::inv_seq(Comb1 p, Comb1 q) {
  return make(Comb2Kind::InvSeq, {std::move(p), std::move(q)}, {});
}
Comb2 Comb2::inv_inv(Comb1 p) { return make(Comb2Kind::InvInv, {std::move(p)}, {}); }

Comb2Kind Comb2::kind() const noexcept { return node_->kind; }
const std::vector<Comb1>& Comb2::terms() const noexcept { return node_->terms; }
const std::vector<Comb2>& Comb2::proofs() const noexcept { return node_->proofs; }
std::size_t Comb2::size() const noexcept { return node_->size; }

bool operator==(const Comb2& a, const Comb2& b) {
  if (a.node_ == b.node_) return true;
  return a.kind() == b.kind() && a.size() == b.size() && a.terms() == b.terms() &&
         a.proofs() == b.proofs();
}

Endpoints endpoints2(const Comb2& u) {
  const auto& t = u.terms();
  const auto& w = u.proofs();
  switch (u.kind()) {
    case Comb2Kind::Id2: return {t[0], t[0]};
    case Comb2Kind::Inv2: {
      Endpoints e = endpoints2(w[0]);
      return {e.rhs, e.lhs};
    }
    case Comb2Kind::Seq2: {
      Endpoints first = endpoints2(w[0]);
      Endpoints second = endpoints2(w[1]);
      if (first.rhs != second.lhs) {
        throw Error(ErrorKind::EndpointMismatch,
                    "seq2 cannot chain: first proof ends at '" + pretty(first.rhs) +
                        "' but second starts at '" + pretty(second.lhs) + "'");
      }
      return {first.lhs, second.rhs};
    }
    case Comb2Kind::Idl: return {Comb1::seq(Comb1::id(), t[0]), t[0]};
    case Comb2Kind::Idr: return {Comb1::seq(t[0], Comb1::id()), t[0]};
    case Comb2Kind::Assoc:
      return {Comb1::seq(Comb1::seq(t[0], t[1]), t[2]),
              Comb1::seq(t[0], Comb1::seq(t[1], t[2]))};
    case Comb2Kind::Par2: {
      Endpoints a = endpoints2(w[0]);
      Endpoints b = endpoints2(w[1]);
      return {Comb1::seq(a.lhs, b.lhs), Comb1::seq(a.rhs, b.rhs)};
    }
    case Comb2Kind::InvCong: {
      Endpoints e = endpoints2(w[0]);
      return {Comb1::inv(e.lhs), Comb1::inv(e.rhs)};
    }
    case Comb2Kind::InvRightUnit: return {Comb1::seq(t[0], Comb1::inv(t[0])), Comb1::id()};
    case Comb2Kind::InvLeftUnit: return {Comb1::seq(Comb1::inv(t[0]), t[0]), Comb1::id()};
    case Comb2Kind::InvId: return {Comb1::inv(Comb1::id()), Comb1::id()};
    case Comb2Kind::InvNot: return {Comb1::inv(Comb1::not_()), Comb1::not_()};
    case Comb2Kind::InvSeq:
      return {Comb1::inv(Comb1::seq(t[0], t[1])),
              Comb1::seq(Comb1::inv(t[1]), Comb1::inv(t[0]))};
    case Comb2Kind::InvInv: return {Comb1::inv(Comb1::inv(t[0])), t[0]};
  }
  throw std::logic_error("endpoints2: unknown kind");
}

void check2(const Comb2& u) {
  Endpoints e = endpoints2(u);
  if (to_perm(e.lhs) != to_perm(e.rhs)) {
    throw Error(ErrorKind::SoundnessViolation,
                "well-formed 2-combinator relates '" + pretty(e.lhs) + "' and '" +
                    pretty(e.rhs) + "', which denote different permutations");
  }
}

bool well_formed(const Comb2& u) {
  try {
    endpoints2(u);
    return true;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::EndpointMismatch) throw;
    return false;
  }
}

Comb2 not_not_id() {
  static const Comb2 u = Comb2::seq2(
      Comb2::par2(Comb2::inv2(Comb2::inv_not()), Comb2::id2(Comb1::not_())),
      Comb2::inv_left_unit(Comb1::not_()));
  return u;
}

Canonical canonical(const Comb1& c) {
  switch (c.kind()) {
    case Comb1Kind::Id: return {Which::ID, Comb2::id2(Comb1::id())};
    case Comb1Kind::Not: return {Which::NOT, Comb2::id2(Comb1::not_())};
    case Comb1Kind::Inv: {
      Canonical inner = canonical(c.child(0));
      Comb2 collapse = inner.which == Which::ID ? Comb2::inv_id() : Comb2::inv_not();
      return {inner.which, Comb2::seq2(Comb2::inv_cong(std::move(inner.witness)), collapse)};
    }
    case Comb1Kind::Seq: {
      Canonical a = canonical(c.child(0));
      Canonical b = canonical(c.child(1));
      Which which;
      Comb2 collapse = Comb2::inv_id();
      if (a.which == Which::ID && b.which == Which::ID) {
        which = Which::ID;
        collapse = Comb2::idl(Comb1::id());
      } else if (a.which == Which::ID) {
        which = Which::NOT;
        collapse = Comb2::idl(Comb1::not_());
      } else if (b.which == Which::ID) {
        which = Which::NOT;
        collapse = Comb2::idr(Comb1::not_());
      } else {
        which = Which::ID;
        collapse = not_not_id();
      }
      return {which, Comb2::seq2(Comb2::par2(std::move(a.witness), std::move(b.witness)),
                                 std::move(collapse))};
    }
  }
  throw std::logic_error("canonical: unknown kind");
}

Comb2 complete1(const Comb1& p, const Comb1& q) {
  Canonical cp = canonical(p);
  Canonical cq = canonical(q);
  if (cp.which != cq.which) {
    throw Error(ErrorKind::SemanticMismatch,
                "'" + pretty(p) + "' is " + std::string(to_string(cp.which)) + " but '" +
                    pretty(q) + "' is " + std::string(to_string(cq.which)) +
                    "; no 2-combinator relates them");
  }
  return Comb2::seq2(std::move(cp.witness), Comb2::inv2(std::move(cq.witness)));
}

Comb3 Comb3::trunc(Comb2 u, Comb2 v) {
  Endpoints eu = endpoints2(u);
  Endpoints ev = endpoints2(v);
  if (eu != ev) {
    throw Error(ErrorKind::EndpointMismatch,
                "trunc needs parallel 2-combinators: " + pretty(eu.lhs) + " <=> " +
                    pretty(eu.rhs) + " vs " + pretty(ev.lhs) + " <=> " + pretty(ev.rhs));
  }
  return Comb3(std::move(u), std::move(v), std::move(eu));
}

// ------------------------------------------------------------ s-expressions

std::string to_sexpr(const Comb1& p) {
  switch (p.kind()) {
    case Comb1Kind::Id: return "id";
    case Comb1Kind::Not: return "not";
    case Comb1Kind::Inv: return "(inv " + to_sexpr(p.child(0)) + ")";
    case Comb1Kind::Seq: return "(seq " + to_sexpr(p.child(0)) + " " + to_sexpr(p.child(1)) + ")";
  }
  return "?";
}

std::string to_sexpr(const Comb2& u) {
  const auto& s = shape_of(u.kind());
  if (s.terms == 0 && s.proofs == 0) return std::string(s.head);
  std::string out = "(" + std::string(s.head);
  for (const auto& t : u.terms()) out += " " + to_sexpr(t);
  for (const auto& w : u.proofs()) out += " " + to_sexpr(w);
  return out + ")";
}

namespace {

struct SExpr {
  std::string atom;  // empty for lists
  std::vector<SExpr> items;
  std::size_t offset;
};

class SExprReader {
 public:
  explicit SExprReader(std::string_view text) : text_(text) {}

  SExpr read_all() {
    SExpr e = read();
    skip_space();
    if (pos_ != text_.size()) error("end of input");
    return e;
  }

 private:
  SExpr read() {
    skip_space();
    if (pos_ >= text_.size()) error("'(' or atom");
    std::size_t start = pos_;
    if (text_[pos_] == '(') {
      ++pos_;
      SExpr list{"", {}, start};
      for (;;) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == ')') {
          ++pos_;
          return list;
        }
        list.items.push_back(read());
      }
    }
    while (pos_ < text_.size() && is_atom_char(text_[pos_])) ++pos_;
    if (pos_ == start) error("'(' or atom");
    return SExpr{std::string(text_.substr(start, pos_ - start)), {}, start};
  }

  static bool is_atom_char(char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '-' || ch == '_';
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void error(const char* expected) const {
    std::string found = pos_ < text_.size() ? std::string(1, text_[pos_]) : "end of input";
    throw ParseError(1, pos_ + 1, found, {expected});
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

[[noreturn]] void sexpr_error(const SExpr& e, const std::string& expected) {
  throw ParseError(1, e.offset + 1, e.atom.empty() ? "(" : e.atom, {expected});
}

Comb1 to_comb1(const SExpr& e) {
  if (e.atom == "id") return Comb1::id();
  if (e.atom == "not") return Comb1::not_();
  if (e.atom.empty() && !e.items.empty()) {
    const std::string& head = e.items[0].atom;
    if (head == "inv" && e.items.size() == 2) return Comb1::inv(to_comb1(e.items[1]));
    if (head == "seq" && e.items.size() == 3) {
      return Comb1::seq(to_comb1(e.items[1]), to_comb1(e.items[2]));
    }
  }
  sexpr_error(e, "level-1 term (id, not, (inv p), (seq p q))");
}

Comb2 to_comb2(const SExpr& e) {
  const std::string& head = e.atom.empty() ? (e.items.empty() ? e.atom : e.items[0].atom) : e.atom;
  for (const auto& s : kComb2Shapes) {
    if (s.head != head) continue;
    const bool nullary = s.terms == 0 && s.proofs == 0;
    if (nullary != !e.atom.empty()) break;
    if (!nullary && e.items.size() != 1 + s.terms + s.proofs) break;
    std::vector<Comb1> terms;
    std::vector<Comb2> proofs;
    std::size_t k = 1;
    for (std::size_t i = 0; i < s.terms; ++i) terms.push_back(to_comb1(e.items[k++]));
    for (std::size_t i = 0; i < s.proofs; ++i) proofs.push_back(to_comb2(e.items[k++]));
    return Comb2::make(s.kind, std::move(terms), std::move(proofs));
  }
  sexpr_error(e, "level-2 term");
}

}  // namespace

Comb1 parse_comb1_sexpr(std::string_view text) { return to_comb1(SExprReader(text).read_all()); }

Comb2 parse_comb2_sexpr(std::string_view text) { return to_comb2(SExprReader(text).read_all()); }

}  // namespace pi
