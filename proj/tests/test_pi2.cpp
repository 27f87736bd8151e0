#include <doctest.h>

#include <set>

#include "pi/generators.hpp"
#include "pi/library.hpp"
#include "pi/pi2.hpp"
#include "pi/semantics.hpp"
#include "pi/syntax.hpp"
#include "support.hpp"

using namespace pi;
using pi::test::error_kind_of;

namespace {

const Comb1 I = Comb1::id();
const Comb1 N = Comb1::not_();

Comb1 S(Comb1 p, Comb1 q) { return Comb1::seq(std::move(p), std::move(q)); }

// Independent oracle: Inv does not change a class and Seq adds classes mod 2,
// so the class is the parity of `not` leaves.
std::size_t nots(const Comb1& p) {
  switch (p.kind()) {
    case Comb1Kind::Id: return 0;
    case Comb1Kind::Not: return 1;
    case Comb1Kind::Inv: return nots(p.child(0));
    case Comb1Kind::Seq: return nots(p.child(0)) + nots(p.child(1));
  }
  return 0;
}

Which parity_class(const Comb1& p) { return nots(p) % 2 == 0 ? Which::ID : Which::NOT; }

// Terms of n nodes: 2 leaves, Inv over n-1, Seq over every split of n-1.
std::vector<std::size_t> count_terms(std::size_t max) {
  std::vector<std::size_t> a(max + 1, 0);
  for (std::size_t n = 1; n <= max; ++n) {
    if (n == 1) {
      a[n] = 2;
      continue;
    }
    a[n] = a[n - 1];
    for (std::size_t k = 1; k + 1 < n; ++k) a[n] += a[k] * a[n - 1 - k];
  }
  return a;
}

}  // namespace

TEST_CASE("comb1 basics") {
  CHECK(S(I, N).size() == 3);
  CHECK(Comb1::inv(N) != N);
  CHECK(pretty(S(N, Comb1::inv(I))) == "not ; !id");
  CHECK(to_perm(N) == Perm({1, 0}));
  CHECK(to_perm(S(N, N)) == Perm({0, 1}));
}

TEST_CASE("embed and project") {
  CHECK(embed(N) == not_comb());
  CHECK(embed(S(I, Comb1::inv(N))) == Comb::seq(Comb::id(), Comb::inv(not_comb())));
  for (const auto& p : enumerate_comb1_up_to(5)) {
    REQUIRE(project(embed(p)) == p);
    REQUIRE(to_perm(embed(p), Signature{FinType::two(), FinType::two()}) == to_perm(p));
  }
  CHECK_FALSE(project(Comb::swap_plus()));
  CHECK_FALSE(project(parse_comb("unfold2 ; (swap+ ; fold2)")));
  CHECK(project(parse_comb("not3")) == std::nullopt);
  CHECK(require_pi2(parse_comb("!not ; id")) == S(Comb1::inv(N), I));
  CHECK(error_kind_of([] { require_pi2(parse_comb("id ; swap*")); }) == ErrorKind::NotPi2);
}

TEST_CASE("endpoints2") {
  CHECK(endpoints2(Comb2::idl(N)) == Endpoints{S(I, N), N});
  CHECK(endpoints2(Comb2::inv_not()) == Endpoints{Comb1::inv(N), N});
  CHECK(endpoints2(Comb2::inv_id()) == Endpoints{Comb1::inv(I), I});
  CHECK(endpoints2(Comb2::assoc(I, N, I)) == Endpoints{S(S(I, N), I), S(I, S(N, I))});
  CHECK(endpoints2(Comb2::inv_seq(I, N)) ==
        Endpoints{Comb1::inv(S(I, N)), S(Comb1::inv(N), Comb1::inv(I))});
  CHECK(endpoints2(Comb2::inv_right_unit(N)) == Endpoints{S(N, Comb1::inv(N)), I});
  CHECK(endpoints2(Comb2::inv_inv(N)) == Endpoints{Comb1::inv(Comb1::inv(N)), N});
  CHECK(endpoints2(Comb2::inv2(Comb2::idr(N))) == Endpoints{N, S(N, I)});
  CHECK(endpoints2(Comb2::inv_cong(Comb2::idl(N))) ==
        Endpoints{Comb1::inv(S(I, N)), Comb1::inv(N)});
  CHECK(error_kind_of([] { endpoints2(Comb2::seq2(Comb2::id2(I), Comb2::idl(N))); }) ==
        ErrorKind::EndpointMismatch);
  CHECK(error_kind_of([] {
          endpoints2(Comb2::par2(Comb2::seq2(Comb2::id2(I), Comb2::id2(N)), Comb2::id2(I)));
        }) == ErrorKind::EndpointMismatch);
}

TEST_CASE("check2") {
  CHECK_NOTHROW(check2(not_not_id()));
  CHECK(endpoints2(not_not_id()) == Endpoints{S(N, N), I});
  CHECK(error_kind_of([] { check2(Comb2::seq2(Comb2::id2(I), Comb2::idl(N))); }) ==
        ErrorKind::EndpointMismatch);
  CHECK(well_formed(Comb2::inv_not()));
  CHECK_FALSE(well_formed(Comb2::seq2(Comb2::id2(I), Comb2::id2(N))));
}

TEST_CASE("canonical: clauses") {
  Canonical id = canonical(I);
  CHECK(id.which == Which::ID);
  CHECK(id.witness == Comb2::id2(I));
  Canonical nn = canonical(S(N, N));
  CHECK(nn.which == Which::ID);
  CHECK(nn.witness == Comb2::seq2(Comb2::par2(Comb2::id2(N), Comb2::id2(N)), not_not_id()));
  CHECK(canonical(Comb1::inv(N)).which == Which::NOT);
  CHECK(to_sexpr(canonical(Comb1::inv(N)).witness) == "(seq2 (inv-cong (id2 not)) inv-not)");
  CHECK(refine(Which::ID) == I);
  CHECK(refine(Which::NOT) == N);
  CHECK(to_perm(refine(Which::ID)) != to_perm(refine(Which::NOT)));
  CHECK(to_string(Which::NOT) == "NOT");
}

TEST_CASE("term counts match the recurrence") {
  auto a = count_terms(9);
  std::vector<std::size_t> expected = {0, 2, 2, 6, 14, 42, 122, 382, 1206, 3922};
  CHECK(a == expected);
  std::set<std::string> seen;
  for (std::size_t n = 1; n <= 8; ++n) {
    auto terms = enumerate_comb1(n);
    CHECK(terms.size() == a[n]);
    for (const auto& t : terms) {
      REQUIRE(t.size() == n);
      seen.insert(to_sexpr(t));
    }
  }
  CHECK(seen.size() == 2 + 2 + 6 + 14 + 42 + 122 + 382 + 1206);
}

TEST_CASE("exhaustive: canonical agrees with the parity oracle and to_perm") {
  std::size_t checked = 0;
  for (const auto& c : enumerate_comb1_up_to(8)) {
    Canonical r = canonical(c);
    REQUIRE(r.which == parity_class(c));
    REQUIRE(r.which == (to_perm(c).is_identity() ? Which::ID : Which::NOT));
    check2(r.witness);
    REQUIRE(endpoints2(r.witness) == Endpoints{c, refine(r.which)});
    ++checked;
  }
  CHECK(checked == 1776);
}

TEST_CASE("complete1") {
  Comb1 p = S(I, I);
  Comb1 q = S(N, S(I, N));
  Comb2 u = complete1(p, q);
  CHECK_NOTHROW(check2(u));
  CHECK(endpoints2(u) == Endpoints{p, q});
  CHECK(error_kind_of([] { complete1(Comb1::id(), Comb1::not_()); }) ==
        ErrorKind::SemanticMismatch);
  for (const auto& x : enumerate_comb1_up_to(4)) {
    Comb2 refl = complete1(x, x);
    REQUIRE(endpoints2(refl) == Endpoints{x, x});
    check2(refl);
  }
}

TEST_CASE("property: complete1 exists exactly for equal permutations") {
  Rng rng(53);
  for (int i = 0; i < 1000; ++i) {
    Comb1 p = random_comb1(rng, 1 + i % 30);
    Comb1 q = random_comb1(rng, 1 + (i * 7) % 30);
    if (to_perm(p) == to_perm(q)) {
      Comb2 u = complete1(p, q);
      check2(u);
      REQUIRE(endpoints2(u) == Endpoints{p, q});
    } else {
      REQUIRE(error_kind_of([&] { complete1(p, q); }) == ErrorKind::SemanticMismatch);
    }
  }
}

TEST_CASE("exhaustive: every well-formed 2-combinator is sound") {
  std::size_t well = 0, total = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& u : enumerate_comb2(n)) {
      REQUIRE(u.size() == n);
      ++total;
      if (!well_formed(u)) continue;
      ++well;
      check2(u);
      Endpoints e = endpoints2(u);
      REQUIRE(to_perm(e.lhs) == to_perm(e.rhs));
    }
  }
  CHECK(well > 1000);
  CHECK(total > well);
}

TEST_CASE("s-expressions") {
  CHECK(to_sexpr(S(N, Comb1::inv(I))) == "(seq not (inv id))");
  CHECK(to_sexpr(not_not_id()) ==
        "(seq2 (par2 (inv2 inv-not) (id2 not)) (inv-left-unit not))");
  CHECK(parse_comb2_sexpr("(seq2 (par2 (inv2 inv-not) (id2 not)) (inv-left-unit not))") ==
        not_not_id());
  CHECK(parse_comb2_sexpr("  (assoc id\n not id) ") == Comb2::assoc(I, N, I));
  CHECK(error_kind_of([] { parse_comb2_sexpr("(seq2 inv-not)"); }) == ErrorKind::Syntax);
  CHECK(error_kind_of([] { parse_comb2_sexpr("(frob id)"); }) == ErrorKind::Syntax);
  CHECK(error_kind_of([] { parse_comb2_sexpr("(id2 id"); }) == ErrorKind::Syntax);
  CHECK(error_kind_of([] { parse_comb2_sexpr("inv-not extra"); }) == ErrorKind::Syntax);
  CHECK(error_kind_of([] { parse_comb1_sexpr("(inv)"); }) == ErrorKind::Syntax);
  for (const auto& p : enumerate_comb1_up_to(6)) REQUIRE(parse_comb1_sexpr(to_sexpr(p)) == p);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& u : enumerate_comb2(n)) REQUIRE(parse_comb2_sexpr(to_sexpr(u)) == u);
  }
}

TEST_CASE("comb3") {
  Comb2 u = not_not_id();
  Comb2 v = complete1(S(N, N), I);
  Comb3 t = Comb3::trunc(u, v);
  CHECK(t.boundary() == Endpoints{S(N, N), I});
  CHECK(t.source() == u);
  CHECK(t.target() == v);
  CHECK(error_kind_of([] { Comb3::trunc(Comb2::id2(Comb1::id()), Comb2::id2(Comb1::not_())); }) ==
        ErrorKind::EndpointMismatch);
  CHECK(error_kind_of([] {
          Comb3::trunc(Comb2::seq2(Comb2::id2(Comb1::id()), Comb2::idl(Comb1::not_())),
                       Comb2::id2(Comb1::id()));
        }) == ErrorKind::EndpointMismatch);
}
