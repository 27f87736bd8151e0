#include <doctest.h>

#include <set>

#include "pi/generators.hpp"
#include "pi/library.hpp"
#include "pi/perm.hpp"
#include "pi/semantics.hpp"
#include "pi/syntax.hpp"
#include "pi/typing.hpp"
#include "pi/value.hpp"
#include "support.hpp"

using namespace pi;
using pi::test::error_kind_of;

namespace {

const FinType kTwo = FinType::two();
const FinType kBool = FinType::sum(FinType::one(), FinType::one());

Value b(bool x) { return Value::boolean(x); }

const Comb& lib(const char* name) { return builtin_library().at(name).definition; }

}  // namespace

TEST_CASE("values: syntax") {
  CHECK(to_string(Value::pair(b(true), Value::pair(b(true), b(false)))) == "(1b,(1b,0b))");
  CHECK(to_string(Value::inl(Value::unit())) == "inl ()");
  CHECK(to_string(Value::inr(Value::inl(b(false)))) == "inr inl 0b");
  CHECK(parse_value("inr (inl 0b)") == Value::inr(Value::inl(b(false))));
  CHECK(parse_value("((1b))") == b(true));
  CHECK(to_string(Value::pair(Value::inl(Value::unit()), b(true))) == "(inl (),1b)");
  for (const char* text : {"()", "0b", "1b", "inl ()", "inr inl 0b", "(1b,(1b,0b))",
                           "(inl (),1b)", "inl (0b,1b)"}) {
    CAPTURE(text);
    CHECK(to_string(parse_value(text)) == text);
  }
  CHECK(parse_value(" ( 1b , inl () ) ") == Value::pair(b(true), Value::inl(Value::unit())));
  CHECK(error_kind_of([] { parse_value("(1b"); }) == ErrorKind::Syntax);
  CHECK(error_kind_of([] { parse_value("2b"); }) == ErrorKind::Syntax);
  CHECK(b(false) != b(true));
}

TEST_CASE("values: inhabitation") {
  CHECK(inhabits(b(true), kTwo));
  CHECK_FALSE(inhabits(b(true), kBool));
  CHECK(inhabits(Value::inr(Value::unit()), kBool));
  CHECK_FALSE(inhabits(Value::unit(), FinType::zero()));
  CHECK(inhabits(Value::pair(b(true), Value::unit()), FinType::prod(kTwo, FinType::one())));
}

TEST_CASE("enumerate: order and size") {
  auto two = enumerate(kTwo);
  REQUIRE(two.size() == 2);
  CHECK(two[0] == b(false));
  CHECK(two[1] == b(true));
  auto pairs = enumerate(FinType::prod(kTwo, kTwo));
  std::vector<Value> expected = {Value::pair(b(false), b(false)), Value::pair(b(false), b(true)),
                                 Value::pair(b(true), b(false)), Value::pair(b(true), b(true))};
  CHECK(pairs == expected);
  CHECK(enumerate(FinType::prod(kTwo, FinType::prod(kTwo, kTwo))).size() == 8);
  CHECK(enumerate(FinType::zero()).empty());
  auto sum = enumerate(FinType::sum(kTwo, FinType::one()));
  CHECK(sum.front() == Value::inl(b(false)));
  CHECK(sum.back() == Value::inr(Value::unit()));
}

TEST_CASE("property: index_of inverts enumerate") {
  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    FinType t = random_type(rng, 24);
    auto vs = enumerate(t);
    REQUIRE(vs.size() == t.size());
    for (std::size_t k = 0; k < vs.size(); ++k) REQUIRE(index_of(vs[k], t) == k);
  }
  CHECK(error_kind_of([] { index_of(Value::unit(), FinType::two()); }) ==
        ErrorKind::ValueTypeMismatch);
}

TEST_CASE("eval: primitives") {
  CHECK(eval(Comb::swap_plus(), Value::inl(Value::unit()), TypeHint::domain(kBool)) ==
        Value::inr(Value::unit()));
  CHECK(run(Comb::unfold_bool(), b(true)) == Value::inr(Value::unit()));
  CHECK(run(Comb::unfold_bool(), b(false)) == Value::inl(Value::unit()));
  CHECK(run(Comb::uniti_star(), b(true)) == Value::pair(Value::unit(), b(true)));
  CHECK(run(Comb::dist(), Value::pair(Value::inr(b(true)), b(false))) ==
        Value::inr(Value::pair(b(true), b(false))));
  CHECK(run(Comb::dist(), Value::inr(Value::pair(b(true), b(false))), Direction::Backward) ==
        Value::pair(Value::inr(b(true)), b(false)));
  CHECK(run(Comb::inv(Comb::fold_bool()), b(true)) == Value::inr(Value::unit()));
  CHECK(error_kind_of([] { run(Comb::swap_star(), b(true)); }) == ErrorKind::ValueTypeMismatch);
}

TEST_CASE("eval: errors") {
  CHECK(error_kind_of([] { eval(not_comb(), Value::unit()); }) == ErrorKind::ValueTypeMismatch);
  CHECK(error_kind_of([] { eval(Comb::id(), b(true)); }) == ErrorKind::Ambiguous);
  CHECK(error_kind_of([] { eval(Comb::seq(Comb::fold_bool(), Comb::fold_bool()), b(true)); }) ==
        ErrorKind::TypeMismatch);
  CHECK(error_kind_of([] { eval_backward(not_comb(), Value::inl(Value::unit())); }) ==
        ErrorKind::ValueTypeMismatch);
}

TEST_CASE("cnot against the bit formula b' = b xor a") {
  for (bool a : {false, true}) {
    for (bool x : {false, true}) {
      Value out = eval(lib("cnot"), Value::pair(b(a), b(x)));
      CHECK(out == Value::pair(b(a), b(x != a)));
    }
  }
}

TEST_CASE("toffoli against the bit formula c' = c xor (a and b)") {
  int flipped = 0;
  for (bool a : {false, true}) {
    for (bool x : {false, true}) {
      for (bool c : {false, true}) {
        Value in = Value::pair(b(a), Value::pair(b(x), b(c)));
        Value out = eval(lib("toffoli"), in);
        CHECK(out == Value::pair(b(a), Value::pair(b(x), b(c != (a && x)))));
        CHECK(eval_backward(lib("toffoli"), out) == in);
        flipped += out != in;
      }
    }
  }
  CHECK(flipped == 2);
}

TEST_CASE("controlled f acts only under 1b") {
  Comb cf = controlled(Comb::swap_plus());
  FinType dom = FinType::prod(kTwo, kBool);
  for (const Value& v : enumerate(dom)) {
    Value out = eval(cf, v, TypeHint::domain(dom));
    CHECK(out.first() == v.first());
    if (v.first() == b(false)) {
      CHECK(out == v);
    } else {
      CHECK(out.second() == run(Comb::swap_plus(), v.second()));
    }
  }
}

TEST_CASE("to_perm") {
  CHECK(to_perm(Comb::id(), TypeHint::domain(kTwo)) == Perm({0, 1}));
  CHECK(to_perm(not_comb()) == Perm({1, 0}));
  CHECK(to_perm(Comb::seq(not_comb(), not_comb())) == Perm({0, 1}));
  CHECK(to_perm(lib("toffoli")) == Perm({0, 1, 2, 3, 4, 5, 7, 6}));
  CHECK(to_perm(lib("cnot")) == Perm({0, 1, 3, 2}));
  Perm swap = to_perm(Comb::swap_plus(), TypeHint::domain(FinType::sum(kTwo, FinType::one())));
  CHECK(swap == Perm({1, 2, 0}));
}

TEST_CASE("perm") {
  CHECK_THROWS_AS(Perm({0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Perm({0, 2}), std::invalid_argument);
  Perm p({1, 2, 0});
  CHECK(p.then(p.inverse()).is_identity());
  CHECK(p.then(p) == Perm({2, 0, 1}));
  CHECK(Perm({1, 0, 2}).then(Perm({0, 2, 1})) == Perm({2, 0, 1}));
  CHECK(p.cycles() == "(0 1 2)");
  CHECK(Perm::identity(3).cycles() == "(0)(1)(2)");
  CHECK(format_perm(Perm({1, 0})) == "0 -> 1\n1 -> 0\ncycles: (0 1)\n");
  CHECK(Perm::identity(0).size() == 0);
}

TEST_CASE("semantically_equal") {
  CHECK(semantically_equal(lib("id1"), lib("id2")));
  CHECK_FALSE(semantically_equal(lib("id1"), lib("not1")));
  CHECK(semantically_equal(lib("not3"), lib("not")));
  CHECK(semantically_equal(lib("id2"), Comb::id()));
  CHECK(semantically_equal(Comb::swap_plus(), Comb::inv(Comb::swap_plus()),
                           TypeHint::domain(FinType::sum(kTwo, kTwo))));
  CHECK(error_kind_of([] { semantically_equal(Comb::id(), lib("id1")); }) ==
        ErrorKind::Ambiguous);
  CHECK(error_kind_of([] { semantically_equal(Comb::swap_plus(), lib("not")); }) ==
        ErrorKind::EndpointMismatch);
  CHECK(error_kind_of([] { semantically_equal(lib("cnot"), lib("not")); }) ==
        ErrorKind::EndpointMismatch);
}

TEST_CASE("the six library programs form two classes") {
  std::set<std::vector<std::size_t>> classes;
  for (const char* n : {"id1", "id2", "id3"}) {
    Perm p = to_perm(lib(n), TypeHint::domain(kTwo));
    CHECK(p.is_identity());
    auto m = p.map();
    classes.emplace(m.begin(), m.end());
  }
  for (const char* n : {"not1", "not2", "not3"}) {
    Perm p = to_perm(lib(n));
    CHECK(p == Perm({1, 0}));
    auto m = p.map();
    classes.emplace(m.begin(), m.end());
  }
  CHECK(classes.size() == 2);
}

TEST_CASE("property: reversibility and homomorphism on random typed terms") {
  Rng rng(29);
  for (int i = 0; i < 1000; ++i) {
    FinType dom = random_type(rng, 16);
    TypedComb t = random_typed_comb(rng, dom, 1 + i % 16);
    CAPTURE(pretty(t.comb));
    Perm p = to_perm(t.comb, t.sig);
    REQUIRE(p.size() == dom.size());
    Perm back = to_perm(adjoint(t.comb), Signature{t.sig.cod, t.sig.dom});
    REQUIRE(p.then(back).is_identity());
    for (const Value& v : enumerate(dom)) {
      Value w = eval(t.comb, v, TypeHint::exact(t.sig));
      REQUIRE(inhabits(w, t.sig.cod));
      REQUIRE(eval_backward(t.comb, w, TypeHint::exact(t.sig)) == v);
      REQUIRE(run(adjoint(t.comb), w) == v);
    }
    REQUIRE(to_perm(Comb::inv(t.comb), Signature{t.sig.cod, t.sig.dom}) == p.inverse());
    if (t.comb.kind() == CombKind::Seq) {
      Signature first = infer(t.comb.child(0), TypeHint::domain(dom));
      Perm a = to_perm(t.comb.child(0), first);
      Perm c = to_perm(t.comb.child(1), Signature{first.cod, t.sig.cod});
      REQUIRE(a.then(c) == p);
    }
  }
}

TEST_CASE("property: c ; id is equal to c") {
  Rng rng(31);
  for (int i = 0; i < 500; ++i) {
    TypedComb t = random_typed_comb(rng, random_type(rng, 16), 1 + i % 10);
    REQUIRE(semantically_equal(t.comb, Comb::seq(t.comb, Comb::id()), TypeHint::exact(t.sig)));
  }
}

TEST_CASE("generator covers every constructor") {
  Rng rng(37);
  std::set<CombKind> seen;
  auto walk = [&](auto&& self, const Comb& c) -> void {
    seen.insert(c.kind());
    for (std::size_t i = 0; i < c.arity(); ++i) self(self, c.child(i));
  };
  for (int i = 0; i < 2000; ++i) walk(walk, random_typed_comb(rng, random_type(rng, 16), 12).comb);
  CHECK(seen.size() == 13);
}
