#include "pi/correspondence.hpp"

#include "pi/error.hpp"

namespace pi {

Loop interp1(const Comb1& p) {
  switch (p.kind()) {
    case Comb1Kind::Id: return Loop::identity();
    case Comb1Kind::Not: return Loop::negation();
    case Comb1Kind::Inv: return invert(interp1(p.child(0)));
    case Comb1Kind::Seq: return compose(interp1(p.child(0)), interp1(p.child(1)));
  }
  throw std::logic_error("interp1: unknown kind");
}

Comb1 quote1(const Loop& l) { return refine(classify(l)); }

namespace {

TwoCell cell_between(const Endpoints& e) {
  try {
    return mk_two_cell(interp1(e.lhs), interp1(e.rhs));
  } catch (const Error& err) {
    if (err.kind() != ErrorKind::NoCell) throw;
    throw Error(ErrorKind::SoundnessViolation,
                "well-formed 2-combinator between '" + pretty(e.lhs) + "' and '" +
                    pretty(e.rhs) + "' has no model cell: " + err.what());
  }
}

bool is_quoted(const Comb1& p) {
  return p.kind() == Comb1Kind::Id || p.kind() == Comb1Kind::Not;
}

}  // namespace

TwoCell interp2(const Comb2& u) { return cell_between(endpoints2(u)); }

Comb2 quote2(const TwoCell& c) { return Comb2::id2(quote1(c.source())); }

Comb2 sound1(const Comb1& p) {
  Canonical syntactic = canonical(p);
  Which semantic = classify(interp1(p));
  if (syntactic.which != semantic) {
    throw Error(ErrorKind::AgreementViolation,
                "'" + pretty(p) + "' canonicalizes to " +
                    std::string(to_string(syntactic.which)) + " but interprets as " +
                    std::string(to_string(semantic)));
  }
  return std::move(syntactic.witness);
}

TwoCell complete1_sem(const Comb2& u) {
  check2(u);
  Endpoints e = endpoints2(u);
  if (!is_quoted(e.lhs) || !is_quoted(e.rhs)) {
    throw Error(ErrorKind::NotQuotedEndpoints,
                "endpoints '" + pretty(e.lhs) + "' and '" + pretty(e.rhs) +
                    "' are not both quotes of loops (id or not)");
  }
  return cell_between(e);
}

Comb2 completeness1(const Comb1& p, const Comb1& q) {
  TwoCell cell = mk_two_cell(interp1(p), interp1(q));
  return Comb2::seq2(sound1(p), Comb2::seq2(quote2(cell), Comb2::inv2(sound1(q))));
}

Level3Confirmation triviality_level3(const Comb3& a, const Comb3& b) {
  if (a.boundary() != b.boundary()) {
    throw Error(ErrorKind::EndpointMismatch,
                "3-cells over different boundaries: " + pretty(a.boundary().lhs) + " <=> " +
                    pretty(a.boundary().rhs) + " vs " + pretty(b.boundary().lhs) + " <=> " +
                    pretty(b.boundary().rhs));
  }
  TwoCell cell = interp2(a.source());
  for (const Comb2* u : {&a.target(), &b.source(), &b.target()}) {
    if (interp2(*u) != cell) {
      throw Error(ErrorKind::SoundnessViolation, "parallel 2-combinators interpret to distinct cells");
    }
  }
  return {a.boundary(), cell};
}

Comb3 quote3(const TwoCell& a, const TwoCell& b) {
  if (a != b) {
    throw Error(ErrorKind::NoCell, "cells over different loops cannot be identified");
  }
  return Comb3::trunc(quote2(a), quote2(b));
}

}  // namespace pi
