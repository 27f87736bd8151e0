#include "pi/model.hpp"

#include "pi/error.hpp"

namespace pi {

Loop Loop::identity() { return Loop(Perm::identity(2)); }

Loop Loop::negation() { return Loop(Perm({1, 0})); }

Loop Loop::from_perm(const Perm& p) {
  if (p.size() != 2) {
    throw Error(ErrorKind::InvalidLoop, "a loop is an automorphism of 2, got a permutation of " +
                                            std::to_string(p.size()) + " elements");
  }
  return Loop(p);
}

std::array<Loop, 2> all_loops() { return {Loop::identity(), Loop::negation()}; }

Loop compose(const Loop& first, const Loop& second) {
  return Loop::from_perm(first.perm().then(second.perm()));
}

Loop invert(const Loop& l) { return Loop::from_perm(l.perm().inverse()); }

Which classify(const Loop& l) { return l.perm().is_identity() ? Which::ID : Which::NOT; }

TwoCell mk_two_cell(const Loop& s, const Loop& t) {
  if (s != t) {
    throw Error(ErrorKind::NoCell, std::string("no 2-path between the ") +
                                       (classify(s) == Which::ID ? "identity" : "negation") +
                                       " loop and the " +
                                       (classify(t) == Which::ID ? "identity" : "negation") +
                                       " loop");
  }
  return TwoCell(s);
}

}  // namespace pi
