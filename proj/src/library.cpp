#include "pi/library.hpp"

namespace pi {

Comb not_comb() {
  static const Comb c = seq_all({Comb::unfold_bool(), Comb::swap_plus(), Comb::fold_bool()});
  return c;
}

Comb controlled(const Comb& f) {
  // 2 * a  ->  (1 + 1) * a  ->  1 * a + 1 * a  ->  (id + id * f)  ->  back
  return Comb::seq(
      Comb::par_star(Comb::unfold_bool(), Comb::id()),
      Comb::seq(Comb::dist(),
                Comb::seq(Comb::par_plus(Comb::id(), Comb::par_star(Comb::id(), f)),
                          Comb::seq(Comb::factor(),
                                    Comb::par_star(Comb::fold_bool(), Comb::id())))));
}

namespace {

// Five-stage chain through 1 * 2 used by id3 and not3, nested to the right.
Comb through_unit(const Comb& middle) {
  return Comb::seq(
      Comb::uniti_star(),
      Comb::seq(Comb::swap_star(),
                Comb::seq(Comb::par_star(middle, Comb::id()),
                          Comb::seq(Comb::swap_star(), Comb::unite_star()))));
}

}  // namespace

const std::map<std::string, LibraryEntry, std::less<>>& builtin_library() {
  static const auto table = [] {
    const FinType two = FinType::two();
    const FinType two2 = FinType::prod(two, two);
    const FinType two3 = FinType::prod(two, two2);
    const Signature bool_endo{two, two};
    const Comb id = Comb::id();
    const Comb nt = not_comb();
    const Comb cnot = controlled(nt);

    std::map<std::string, LibraryEntry, std::less<>> t;
    t.emplace("not", LibraryEntry{nt, bool_endo});
    t.emplace("cnot", LibraryEntry{cnot, {two2, two2}});
    t.emplace("toffoli", LibraryEntry{controlled(cnot), {two3, two3}});
    t.emplace("id1", LibraryEntry{Comb::seq(id, id), bool_endo});
    t.emplace("id2", LibraryEntry{Comb::seq(nt, Comb::seq(id, nt)), bool_endo});
    t.emplace("id3", LibraryEntry{through_unit(id), bool_endo});
    t.emplace("not1", LibraryEntry{Comb::seq(id, nt), bool_endo});
    t.emplace("not2", LibraryEntry{Comb::seq(nt, Comb::seq(nt, nt)), bool_endo});
    t.emplace("not3", LibraryEntry{through_unit(nt), bool_endo});
    return t;
  }();
  return table;
}

const NameTable& builtin_names() {
  static const NameTable names = [] {
    NameTable n;
    for (const auto& [name, entry] : builtin_library()) n.emplace(name, entry.definition);
    return n;
  }();
  return names;
}

const NameTable& display_names() {
  static const NameTable names = [] {
    NameTable n;
    for (const char* name : {"not", "cnot", "toffoli"}) {
      n.emplace(name, builtin_library().find(name)->second.definition);
    }
    return n;
  }();
  return names;
}

const Derivation& notopt_derivation() {
  static const Derivation d = [] {
    const Direction fwd = Direction::Forward;
    return Derivation{
        "notOpt",
        builtin_library().find("not3")->second.definition,
        {
            {Rule::AssocL, {1}, fwd},
            {Rule::SwapNat, {1, 0}, fwd},
            {Rule::AssocR, {1}, fwd},
            {Rule::AssocL, {1, 1}, fwd},
            {Rule::CancelAdj, {1, 1, 0}, fwd},
            {Rule::IdL, {1, 1}, fwd},
            {Rule::AssocL, {}, fwd},
            {Rule::UnitiNat, {0}, fwd},
            {Rule::AssocR, {}, fwd},
            {Rule::CancelAdj, {1}, fwd},
            {Rule::IdR, {}, fwd},
        },
        not_comb(),
        std::nullopt,
    };
  }();
  return d;
}

}  // namespace pi
