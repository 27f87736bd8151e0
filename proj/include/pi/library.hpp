#pragma once

#include <map>
#include <string>

#include "pi/comb.hpp"
#include "pi/fin_type.hpp"
#include "pi/rewrite.hpp"
#include "pi/syntax.hpp"

namespace pi {

/// not = unfold2 ; swap+ ; fold2  (left-nested)
Comb not_comb();

/// controlled f : 2 * a <-> 2 * a. Acts as the identity when the boolean is
/// 0b and applies `f` to the second component when it is 1b.
Comb controlled(const Comb& f);

struct LibraryEntry {
  Comb definition;
  Signature type;
};

/// The builtin programs: not, cnot, toffoli, id1..id3, not1..not3.
const std::map<std::string, LibraryEntry, std::less<>>& builtin_library();

/// Names of builtin_library() mapped to their definitions, for parsing.
const NameTable& builtin_names();

/// Names used when printing: not, cnot, toffoli.
const NameTable& display_names();

/// The equational derivation not3 => not, eleven steps.
const Derivation& notopt_derivation();

}  // namespace pi
