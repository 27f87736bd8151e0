#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pi/comb.hpp"

namespace pi {

/// Name -> definition, used by the parser to expand NAMEs and by the
/// printer to fold definitions back into names.
using NameTable = std::map<std::string, Comb, std::less<>>;

struct Definition {
  std::string name;
  Comb body;
};

/// A parsed `.pi` file.
struct Program {
  std::vector<Definition> defs;
  std::optional<Comb> main;
};

/// Parses a single combinator expression. NAMEs resolve against
/// `names`, or the builtin library when `names` is null.
Comb parse_comb(std::string_view text, const NameTable* names = nullptr);

struct ProgramOptions {
  /// Accept a bare trailing combinator as `main` (inline `-e` programs).
  bool allow_bare_main = false;
};

/// Parses `def* ("main" "=" comb)?`. Later defs see earlier ones and shadow
/// builtins of the same name.
Program parse_program(std::string_view text, ProgramOptions opts = {});

/// Renders with minimal parentheses under `!` > `*` > `+` > `;`, binary
/// operators left-associative. When `names` is given, any subterm equal to
/// a table entry prints as that name (outermost match wins).
std::string pretty(const Comb& c, const NameTable* names = nullptr);

bool is_name_start(char ch) noexcept;
bool is_name_char(char ch) noexcept;
bool is_reserved_word(std::string_view word) noexcept;

}  // namespace pi
