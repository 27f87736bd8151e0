#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pi/comb.hpp"
#include "pi/error.hpp"
#include "pi/fin_type.hpp"
#include "pi/syntax.hpp"

namespace pi {

/// Local rewrite rules of the extended fragment, oriented forward as:
///   AssocL     p ; (q ; r)            ~>  (p ; q) ; r
///   AssocR     (p ; q) ; r            ~>  p ; (q ; r)
///   IdL        id ; p                 ~>  p
///   IdR        p ; id                 ~>  p
///   CancelAdj  p ; q                  ~>  id          when q is the adjoint of p
///   SwapNat    swap* ; (f * g)        ~>  (g * f) ; swap*
///   UnitiNat   uniti* ; (id * f)      ~>  f ; uniti*
enum class Rule { AssocL, AssocR, IdL, IdR, CancelAdj, SwapNat, UnitiNat };

inline constexpr Rule kAllRules[] = {Rule::AssocL,    Rule::AssocR,  Rule::IdL,
                                     Rule::IdR,       Rule::CancelAdj, Rule::SwapNat,
                                     Rule::UnitiNat};

std::string_view to_string(Rule rule);
std::optional<Rule> rule_from_string(std::string_view name);

enum class Direction { Forward, Backward };

/// Path of child indices from the root. 0 is the left (or only) child.
using Position = std::vector<std::size_t>;

std::string to_string(const Position& pos);

struct Step {
  Rule rule;
  Position position;
  Direction direction = Direction::Forward;

  friend bool operator==(const Step&, const Step&) = default;
};

std::string to_string(const Step& step);

struct Derivation {
  std::string name;
  Comb start;
  std::vector<Step> steps;
  Comb claimed_end;
  /// Pins the domain when `start` alone leaves its type ambiguous.
  std::optional<FinType> domain;
};

/// Subterm at `pos`; throws Error{BadPosition}.
const Comb& subterm_at(const Comb& c, const Position& pos);
/// `c` with the subterm at `pos` replaced; throws Error{BadPosition}.
Comb replace_at(const Comb& c, const Position& pos, const Comb& replacement);

/// Applies `rule` to `c` at its root, or nullopt when the pattern does not
/// match. Purely syntactic; no typing or semantic checks.
std::optional<Comb> rewrite_root(const Comb& c, Rule rule, Direction dir);

/// Applies one step. The result must keep the signature `sig` of the whole
/// term and denote the same permutation; otherwise the step fails with
/// IllTypedInstance / UnsoundInstance. Also raises BadPosition and
/// PatternMismatch.
Comb apply_step(const Comb& c, const Step& step, const Signature& sig);
/// As above, inferring `sig` from `c` (throws when `c` is ambiguous).
Comb apply_step(const Comb& c, const Step& step);

struct DerivationFailure {
  /// 1-based index of the failing step; steps.size() + 1 for the final check.
  std::size_t step;
  ErrorKind kind;
  std::string message;
};

struct DerivationReport {
  /// start, then the term after each successfully replayed step
  std::vector<Comb> trace;
  std::optional<Signature> signature;
  std::optional<DerivationFailure> failure;

  bool ok() const { return !failure.has_value(); }
};

/// Replays every step from `start` and requires the final term to equal
/// `claimed_end` structurally (FinalMismatch otherwise) and to be
/// extensionally equal to `start`. Never throws for domain failures.
DerivationReport check_derivation(const Derivation& d);

/// `.pid` text for one or more derivations, optionally preceded by defs.
std::vector<Derivation> parse_derivations(std::string_view text);
/// Renders a derivation in `.pid` form; `names` folds library terms.
std::string print_derivation(const Derivation& d, const NameTable* names = nullptr);

}  // namespace pi
