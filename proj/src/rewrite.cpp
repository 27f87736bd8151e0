#include "pi/rewrite.hpp"

#include <array>
#include <sstream>

#include "parse_internal.hpp"
#include "pi/library.hpp"
#include "pi/semantics.hpp"
#include "pi/typing.hpp"

namespace pi {

namespace {

struct RuleName {
  Rule rule;
  std::string_view name;
};

constexpr std::array<RuleName, 7> kRuleNames{{
    {Rule::AssocL, "assocL"},
    {Rule::AssocR, "assocR"},
    {Rule::IdL, "idL"},
    {Rule::IdR, "idR"},
    {Rule::CancelAdj, "cancelAdj"},
    {Rule::SwapNat, "swapNat"},
    {Rule::UnitiNat, "unitiNat"},
}};

bool is_seq(const Comb& c) { return c.kind() == CombKind::Seq; }

std::optional<Comb> assoc_left(const Comb& c) {
  if (!is_seq(c) || !is_seq(c.child(1))) return std::nullopt;
  const Comb& qr = c.child(1);
  return Comb::seq(Comb::seq(c.child(0), qr.child(0)), qr.child(1));
}

std::optional<Comb> assoc_right(const Comb& c) {
  if (!is_seq(c) || !is_seq(c.child(0))) return std::nullopt;
  const Comb& pq = c.child(0);
  return Comb::seq(pq.child(0), Comb::seq(pq.child(1), c.child(1)));
}

std::optional<Comb> forward(const Comb& c, Rule rule) {
  switch (rule) {
    case Rule::AssocL: return assoc_left(c);
    case Rule::AssocR: return assoc_right(c);
    case Rule::IdL:
      if (is_seq(c) && c.child(0).kind() == CombKind::Id) return c.child(1);
      return std::nullopt;
    case Rule::IdR:
      if (is_seq(c) && c.child(1).kind() == CombKind::Id) return c.child(0);
      return std::nullopt;
    case Rule::CancelAdj: {
      if (!is_seq(c)) return std::nullopt;
      const Comb& p = c.child(0);
      const Comb& q = c.child(1);
      if (adjoint(p) == q || adjoint(q) == p) return Comb::id();
      return std::nullopt;
    }
    case Rule::SwapNat: {
      if (!is_seq(c) || c.child(0).kind() != CombKind::SwapStar ||
          c.child(1).kind() != CombKind::ParStar) {
        return std::nullopt;
      }
      const Comb& fg = c.child(1);
      return Comb::seq(Comb::par_star(fg.child(1), fg.child(0)), Comb::swap_star());
    }
    case Rule::UnitiNat: {
      if (!is_seq(c) || c.child(0).kind() != CombKind::UnitiStar ||
          c.child(1).kind() != CombKind::ParStar ||
          c.child(1).child(0).kind() != CombKind::Id) {
        return std::nullopt;
      }
      return Comb::seq(c.child(1).child(1), Comb::uniti_star());
    }
  }
  return std::nullopt;
}

std::optional<Comb> backward(const Comb& c, Rule rule) {
  switch (rule) {
    case Rule::AssocL: return assoc_right(c);
    case Rule::AssocR: return assoc_left(c);
    case Rule::IdL: return Comb::seq(Comb::id(), c);
    case Rule::IdR: return Comb::seq(c, Comb::id());
    case Rule::CancelAdj:
      // id ~> p ; adjoint p needs a witness p the step format cannot carry.
      return std::nullopt;
    case Rule::SwapNat: {
      if (!is_seq(c) || c.child(0).kind() != CombKind::ParStar ||
          c.child(1).kind() != CombKind::SwapStar) {
        return std::nullopt;
      }
      const Comb& gf = c.child(0);
      return Comb::seq(Comb::swap_star(), Comb::par_star(gf.child(1), gf.child(0)));
    }
    case Rule::UnitiNat:
      if (!is_seq(c) || c.child(1).kind() != CombKind::UnitiStar) return std::nullopt;
      return Comb::seq(Comb::uniti_star(), Comb::par_star(Comb::id(), c.child(0)));
  }
  return std::nullopt;
}

[[noreturn]] void bad_position(const Position& pos, std::size_t depth) {
  throw Error(ErrorKind::BadPosition,
              "position " + to_string(pos) + " does not address a subterm (fails at depth " +
                  std::to_string(depth) + ")");
}

Comb replace_rec(const Comb& c, const Position& pos, std::size_t depth, const Comb& repl) {
  if (depth == pos.size()) return repl;
  std::size_t i = pos[depth];
  if (i >= c.arity()) bad_position(pos, depth);
  std::array<Comb, 2> kids{c.child(0), c.arity() > 1 ? c.child(1) : c.child(0)};
  kids[i] = replace_rec(c.child(i), pos, depth + 1, repl);
  return Comb::make(c.kind(), kids.data());
}

}  // namespace

std::string_view to_string(Rule rule) {
  for (const auto& r : kRuleNames) {
    if (r.rule == rule) return r.name;
  }
  return "?";
}

std::optional<Rule> rule_from_string(std::string_view name) {
  for (const auto& r : kRuleNames) {
    if (r.name == name) return r.rule;
  }
  return std::nullopt;
}

std::string to_string(const Position& pos) {
  std::string s = "[";
  for (std::size_t i = 0; i < pos.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(pos[i]);
  }
  return s + "]";
}

std::string to_string(const Step& step) {
  return std::string(to_string(step.rule)) + " at " + to_string(step.position) +
         (step.direction == Direction::Forward ? " fwd" : " bwd");
}

const Comb& subterm_at(const Comb& c, const Position& pos) {
  const Comb* cur = &c;
  for (std::size_t depth = 0; depth < pos.size(); ++depth) {
    if (pos[depth] >= cur->arity()) bad_position(pos, depth);
    cur = &cur->child(pos[depth]);
  }
  return *cur;
}

Comb replace_at(const Comb& c, const Position& pos, const Comb& replacement) {
  return replace_rec(c, pos, 0, replacement);
}

std::optional<Comb> rewrite_root(const Comb& c, Rule rule, Direction dir) {
  return dir == Direction::Forward ? forward(c, rule) : backward(c, rule);
}

Comb apply_step(const Comb& c, const Step& step, const Signature& sig) {
  const Comb& target = subterm_at(c, step.position);
  auto rewritten = rewrite_root(target, step.rule, step.direction);
  if (!rewritten) {
    throw Error(ErrorKind::PatternMismatch,
                std::string(to_string(step.rule)) +
                    (step.direction == Direction::Forward ? "" : " (backward)") +
                    " does not match '" + pretty(target) + "' at " + to_string(step.position));
  }
  Comb result = replace_at(c, step.position, *rewritten);
  try {
    infer(result, TypeHint::exact(sig));
  } catch (const Error& e) {
    throw Error(ErrorKind::IllTypedInstance,
                std::string(to_string(step.rule)) + " at " + to_string(step.position) +
                    " yields a term that is not well typed at " + to_string(sig) + ": " +
                    e.what());
  }
  if (to_perm(result, sig) != to_perm(c, sig)) {
    throw Error(ErrorKind::UnsoundInstance,
                std::string(to_string(step.rule)) + " at " + to_string(step.position) +
                    " changes the denotation of the term");
  }
  return result;
}

Comb apply_step(const Comb& c, const Step& step) { return apply_step(c, step, infer(c)); }

DerivationReport check_derivation(const Derivation& d) {
  DerivationReport report;
  report.trace.push_back(d.start);
  try {
    report.signature = infer(d.start, d.domain ? TypeHint::domain(*d.domain) : TypeHint{});
  } catch (const Error& e) {
    report.failure = DerivationFailure{0, e.kind(), std::string("start term: ") + e.what()};
    return report;
  }
  const Signature& sig = *report.signature;
  for (std::size_t i = 0; i < d.steps.size(); ++i) {
    try {
      report.trace.push_back(apply_step(report.trace.back(), d.steps[i], sig));
    } catch (const Error& e) {
      report.failure = DerivationFailure{i + 1, e.kind(), e.what()};
      return report;
    }
  }
  const std::size_t final_step = d.steps.size() + 1;
  if (report.trace.back() != d.claimed_end) {
    report.failure = DerivationFailure{
        final_step, ErrorKind::FinalMismatch,
        "replay ends at '" + pretty(report.trace.back(), &display_names()) +
            "' but the claimed end is '" + pretty(d.claimed_end, &display_names()) + "'"};
    return report;
  }
  try {
    if (!semantically_equal(d.start, d.claimed_end, TypeHint::exact(sig))) {
      report.failure = DerivationFailure{final_step, ErrorKind::UnsoundInstance,
                                         "start and end denote different permutations"};
    }
  } catch (const Error& e) {
    report.failure = DerivationFailure{final_step, e.kind(), e.what()};
  }
  return report;
}

namespace {

Position parse_position(detail::Cursor& in) {
  Position pos;
  in.expect("[");
  if (in.accept("]")) return pos;
  for (;;) {
    in.note("child index");
    const detail::Token& t = in.peek();
    if (t.kind != detail::Tok::Word || (t.text != "0" && t.text != "1")) in.fail();
    pos.push_back(t.text == "0" ? 0 : 1);
    in.advance();
    if (in.accept("]")) return pos;
    in.expect(",");
  }
}

Step parse_step(detail::Cursor& in) {
  in.note("rule name");
  const detail::Token t = in.peek();
  auto rule = t.kind == detail::Tok::Word ? rule_from_string(t.text) : std::nullopt;
  if (!rule) in.fail();
  in.advance();
  in.expect("at");
  Position pos = parse_position(in);
  Direction dir = Direction::Forward;
  if (in.accept("bwd")) {
    dir = Direction::Backward;
  } else {
    in.expect("fwd");
  }
  return {*rule, std::move(pos), dir};
}

}  // namespace

std::vector<Derivation> parse_derivations(std::string_view text) {
  detail::Cursor in(detail::tokenize(text));
  NameTable scope = builtin_names();
  while (in.accept("def")) detail::parse_definition(in, scope);
  std::vector<Derivation> out;
  do {
    in.expect("derivation");
    Derivation d{"", Comb::id(), {}, Comb::id(), std::nullopt};
    d.name = in.expect_word("derivation name");
    in.expect(":");
    d.start = detail::parse_expression(in, scope);
    in.expect("=>");
    d.claimed_end = detail::parse_expression(in, scope);
    while (in.accept("step")) d.steps.push_back(parse_step(in));
    out.push_back(std::move(d));
  } while (!in.at_end());
  return out;
}

std::string print_derivation(const Derivation& d, const NameTable* names) {
  std::ostringstream os;
  os << "derivation " << d.name << " : " << pretty(d.start, names) << " => "
     << pretty(d.claimed_end, names) << '\n';
  for (const Step& s : d.steps) os << "  step " << to_string(s) << '\n';
  return os.str();
}

}  // namespace pi
