#include "pi/syntax.hpp"

#include <array>
#include <cctype>
#include <sstream>

#include "parse_internal.hpp"
#include "pi/error.hpp"
#include "pi/library.hpp"

namespace pi {

namespace {

struct Keyword {
  std::string_view text;
  CombKind kind;
};

constexpr std::array<Keyword, 9> kPrimitives{{
    {"id", CombKind::Id},
    {"swap+", CombKind::SwapPlus},
    {"swap*", CombKind::SwapStar},
    {"unite*", CombKind::UniteStar},
    {"uniti*", CombKind::UnitiStar},
    {"dist", CombKind::Dist},
    {"factor", CombKind::Factor},
    {"fold2", CombKind::FoldBool},
    {"unfold2", CombKind::UnfoldBool},
}};

std::string_view keyword_of(CombKind kind) {
  for (const auto& k : kPrimitives) {
    if (k.kind == kind) return k.text;
  }
  return "?";
}

int precedence(CombKind kind) {
  switch (kind) {
    case CombKind::Seq: return 1;
    case CombKind::ParPlus: return 2;
    case CombKind::ParStar: return 3;
    case CombKind::Inv: return 4;
    default: return 5;
  }
}

class CombParser {
 public:
  CombParser(detail::Cursor& in, const NameTable& names) : in_(in), names_(names) {}

  Comb expression(int min_prec = 1) {
    Comb lhs = prefix();
    for (;;) {
      CombKind op;
      if (min_prec <= 3 && in_.check("*")) {
        op = CombKind::ParStar;
      } else if (min_prec <= 2 && in_.check("+")) {
        op = CombKind::ParPlus;
      } else if (min_prec <= 1 && in_.check(";")) {
        op = CombKind::Seq;
      } else {
        return lhs;
      }
      in_.advance();
      Comb rhs = expression(precedence(op) + 1);
      std::array<Comb, 2> kids{std::move(lhs), std::move(rhs)};
      lhs = Comb::make(op, kids.data());
    }
  }

 private:
  Comb prefix() {
    if (in_.accept("!")) return Comb::inv(prefix());
    return atom();
  }

  Comb atom() {
    if (in_.accept("(")) {
      Comb c = expression();
      in_.expect(")");
      return c;
    }
    for (const auto& k : kPrimitives) {
      if (in_.accept(k.text)) return Comb::primitive(k.kind);
    }
    in_.note("NAME");
    const detail::Token& t = in_.peek();
    if (t.kind != detail::Tok::Word || !is_name_start(t.text[0]) ||
        is_reserved_word(t.text)) {
      in_.fail();
    }
    auto it = names_.find(t.text);
    if (it == names_.end()) {
      throw Error(ErrorKind::UnknownName, std::to_string(t.line) + ":" +
                                              std::to_string(t.column) +
                                              ": unknown name '" + t.text + "'");
    }
    in_.advance();
    return it->second;
  }

  detail::Cursor& in_;
  const NameTable& names_;
};

void render(std::ostream& os, const Comb& c, int context, const NameTable* names) {
  if (names != nullptr) {
    for (const auto& [name, def] : *names) {
      if (def == c) {
        os << name;
        return;
      }
    }
  }
  int prec = precedence(c.kind());
  bool parens = prec < context;
  if (parens) os << '(';
  switch (c.kind()) {
    case CombKind::Inv:
      os << '!';
      render(os, c.child(0), 4, names);
      break;
    case CombKind::Seq:
    case CombKind::ParPlus:
    case CombKind::ParStar: {
      const char* op = c.kind() == CombKind::Seq       ? " ; "
                       : c.kind() == CombKind::ParPlus ? " + "
                                                       : " * ";
      render(os, c.child(0), prec, names);
      os << op;
      render(os, c.child(1), prec + 1, names);
      break;
    }
    default:
      os << keyword_of(c.kind());
  }
  if (parens) os << ')';
}

void expect_end(detail::Cursor& in) {
  in.note("end of input");
  if (!in.at_end()) in.fail();
}

}  // namespace

namespace detail {

Comb parse_expression(Cursor& in, const NameTable& scope) {
  return CombParser(in, scope).expression();
}

Definition parse_definition(Cursor& in, NameTable& scope) {
  in.note("NAME");
  const Token t = in.peek();
  if (t.kind != Tok::Word || !is_name_start(t.text[0]) || is_reserved_word(t.text)) {
    in.fail();
  }
  in.advance();
  in.expect("=");
  Comb body = parse_expression(in, scope);
  scope.insert_or_assign(t.text, body);
  return {t.text, std::move(body)};
}

}  // namespace detail

bool is_name_start(char ch) noexcept {
  return std::isalpha(static_cast<unsigned char>(ch)) || ch == '_';
}

bool is_name_char(char ch) noexcept {
  return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '\'';
}

bool is_reserved_word(std::string_view word) noexcept {
  static constexpr std::array<std::string_view, 6> kReserved{
      "def", "main", "swap", "unite", "uniti", "derivation"};
  for (const auto& k : kPrimitives) {
    if (k.text == word) return true;
  }
  for (auto r : kReserved) {
    if (r == word) return true;
  }
  return false;
}

Comb parse_comb(std::string_view text, const NameTable* names) {
  detail::Cursor in(detail::tokenize(text));
  const NameTable& table = names != nullptr ? *names : builtin_names();
  Comb c = CombParser(in, table).expression();
  expect_end(in);
  return c;
}

Program parse_program(std::string_view text, ProgramOptions opts) {
  detail::Cursor in(detail::tokenize(text));
  NameTable scope = builtin_names();
  Program prog;
  while (in.accept("def")) prog.defs.push_back(detail::parse_definition(in, scope));
  if (in.accept("main")) {
    in.expect("=");
    prog.main = detail::parse_expression(in, scope);
  } else if (opts.allow_bare_main && !in.at_end()) {
    in.note("combinator");
    prog.main = detail::parse_expression(in, scope);
  }
  expect_end(in);
  return prog;
}

std::string pretty(const Comb& c, const NameTable* names) {
  std::ostringstream os;
  render(os, c, 0, names);
  return os.str();
}

}  // namespace pi
