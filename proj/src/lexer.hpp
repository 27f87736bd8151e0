#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace pi::detail {

enum class Tok { Word, Sym, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

/// Splits text into words (`[A-Za-z0-9_']+`, plus the fused primitives
/// `swap+`, `swap*`, `unite*`, `uniti*`) and punctuation. `--` starts a
/// comment running to end of line. Always ends with an End token.
std::vector<Token> tokenize(std::string_view text);

/// Recursive-descent cursor that remembers which tokens were tried at the
/// current position, so a failure can report the expected set.
class Cursor {
 public:
  explicit Cursor(std::vector<Token> tokens);

  const Token& peek() const { return tokens_[pos_]; }
  const Token& peek_at(std::size_t ahead) const;
  bool at_end() const { return peek().kind == Tok::End; }

  /// True (and records `text` as expected) if the next token is `text`.
  bool check(std::string_view text);
  bool check_word();
  /// Consumes `text` if present.
  bool accept(std::string_view text);
  void expect(std::string_view text);
  std::string expect_word(std::string_view what);
  Token advance();

  /// Notes an expectation without testing it (e.g. "combinator").
  void note(std::string_view what);
  [[noreturn]] void fail() const;

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::vector<std::string> expected_;
};

}  // namespace pi::detail
