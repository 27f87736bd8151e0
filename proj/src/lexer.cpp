#include "lexer.hpp"

#include <algorithm>

#include "pi/error.hpp"
#include "pi/syntax.hpp"

namespace pi::detail {

namespace {

bool fuses_operator(std::string_view word) {
  return word == "swap" || word == "unite" || word == "uniti";
}

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t i = 0;

  auto bump = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };

  while (i < text.size()) {
    char ch = text[i];
    if (ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n') {
      bump(1);
      continue;
    }
    if (ch == '-' && i + 1 < text.size() && text[i + 1] == '-') {
      while (i < text.size() && text[i] != '\n') bump(1);
      continue;
    }
    std::size_t start_line = line;
    std::size_t start_col = col;
    if (is_name_char(ch)) {
      std::size_t j = i;
      while (j < text.size() && is_name_char(text[j])) ++j;
      std::string word(text.substr(i, j - i));
      if (fuses_operator(word) && j < text.size() &&
          (text[j] == '+' || text[j] == '*')) {
        word += text[j];
        ++j;
      }
      bump(j - i);
      out.push_back({Tok::Word, std::move(word), start_line, start_col});
      continue;
    }
    if (ch == '=' && i + 1 < text.size() && text[i + 1] == '>') {
      bump(2);
      out.push_back({Tok::Sym, "=>", start_line, start_col});
      continue;
    }
    static constexpr std::string_view kSymbols = "!;+*()=[],:";
    if (kSymbols.find(ch) != std::string_view::npos) {
      bump(1);
      out.push_back({Tok::Sym, std::string(1, ch), start_line, start_col});
      continue;
    }
    throw ParseError(start_line, start_col, std::string(1, ch), {});
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

Cursor::Cursor(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

const Token& Cursor::peek_at(std::size_t ahead) const {
  return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
}

bool Cursor::check(std::string_view text) {
  note(text);
  const Token& t = peek();
  return t.kind != Tok::End && t.text == text;
}

bool Cursor::check_word() { return peek().kind == Tok::Word; }

bool Cursor::accept(std::string_view text) {
  if (!check(text)) return false;
  advance();
  return true;
}

void Cursor::expect(std::string_view text) {
  if (!accept(text)) fail();
}

std::string Cursor::expect_word(std::string_view what) {
  note(what);
  if (!check_word()) fail();
  return advance().text;
}

Token Cursor::advance() {
  Token t = tokens_[pos_];
  if (pos_ + 1 < tokens_.size()) ++pos_;
  expected_.clear();
  return t;
}

void Cursor::note(std::string_view what) {
  std::string s(what);
  if (std::find(expected_.begin(), expected_.end(), s) == expected_.end()) {
    expected_.push_back(std::move(s));
  }
}

void Cursor::fail() const {
  const Token& t = peek();
  std::string found = t.kind == Tok::End ? "end of input" : t.text;
  throw ParseError(t.line, t.column, std::move(found), expected_);
}

}  // namespace pi::detail
