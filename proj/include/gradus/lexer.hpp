#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gradus/errors.hpp"

namespace gradus::detail {

enum class Tok {
  Int,
  Ident,
  Plus,
  Minus,
  Star,
  Slash,
  Caret,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Comma,
  Colon,
  Equals,
  End,
};

struct Token {
  Tok kind = Tok::End;
  std::string text;
  size_t pos = 0;

  size_t end() const { return pos + text.size(); }
};

std::vector<Token> lex(std::string_view text);

/// Token cursor with one-token dispatch helpers. Throws ParseError on
/// unexpected input, carrying the character offset.
class TokenStream {
 public:
  explicit TokenStream(std::string_view text) : toks_(lex(text)) {}

  const Token& peek(size_t ahead = 0) const {
    size_t j = i_ + ahead;
    return j < toks_.size() ? toks_[j] : toks_.back();
  }
  Token next() {
    Token t = peek();
    if (i_ + 1 < toks_.size()) ++i_;
    return t;
  }
  bool accept(Tok kind, Token* out = nullptr) {
    if (peek().kind != kind) return false;
    Token t = next();
    if (out) *out = t;
    return true;
  }
  Token expect(Tok kind, const char* what) {
    if (peek().kind != kind) fail(std::string("expected ") + what);
    return next();
  }
  bool at_end() const { return peek().kind == Tok::End; }

  [[noreturn]] void fail(const std::string& msg) const {
    const Token& t = peek();
    std::string got = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw ParseError(msg + ", got " + got, t.pos);
  }

 private:
  std::vector<Token> toks_;
  size_t i_ = 0;
};

}  // namespace gradus::detail
