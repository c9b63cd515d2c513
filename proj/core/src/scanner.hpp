#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "pltower/error.hpp"

namespace pltower::detail {

// Cursor over element text shared by all the grammar readers. Tracks line and
// column so syntax errors can point at the offending character.
class Scanner {
public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  // Peek without skipping whitespace first.
  char peek_raw() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool accept(std::string_view word) {
    skip_ws();
    if (text_.substr(pos_, word.size()) == word) {
      pos_ += word.size();
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'" + found());
  }

  void expect(std::string_view word) {
    if (!accept(word)) fail("expected '" + std::string(word) + "'" + found());
  }

  void expect_end() {
    if (!at_end()) fail("unexpected trailing input" + found());
  }

  // Longest run of characters that may belong to a number token: digits,
  // signs, slash, letters of "inf".
  std::string_view number_token() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c)) || c == '/') {
        ++pos_;
      } else {
        break;
      }
    }
    if (pos_ == start || (pos_ == start + 1 && (text_[start] == '-' || text_[start] == '+'))) {
      fail("expected a number" + found());
    }
    return text_.substr(start, pos_ - start);
  }

  std::string_view identifier() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < text_.size() &&
        (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
    }
    if (pos_ == start) fail("expected a name" + found());
    return text_.substr(start, pos_ - start);
  }

  std::size_t offset() const { return pos_; }
  void rewind(std::size_t offset) { pos_ = offset; }
  std::string_view rest() const { return text_.substr(pos_); }

  SourcePosition position() const { return position_at(pos_); }

  SourcePosition position_at(std::size_t offset) const {
    SourcePosition p;
    for (std::size_t i = 0; i < offset && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++p.line;
        p.column = 1;
      } else {
        ++p.column;
      }
    }
    return p;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw Error(ErrorKind::Syntax, message, position());
  }

  [[noreturn]] void fail_semantic(const std::string& message) const {
    throw Error(ErrorKind::Semantic, message, position());
  }

private:
  std::string found() const {
    if (pos_ >= text_.size()) return " but reached end of input";
    return std::string(" but found '") + text_[pos_] + "'";
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace pltower::detail
