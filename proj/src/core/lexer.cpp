#include "core/lexer.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>

#include "core/errors.hpp"

namespace psiminer {
namespace {

// Reserved words of the host language. Only a subset is accepted by the
// parser; the rest still lex as KEYWORD so misuse fails at parse time.
constexpr std::array<std::string_view, 50> kKeywords = {
    "abstract",  "assert",     "boolean",   "break",     "byte",
    "case",      "catch",      "char",      "class",     "const",
    "continue",  "default",    "do",        "double",    "else",
    "enum",      "extends",    "final",     "finally",   "float",
    "for",       "goto",       "if",        "implements", "import",
    "instanceof", "int",       "interface", "long",      "native",
    "new",       "package",    "private",   "protected", "public",
    "return",    "short",      "static",    "strictfp",  "super",
    "switch",    "synchronized", "this",    "throw",     "throws",
    "transient", "try",        "void",      "volatile",  "while",
};

// Longest match first.
constexpr std::array<std::string_view, 32> kOperators = {
    "&&", "||", "==", "!=", "<=", ">=", "+=", "-=", "*=", "/=", "%=",
    "++", "--", "=",  "<",  ">",  "+",  "-",  "*",  "/",  "%",  "!",
    "?",  ":",  "&",  "|",  "^",  "~",  "&=", "|=", "^=", "->",
};

constexpr std::string_view kPunctuation = "(){}[];,.@";

bool is_ident_start(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' ||
         c == '$' || c >= 0x80;
}

bool is_ident_part(unsigned char c) {
  return is_ident_start(c) || (c >= '0' && c <= '9');
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f';
}

class Lexer {
 public:
  explicit Lexer(std::string_view source) : src_(source) {}

  std::vector<Token> run() {
    std::vector<Token> tokens;
    while (pos_ < src_.size()) tokens.push_back(next());
    return tokens;
  }

 private:
  Token next() {
    const std::size_t start = pos_;
    const std::size_t start_line = line_;
    const std::size_t start_col = column();
    const char c = src_[pos_];
    CstKind kind;

    if (is_space(c)) {
      while (pos_ < src_.size() && is_space(src_[pos_])) advance();
      kind = CstKind::WHITE_SPACE;
    } else if (starts_with("//")) {
      while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      kind = CstKind::LINE_COMMENT;
    } else if (starts_with("/*")) {
      advance();
      advance();
      while (pos_ < src_.size() && !starts_with("*/")) advance();
      if (pos_ >= src_.size()) {
        throw LexError(start_line, start_col, "unterminated block comment");
      }
      advance();
      advance();
      kind = CstKind::BLOCK_COMMENT;
    } else if (c == '"' || c == '\'') {
      lex_quoted(c, start_line, start_col);
      kind = CstKind::LITERAL;
    } else if (is_digit(c) ||
               (c == '.' && pos_ + 1 < src_.size() && is_digit(src_[pos_ + 1]))) {
      lex_number();
      kind = CstKind::LITERAL;
    } else if (is_ident_start(static_cast<unsigned char>(c))) {
      while (pos_ < src_.size() &&
             is_ident_part(static_cast<unsigned char>(src_[pos_]))) {
        advance();
      }
      const std::string_view word = src_.substr(start, pos_ - start);
      if (word == "true" || word == "false" || word == "null") {
        kind = CstKind::LITERAL;
      } else if (is_keyword(word)) {
        kind = CstKind::KEYWORD;
      } else {
        kind = CstKind::IDENTIFIER;
      }
    } else if (kPunctuation.find(c) != std::string_view::npos) {
      advance();
      kind = CstKind::PUNCTUATION;
    } else {
      std::size_t best = 0;
      for (std::string_view op : kOperators) {
        if (op.size() > best && starts_with(op)) best = op.size();
      }
      if (best == 0) {
        throw LexError(start_line, start_col,
                       std::string("unexpected character '") + c + "'");
      }
      for (std::size_t i = 0; i < best; ++i) advance();
      kind = CstKind::OPERATOR;
    }

    Token tok;
    tok.kind = kind;
    tok.text = std::string(src_.substr(start, pos_ - start));
    tok.span = SourceSpan{start, pos_, start_line, end_line(start_line)};
    tok.column = start_col;
    return tok;
  }

  void lex_quoted(char quote, std::size_t line, std::size_t col) {
    advance();
    while (true) {
      if (pos_ >= src_.size() || src_[pos_] == '\n') {
        throw LexError(line, col,
                       quote == '"' ? "unterminated string literal"
                                    : "unterminated char literal");
      }
      const char c = src_[pos_];
      advance();
      if (c == '\\') {
        if (pos_ >= src_.size()) continue;
        advance();
      } else if (c == quote) {
        return;
      }
    }
  }

  void lex_number() {
    if (starts_with("0x") || starts_with("0X")) {
      advance();
      advance();
      while (pos_ < src_.size() &&
             (std::isxdigit(static_cast<unsigned char>(src_[pos_])) ||
              src_[pos_] == '_')) {
        advance();
      }
    } else {
      digits();
      if (pos_ + 1 < src_.size() && src_[pos_] == '.' &&
          is_digit(src_[pos_ + 1])) {
        advance();
        digits();
      }
      if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
        advance();
        if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) {
          advance();
        }
        digits();
      }
    }
    if (pos_ < src_.size() &&
        std::string_view("lLfFdD").find(src_[pos_]) != std::string_view::npos) {
      advance();
    }
  }

  void digits() {
    while (pos_ < src_.size() && (is_digit(src_[pos_]) || src_[pos_] == '_')) {
      advance();
    }
  }

  bool starts_with(std::string_view s) const {
    return src_.substr(pos_, s.size()) == s;
  }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      line_begin_ = pos_ + 1;
    }
    ++pos_;
  }

  std::size_t column() const { return pos_ - line_begin_ + 1; }

  // A token ending in '\n' still ends on the line the newline terminates.
  std::size_t end_line(std::size_t start_line) const {
    if (pos_ > 0 && src_[pos_ - 1] == '\n' && line_ > start_line) {
      return line_ - 1;
    }
    return line_;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t line_begin_ = 0;
};

}  // namespace

bool is_keyword(std::string_view word) {
  return std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
}

bool is_valid_utf8(std::string_view bytes) {
  std::size_t i = 0;
  while (i < bytes.size()) {
    const auto c = static_cast<unsigned char>(bytes[i]);
    std::size_t extra;
    std::uint32_t cp;
    if (c < 0x80) {
      ++i;
      continue;
    } else if ((c & 0xE0) == 0xC0) {
      extra = 1;
      cp = c & 0x1F;
    } else if ((c & 0xF0) == 0xE0) {
      extra = 2;
      cp = c & 0x0F;
    } else if ((c & 0xF8) == 0xF0) {
      extra = 3;
      cp = c & 0x07;
    } else {
      return false;
    }
    if (i + extra >= bytes.size()) return false;
    for (std::size_t k = 1; k <= extra; ++k) {
      const auto cc = static_cast<unsigned char>(bytes[i + k]);
      if ((cc & 0xC0) != 0x80) return false;
      cp = (cp << 6) | (cc & 0x3F);
    }
    // Overlong forms, surrogates, out of range.
    if ((extra == 1 && cp < 0x80) || (extra == 2 && cp < 0x800) ||
        (extra == 3 && cp < 0x10000) || cp > 0x10FFFF ||
        (cp >= 0xD800 && cp <= 0xDFFF)) {
      return false;
    }
    i += extra + 1;
  }
  return true;
}

std::vector<Token> tokenize(std::string_view source) {
  return Lexer(source).run();
}

}  // namespace psiminer
