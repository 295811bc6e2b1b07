#include "pdm/parser.hpp"

#include <cctype>

#include "pdm/errors.hpp"

namespace pdm {

bool is_valid_atom_name(const std::string& name) {
  if (name.empty()) return false;
  if (name == "true" || name == "false" || name == "U" || name == "X" ||
      name == "F" || name == "G")
    return false;
  if (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_')
    return false;
  for (char c : name)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

namespace {

struct token {
  enum kind { word, bang, amp, pipe, lparen, rparen, end } k;
  std::string text;  // for word tokens
  int line;
  int col;
};

class lexer {
public:
  explicit lexer(const std::string& src) : src_(src) { advance(); }

  const token& peek() const { return cur_; }

  token take() {
    token t = cur_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw parse_error(msg, cur_.line, cur_.col);
  }

private:
  void advance() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '\n') {
        ++line_;
        col_ = 1;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++col_;
        ++pos_;
      } else {
        break;
      }
    }
    cur_.line = line_;
    cur_.col = col_;
    cur_.text.clear();
    if (pos_ >= src_.size()) {
      cur_.k = token::end;
      return;
    }
    char c = src_[pos_];
    switch (c) {
      case '!': cur_.k = token::bang; break;
      case '&': cur_.k = token::amp; break;
      case '|': cur_.k = token::pipe; break;
      case '(': cur_.k = token::lparen; break;
      case ')': cur_.k = token::rparen; break;
      default:
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
          std::size_t start = pos_;
          while (pos_ < src_.size() &&
                 (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                  src_[pos_] == '_')) {
            ++pos_;
            ++col_;
          }
          cur_.k = token::word;
          cur_.text = src_.substr(start, pos_ - start);
          return;
        }
        throw parse_error(std::string("unexpected character '") + c + "'",
                          line_, col_);
    }
    ++pos_;
    ++col_;
  }

  const std::string& src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  token cur_;
};

class parser {
public:
  explicit parser(const std::string& src) : lx_(src) {}

  formula run() {
    formula f = parse_until();
    if (lx_.peek().k != token::end) lx_.fail("trailing input");
    return f;
  }

private:
  formula parse_until() {
    formula lhs = parse_or();
    if (lx_.peek().k == token::word && lx_.peek().text == "U") {
      lx_.take();
      return formula::until(std::move(lhs), parse_until());
    }
    return lhs;
  }

  formula parse_or() {
    formula lhs = parse_and();
    if (lx_.peek().k == token::pipe) {
      lx_.take();
      return formula::lor(std::move(lhs), parse_or());
    }
    return lhs;
  }

  formula parse_and() {
    formula lhs = parse_unary();
    if (lx_.peek().k == token::amp) {
      lx_.take();
      return formula::land(std::move(lhs), parse_and());
    }
    return lhs;
  }

  formula parse_unary() {
    const token& t = lx_.peek();
    if (t.k == token::bang) {
      lx_.take();
      return formula::lnot(parse_unary());
    }
    if (t.k == token::word &&
        (t.text == "X" || t.text == "F" || t.text == "G")) {
      std::string sym = lx_.take().text;
      formula arg = parse_unary();
      if (sym == "X") return formula::next(std::move(arg));
      if (sym == "F") return formula::eventually(std::move(arg));
      return formula::globally(std::move(arg));
    }
    return parse_primary();
  }

  formula parse_primary() {
    const token& t = lx_.peek();
    switch (t.k) {
      case token::lparen: {
        lx_.take();
        formula inner = parse_until();
        if (lx_.peek().k != token::rparen) lx_.fail("expected ')'");
        lx_.take();
        return inner;
      }
      case token::word: {
        if (t.text == "true") {
          lx_.take();
          return formula::tt();
        }
        if (t.text == "false") {
          lx_.take();
          return formula::ff();
        }
        if (t.text == "U") lx_.fail("'U' is an operator, not an atom");
        return formula::atom(lx_.take().text);
      }
      case token::end: lx_.fail("unexpected end of input");
      default: lx_.fail("expected a formula");
    }
  }

  lexer lx_;
};

}  // namespace

formula parse(const std::string& text) { return parser(text).run(); }

}  // namespace pdm
