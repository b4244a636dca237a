#include "dgal/expr.hpp"

#include <cctype>
#include <string>

#include "dgal/errors.hpp"

namespace dgal {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  RatFunc parse() {
    RatFunc r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RatFunc expr() {
    RatFunc acc = term();
    while (true) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  RatFunc term() {
    RatFunc acc = unary();
    while (true) {
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        RatFunc d = unary();
        if (d.is_zero()) fail("division by zero");
        acc /= d;
      } else {
        return acc;
      }
    }
  }

  RatFunc unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  RatFunc power() {
    RatFunc base = atom();
    if (!accept('^')) return base;
    skip();
    bool neg = false;
    if (accept('-')) neg = true;
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("integer exponent expected");
    if (pos_ - start > 4) fail("exponent too large");
    int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
    if (neg && base.is_zero()) fail("negative power of zero");
    return base.pow(neg ? -e : e);
  }

  RatFunc atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      RatFunc r = expr();
      if (!accept(')')) fail("')' expected");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return RatFunc(Rat(BigInt(std::string(s_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      return RatFunc(Var::parse(s_.substr(start, pos_ - start)));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }
};

}  // namespace

RatFunc parse_expr(std::string_view text) { return Parser(text).parse(); }

}  // namespace dgal
