// Copyright 2026 The polyreg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "polyreg/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace polyreg {

namespace {

// Exponents beyond this are almost certainly typos and would blow up the
// polynomial expansion.
constexpr long kMaxExponent = 4096;

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  RationalFunction parse() {
    RationalFunction r = sum();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error("syntax", msg + " at position " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
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

  static RationalFunction add(const RationalFunction& a, const RationalFunction& b, bool minus) {
    RationalFunction r;
    Polynomial right = b.num * a.den;
    r.num = minus ? a.num * b.den - right : a.num * b.den + right;
    r.den = a.den * b.den;
    return reduce(r);
  }

  static RationalFunction reduce(RationalFunction r) {
    if (r.num.is_zero()) return RationalFunction{Polynomial{}, Polynomial{1}};
    const Polynomial g = gcd(r.num, r.den);
    if (g.degree() > 0) {
      r.num = r.num.divmod(g).first;
      r.den = r.den.divmod(g).first;
    }
    const Rational lc = r.den.leading();
    r.num *= 1 / lc;
    r.den *= 1 / lc;
    return r;
  }

  RationalFunction sum() {
    skip();
    RationalFunction r;
    if (accept('-')) {
      r = product();
      r.num = -r.num;
    } else {
      accept('+');
      r = product();
    }
    for (;;) {
      if (accept('+')) r = add(r, product(), false);
      else if (accept('-')) r = add(r, product(), true);
      else return r;
    }
  }

  RationalFunction product() {
    RationalFunction r = power();
    for (;;) {
      if (accept('*')) {
        RationalFunction b = power();
        r = reduce(RationalFunction{r.num * b.num, r.den * b.den});
      } else if (accept('/')) {
        const std::size_t at = pos_;
        RationalFunction b = power();
        if (b.num.is_zero()) {
          pos_ = at;
          throw Error("zero", "division by the zero function at position " + std::to_string(at));
        }
        r = reduce(RationalFunction{r.num * b.den, r.den * b.num});
      } else {
        return r;
      }
    }
  }

  long exponent() {
    skip();
    bool paren = accept('(');
    skip();
    bool neg = false;
    if (accept('-')) neg = true;
    else accept('+');
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected an integer exponent");
    const std::string digits(s_.substr(start, pos_ - start));
    if (digits.size() > 6) fail("exponent too large");
    long e = std::stol(digits);
    if (paren && !accept(')')) fail("integer exponents only; expected ')'");
    if (e > kMaxExponent) fail("exponent too large");
    return neg ? -e : e;
  }

  RationalFunction power() {
    RationalFunction base = atom();
    if (!accept('^')) return base;
    const long e = exponent();
    if (e == 0) return RationalFunction{};
    RationalFunction r;
    const unsigned m = static_cast<unsigned>(e < 0 ? -e : e);
    if (e > 0) {
      r.num = base.num.pow(m);
      r.den = base.den.pow(m);
    } else {
      if (base.num.is_zero()) throw Error("zero", "negative power of the zero function");
      r.num = base.den.pow(m);
      r.den = base.num.pow(m);
    }
    return reduce(r);
  }

  RationalFunction atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      RationalFunction r = sum();
      if (!accept(')')) fail("expected ')'");
      return r;
    }
    if (c == 't') {
      ++pos_;
      return RationalFunction{Polynomial{0, 1}, Polynomial{1}};
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ < s_.size() && (s_[pos_] == '.' || s_[pos_] == 'e' || s_[pos_] == 'E'))
        fail("floating-point numbers are not allowed");
      return RationalFunction{Polynomial::constant(Rational(std::string(s_.substr(start, pos_ - start)))),
                              Polynomial{1}};
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalFunction parse_rational_function(std::string_view text) { return Parser(text).parse(); }

FieldElement parse_expr(std::string_view text) {
  const RationalFunction r = parse_rational_function(text);
  if (r.num.is_zero()) throw Error("zero", "\"" + std::string(text) + "\" is the zero function");
  return FieldElement::from_fraction(r.num, r.den);
}

Place parse_place(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s == "inf" || s == "infinity" || s == "oo") return Place::infinity();
  const RationalFunction r = parse_rational_function(s);
  if (r.den.degree() != 0 || r.num.degree() < 1)
    throw Error("syntax", "a place is a nonconstant polynomial in t or 'inf', got \"" + s + "\"");
  return Place::from_polynomial(r.num);
}

Complex parse_complex(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw Error("syntax", "empty complex number");
  auto bad = [&]() -> Error { return Error("syntax", "cannot read \"" + s + "\" as a complex number a+bi"); };
  if (s.back() != 'i') {
    char* end = nullptr;
    const double re = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size()) throw bad();
    return {re, 0.0};
  }
  s.pop_back();
  // Find the sign separating real and imaginary parts (not an exponent sign).
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  auto read = [&](const std::string& part) -> double {
    if (part.empty() || part == "+") return 1.0;
    if (part == "-") return -1.0;
    char* end = nullptr;
    const double v = std::strtod(part.c_str(), &end);
    if (end != part.c_str() + part.size()) throw bad();
    return v;
  };
  if (split == std::string::npos) return {0.0, read(s)};
  const std::string re = s.substr(0, split);
  char* end = nullptr;
  const double r = std::strtod(re.c_str(), &end);
  if (re.empty() || end != re.c_str() + re.size()) throw bad();
  return {r, read(s.substr(split))};
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_complex(Complex z) {
  std::string im = format_double(std::abs(z.imag()));
  return format_double(z.real()) + (std::signbit(z.imag()) ? "-" : "+") + im + "i";
}

}  // namespace polyreg
