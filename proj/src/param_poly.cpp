// Copyright 2026 The poissonlike Authors
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

#include "poissonlike/param_poly.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

#include "poissonlike/errors.hpp"

namespace poissonlike {

Monomial Monomial::variable(std::string name, std::uint32_t exponent) {
  Monomial m;
  if (exponent > 0) {
    m.factors_.emplace_back(std::move(name), exponent);
    m.degree_ = exponent;
  }
  return m;
}

std::uint32_t Monomial::exponent_of(std::string_view name) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), name,
                             [](const Factor& f, std::string_view n) { return f.first < n; });
  return (it != factors_.end() && it->first == name) ? it->second : 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      out.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      out.factors_.push_back(*b++);
    } else {
      out.factors_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  out.degree_ = degree_ + other.degree_;
  return out;
}

std::strong_ordering Monomial::operator<=>(const Monomial& other) const {
  if (auto c = degree_ <=> other.degree_; c != 0) return c;
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() && b != other.factors_.end()) {
    if (a->first == b->first) {
      if (auto c = a->second <=> b->second; c != 0) return c;
      ++a;
      ++b;
    } else {
      // The smaller name is present in one side only: that side has the
      // larger exponent at the first differing position.
      return a->first < b->first ? std::strong_ordering::greater : std::strong_ordering::less;
    }
  }
  if (a != factors_.end()) return std::strong_ordering::greater;
  if (b != other.factors_.end()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

std::string Monomial::to_string() const {
  std::string out;
  for (const auto& [name, exp] : factors_) {
    if (!out.empty()) out += '*';
    out += name;
    if (exp > 1) out += '^' + std::to_string(exp);
  }
  return out.empty() ? "1" : out;
}

ParamPoly::ParamPoly(long value) : ParamPoly(Rational(value)) {}

ParamPoly::ParamPoly(const Rational& value) {
  if (value != 0) terms_.emplace(Monomial{}, value);
}

ParamPoly ParamPoly::parameter(std::string name) {
  return term(Rational(1), Monomial::variable(std::move(name)));
}

ParamPoly ParamPoly::term(const Rational& coefficient, Monomial monomial) {
  ParamPoly p;
  if (coefficient != 0) p.terms_.emplace(std::move(monomial), coefficient);
  return p;
}

bool ParamPoly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational ParamPoly::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Rational(0) : it->second;
}

std::uint32_t ParamPoly::total_degree() const noexcept {
  return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
}

std::set<std::string> ParamPoly::parameters() const {
  std::set<std::string> names;
  for (const auto& [m, c] : terms_) {
    for (const auto& f : m.factors()) names.insert(f.first);
  }
  return names;
}

namespace {

Rational rational_pow(const Rational& base, std::uint32_t exp) {
  Rational out(1);
  for (std::uint32_t i = 0; i < exp; ++i) out *= base;
  return out;
}

}  // namespace

Rational ParamPoly::eval(const Assignment& assignment) const {
  Rational total(0);
  for (const auto& [m, c] : terms_) {
    Rational value = c;
    for (const auto& [name, exp] : m.factors()) {
      auto it = assignment.find(name);
      if (it == assignment.end()) throw MissingParameter(name);
      value *= rational_pow(it->second, exp);
    }
    total += value;
  }
  return total;
}

ParamPoly ParamPoly::substitute(const Assignment& assignment) const {
  ParamPoly out;
  for (const auto& [m, c] : terms_) {
    Rational value = c;
    Monomial rest;
    for (const auto& [name, exp] : m.factors()) {
      if (auto it = assignment.find(name); it != assignment.end()) {
        value *= rational_pow(it->second, exp);
      } else {
        rest = rest * Monomial::variable(name, exp);
      }
    }
    out.add_term(rest, value);
  }
  return out;
}

ParamPoly ParamPoly::substitute(const std::map<std::string, ParamPoly>& replacement) const {
  ParamPoly out;
  for (const auto& [m, c] : terms_) {
    ParamPoly value(c);
    for (const auto& [name, exp] : m.factors()) {
      if (auto it = replacement.find(name); it != replacement.end()) {
        value *= it->second.pow(exp);
      } else {
        value *= term(Rational(1), Monomial::variable(name, exp));
      }
    }
    out += value;
  }
  return out;
}

ParamPoly ParamPoly::pow(std::uint32_t exponent) const {
  ParamPoly out(1L);
  ParamPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) out *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return out;
}

void ParamPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
  ParamPoly out;
  if (a.is_zero() || b.is_zero()) return out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

ParamPoly& ParamPoly::operator*=(const ParamPoly& other) {
  *this = *this * other;
  return *this;
}

std::string ParamPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    const bool negative = c < 0;
    Rational magnitude = abs(c);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      out += poissonlike::to_string(magnitude);
    } else if (magnitude == 1) {
      out += m.to_string();
    } else {
      out += poissonlike::to_string(magnitude) + "*" + m.to_string();
    }
  }
  return out;
}

bool ParamPoly::needs_parentheses() const noexcept { return terms_.size() > 1; }

std::ostream& operator<<(std::ostream& os, const ParamPoly& p) { return os << p.to_string(); }

// ---------------------------------------------------------------------------
// Literal parser

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  ParamPoly parse() {
    ParamPoly value = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& reason) const {
    throw ParseError(reason + " at column " + std::to_string(pos_ + 1) + " in '" +
                     std::string(text_) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::string(text_.substr(start, pos_ - start));
  }

  ParamPoly expr() {
    ParamPoly value = term();
    while (true) {
      if (accept('+')) {
        value += term();
      } else if (accept('-')) {
        value -= term();
      } else {
        return value;
      }
    }
  }

  ParamPoly term() {
    ParamPoly value = factor();
    while (accept('*')) value *= factor();
    return value;
  }

  ParamPoly factor() {
    if (accept('-')) return -factor();
    if (accept('+')) return factor();
    ParamPoly base = atom();
    if (accept('^')) {
      std::string e = digits();
      if (e.size() > 6) fail("exponent too large");
      base = base.pow(static_cast<std::uint32_t>(std::stoul(e)));
    }
    return base;
  }

  ParamPoly atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      ParamPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = digits();
      std::string den = "1";
      if (accept('/')) den = digits();
      return ParamPoly(parse_rational(num + "/" + den));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      return ParamPoly::parameter(std::string(text_.substr(start, pos_ - start)));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ParamPoly ParamPoly::parse(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace poissonlike
