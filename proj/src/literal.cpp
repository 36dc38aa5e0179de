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

#include "poissonlike/literal.hpp"

#include <cctype>
#include <string>

#include "poissonlike/errors.hpp"

namespace poissonlike {

namespace {

class ElementParser {
 public:
  ElementParser(std::string_view text, Space side, std::size_t n, bool coordinates)
      : text_(text), side_(side), n_(n), coordinates_(coordinates) {}

  PolyMultiVector parse() {
    PolyMultiVector value = expr();
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

  bool at_digit() {
    skip_ws();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  std::string digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::string(text_.substr(start, pos_ - start));
  }

  PolyMultiVector scalar(const ParamPoly& c) const {
    return PolyMultiVector::monomial(side_, n_, std::vector<unsigned>(n_, 0), MultiIndex{}, c);
  }

  static bool exterior_degree_zero(const PolyMultiVector& v) {
    for (const auto& [b, c] : v.terms()) {
      if (!b.idx.empty()) return false;
    }
    return true;
  }

  PolyMultiVector expr() {
    PolyMultiVector value = term();
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

  PolyMultiVector term() {
    if (accept('-')) return -term();
    if (accept('+')) return term();
    PolyMultiVector value = factor();
    while (accept('*')) value = poly_wedge(value, factor());
    return value;
  }

  PolyMultiVector factor() {
    PolyMultiVector value = atom();
    while (accept('^')) {
      if (at_digit() && exterior_degree_zero(value)) {
        std::string e = digits();
        if (e.size() > 6) fail("exponent too large");
        PolyMultiVector base = value;
        value = scalar(ParamPoly(1L));
        for (unsigned long k = std::stoul(e); k > 0; --k) value = poly_wedge(value, base);
      } else {
        value = poly_wedge(value, atom());
      }
    }
    return value;
  }

  PolyMultiVector atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      PolyMultiVector inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == '-') {
      ++pos_;
      return -atom();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = digits();
      std::string den = "1";
      if (accept('/')) den = digits();
      return scalar(ParamPoly(parse_rational(num + "/" + den)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string name(text_.substr(start, pos_ - start));
      if (name.size() > 1 && (name[0] == 'x' || name[0] == 'y' || name[0] == 'z') &&
          name.find_first_not_of("0123456789", 1) == std::string::npos) {
        return generator(name, start);
      }
      return scalar(ParamPoly::parameter(std::move(name)));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  PolyMultiVector generator(const std::string& name, std::size_t start) {
    if (name.size() > 9) fail("index too large in '" + name + "'");
    const auto i = static_cast<unsigned>(std::stoul(name.substr(1)));
    if (i == 0 || i > n_) {
      throw IndexOutOfRange("generator " + name + " outside 1.." + std::to_string(n_) + " in '" +
                            std::string(text_) + "'");
    }
    if (name[0] == 'x') {
      if (!coordinates_) {
        pos_ = start;
        fail("coordinate " + name + " is not allowed in a constant-coefficient element");
      }
      return PolyMultiVector::coordinate(side_, n_, i);
    }
    if (name[0] != generator_prefix(side_)) {
      pos_ = start;
      fail("generator " + name + " does not belong to the " + std::string(space_name(side_)) + " side");
    }
    return PolyMultiVector::monomial(side_, n_, std::vector<unsigned>(n_, 0), MultiIndex{i});
  }

  std::string_view text_;
  Space side_;
  std::size_t n_;
  bool coordinates_;
  std::size_t pos_ = 0;
};

}  // namespace

ExteriorElement parse_exterior(std::string_view text, Space space, std::size_t n) {
  PolyMultiVector v = ElementParser(text, space, n, false).parse();
  ExteriorElement out(space, n);
  for (const auto& [b, c] : v.terms()) out.add_term(b.idx, c);
  return out;
}

PolyMultiVector parse_poly_multivector(std::string_view text, Space side, std::size_t n) {
  return ElementParser(text, side, n, true).parse();
}

}  // namespace poissonlike
