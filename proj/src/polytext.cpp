#include "gencheb/polytext.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "gencheb/errors.hpp"

namespace gencheb {

namespace {

constexpr unsigned kMaxExponent = 1U << 20;

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& variables)
      : text_(text), vars_(variables), imaginary_is_symbol_(std::find(variables.begin(), variables.end(), "i") != variables.end()) {}

  MultiPoly parse() {
    MultiPoly result = expr();
    skip_ws();
    if (pos_ != text_.size()) {
      throw ParseError(std::string("unexpected character '") + text_[pos_] + "'", pos_);
    }
    return result.with_variables(vars_);
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  MultiPoly expr() {
    bool negate = false;
    if (peek('-') || peek('+')) {
      negate = text_[pos_] == '-';
      ++pos_;
    }
    MultiPoly acc = term();
    if (negate) acc = -acc;
    while (peek('+') || peek('-')) {
      const bool minus = text_[pos_] == '-';
      ++pos_;
      MultiPoly rhs = term();
      if (minus) {
        acc -= rhs;
      } else {
        acc += rhs;
      }
    }
    return acc;
  }

  MultiPoly term() {
    MultiPoly acc = factor();
    while (peek('*')) {
      ++pos_;
      acc *= factor();
    }
    return acc;
  }

  MultiPoly factor() {
    skip_ws();
    if (pos_ >= text_.size()) {
      throw ParseError("expected a term", pos_);
    }
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly inner = expr();
      if (!peek(')')) {
        throw ParseError("expected ')'", pos_);
      }
      ++pos_;
      if (peek('^')) {
        ++pos_;
        inner = inner.pow(exponent());
      }
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return MultiPoly(GaussianRational(rational()));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string name(text_.substr(start, pos_ - start));
      MultiPoly base;
      if (name == "i" && !imaginary_is_symbol_) {
        base = MultiPoly(GaussianRational::i());
      } else {
        const auto it = std::find(vars_.begin(), vars_.end(), name);
        if (it == vars_.end()) {
          throw ParseError("unknown symbol '" + name + "'", start);
        }
        base = MultiPoly::variable(vars_, name);
      }
      if (peek('^')) {
        ++pos_;
        base = base.pow(exponent());
      }
      return base;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  std::string digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) {
      throw ParseError("expected digits", pos_);
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  BigRational rational() {
    std::string num = digits();
    if (peek('/')) {
      ++pos_;
      const std::size_t den_at = pos_;
      std::string den = digits();
      if (std::all_of(den.begin(), den.end(), [](char d) { return d == '0'; })) {
        throw ParseError("zero denominator", den_at);
      }
      return BigRational::from_string(num + "/" + den);
    }
    return BigRational::from_string(num);
  }

  unsigned exponent() {
    const std::size_t start = (skip_ws(), pos_);
    const std::string d = digits();
    if (d.size() > 7 || std::stoul(d) > kMaxExponent) {
      throw ParseError("exponent too large", start);
    }
    return static_cast<unsigned>(std::stoul(d));
  }

  std::string_view text_;
  const std::vector<std::string>& vars_;
  bool imaginary_is_symbol_;
  std::size_t pos_ = 0;
};

/// Graded order, largest first.
bool graded_before(const Monomial& lhs, const Monomial& rhs) {
  const auto dl = std::accumulate(lhs.begin(), lhs.end(), 0UL);
  const auto dr = std::accumulate(rhs.begin(), rhs.end(), 0UL);
  if (dl != dr) return dl > dr;
  return std::lexicographical_compare(rhs.begin(), rhs.end(), lhs.begin(), lhs.end());
}

std::string render_monomial(const Monomial& m, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (m[k] == 0) continue;
    if (!out.empty()) out += '*';
    out += names[k];
    if (m[k] > 1) out += '^' + std::to_string(m[k]);
  }
  return out;
}

/// Splits a coefficient into a sign and an unsigned magnitude string.
std::pair<bool, std::string> signed_magnitude(const GaussianRational& c) {
  if (c.is_real()) return {c.re().sign() < 0, c.re().abs().to_string()};
  if (c.re().is_zero()) {
    const BigRational mag = c.im().abs();
    return {c.im().sign() < 0, mag.is_one() ? "i" : mag.to_string() + "*i"};
  }
  return {false, c.to_string()};
}

}  // namespace

MultiPoly parse_poly(std::string_view text, const std::vector<std::string>& variables) {
  return Parser(text, variables).parse();
}

std::string render(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::vector<const MultiPoly::Terms::value_type*> order;
  order.reserve(p.size());
  for (const auto& entry : p.terms()) order.push_back(&entry);
  std::sort(order.begin(), order.end(),
            [](const auto* lhs, const auto* rhs) { return graded_before(lhs->first, rhs->first); });

  std::string out;
  bool first = true;
  for (const auto* entry : order) {
    const auto [negative, magnitude] = signed_magnitude(entry->second);
    const std::string mono = render_monomial(entry->first, p.variables());
    std::string body;
    if (mono.empty()) {
      body = magnitude;
    } else if (magnitude == "1") {
      body = mono;
    } else {
      body = magnitude + "*" + mono;
    }
    if (first) {
      out += negative ? "-" + body : body;
      first = false;
    } else {
      out += (negative ? " - " : " + ") + body;
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << render(p); }

}  // namespace gencheb
