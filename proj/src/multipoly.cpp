#include "gencheb/multipoly.hpp"

#include <algorithm>
#include <numeric>

#include "gencheb/errors.hpp"

namespace gencheb {

namespace {

std::string join(const std::vector<std::string>& names) {
  std::string out = "[";
  for (std::size_t k = 0; k < names.size(); ++k) {
    if (k != 0) out += ", ";
    out += names[k];
  }
  return out + "]";
}

void add_term(MultiPoly::Terms& terms, const Monomial& m, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

}  // namespace

MultiPoly::MultiPoly() : vars_(make_vars({})) {}

MultiPoly::MultiPoly(std::vector<std::string> variables) : vars_(make_vars(std::move(variables))) {}

MultiPoly::MultiPoly(GaussianRational c) : vars_(make_vars({})) {
  if (!c.is_zero()) terms_.emplace(Monomial{}, std::move(c));
}

MultiPoly::VarList MultiPoly::make_vars(std::vector<std::string> variables) {
  static const VarList empty = std::make_shared<const std::vector<std::string>>();
  if (variables.empty()) return empty;
  for (std::size_t k = 0; k < variables.size(); ++k) {
    for (std::size_t j = 0; j < k; ++j) {
      if (variables[j] == variables[k]) {
        throw UsageError("duplicate variable '" + variables[k] + "'");
      }
    }
  }
  return std::make_shared<const std::vector<std::string>>(std::move(variables));
}

MultiPoly MultiPoly::constant(std::vector<std::string> variables, const GaussianRational& c) {
  MultiPoly p(std::move(variables));
  if (!c.is_zero()) p.terms_.emplace(Monomial(p.vars_->size(), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> variables, std::string_view name) {
  MultiPoly p(std::move(variables));
  Monomial m(p.vars_->size(), 0);
  m[p.var_index(name)] = 1;
  p.terms_.emplace(std::move(m), GaussianRational(1));
  return p;
}

MultiPoly MultiPoly::monomial(std::vector<std::string> variables, Monomial exponents,
                              const GaussianRational& c) {
  MultiPoly p(std::move(variables));
  if (exponents.size() != p.vars_->size()) {
    throw UsageError("exponent tuple length does not match variable count");
  }
  if (!c.is_zero()) p.terms_.emplace(std::move(exponents), c);
  return p;
}

std::size_t MultiPoly::var_index(std::string_view name) const {
  const auto it = std::find(vars_->begin(), vars_->end(), name);
  if (it == vars_->end()) {
    throw UsageError("unknown variable '" + std::string(name) + "' (ring variables " + join(*vars_) + ")");
  }
  return static_cast<std::size_t>(it - vars_->begin());
}

bool MultiPoly::has_variable(std::string_view name) const {
  return std::find(vars_->begin(), vars_->end(), name) != vars_->end();
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  const Monomial& m = terms_.begin()->first;
  return std::all_of(m.begin(), m.end(), [](std::uint32_t e) { return e == 0; });
}

GaussianRational MultiPoly::constant_term() const { return coefficient(Monomial(vars_->size(), 0)); }

GaussianRational MultiPoly::coefficient(const Monomial& exponents) const {
  const auto it = terms_.find(exponents);
  return it == terms_.end() ? GaussianRational{} : it->second;
}

long MultiPoly::degree() const {
  long best = -1;
  for (const auto& [m, c] : terms_) {
    best = std::max(best, static_cast<long>(std::accumulate(m.begin(), m.end(), 0UL)));
  }
  return best;
}

long MultiPoly::degree(std::string_view name) const {
  const std::size_t k = var_index(name);
  long best = -1;
  for (const auto& [m, c] : terms_) best = std::max(best, static_cast<long>(m[k]));
  return best;
}

bool MultiPoly::same_ring(const MultiPoly& other) const {
  return vars_ == other.vars_ || *vars_ == *other.vars_;
}

MultiPoly MultiPoly::with_variables(std::vector<std::string> variables) const {
  MultiPoly out(std::move(variables));
  std::vector<std::size_t> target(vars_->size());
  constexpr std::size_t absent = static_cast<std::size_t>(-1);
  for (std::size_t k = 0; k < vars_->size(); ++k) {
    const auto it = std::find(out.vars_->begin(), out.vars_->end(), (*vars_)[k]);
    target[k] = it == out.vars_->end() ? absent : static_cast<std::size_t>(it - out.vars_->begin());
  }
  for (const auto& [m, c] : terms_) {
    Monomial mapped(out.vars_->size(), 0);
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (m[k] == 0) continue;
      if (target[k] == absent) {
        throw UsageError("variable '" + (*vars_)[k] + "' is missing from target ring " + join(*out.vars_));
      }
      mapped[target[k]] = m[k];
    }
    out.terms_.emplace(std::move(mapped), c);
  }
  return out;
}

void MultiPoly::align(MultiPoly& lhs, MultiPoly& rhs) {
  if (lhs.same_ring(rhs)) return;
  if (lhs.vars_->empty()) {
    lhs = lhs.with_variables(*rhs.vars_);
  } else if (rhs.vars_->empty()) {
    rhs = rhs.with_variables(*lhs.vars_);
  } else {
    throw UsageError("cannot combine polynomials over " + join(*lhs.vars_) + " and " + join(*rhs.vars_));
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  if (!same_ring(rhs)) {
    MultiPoly r = rhs;
    align(*this, r);
    return *this += r;
  }
  for (const auto& [m, c] : rhs.terms_) add_term(terms_, m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
  if (!same_ring(rhs)) {
    MultiPoly r = rhs;
    align(*this, r);
    return *this -= r;
  }
  for (const auto& [m, c] : rhs.terms_) add_term(terms_, m, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs) {
  if (!lhs.same_ring(rhs)) {
    MultiPoly l = lhs;
    MultiPoly r = rhs;
    MultiPoly::align(l, r);
    return l * r;
  }
  MultiPoly::Terms out;
  Monomial m(lhs.vars_->size());
  for (const auto& [ml, cl] : lhs.terms_) {
    for (const auto& [mr, cr] : rhs.terms_) {
      for (std::size_t k = 0; k < m.size(); ++k) m[k] = ml[k] + mr[k];
      add_term(out, m, cl * cr);
    }
  }
  return MultiPoly(lhs.vars_, std::move(out));
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

bool operator==(const MultiPoly& lhs, const MultiPoly& rhs) {
  if (lhs.same_ring(rhs)) return lhs.terms_ == rhs.terms_;
  if (lhs.vars_->empty() || rhs.vars_->empty()) {
    return lhs.is_constant() && rhs.is_constant() && lhs.constant_term() == rhs.constant_term();
  }
  return false;
}

MultiPoly MultiPoly::pow(unsigned exponent) const {
  MultiPoly result = MultiPoly::constant(*vars_, GaussianRational(1));
  MultiPoly base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base = base * base;
  }
  return result;
}

GaussianRational MultiPoly::evaluate_exact(std::span<const GaussianRational> point) const {
  if (point.size() != vars_->size()) {
    throw UsageError("evaluation point has " + std::to_string(point.size()) + " coordinates, ring has " +
                     std::to_string(vars_->size()));
  }
  std::vector<std::vector<GaussianRational>> powers(point.size());
  const auto power_of = [&](std::size_t k, std::uint32_t e) -> const GaussianRational& {
    auto& cache = powers[k];
    if (cache.empty()) cache.emplace_back(1);
    while (cache.size() <= e) cache.push_back(cache.back() * point[k]);
    return cache[e];
  };
  GaussianRational sum;
  for (const auto& [m, c] : terms_) {
    GaussianRational term = c;
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (m[k] != 0) term *= power_of(k, m[k]);
    }
    sum += term;
  }
  return sum;
}

std::complex<double> MultiPoly::evaluate(std::span<const double> point) const {
  std::vector<GaussianRational> exact;
  exact.reserve(point.size());
  for (double x : point) exact.emplace_back(BigRational::from_double(x));
  return evaluate_exact(exact).to_complex();
}

std::size_t MultiPoly::max_coeff_bits() const {
  std::size_t best = 0;
  for (const auto& [m, c] : terms_) best = std::max(best, c.bits());
  return best;
}

MultiPoly derivative(const MultiPoly& p, std::string_view name) {
  const std::size_t k = p.var_index(name);
  MultiPoly::Terms out;
  for (const auto& [m, c] : p.terms_) {
    if (m[k] == 0) continue;
    Monomial dm = m;
    dm[k] -= 1;
    add_term(out, dm, c * GaussianRational(static_cast<long>(m[k])));
  }
  return MultiPoly(p.vars_, std::move(out));
}

MultiPoly substitute(const MultiPoly& p, std::span<const MultiPoly> images) {
  if (images.size() != p.vars_->size()) {
    throw UsageError("substitution needs one image per variable of " + join(*p.vars_));
  }
  std::vector<std::vector<MultiPoly>> powers(images.size());
  const auto power_of = [&](std::size_t k, std::uint32_t e) -> const MultiPoly& {
    auto& cache = powers[k];
    if (cache.empty()) cache.emplace_back(1);
    while (cache.size() <= e) cache.push_back(cache.back() * images[k]);
    return cache[e];
  };
  MultiPoly result;
  for (const auto& [m, c] : p.terms_) {
    MultiPoly term(c);
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (m[k] != 0) term *= power_of(k, m[k]);
    }
    result += term;
  }
  return result;
}

}  // namespace gencheb
