#include "dlab/polynomial.hpp"

#include <algorithm>

#include "dlab/errors.hpp"

namespace dlab {

Polynomial::Polynomial(std::vector<Rational> coefficients) : c_(std::move(coefficients)) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, unsigned power) {
  std::vector<Rational> coeffs(power + 1);
  coeffs[power] = c;
  return Polynomial(std::move(coeffs));
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back().sign() == 0) c_.pop_back();
}

Rational Polynomial::coefficient(std::size_t power) const {
  return power < c_.size() ? c_[power] : Rational(0);
}

Rational Polynomial::leading() const { return c_.empty() ? Rational(0) : c_.back(); }

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Polynomial Polynomial::compose_affine(const Rational& a, const Rational& b) const {
  const Polynomial inner({b, a});
  Polynomial acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= inner;
    acc += Polynomial::constant(*it);
  }
  return acc;
}

std::string Polynomial::str(char var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const Rational& c = c_[i];
    if (c.sign() == 0) continue;
    const Rational mag = c.abs();
    if (out.empty()) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    const bool unit = mag == Rational(1);
    if (!unit || i == 0) {
      out += mag.is_integer() ? mag.num().get_str() : "(" + mag.str() + ")";
    }
    if (i >= 1) out += var;
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> out(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(out);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  for (auto& c : c_) c *= s;
  trim();
  return *this;
}

std::vector<Rational> bernoulli_numbers(unsigned n) {
  std::vector<Rational> out(n + 1);
  std::vector<Rational> row(n + 1);
  for (unsigned m = 0; m <= n; ++m) {
    row[m] = Rational(1, static_cast<std::int64_t>(m) + 1);
    for (unsigned j = m; j >= 1; --j) {
      row[j - 1] = Rational(static_cast<std::int64_t>(j)) * (row[j - 1] - row[j]);
    }
    out[m] = row[0];
  }
  return out;
}

Polynomial faulhaber(unsigned p) {
  // S_p(n) = 1/(p+1) * sum_{i=0}^{p} C(p+1, i) B_i n^{p+1-i}, with B_1 = +1/2.
  const auto bernoulli = bernoulli_numbers(p);
  std::vector<Rational> coeffs(p + 2);
  BigInt binom = 1;
  for (unsigned i = 0; i <= p; ++i) {
    coeffs[p + 1 - i] = Rational(binom) * bernoulli[i] / Rational(static_cast<std::int64_t>(p) + 1);
    binom = binom * (p + 1 - i) / (i + 1);
  }
  return Polynomial(std::move(coeffs));
}

Polynomial prefix_sum(const Polynomial& p) {
  Polynomial out;
  for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
    out += faulhaber(static_cast<unsigned>(i)) * p.coefficients()[i];
  }
  return out;
}

Rational cauchy_root_bound(const Polynomial& p) {
  if (p.degree() < 1) return Rational(1);
  const Rational lead = p.leading().abs();
  Rational worst(0);
  for (int i = 0; i < p.degree(); ++i) worst = std::max(worst, p.coefficients()[i].abs());
  return Rational(1) + worst / lead;
}

}  // namespace dlab
