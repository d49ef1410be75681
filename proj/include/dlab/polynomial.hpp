#pragma once

#include <string>
#include <vector>

#include "dlab/rational.hpp"

namespace dlab {

/// Univariate polynomial with exact rational coefficients, stored low degree first.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, unsigned power);

  /// -1 for the zero polynomial.
  [[nodiscard]] int degree() const { return static_cast<int>(c_.size()) - 1; }
  [[nodiscard]] bool is_zero() const { return c_.empty(); }
  [[nodiscard]] Rational coefficient(std::size_t power) const;
  [[nodiscard]] const std::vector<Rational>& coefficients() const { return c_; }
  [[nodiscard]] Rational leading() const;

  [[nodiscard]] Rational operator()(const Rational& x) const;
  /// p(a*x + b).
  [[nodiscard]] Polynomial compose_affine(const Rational& a, const Rational& b) const;
  /// "(4/3)k^3 - 2k^2 + (8/3)k - 1".
  [[nodiscard]] std::string str(char var = 'k') const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& s);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<Rational> c_;
};

/// B_0..B_n with the B_1 = +1/2 convention (Akiyama-Tanigawa).
std::vector<Rational> bernoulli_numbers(unsigned n);

/// Faulhaber's polynomial S_p(n) = sum_{j=1}^{n} j^p.
Polynomial faulhaber(unsigned p);

/// T(n) = sum_{j=1}^{n} p(j), in closed form.
Polynomial prefix_sum(const Polynomial& p);

/// Cauchy bound: every real root x of p satisfies |x| < 1 + max_{i<deg} |a_i| / |a_deg|.
Rational cauchy_root_bound(const Polynomial& p);

}  // namespace dlab
