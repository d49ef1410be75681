#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace dlab {

using BigInt = mpz_class;

/// Exact fraction in lowest terms with a positive denominator.
///
/// Thin value type over GMP's mpq_class. Every constructor canonicalizes, so
/// equality is structural and `Rational(462, 50) == Rational(231, 25)`.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);
  Rational(const BigInt& num, const BigInt& den = 1);
  explicit Rational(const mpq_class& q);

  /// Parses "p", "p/q" or "-p/q". Throws ParseError on malformed input or q == 0.
  static Rational parse(std::string_view text);

  [[nodiscard]] BigInt num() const { return q_.get_num(); }
  [[nodiscard]] BigInt den() const { return q_.get_den(); }
  [[nodiscard]] bool is_integer() const { return q_.get_den() == 1; }
  [[nodiscard]] int sign() const { return sgn(q_); }
  [[nodiscard]] double to_double() const { return q_.get_d(); }
  /// "p/q" (always with the slash, "5/1" for integers).
  [[nodiscard]] std::string str() const;
  /// Smallest integer >= this.
  [[nodiscard]] BigInt ceil() const;
  [[nodiscard]] Rational abs() const;
  [[nodiscard]] const mpq_class& raw() const { return q_; }

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a);

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class q_{0};
};

Rational pow(const Rational& base, unsigned exponent);

}  // namespace dlab
