#include "dlab/rational.hpp"

#include <ostream>

#include "dlab/errors.hpp"

namespace dlab {

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Rational::Rational(std::int64_t value) : q_(BigInt(static_cast<long>(value))) {}

Rational::Rational(std::int64_t num, std::int64_t den)
    : Rational(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den))) {}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw InvalidArgument("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(const mpq_class& q) : q_(q) {
  if (q_.get_den() == 0) throw InvalidArgument("rational with zero denominator");
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r'))
    text.remove_suffix(1);
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  const auto slash = text.find('/');
  const std::string_view num_part = text.substr(0, slash);
  const std::string_view den_part =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_digits(num_part) || !is_digits(den_part)) {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  BigInt num{std::string(num_part)};
  BigInt den{std::string(den_part)};
  if (den == 0) throw ParseError("rational with zero denominator");
  if (negative) num = -num;
  return Rational(num, den);
}

std::string Rational::str() const {
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

BigInt Rational::ceil() const {
  BigInt out;
  mpz_cdiv_q(out.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return out;
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(q_))); }

Rational& Rational::operator+=(const Rational& o) {
  q_ += o.q_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  q_ -= o.q_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  q_ *= o.q_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.q_ == 0) throw InvalidArgument("division by zero rational");
  q_ /= o.q_;
  return *this;
}

Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational pow(const Rational& base, unsigned exponent) {
  Rational result(1);
  Rational b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    b *= b;
    exponent >>= 1U;
  }
  return result;
}

}  // namespace dlab
