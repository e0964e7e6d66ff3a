#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "sflow/errors.hpp"

namespace sflow {

/// Arbitrary precision rational number.
///
/// Thin value wrapper around GMP's mpq_class. The value is always canonical:
/// lowest terms with a strictly positive denominator, so textual output is
/// unique ("p" for integers, "p/q" otherwise).
class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I value) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<I>) {
      q_ = mpq_class(static_cast<signed long>(value));
    } else {
      q_ = mpq_class(static_cast<unsigned long>(value));
    }
  }

  template <std::integral I, std::integral J>
  Rational(I num, J den) {
    if (den == 0) {
      throw domain_error("rational with zero denominator");
    }
    q_ = mpq_class(mpz_class(static_cast<signed long>(num)),
                   mpz_class(static_cast<signed long>(den)));
    q_.canonicalize();
  }

  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Parses "p", "-p", "p/q" or "-p/q" (decimal integers, optional
  /// surrounding whitespace). Decimal points and exponents are rejected.
  static Rational parse(std::string_view text) {
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) {
      text.remove_prefix(1);
    }
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) {
      text.remove_suffix(1);
    }
    auto is_int = [](std::string_view s, bool allow_sign) {
      if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) {
        s.remove_prefix(1);
      }
      if (s.empty()) return false;
      for (char c : s) {
        if (c < '0' || c > '9') return false;
      }
      return true;
    };
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"}
                                                           : text.substr(slash + 1);
    if (!is_int(num, true) || !is_int(den, false)) {
      throw parse_error("invalid rational literal '" + std::string(text) + "'");
    }
    if (num.front() == '+') num.remove_prefix(1);
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) {
      throw parse_error("zero denominator in '" + std::string(text) + "'");
    }
    return Rational(mpq_class(n, d));
  }

  const mpq_class& value() const { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }
  bool is_integer() const { return q_.get_den() == 1; }
  /// True for values in 1/2 + Z.
  bool is_half_odd() const { return q_.get_den() == 2; }

  /// Integer value; throws if not an integer or out of range.
  long to_long() const {
    if (!is_integer() || !q_.get_num().fits_slong_p()) {
      throw domain_error("rational " + to_string() + " is not a machine integer");
    }
    return q_.get_num().get_si();
  }

  std::string to_string() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
  }

  Rational abs() const { return Rational(mpq_class(::abs(q_))); }

  Rational& operator+=(const Rational& o) {
    q_ += o.q_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    q_ -= o.q_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    q_ *= o.q_;
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw domain_error("division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  mpq_class q_;
};

inline Rational pow(Rational base, unsigned exponent) {
  Rational result(1);
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    base *= base;
    exponent >>= 1U;
  }
  return result;
}

}  // namespace sflow
