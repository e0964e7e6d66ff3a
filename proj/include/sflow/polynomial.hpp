#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sflow/errors.hpp"
#include "sflow/rational.hpp"

namespace sflow {

/// Sparse multivariate polynomial with rational coefficients.
///
/// Variables are identified by index; a monomial is the vector of exponents
/// with trailing zeros trimmed, so structurally equal polynomials compare
/// equal. Zero coefficients are never stored.
class Polynomial {
 public:
  using Monomial = std::vector<unsigned>;

  Polynomial() = default;
  Polynomial(const Rational& c) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) terms_.emplace(Monomial{}, c);
  }
  template <std::integral I>
  Polynomial(I c) : Polynomial(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static Polynomial variable(std::size_t index) {
    Monomial m(index + 1, 0);
    m[index] = 1;
    Polynomial p;
    p.terms_.emplace(std::move(m), Rational(1));
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
  }
  Rational constant_term() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Rational(0) : it->second;
  }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  unsigned total_degree() const {
    unsigned best = 0;
    for (const auto& [mono, c] : terms_) {
      unsigned d = 0;
      for (unsigned e : mono) d += e;
      best = std::max(best, d);
    }
    return best;
  }

  Rational evaluate(std::span<const Rational> point) const {
    Rational sum(0);
    for (const auto& [mono, c] : terms_) {
      Rational term = c;
      for (std::size_t i = 0; i < mono.size(); ++i) {
        if (mono[i] == 0) continue;
        if (i >= point.size()) throw domain_error("evaluation point has too few coordinates");
        term *= pow(point[i], mono[i]);
      }
      sum += term;
    }
    return sum;
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [mono, c] : o.terms_) accumulate(mono, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [mono, c] : o.terms_) accumulate(mono, -c);
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(const Polynomial& a) {
    Polynomial r;
    for (const auto& [mono, c] : a.terms_) r.terms_.emplace(mono, -c);
    return r;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        Monomial m(std::max(ma.size(), mb.size()), 0);
        for (std::size_t i = 0; i < ma.size(); ++i) m[i] += ma[i];
        for (std::size_t i = 0; i < mb.size(); ++i) m[i] += mb[i];
        r.accumulate(m, ca * cb);
      }
    }
    return r;
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  /// Human-readable form, e.g. "-4*k^2*r + 2*r". Unnamed variables print as x<i>.
  std::string to_string(std::span<const std::string> names = {}) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    // Highest total degree first for readability.
    std::vector<std::pair<Monomial, Rational>> ordered(terms_.begin(), terms_.end());
    std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
      unsigned da = 0, db = 0;
      for (unsigned e : a.first) da += e;
      for (unsigned e : b.first) db += e;
      return da > db;
    });
    for (const auto& [mono, c] : ordered) {
      Rational mag = c.abs();
      if (first) {
        if (c.sign() < 0) out += "-";
      } else {
        out += c.sign() < 0 ? " - " : " + ";
      }
      first = false;
      std::string factors;
      for (std::size_t i = 0; i < mono.size(); ++i) {
        if (mono[i] == 0) continue;
        if (!factors.empty()) factors += "*";
        factors += i < names.size() ? names[i] : "x" + std::to_string(i);
        if (mono[i] > 1) factors += "^" + std::to_string(mono[i]);
      }
      if (factors.empty()) {
        out += mag.to_string();
      } else if (mag == Rational(1)) {
        out += factors;
      } else {
        out += mag.to_string() + "*" + factors;
      }
    }
    return out;
  }

 private:
  void accumulate(Monomial mono, const Rational& c) {
    while (!mono.empty() && mono.back() == 0) mono.pop_back();
    auto [it, inserted] = terms_.try_emplace(std::move(mono), c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    } else if (c.is_zero()) {
      terms_.erase(it);
    }
  }

  std::map<Monomial, Rational> terms_;
};

/// Element of the rational function field Q(x_0, x_1, ...), kept as an
/// unreduced numerator/denominator pair. Zero testing only needs the
/// numerator, so no polynomial gcd is required.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(1) {}
  RationalFunction(const Rational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  template <std::integral I>
  RationalFunction(I c) : RationalFunction(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(Polynomial p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw domain_error("rational function with zero denominator");
    normalize();
  }

  static RationalFunction variable(std::size_t index) { return {Polynomial::variable(index)}; }

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  Rational evaluate(std::span<const Rational> point) const {
    Rational d = den_.evaluate(point);
    if (d.is_zero()) throw critical_level_error("rational function pole at evaluation point");
    return num_.evaluate(point) / d;
  }

  RationalFunction& operator+=(const RationalFunction& o) {
    if (den_ == o.den_) {
      num_ += o.num_;
    } else {
      num_ = num_ * o.den_ + o.num_ * den_;
      den_ = den_ * o.den_;
    }
    normalize();
    return *this;
  }
  RationalFunction& operator-=(const RationalFunction& o) { return *this += -o; }
  RationalFunction& operator*=(const RationalFunction& o) {
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
  }
  RationalFunction& operator/=(const RationalFunction& o) {
    if (o.is_zero()) throw critical_level_error("division by the zero rational function");
    Polynomial n = num_ * o.den_;
    den_ = den_ * o.num_;
    num_ = std::move(n);
    normalize();
    return *this;
  }

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend RationalFunction operator-(const RationalFunction& a) {
    RationalFunction r = a;
    r.num_ = -r.num_;
    return r;
  }
  /// Field equality (cross multiplication), not structural equality.
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

  std::string to_string(std::span<const std::string> names = {}) const {
    if (den_.is_constant() && den_.constant_term() == Rational(1)) return num_.to_string(names);
    return "(" + num_.to_string(names) + ") / (" + den_.to_string(names) + ")";
  }

 private:
  void normalize() {
    if (num_.is_zero()) {
      den_ = Polynomial(1);
      return;
    }
    if (!den_.is_constant()) {
      // Proportional numerator and denominator collapse to a constant.
      const Rational ratio = num_.terms().rbegin()->second / den_.terms().rbegin()->second;
      if (num_.terms().rbegin()->first == den_.terms().rbegin()->first && (num_ - den_ * Polynomial(ratio)).is_zero()) {
        num_ = Polynomial(ratio);
        den_ = Polynomial(1);
        return;
      }
    }
    if (den_.is_constant()) {
      const Rational c = den_.constant_term();
      if (c != Rational(1)) {
        num_ = num_ * Polynomial(Rational(1) / c);
        den_ = Polynomial(1);
      }
    }
  }

  Polynomial num_;
  Polynomial den_;
};

}  // namespace sflow
