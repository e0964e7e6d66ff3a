#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sflow/errors.hpp"
#include "sflow/family.hpp"
#include "sflow/rational.hpp"

namespace sflow {

/// Exact weight of h^natural in the family's epsilon/delta basis.
///
/// Basis order: (delta1, delta2) for psl(2|2), (eps1..eps_r) for spo(2|2r),
/// (eps2, eps3) for D(2,1;m/n), (eps1, eps2, eps3) for F(4). psl(2|2)
/// weights lie on the line spanned by delta1 - delta2.
class Weight {
 public:
  Weight() = default;
  Weight(Family family, std::vector<Rational> coords)
      : family_(family), coords_(std::move(coords)) {
    if (coords_.size() != family_.dimension()) {
      throw domain_error(family_.display_name() + " weights have " +
                         std::to_string(family_.dimension()) + " coordinates, got " +
                         std::to_string(coords_.size()));
    }
    if (family_.kind == FamilyKind::Psl22 && !(coords_[0] + coords_[1]).is_zero()) {
      throw domain_error("psl(2|2) weights must be multiples of delta1 - delta2");
    }
  }

  static Weight zero(const Family& family) {
    return Weight(family, std::vector<Rational>(family.dimension(), Rational(0)));
  }

  const Family& family() const { return family_; }
  const std::vector<Rational>& coords() const { return coords_; }
  std::size_t size() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }

  bool is_zero() const {
    for (const auto& c : coords_) {
      if (!c.is_zero()) return false;
    }
    return true;
  }

  Weight& operator+=(const Weight& o) {
    require_same(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
  }
  Weight& operator-=(const Weight& o) {
    require_same(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
  }
  Weight& operator*=(const Rational& s) {
    for (auto& c : coords_) c *= s;
    return *this;
  }

  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator-(Weight a) { return a *= Rational(-1); }
  friend Weight operator*(const Rational& s, Weight a) { return a *= s; }
  friend Weight operator*(Weight a, const Rational& s) { return a *= s; }

  friend bool operator==(const Weight&, const Weight&) = default;
  /// Lexicographic on (family, coordinates).
  friend std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
    if (auto c = a.family_ <=> b.family_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.coords_.begin(), a.coords_.end(),
                                                  b.coords_.begin(), b.coords_.end());
  }

 private:
  void require_same(const Weight& o) const {
    if (family_ != o.family_) throw domain_error("weights belong to different families");
  }

  Family family_;
  std::vector<Rational> coords_;
};

/// Comma-joined canonical coordinates, e.g. "3/2,0,-1".
inline std::string format_coords(const std::vector<Rational>& coords) {
  std::string out;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i != 0) out += ",";
    out += coords[i].to_string();
  }
  return out;
}

inline std::string format_coords(const Weight& w) { return format_coords(w.coords()); }

inline std::vector<Rational> parse_coords(std::string_view text) {
  std::vector<Rational> coords;
  if (text.empty()) throw parse_error("empty weight literal");
  while (true) {
    const auto comma = text.find(',');
    coords.push_back(Rational::parse(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return coords;
}

/// Parses a weight literal such as `3/2,3/2,1/2` for the given family.
inline Weight parse_weight(const Family& family, std::string_view text) {
  return Weight(family, parse_coords(text));
}

/// Highest weight (nu, ell): h^natural-weight and lowest L_0 eigenvalue.
struct HighestWeight {
  Weight nu;
  Rational ell;

  friend bool operator==(const HighestWeight&, const HighestWeight&) = default;
};

}  // namespace sflow
