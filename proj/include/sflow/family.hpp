#pragma once

#include <compare>
#include <cstddef>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "sflow/errors.hpp"

namespace sflow {

enum class FamilyKind { Psl22, Spo2_2r, D21, F4 };

/// One of the four superalgebra families covered by the library.
///
/// Parameters: `r` for spo(2|2r) (r >= 3); coprime `m`, `n` and a positive
/// integer `t` for D(2,1;m/n), whose level is fixed to k = -mnt/(m+n).
/// Unused parameters stay zero so that equality is structural.
struct Family {
  FamilyKind kind = FamilyKind::Psl22;
  int r = 0;
  int m = 0;
  int n = 0;
  int t = 0;

  static Family psl22() { return Family{FamilyKind::Psl22}; }
  static Family spo(int rank) {
    Family f{FamilyKind::Spo2_2r, rank};
    f.validate();
    return f;
  }
  static Family d21(int m, int n, int t) {
    Family f{FamilyKind::D21, 0, m, n, t};
    f.validate();
    return f;
  }
  static Family f4() { return Family{FamilyKind::F4}; }

  void validate() const {
    switch (kind) {
      case FamilyKind::Psl22:
      case FamilyKind::F4:
        if (r != 0 || m != 0 || n != 0 || t != 0) throw domain_error("unexpected family parameters");
        return;
      case FamilyKind::Spo2_2r:
        if (r < 3) throw domain_error("spo(2|2r) requires r >= 3, got r=" + std::to_string(r));
        return;
      case FamilyKind::D21:
        if (m < 1 || n < 1 || t < 1) throw domain_error("D(2,1;m/n) requires m, n, t >= 1");
        if (std::gcd(m, n) != 1) {
          throw domain_error("D(2,1;m/n) requires gcd(m,n)=1, got m=" + std::to_string(m) +
                             ", n=" + std::to_string(n));
        }
        return;
    }
  }

  /// Number of epsilon/delta coordinates of a weight.
  std::size_t dimension() const {
    switch (kind) {
      case FamilyKind::Psl22: return 2;
      case FamilyKind::Spo2_2r: return static_cast<std::size_t>(r);
      case FamilyKind::D21: return 2;
      case FamilyKind::F4: return 3;
    }
    return 0;
  }

  std::size_t ideal_count() const { return kind == FamilyKind::D21 ? 2 : 1; }

  /// Canonical CLI spelling, e.g. "d21:m=1,n=2,t=1".
  std::string spec_string() const {
    switch (kind) {
      case FamilyKind::Psl22: return "psl22";
      case FamilyKind::Spo2_2r: return "spo:r=" + std::to_string(r);
      case FamilyKind::D21:
        return "d21:m=" + std::to_string(m) + ",n=" + std::to_string(n) + ",t=" + std::to_string(t);
      case FamilyKind::F4: return "f4";
    }
    return {};
  }

  /// Display name such as "spo(2|6)".
  std::string display_name() const {
    switch (kind) {
      case FamilyKind::Psl22: return "psl(2|2)";
      case FamilyKind::Spo2_2r: return "spo(2|" + std::to_string(2 * r) + ")";
      case FamilyKind::D21: return "D(2,1;" + std::to_string(m) + "/" + std::to_string(n) + ")";
      case FamilyKind::F4: return "F(4)";
    }
    return {};
  }

  friend auto operator<=>(const Family&, const Family&) = default;
};

/// Standard choices of rho_R (plus the extra F(4) choice omega_3^1).
enum class RhoChoice {
  Omega1,            ///< omega_1^1: psl(2|2), D(2,1;m/n) first ideal, F(4)
  OmegaLast,         ///< omega_r^1 of so(2r)
  OmegaNextToLast,   ///< omega_{r-1}^1 of so(2r)
  Omega1Second,      ///< omega_1^2: first fundamental weight of D(2,1;m/n)'s second sl(2)
  Omega3,            ///< omega_3^1 of so(7); only reachable through the F(4) weight shift
};

inline std::vector<RhoChoice> rho_choices(const Family& f) {
  switch (f.kind) {
    case FamilyKind::Psl22: return {RhoChoice::Omega1};
    case FamilyKind::Spo2_2r: return {RhoChoice::OmegaLast, RhoChoice::OmegaNextToLast};
    case FamilyKind::D21: return {RhoChoice::Omega1, RhoChoice::Omega1Second};
    case FamilyKind::F4: return {RhoChoice::Omega1, RhoChoice::Omega3};
  }
  return {};
}

inline RhoChoice default_rho(const Family& f) {
  return f.kind == FamilyKind::Spo2_2r ? RhoChoice::OmegaLast : RhoChoice::Omega1;
}

inline void require_rho(const Family& f, RhoChoice rho) {
  for (RhoChoice c : rho_choices(f)) {
    if (c == rho) return;
  }
  throw domain_error("rho choice not available for " + f.display_name());
}

inline std::string to_string(RhoChoice rho) {
  switch (rho) {
    case RhoChoice::Omega1: return "w1";
    case RhoChoice::OmegaLast: return "wr";
    case RhoChoice::OmegaNextToLast: return "wr-1";
    case RhoChoice::Omega1Second: return "w1^2";
    case RhoChoice::Omega3: return "w3";
  }
  return {};
}

inline RhoChoice parse_rho(std::string_view s) {
  if (s == "w1") return RhoChoice::Omega1;
  if (s == "wr") return RhoChoice::OmegaLast;
  if (s == "wr-1") return RhoChoice::OmegaNextToLast;
  if (s == "w1^2") return RhoChoice::Omega1Second;
  if (s == "w3") return RhoChoice::Omega3;
  throw parse_error("unknown rho choice '" + std::string(s) + "' (expected w1, wr, wr-1, w1^2, w3)");
}

namespace detail {

inline int parse_int_param(std::string_view s, std::string_view what) {
  if (s.empty()) throw parse_error("missing value for " + std::string(what));
  std::size_t i = 0;
  bool neg = false;
  if (s[0] == '-' || s[0] == '+') {
    neg = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) throw parse_error("missing digits for " + std::string(what));
  long v = 0;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw parse_error("non-integer value for " + std::string(what));
    v = v * 10 + (s[i] - '0');
    if (v > 1'000'000) throw parse_error("parameter " + std::string(what) + " too large");
  }
  return static_cast<int>(neg ? -v : v);
}

}  // namespace detail

/// Parses `psl22`, `spo:r=<int>`, `d21:m=<int>,n=<int>,t=<int>` or `f4`.
inline Family parse_family(std::string_view text) {
  if (text == "psl22") return Family::psl22();
  if (text == "f4") return Family::f4();
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw parse_error("unknown family '" + std::string(text) + "'");
  }
  const std::string_view head = text.substr(0, colon);
  std::string_view rest = text.substr(colon + 1);
  int r = -1, m = -1, n = -1, t = -1;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw parse_error("expected key=value in '" + std::string(text) + "'");
    const std::string_view key = item.substr(0, eq);
    const int value = detail::parse_int_param(item.substr(eq + 1), key);
    int* slot = key == "r" ? &r : key == "m" ? &m : key == "n" ? &n : key == "t" ? &t : nullptr;
    if (slot == nullptr) throw parse_error("unknown family parameter '" + std::string(key) + "'");
    if (*slot != -1) throw parse_error("duplicate family parameter '" + std::string(key) + "'");
    *slot = value;
  }
  if (head == "spo") {
    if (r == -1 || m != -1 || n != -1 || t != -1) throw parse_error("spo expects exactly r=<int>");
    return Family::spo(r);
  }
  if (head == "d21") {
    if (m == -1 || n == -1 || t == -1 || r != -1) throw parse_error("d21 expects m=<int>,n=<int>,t=<int>");
    return Family::d21(m, n, t);
  }
  throw parse_error("unknown family '" + std::string(head) + "'");
}

}  // namespace sflow
