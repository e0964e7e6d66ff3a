#pragma once

// Symbolic versions of the case-by-case identities: the same kernels as the
// numeric code, evaluated over the rational function field in the level
// parameters and the weight coordinates.

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sflow/bounds.hpp"
#include "sflow/catalog.hpp"
#include "sflow/polynomial.hpp"
#include "sflow/spectral_flow.hpp"

namespace sflow {

using RF = RationalFunction;

struct SymbolicIdentity {
  std::string name;
  std::vector<std::string> variables;
  RF lhs;
  RF rhs;

  RF difference() const { return lhs - rhs; }
  bool holds() const { return difference().is_zero(); }
  std::string difference_string() const { return difference().to_string(variables); }
};

namespace detail {

/// Symbolic setting of one family: level parameters and a generic NS weight.
struct SymbolicPoint {
  std::vector<std::string> variables;
  LevelParams<RF> params;
  std::vector<RF> nu;  ///< NS coordinates
  std::vector<RF> m;   ///< labels m_i in which the bounds are written
};

inline SymbolicPoint symbolic_point(const Family& f, RhoChoice rho) {
  SymbolicPoint s;
  std::size_t next = 0;
  auto fresh = [&](std::string name) {
    s.variables.push_back(std::move(name));
    return RF::variable(next++);
  };
  if (f.kind == FamilyKind::D21) {
    const RF m = fresh("m");
    const RF n = fresh("n");
    const RF t = fresh("t");
    s.params = {-(m * n * t) / (m + n), m, n, t};
  } else {
    s.params.k = fresh("k");
  }
  if (f.kind == FamilyKind::Psl22) {
    // nu = -(r/2)(d1 - d2); the single label is r/2.
    const RF half_r = fresh("r/2");
    s.m = {-half_r, half_r};
    s.nu = s.m;
    return s;
  }
  for (std::size_t i = 0; i < f.dimension(); ++i) s.m.push_back(fresh("m" + std::to_string(i + 1)));
  switch (f.kind) {
    case FamilyKind::Psl22:
      break;
    case FamilyKind::Spo2_2r:
      s.nu = s.m;
      if (rho == RhoChoice::OmegaNextToLast) s.nu.back() = -s.nu.back();
      break;
    case FamilyKind::D21:
      s.nu = s.m;
      s.nu[rho == RhoChoice::Omega1 ? 0 : 1] = -s.nu[rho == RhoChoice::Omega1 ? 0 : 1];
      break;
    case FamilyKind::F4:
      s.nu = s.m;
      s.nu[0] = -s.nu[0];
      break;
  }
  return s;
}

}  // namespace detail

/// Both sides of the flow identity for a generic NS weight, as rational functions.
inline SymbolicIdentity symbolic_mf(const FamilyData& data, RhoChoice rho) {
  reject_omega3(rho);
  require_rho(data.family, rho);
  const auto s = detail::symbolic_point(data.family, rho);
  const auto sides = kernel::mf_sides<RF>(data, rho, s.params, std::span<const RF>(s.nu));
  return {"mf " + data.family.spec_string() + " " + to_string(rho), s.variables, sides.lhs, sides.rhs};
}

inline SymbolicIdentity symbolic_mf(const Family& family, RhoChoice rho) {
  return symbolic_mf(family_data(family), rho);
}

/// Cleared-denominator forms of the flow identity. Each family contributes
/// identities tying the scaled sides to closed polynomial forms, plus the
/// reduced equation between those forms.
inline std::vector<SymbolicIdentity> closing_identities(const FamilyData& data, RhoChoice rho) {
  reject_omega3(rho);
  require_rho(data.family, rho);
  const Family& f = data.family;
  const auto s = detail::symbolic_point(f, rho);
  const auto sides = kernel::mf_sides<RF>(data, rho, s.params, std::span<const RF>(s.nu));
  const RF& k = s.params.k;
  const std::string tag = f.spec_string() + " " + to_string(rho);
  std::vector<SymbolicIdentity> out;
  auto push = [&](std::string name, RF lhs, RF rhs, std::vector<std::string> vars) {
    out.push_back({std::move(name) + " " + tag, std::move(vars), std::move(lhs), std::move(rhs)});
  };

  switch (f.kind) {
    case FamilyKind::Psl22: {
      // r/2 - r/2 + (1/4)(-k-1) = -(k+1)/4 with r/2 = m2.
      const RF& half_r = s.m[1];
      const RF closed = half_r - half_r + RF(Rational(1, 4)) * (-k - RF(1));
      push("lhs", sides.lhs, closed, s.variables);
      push("rhs", sides.rhs, -(k + RF(1)) / RF(4), s.variables);
      break;
    }
    case FamilyKind::Spo2_2r: {
      const long r = f.r;
      const RF rr(r);
      const RF scale = RF(16) * (k + RF(2) - rr);
      RF left = RF(-4) * k * k + RF(2 * (r - 4)) * k + RF(r - 3);
      RF right = RF(2) * rr * (RF(-2) * k - RF(1)) * (k - rr + RF(2));
      for (long i = 1; i <= r - 1; ++i) {
        const RF& mi = s.m[static_cast<std::size_t>(i - 1)];
        const RF ii(i);
        left += RF(8) * k * mi - RF(8) * ii * k - RF(8) * rr * mi - RF(4) * mi * mi + RF(8) * ii * mi + RF(8) * mi -
                RF(4) * ii - RF(4) * k * k + RF(8) * k * rr - RF(8) * k + RF(4) * rr - RF(3);
        right += RF(8) * k * mi - RF(8) * rr * mi - RF(4) * mi * mi + RF(8) * ii * mi + RF(8) * mi;
      }
      push("scaled rhs", scale * sides.rhs, left, s.variables);
      push("scaled lhs", scale * sides.lhs, right, s.variables);
      push("reduced", left, right, s.variables);
      break;
    }
    case FamilyKind::D21: {
      const RF& m = s.params.m;
      const RF& n = s.params.n;
      const RF& t = s.params.t;
      const RF& m1 = s.m[0];
      const RF& m2 = s.m[1];
      const RF scale = RF(4) * (m + n) * t;
      RF left;
      RF right;
      if (rho == RhoChoice::Omega1) {
        left = m * m * t * t + m * n * t * t - m * t - n * t - RF(2) * m * m1 * t + RF(2) * m * m2 * t + m1 * m1 +
               m2 * m2 - RF(2) * m1 * m2;
        const RF sq = m * t - m1 + m2;
        right = t * (m * n * t - m - n) + sq * sq;
      } else {
        left = n * n * t * t + m * n * t * t - m * t - n * t + RF(2) * m1 * n * t - RF(2) * m2 * n * t + m1 * m1 +
               m2 * m2 - RF(2) * m1 * m2;
        const RF sq = n * t + m1 - m2;
        right = t * (m * n * t - m - n) + sq * sq;
      }
      push("scaled lhs", scale * sides.lhs, left, s.variables);
      push("scaled rhs", scale * sides.rhs, right, s.variables);
      push("reduced", left, right, s.variables);
      break;
    }
    case FamilyKind::F4: {
      const RF& m1 = s.m[0];
      const RF& m2 = s.m[1];
      const RF& m3 = s.m[2];
      const RF scale = RF(36) * (RF(2) - k);
      const RF left = RF(27) * k * k - RF(12) * k * m3 + RF(8) * m1 * (RF(3) * k - m2 - m3 - RF(3)) -
                      RF(4) * m2 * (RF(3) * k + RF(2) * m3 - RF(6)) - RF(36) * k + RF(8) * m1 * m1 +
                      RF(8) * m2 * m2 + RF(8) * m3 * m3 - RF(36);
      const RF a = RF(3) * k + RF(2) * m1 + RF(2);
      const RF right = RF(9) * k * k + RF(2) * a * a - RF(4) * (m2 + m3 + RF(5)) * a + RF(8) * m2 * m2 +
                       RF(8) * m3 * m3 + RF(32) * m2 - RF(8) * m2 * m3 + RF(8) * m3 - RF(4);
      push("scaled lhs", scale * sides.lhs, left, s.variables);
      push("scaled rhs", scale * sides.rhs, right, s.variables);
      push("reduced", left, right, s.variables);
      break;
    }
  }
  return out;
}

/// The spo(2|2r) m-free remainder as a polynomial identity in (k, r): the
/// sum over i = 1..r-1 of the m-free summands, summed in closed form, equals
/// -4k^2 r + 4k r^2 - 10k r + 2r^2 - 4r, which equals 2r(-2k-1)(k-r+2).
inline std::vector<SymbolicIdentity> spo_closing_identity() {
  const std::vector<std::string> vars{"k", "r"};
  const RF k = RF::variable(0);
  const RF r = RF::variable(1);
  const RF count = r - RF(1);                         // sum of 1 over i = 1..r-1
  const RF isum = r * (r - RF(1)) / RF(2);            // sum of i over i = 1..r-1
  const RF summed = isum * (RF(-8) * k - RF(4)) +
                    count * (RF(-4) * k * k + RF(8) * k * r - RF(8) * k + RF(4) * r - RF(3)) - RF(4) * k * k +
                    RF(2) * (r - RF(4)) * k + r - RF(3);
  const RF displayed = RF(-4) * k * k * r + RF(4) * k * r * r - RF(10) * k * r + RF(2) * r * r - RF(4) * r;
  const RF factored = RF(2) * r * (RF(-2) * k - RF(1)) * (k - r + RF(2));
  return {{"spo remainder (k,r)", vars, summed, displayed}, {"spo closing (k,r)", vars, displayed, factored}};
}

/// A^R(k, mu) = A^R(k, mu + (1/2)(eps1 - eps2 - eps3)) in F(4).
inline SymbolicIdentity f4_shift_identity() {
  const std::vector<std::string> vars{"k", "m1", "m2", "m3"};
  LevelParams<RF> p;
  p.k = RF::variable(0);
  const std::vector<RF> mu{RF::variable(1), RF::variable(2), RF::variable(3)};
  const RF h(Rational(1, 2));
  const std::vector<RF> shifted{mu[0] + h, mu[1] - h, mu[2] - h};
  const Family f = Family::f4();
  return {"F(4) shift invariance", vars, kernel::a_r<RF>(f, p, std::span<const RF>(mu)),
          kernel::a_r<RF>(f, p, std::span<const RF>(shifted))};
}

/// Every symbolic identity for one family (all rho_R choices except omega_3).
inline std::vector<SymbolicIdentity> symbolic_suite(const FamilyData& data) {
  std::vector<SymbolicIdentity> out;
  for (RhoChoice rho : rho_choices(data.family)) {
    if (rho == RhoChoice::Omega3) continue;
    out.push_back(symbolic_mf(data, rho));
    for (auto& id : closing_identities(data, rho)) out.push_back(std::move(id));
  }
  if (data.family.kind == FamilyKind::Spo2_2r) {
    for (auto& id : spo_closing_identity()) out.push_back(std::move(id));
  }
  if (data.family.kind == FamilyKind::F4) out.push_back(f4_shift_identity());
  return out;
}

}  // namespace sflow
