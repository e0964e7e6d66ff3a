#pragma once

// Unitarity thresholds A^NS(k, nu) and A^R(k, nu), written directly in the
// epsilon/delta coordinates of each family. The `kernel` versions are
// templated on the scalar field so that the symbolic verifier can evaluate
// the very same expressions over Q(k, m_1, ...).

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "sflow/catalog.hpp"
#include "sflow/errors.hpp"
#include "sflow/family.hpp"
#include "sflow/rational.hpp"
#include "sflow/weight.hpp"
#include "sflow/weight_domain.hpp"

namespace sflow {

enum class Precondition { Enforce, Relax };

namespace kernel {

/// NS-sector labels (m_1, ...) of a weight, i.e. the coordinates in which the
/// A^NS formulas are written.
template <class T>
std::vector<T> ns_labels(const Family& f, RhoChoice rho, std::span<const T> c) {
  std::vector<T> m(c.begin(), c.end());
  switch (f.kind) {
    case FamilyKind::Psl22: break;
    case FamilyKind::Spo2_2r:
      // omega_{r-1}: the NS system is the omega_r one with eps_r -> -eps_r.
      if (rho == RhoChoice::OmegaNextToLast) m.back() = -m.back();
      break;
    case FamilyKind::D21:
      // omega_1^1: nu = -m1 eps2 + m2 eps3; omega_1^2: nu = m1 eps2 - m2 eps3.
      if (rho == RhoChoice::Omega1) {
        m[0] = -m[0];
      } else {
        m[1] = -m[1];
      }
      break;
    case FamilyKind::F4:
      m[0] = -m[0];
      break;
  }
  return m;
}

template <class T>
T a_ns(const Family& f, RhoChoice rho, const LevelParams<T>& p, std::span<const T> coords) {
  const std::vector<T> m = ns_labels(f, rho, coords);
  const T& k = p.k;
  switch (f.kind) {
    case FamilyKind::Psl22:
      // nu = -(r/2)(d1 - d2), A^NS = r/2.
      return m[1];
    case FamilyKind::Spo2_2r: {
      const std::size_t r = m.size();
      T sum(0);
      for (std::size_t i = 0; i < r; ++i) {
        sum += m[i] * m[i] - T(2) * m[i] * T(static_cast<long>(i));
      }
      const T& mr = m[r - 1];
      sum += mr * (T(2) * k - mr + T(2));
      return -sum / (T(4) * (k - T(static_cast<long>(r)) + T(2)));
    }
    case FamilyKind::D21: {
      const T diff = m[0] - m[1];
      return (diff * diff + T(2) * p.t * (m[1] * p.m + m[0] * p.n)) / (T(4) * (p.m + p.n) * p.t);
    }
    case FamilyKind::F4: {
      const T a = T(Rational(3, 2)) * k;
      const T num = m[0] * (T(6) - a) + m[1] * (T(3) - a) + m[2] * (-a) + m[0] * m[0] + m[1] * m[1] +
                    m[2] * m[2] - m[0] * m[1] - m[0] * m[2] - m[1] * m[2];
      return num / (T(3) * (T(3) - a));
    }
  }
  return T(0);
}

template <class T>
T a_r(const Family& f, const LevelParams<T>& p, std::span<const T> m) {
  const T& k = p.k;
  switch (f.kind) {
    case FamilyKind::Psl22:
      return -(k + T(1)) / T(4);
    case FamilyKind::Spo2_2r: {
      const long r = static_cast<long>(m.size());
      T sum(0);
      for (long i = 1; i <= r - 1; ++i) {
        const T& mi = m[static_cast<std::size_t>(i - 1)];
        sum += T(2 * (r - i) - 1) * mi + mi * mi;
      }
      const T num = T(-4) * sum - T(4) * k * k + T(2 * (r - 4)) * k + T(r - 3);
      return num / (T(16) * (k + T(2) - T(r)));
    }
    case FamilyKind::D21: {
      const T s = T(1) + m[0] + m[1];
      return (s * s + p.t * (-p.m - p.n + p.m * p.n * p.t)) / (T(4) * (p.m + p.n) * p.t);
    }
    case FamilyKind::F4: {
      const T num = T(9) * k * k + T(8) * m[0] * m[0] + T(8) * m[0] * (m[1] + m[2] + T(5)) +
                    T(8) * m[1] * m[1] - T(8) * m[1] * m[2] + T(32) * m[1] + T(8) * m[2] * m[2] +
                    T(8) * m[2] - T(4);
      return -num / (T(36) * (k - T(2)));
    }
  }
  return T(0);
}

}  // namespace kernel

namespace detail {

inline void require_noncritical(const Family& f, const Rational& k) {
  switch (f.kind) {
    case FamilyKind::Spo2_2r:
      if (k == Rational(f.r - 2)) throw critical_level_error("critical level k = r - 2 for " + f.display_name());
      break;
    case FamilyKind::F4:
      if (k == Rational(2)) throw critical_level_error("critical level k = 2 for F(4)");
      break;
    case FamilyKind::Psl22:
    case FamilyKind::D21:
      break;
  }
}

inline void require_dominant(const Family& f, const Rational& k, Sector sector, RhoChoice rho, const Weight& nu) {
  const SectorLattice lattice(f, k, sector, rho);
  if (!is_dominant(lattice, nu)) {
    throw domain_error(format_coords(nu) + " is not in P_+^k(" + (sector == Sector::NS ? "NS" : "R") + ") for " +
                       f.display_name() + " at k=" + k.to_string());
  }
}

}  // namespace detail

/// A^NS(k, nu). With Precondition::Enforce, k must be in the unitary range and
/// nu in P_+^k(NS) for the given rho_R choice.
inline Rational a_ns(const Family& family, const Rational& k, const Weight& nu, RhoChoice rho,
                     Precondition pre = Precondition::Enforce) {
  family.validate();
  require_rho(family, rho);
  if (rho == RhoChoice::Omega3) throw domain_error("A^NS is defined for rho_R = omega_1^1 in F(4)");
  if (nu.family() != family) throw domain_error("weight family does not match");
  detail::require_noncritical(family, k);
  const auto params = level_params(family, k);
  if (pre == Precondition::Enforce) detail::require_dominant(family, k, Sector::NS, rho, nu);
  return kernel::a_ns<Rational>(family, rho, params, std::span<const Rational>(nu.coords()));
}

inline Rational a_ns(const Family& family, const Rational& k, const Weight& nu,
                     Precondition pre = Precondition::Enforce) {
  return a_ns(family, k, nu, default_rho(family), pre);
}

/// A^R(k, nu). P_+^k(R) does not depend on rho_R.
inline Rational a_r(const Family& family, const Rational& k, const Weight& nu,
                    Precondition pre = Precondition::Enforce) {
  family.validate();
  if (nu.family() != family) throw domain_error("weight family does not match");
  detail::require_noncritical(family, k);
  const auto params = level_params(family, k);
  if (pre == Precondition::Enforce) detail::require_dominant(family, k, Sector::R, default_rho(family), nu);
  return kernel::a_r<Rational>(family, params, std::span<const Rational>(nu.coords()));
}

/// Bound for either sector.
inline Rational bound(const Family& family, const Rational& k, Sector sector, const Weight& nu, RhoChoice rho,
                      Precondition pre = Precondition::Enforce) {
  return sector == Sector::NS ? a_ns(family, k, nu, rho, pre) : a_r(family, k, nu, pre);
}

}  // namespace sflow
