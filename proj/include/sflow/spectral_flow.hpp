#pragma once

// Spectral flow on highest-weight data:
//   nu^R  = nu + M_i(k) rho_R
//   ell^R = ell + 2 (nu|rho_R)/(theta_i|theta_i) + M_i(k) (rho_R|rho_R)/(theta_i|theta_i)
// together with the checks that tie it to the unitarity bounds.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sflow/bounds.hpp"
#include "sflow/catalog.hpp"
#include "sflow/errors.hpp"
#include "sflow/rational.hpp"
#include "sflow/weight.hpp"
#include "sflow/weight_domain.hpp"

namespace sflow {

namespace kernel {

template <class T>
struct FlowShift {
  std::vector<T> nu_r;
  T ell_shift;
};

template <class T>
FlowShift<T> flow(const FamilyData& data, const RhoR& rho, const T& capacity, std::span<const T> nu) {
  std::vector<T> rc;
  rc.reserve(rho.coords.size());
  for (const auto& c : rho.coords.coords()) rc.emplace_back(c);
  const std::span<const T> rs(rc);
  FlowShift<T> out;
  out.nu_r.reserve(nu.size());
  for (std::size_t i = 0; i < nu.size(); ++i) out.nu_r.push_back(nu[i] + capacity * rc[i]);
  const T theta(data.theta_norm(rho.ideal));
  out.ell_shift = T(2) * data.inner<T>(nu, rs) / theta + capacity * data.inner<T>(rs, rs) / theta;
  return out;
}

template <class T>
struct MfSides {
  T lhs;
  T rhs;
};

/// Both sides of A^NS(k,nu) + 2(nu|rho)/(theta|theta) + M(rho|rho)/(theta|theta) = A^R(k, nu^R).
template <class T>
MfSides<T> mf_sides(const FamilyData& data, RhoChoice choice, const LevelParams<T>& p, std::span<const T> nu) {
  const RhoR rho = rho_r(data.family, choice);
  const std::vector<T> caps = capacities(data.family, p);
  const FlowShift<T> f = flow<T>(data, rho, caps[rho.ideal], nu);
  MfSides<T> s;
  s.lhs = a_ns<T>(data.family, choice, p, nu) + f.ell_shift;
  s.rhs = a_r<T>(data.family, p, std::span<const T>(f.nu_r));
  return s;
}

}  // namespace kernel

namespace detail {

inline void require_flow_inputs(const FamilyData& data, const Rational& k, RhoChoice choice) {
  reject_omega3(choice);
  require_rho(data.family, choice);
  if (!in_unitary_range(data.family, k)) {
    throw domain_error("k=" + k.to_string() + " is not in the unitary range of " + data.family.display_name());
  }
}

inline Rational capacity_for(const FamilyData& data, const Rational& k, const RhoR& rho) {
  return level_capacities(data.family, k).capacities[rho.ideal];
}

}  // namespace detail

struct FlowedHighestWeight {
  HighestWeight source;  ///< NS data
  HighestWeight image;   ///< Ramond data
  RhoChoice rho = RhoChoice::Omega1;
  Rational k;
};

/// (nu, ell) -> (nu^R, ell^R). Defined on all of weight space; for nu in
/// P_+^k(NS) the image lies in P_+^k(R).
inline HighestWeight flow_hw(const FamilyData& data, const Rational& k, RhoChoice choice, const HighestWeight& hw) {
  detail::require_flow_inputs(data, k, choice);
  const RhoR rho = rho_r(data.family, choice);
  const Rational cap = detail::capacity_for(data, k, rho);
  const auto f = kernel::flow<Rational>(data, rho, cap, std::span<const Rational>(hw.nu.coords()));
  return {Weight(data.family, f.nu_r), hw.ell + f.ell_shift};
}

inline FlowedHighestWeight flow_record(const FamilyData& data, const Rational& k, RhoChoice choice,
                                       const HighestWeight& hw) {
  return {hw, flow_hw(data, k, choice, hw), choice, k};
}

/// Inverse of flow_hw: nu = mu - M_i rho_R,
/// ell = ell^R - 2(mu|rho_R)/(theta|theta) + M_i (rho_R|rho_R)/(theta|theta).
inline HighestWeight unflow_hw(const FamilyData& data, const Rational& k, RhoChoice choice, const HighestWeight& hw_r) {
  detail::require_flow_inputs(data, k, choice);
  const RhoR rho = rho_r(data.family, choice);
  const Rational cap = detail::capacity_for(data, k, rho);
  const Rational theta = data.theta_norm(rho.ideal);
  Weight nu = hw_r.nu - cap * rho.coords;
  Rational ell = hw_r.ell - Rational(2) * data.inner(hw_r.nu, rho.coords) / theta +
                 cap * data.inner(rho.coords, rho.coords) / theta;
  return {std::move(nu), std::move(ell)};
}

struct MfReport {
  Rational lhs;
  Rational rhs;
  bool equal = false;
};

inline MfReport verify_mf(const FamilyData& data, const Rational& k, RhoChoice choice, const Weight& nu) {
  detail::require_flow_inputs(data, k, choice);
  const SectorLattice ns(data.family, k, Sector::NS, choice);
  if (!is_dominant(ns, nu)) {
    throw domain_error(format_coords(nu) + " is not in P_+^k(NS)");
  }
  const auto params = level_params(data.family, k);
  const auto s = kernel::mf_sides<Rational>(data, choice, params, std::span<const Rational>(nu.coords()));
  return {s.lhs, s.rhs, s.lhs == s.rhs};
}

struct BijectionReport {
  std::size_t ns_count = 0;
  std::size_t r_count = 0;
  bool images_dominant = true;
  bool injective = true;
  bool surjective = true;
  std::optional<Weight> counterexample;  ///< first offending NS weight (or missed R weight)

  bool bijective() const { return images_dominant && injective && surjective && ns_count == r_count; }
};

/// Checks that flow_hw maps P_+^k(NS) bijectively onto P_+^k(R).
inline BijectionReport bijection_check(const FamilyData& data, const Rational& k, RhoChoice choice) {
  detail::require_flow_inputs(data, k, choice);
  const SectorLattice ns_lattice(data.family, k, Sector::NS, choice);
  const SectorLattice r_lattice(data.family, k, Sector::R, choice);
  const std::vector<Weight> ns = enumerate(ns_lattice);
  const std::vector<Weight> r = enumerate(r_lattice);
  BijectionReport rep;
  rep.ns_count = ns.size();
  rep.r_count = r.size();

  std::vector<Weight> images;
  images.reserve(ns.size());
  for (const auto& nu : ns) {
    Weight img = flow_hw(data, k, choice, {nu, Rational(0)}).nu;
    if (!is_dominant(r_lattice, img)) {
      rep.images_dominant = false;
      if (!rep.counterexample) rep.counterexample = nu;
    }
    images.push_back(std::move(img));
  }
  std::vector<Weight> sorted = images;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    rep.injective = false;
    if (!rep.counterexample) {
      const auto dup = *std::adjacent_find(sorted.begin(), sorted.end());
      for (std::size_t i = 0; i < images.size(); ++i) {
        if (images[i] == dup) {
          rep.counterexample = ns[i];
          break;
        }
      }
    }
  }
  for (const auto& mu : r) {
    if (!std::binary_search(sorted.begin(), sorted.end(), mu)) {
      rep.surjective = false;
      if (!rep.counterexample) rep.counterexample = mu;
      break;
    }
  }
  return rep;
}

struct CrosscheckReport {
  Rational via_pairing;      ///< ell + nu(h^R)/2 + beta_k(h^R,h^R)/8
  Rational via_coordinates;  ///< ell + 2(nu|rho)/(theta|theta) + M(rho|rho)/(theta|theta)
  bool equal = false;
};

inline CrosscheckReport flowed_ell_crosscheck(const FamilyData& data, const Rational& k, RhoChoice choice,
                                              const HighestWeight& hw) {
  detail::require_flow_inputs(data, k, choice);
  const Weight h = h_r(data, choice);
  CrosscheckReport rep;
  rep.via_pairing = hw.ell + data.inner(hw.nu, h) / Rational(2) + beta_k(data, k, h, h) / Rational(8);
  rep.via_coordinates = flow_hw(data, k, choice, hw).ell;
  rep.equal = rep.via_pairing == rep.via_coordinates;
  return rep;
}

// ---------------------------------------------------------------------------
// Twist bookkeeping for L(th) = L + t dh.

struct TwistBookkeeping {
  Rational t;
  Rational s;
  Rational delta;    ///< conformal weight, in (1/2) Z_+
  Rational c;        ///< central charge
  Rational beta_hh;  ///< beta(h, h)
};

/// Central charge of L(th): c - 12 t^2 beta(h,h).
inline Rational twisted_central_charge(const Rational& c, const Rational& t, const Rational& beta_hh) {
  return c - Rational(12) * t * t * beta_hh;
}

/// Delta_a(t) = Delta_a - t gamma_a.
inline Rational conformal_weight_shift(const Rational& delta, const Rational& t, int gamma) {
  if ((Rational(2) * delta).is_integer() == false || delta.sign() < 0) {
    throw domain_error("conformal weights must lie in (1/2)Z_+, got " + delta.to_string());
  }
  return delta - t * Rational(gamma);
}

/// Exponent parameter s + t of the composed twist exp(-4 pi i (s+t) h^R_0).
inline Rational twist_composition(const Rational& s, const Rational& t) { return s + t; }

/// The partner parameter s = 1/4 - t that makes the composed twist sigma_R.
inline Rational ramond_partner(const Rational& t) { return Rational(1, 4) - t; }

inline bool is_ramond_twist(const Rational& s, const Rational& t) {
  return twist_composition(s, t) == Rational(1, 4);
}

}  // namespace sflow
