#pragma once

// Unitarity verdicts for highest-weight modules in the Neveu-Schwarz and
// Ramond sectors.
//
// Only the necessary conditions (dominance, l >= A) and the first disjunct of
// Ramond extremality are decided here. Whether a weight is extremal in the
// sense of the untwisted theory is supplied from outside through an
// ExtremalityOracle; without one the classifier answers Unknown.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sflow/bounds.hpp"
#include "sflow/catalog.hpp"
#include "sflow/errors.hpp"
#include "sflow/rational.hpp"
#include "sflow/spectral_flow.hpp"
#include "sflow/weight.hpp"
#include "sflow/weight_domain.hpp"

namespace sflow {

enum class Extremal { Yes, No, Unknown };

inline std::string to_string(Extremal e) {
  switch (e) {
    case Extremal::Yes: return "true";
    case Extremal::No: return "false";
    case Extremal::Unknown: return "unknown";
  }
  return "unknown";
}

class ExtremalityOracle {
 public:
  using Table = std::map<std::vector<Rational>, bool>;
  using Predicate = std::function<std::optional<bool>(const Weight&)>;

  ExtremalityOracle() = default;

  static ExtremalityOracle from_table(Table table) {
    ExtremalityOracle o;
    o.table_ = std::move(table);
    o.present_ = true;
    return o;
  }

  static ExtremalityOracle from_predicate(Predicate p) {
    ExtremalityOracle o;
    o.predicate_ = std::move(p);
    o.present_ = true;
    return o;
  }

  bool present() const { return present_; }

  Extremal query(const Weight& w) const {
    if (!present_) return Extremal::Unknown;
    if (predicate_) {
      const auto v = predicate_(w);
      if (!v) return Extremal::Unknown;
      return *v ? Extremal::Yes : Extremal::No;
    }
    const auto it = table_.find(w.coords());
    if (it == table_.end()) return Extremal::Unknown;
    return it->second ? Extremal::Yes : Extremal::No;
  }

 private:
  bool present_ = false;
  Table table_;
  Predicate predicate_;
};

enum class Verdict { NonDominant, BelowBound, UnitaryNonExtremal, ExtremalCandidate, Unknown };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::NonDominant: return "NonDominant";
    case Verdict::BelowBound: return "BelowBound";
    case Verdict::UnitaryNonExtremal: return "UnitaryNonExtremal";
    case Verdict::ExtremalCandidate: return "ExtremalCandidate";
    case Verdict::Unknown: return "Unknown";
  }
  return "Unknown";
}

enum class ExtremalEvidence { None, RhoShiftOutsideLattice, ExternalOracle };

inline std::string to_string(ExtremalEvidence e) {
  switch (e) {
    case ExtremalEvidence::None: return "none";
    case ExtremalEvidence::RhoShiftOutsideLattice: return "rho_shift_outside_lattice";
    case ExtremalEvidence::ExternalOracle: return "external_oracle";
  }
  return "none";
}

struct ClassificationResult {
  Verdict verdict = Verdict::Unknown;
  std::optional<Rational> bound;  ///< absent for NonDominant
  ExtremalEvidence evidence = ExtremalEvidence::None;
  std::vector<std::string> notes;

  /// True when l >= bound was established (the verdict is past the necessary conditions).
  bool at_or_above_bound() const {
    return verdict != Verdict::NonDominant && verdict != Verdict::BelowBound;
  }
};

struct RamondExtremality {
  Extremal value = Extremal::Unknown;
  ExtremalEvidence evidence = ExtremalEvidence::None;
};

/// mu is Ramond extremal if mu - rho_R is not in P_+^k(R), or if mu - rho_R
/// is extremal (decided by the oracle).
inline RamondExtremality ramond_extremality(const Family& family, const Rational& k, RhoChoice rho,
                                            const Weight& mu, const ExtremalityOracle& oracle) {
  const SectorLattice r_lattice(family, k, Sector::R, default_rho(family));
  require_rho(family, rho);
  if (!is_dominant(r_lattice, mu)) {
    throw domain_error(format_coords(mu) + " is not in P_+^k(R)");
  }
  const Weight shifted = mu - rho_r(family, rho).coords;
  if (!is_dominant(r_lattice, shifted)) return {Extremal::Yes, ExtremalEvidence::RhoShiftOutsideLattice};
  const Extremal e = oracle.query(shifted);
  if (e == Extremal::Unknown) return {Extremal::Unknown, ExtremalEvidence::None};
  return {e, ExtremalEvidence::ExternalOracle};
}

inline Extremal is_ramond_extremal(const Family& family, const Rational& k, RhoChoice rho, const Weight& mu,
                                   const ExtremalityOracle& oracle = {}) {
  return ramond_extremality(family, k, rho, mu, oracle).value;
}

enum class CanonicalDirection { Omega3ToOmega1, Omega1ToOmega3 };

/// mu +- (omega_1 - omega_3) = mu +- (1/2)(eps1 - eps2 - eps3) in F(4).
inline Weight f4_canonicalize(const Weight& mu, CanonicalDirection dir) {
  if (mu.family().kind != FamilyKind::F4) throw domain_error("f4_canonicalize needs an F(4) weight");
  const Rational h(1, 2);
  const Weight shift(mu.family(), {h, -h, -h});
  return dir == CanonicalDirection::Omega3ToOmega1 ? mu + shift : mu - shift;
}

namespace detail {

inline ClassificationResult verdict_above_bound(ClassificationResult res, Extremal e, ExtremalEvidence ev) {
  res.evidence = ev;
  switch (e) {
    case Extremal::No: res.verdict = Verdict::UnitaryNonExtremal; break;
    case Extremal::Yes: res.verdict = Verdict::ExtremalCandidate; break;
    case Extremal::Unknown:
      res.verdict = Verdict::Unknown;
      res.notes.emplace_back("extremality undecided without an oracle entry");
      break;
  }
  return res;
}

}  // namespace detail

/// Classification of the twisted module L^R(mu, l).
inline ClassificationResult classify_r(const Family& family, const Rational& k, RhoChoice rho, const Weight& mu,
                                       const Rational& ell, const ExtremalityOracle& oracle = {}) {
  require_rho(family, rho);
  const SectorLattice r_lattice(family, k, Sector::R, default_rho(family));
  ClassificationResult res;
  if (!is_dominant(r_lattice, mu)) {
    res.verdict = Verdict::NonDominant;
    return res;
  }
  res.bound = a_r(family, k, mu, Precondition::Relax);
  if (ell < *res.bound) {
    res.verdict = Verdict::BelowBound;
    return res;
  }
  if (rho == RhoChoice::Omega3) {
    const auto ext = ramond_extremality(family, k, rho, mu, ExtremalityOracle{});
    if (ext.value == Extremal::Yes) {
      res.notes.emplace_back("mu - omega_3 leaves P_+^k(R)");
      return detail::verdict_above_bound(std::move(res), Extremal::Yes, ext.evidence);
    }
    const Weight canonical = f4_canonicalize(mu, CanonicalDirection::Omega3ToOmega1);
    ClassificationResult routed = classify_r(family, k, RhoChoice::Omega1, canonical, ell, oracle);
    routed.notes.insert(routed.notes.begin(), "classified as " + format_coords(canonical) + " with rho_R = omega_1");
    return routed;
  }
  const auto ext = ramond_extremality(family, k, rho, mu, oracle);
  return detail::verdict_above_bound(std::move(res), ext.value, ext.evidence);
}

/// Classification of the untwisted module L(nu, l).
inline ClassificationResult classify_ns(const Family& family, const Rational& k, RhoChoice rho, const Weight& nu,
                                        const Rational& ell, const ExtremalityOracle& oracle = {}) {
  const SectorLattice ns_lattice(family, k, Sector::NS, rho);
  ClassificationResult res;
  if (!is_dominant(ns_lattice, nu)) {
    res.verdict = Verdict::NonDominant;
    return res;
  }
  res.bound = a_ns(family, k, nu, rho, Precondition::Relax);
  if (ell < *res.bound) {
    res.verdict = Verdict::BelowBound;
    return res;
  }
  const Extremal e = oracle.query(nu);
  return detail::verdict_above_bound(std::move(res), e,
                                     e == Extremal::Unknown ? ExtremalEvidence::None : ExtremalEvidence::ExternalOracle);
}

inline ClassificationResult classify_ns(const Family& family, const Rational& k, const Weight& nu, const Rational& ell,
                                        const ExtremalityOracle& oracle = {}) {
  return classify_ns(family, k, default_rho(family), nu, ell, oracle);
}

struct BoundaryRow {
  Weight nu;
  Rational a_ns;
  Weight nu_r;
  Rational ell_r;  ///< image of l = A^NS(k, nu) under the flow
  Rational a_r;
  bool matched = false;
};

struct ExtremalEquivalenceReport {
  Family family;
  Rational k;
  RhoChoice rho = RhoChoice::Omega1;
  std::vector<BoundaryRow> rows;

  bool all_matched() const {
    for (const auto& r : rows) {
      if (!r.matched) return false;
    }
    return true;
  }
};

/// Pairs every NS boundary point (nu, A^NS(k,nu)) with its flow image and
/// checks that it lands on the Ramond boundary (nu^R, A^R(k,nu^R)).
inline ExtremalEquivalenceReport extremal_equivalence_report(const FamilyData& data, const Rational& k, RhoChoice rho) {
  ExtremalEquivalenceReport rep{data.family, k, rho, {}};
  for (const auto& nu : enumerate(SectorLattice(data.family, k, Sector::NS, rho))) {
    const Rational ans = a_ns(data.family, k, nu, rho);
    const HighestWeight img = flow_hw(data, k, rho, {nu, ans});
    const Rational ar = a_r(data.family, k, img.nu);
    rep.rows.push_back({nu, ans, img.nu, img.ell, ar, img.ell == ar});
  }
  return rep;
}

inline ExtremalEquivalenceReport extremal_equivalence_report(const Family& family, const Rational& k) {
  return extremal_equivalence_report(family_data(family), k, default_rho(family));
}

}  // namespace sflow
