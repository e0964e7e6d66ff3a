#pragma once

// Static Cartan-level data of the four families: roots of g^natural, the
// h^natural-weights of g_{-1/2}, the distinguished weights rho_R, the element
// h^R, the level capacities M_i(k) and the cocycle beta_k.
//
// The invariant form is the Euclidean form on epsilon/delta coordinates,
// optionally rescaled by a positive rational on each simple ideal. Every
// quantity exported downstream is a ratio within one ideal, so the scale
// drops out; the per-ideal scales exist to test exactly that.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sflow/errors.hpp"
#include "sflow/family.hpp"
#include "sflow/rational.hpp"
#include "sflow/weight.hpp"

namespace sflow {

struct HalfWeight {
  Weight weight;
  int multiplicity = 1;
};

struct SimpleIdeal {
  std::vector<std::size_t> support;  ///< coordinate indices spanned by the ideal
  Weight highest_root;
  Rational scale{1};                 ///< form on this ideal = scale * Euclidean
};

/// Per-ideal positive rescaling of the form. Empty means all ones.
using FormScales = std::vector<Rational>;

struct FamilyData {
  Family family;
  std::vector<Weight> roots;           ///< Delta^natural
  std::vector<Weight> positive_roots;  ///< Delta^natural_+
  std::vector<Weight> simple_roots;
  std::vector<HalfWeight> half_weights;  ///< weights of g_{-1/2}
  std::vector<SimpleIdeal> ideals;

  template <class T>
  T inner(std::span<const T> a, std::span<const T> b) const {
    T sum(0);
    for (const auto& ideal : ideals) {
      T part(0);
      for (std::size_t j : ideal.support) part += a[j] * b[j];
      sum += T(ideal.scale) * part;
    }
    return sum;
  }

  Rational inner(const Weight& a, const Weight& b) const {
    return inner<Rational>(std::span<const Rational>(a.coords()), std::span<const Rational>(b.coords()));
  }

  /// (theta_i | theta_i) under the catalog form.
  Rational theta_norm(std::size_t ideal) const {
    const Weight& theta = ideals.at(ideal).highest_root;
    return inner(theta, theta);
  }

  /// Index of the single ideal supporting `w`; nullopt for the zero weight.
  /// Throws domain_error if `w` has components in two ideals.
  std::optional<std::size_t> ideal_of(const Weight& w) const {
    std::optional<std::size_t> found;
    for (std::size_t i = 0; i < ideals.size(); ++i) {
      bool nonzero = false;
      for (std::size_t j : ideals[i].support) nonzero = nonzero || !w[j].is_zero();
      if (!nonzero) continue;
      if (found) throw domain_error("vector straddles two simple ideals");
      found = i;
    }
    return found;
  }

  bool is_root(const Weight& w) const {
    return std::find(roots.begin(), roots.end(), w) != roots.end();
  }

  const HalfWeight* find_half_weight(const Weight& w) const {
    for (const auto& hw : half_weights) {
      if (hw.weight == w) return &hw;
    }
    return nullptr;
  }
};

namespace detail {

inline Weight vec(const Family& f, std::vector<Rational> c) { return Weight(f, std::move(c)); }

inline Weight unit(const Family& f, std::size_t i, const Rational& s = 1) {
  std::vector<Rational> c(f.dimension(), Rational(0));
  c[i] = s;
  return Weight(f, std::move(c));
}

inline void add_with_negatives(std::vector<Weight>& all, std::vector<Weight>& positive, Weight w) {
  positive.push_back(w);
  all.push_back(-w);
  all.push_back(std::move(w));
}

}  // namespace detail

/// Full static data table for `family`.
inline FamilyData family_data(const Family& family, const FormScales& scales = {}) {
  family.validate();
  using detail::unit;
  FamilyData d;
  d.family = family;
  const std::size_t dim = family.dimension();
  const Rational half(1, 2);

  switch (family.kind) {
    case FamilyKind::Psl22: {
      const Weight theta = detail::vec(family, {1, -1});
      detail::add_with_negatives(d.roots, d.positive_roots, theta);
      d.simple_roots = {theta};
      d.half_weights = {{half * theta, 2}, {-half * theta, 2}};
      d.ideals.push_back({{0, 1}, theta});
      break;
    }
    case FamilyKind::Spo2_2r: {
      for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = i + 1; j < dim; ++j) {
          detail::add_with_negatives(d.roots, d.positive_roots, unit(family, i) - unit(family, j));
          detail::add_with_negatives(d.roots, d.positive_roots, unit(family, i) + unit(family, j));
        }
      }
      for (std::size_t i = 0; i + 1 < dim; ++i) d.simple_roots.push_back(unit(family, i) - unit(family, i + 1));
      d.simple_roots.push_back(unit(family, dim - 2) + unit(family, dim - 1));
      for (std::size_t i = 0; i < dim; ++i) {
        d.half_weights.push_back({unit(family, i), 1});
        d.half_weights.push_back({unit(family, i, -1), 1});
      }
      std::vector<std::size_t> all(dim);
      for (std::size_t i = 0; i < dim; ++i) all[i] = i;
      d.ideals.push_back({all, unit(family, 0) + unit(family, 1)});
      break;
    }
    case FamilyKind::D21: {
      // sl(2) x sl(2): roots +-2 eps2, +-2 eps3; g_{-1/2} = C^2 (x) C^2.
      detail::add_with_negatives(d.roots, d.positive_roots, unit(family, 0, 2));
      detail::add_with_negatives(d.roots, d.positive_roots, unit(family, 1, 2));
      d.simple_roots = {unit(family, 0, 2), unit(family, 1, 2)};
      for (int s2 : {1, -1}) {
        for (int s3 : {1, -1}) {
          d.half_weights.push_back({detail::vec(family, {s2, s3}), 1});
        }
      }
      d.ideals.push_back({{0}, unit(family, 0, 2)});
      d.ideals.push_back({{1}, unit(family, 1, 2)});
      break;
    }
    case FamilyKind::F4: {
      // so(7) with g_{-1/2} the spin representation.
      for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = i + 1; j < 3; ++j) {
          detail::add_with_negatives(d.roots, d.positive_roots, unit(family, i) - unit(family, j));
          detail::add_with_negatives(d.roots, d.positive_roots, unit(family, i) + unit(family, j));
        }
        detail::add_with_negatives(d.roots, d.positive_roots, unit(family, i));
      }
      d.simple_roots = {unit(family, 0) - unit(family, 1), unit(family, 1) - unit(family, 2), unit(family, 2)};
      for (int s1 : {1, -1}) {
        for (int s2 : {1, -1}) {
          for (int s3 : {1, -1}) {
            d.half_weights.push_back({detail::vec(family, {Rational(s1, 2), Rational(s2, 2), Rational(s3, 2)}), 1});
          }
        }
      }
      d.ideals.push_back({{0, 1, 2}, unit(family, 0) + unit(family, 1)});
      break;
    }
  }

  if (!scales.empty()) {
    if (scales.size() != d.ideals.size()) {
      throw domain_error("expected " + std::to_string(d.ideals.size()) + " form scales");
    }
    for (std::size_t i = 0; i < scales.size(); ++i) {
      if (scales[i].sign() <= 0) throw domain_error("form scales must be positive");
      d.ideals[i].scale = scales[i];
    }
  }
  return d;
}

// ---------------------------------------------------------------------------
// Levels

/// Level-dependent scalars in a field T. For D(2,1;m/n) the parameters
/// m, n, t enter the bounds directly; elsewhere they are unused.
template <class T>
struct LevelParams {
  T k;
  T m{0};
  T n{0};
  T t{0};
};

/// The fixed D(2,1;m/n) level k = -mnt/(m+n).
inline Rational d21_level(const Family& f) {
  return Rational(-f.m * f.n * f.t, f.m + f.n);
}

inline LevelParams<Rational> level_params(const Family& family, const Rational& k) {
  LevelParams<Rational> p{k};
  if (family.kind == FamilyKind::D21) {
    if (k != d21_level(family)) {
      throw domain_error("level/parameter mismatch: D(2,1;m/n) with m=" + std::to_string(family.m) +
                         ", n=" + std::to_string(family.n) + ", t=" + std::to_string(family.t) +
                         " requires k=" + d21_level(family).to_string() + ", got " + k.to_string());
    }
    p.m = family.m;
    p.n = family.n;
    p.t = family.t;
  }
  return p;
}

/// M_i(k) for every simple ideal.
template <class T>
std::vector<T> capacities(const Family& family, const LevelParams<T>& p) {
  switch (family.kind) {
    case FamilyKind::Psl22: return {-p.k - T(1)};
    case FamilyKind::Spo2_2r: return {T(-2) * p.k - T(1)};
    case FamilyKind::D21: return {p.m * p.t - T(1), p.n * p.t - T(1)};
    case FamilyKind::F4: return {T(Rational(-3, 2)) * p.k - T(1)};
  }
  return {};
}

struct LevelCapacities {
  Rational k;
  std::vector<Rational> capacities;
};

inline LevelCapacities level_capacities(const Family& family, const Rational& k) {
  family.validate();
  return {k, capacities(family, level_params(family, k))};
}

/// True iff every M_i(k) is a nonnegative integer (and, for D(2,1;m/n), k is
/// the level fixed by (m, n, t)).
inline bool in_unitary_range(const Family& family, const Rational& k) {
  if (family.kind == FamilyKind::D21 && k != d21_level(family)) return false;
  LevelParams<Rational> p{k};
  if (family.kind == FamilyKind::D21) {
    p.m = family.m;
    p.n = family.n;
    p.t = family.t;
  }
  for (const auto& cap : capacities(family, p)) {
    if (!cap.is_integer() || cap.sign() < 0) return false;
  }
  return true;
}

/// Level with first capacity M_1(k) = capacity. For D(2,1;m/n) the level is
/// fixed by the family and `capacity` is ignored.
inline Rational level_for_capacity(const Family& family, const Rational& capacity) {
  switch (family.kind) {
    case FamilyKind::Psl22: return -capacity - Rational(1);
    case FamilyKind::Spo2_2r: return -(capacity + Rational(1)) / Rational(2);
    case FamilyKind::D21: return d21_level(family);
    case FamilyKind::F4: return Rational(-2, 3) * (capacity + Rational(1));
  }
  return {};
}

// ---------------------------------------------------------------------------
// rho_R and h^R

struct RhoR {
  Family family;
  RhoChoice choice = RhoChoice::Omega1;
  Weight coords;
  std::size_t ideal = 0;
};

inline RhoR rho_r(const Family& family, RhoChoice choice) {
  require_rho(family, choice);
  const Rational half(1, 2);
  std::vector<Rational> c(family.dimension(), Rational(0));
  std::size_t ideal = 0;
  switch (choice) {
    case RhoChoice::Omega1:
      if (family.kind == FamilyKind::Psl22) {
        c = {half, -half};
      } else {
        c[0] = 1;
      }
      break;
    case RhoChoice::OmegaLast:
      std::fill(c.begin(), c.end(), half);
      break;
    case RhoChoice::OmegaNextToLast:
      std::fill(c.begin(), c.end(), half);
      c.back() = -half;
      break;
    case RhoChoice::Omega1Second:
      c[1] = 1;
      ideal = 1;
      break;
    case RhoChoice::Omega3:
      std::fill(c.begin(), c.end(), half);
      break;
  }
  return {family, choice, Weight(family, std::move(c)), ideal};
}

inline void reject_omega3(RhoChoice choice) {
  if (choice == RhoChoice::Omega3) {
    throw domain_error("rho_R = omega_3^1 has no h^R here; canonicalize with the F(4) weight shift first");
  }
}

/// h^R = 4 rho_R / (theta_i | theta_i), as a vector of h^natural identified
/// with its dual through the catalog form.
inline Weight h_r(const FamilyData& data, RhoChoice choice) {
  reject_omega3(choice);
  const RhoR rho = rho_r(data.family, choice);
  return (Rational(4) / data.theta_norm(rho.ideal)) * rho.coords;
}

enum class Stratum { EvenRoot, HalfWeight };

/// alpha(h^R) = 4 (alpha | rho_R) / (theta_i | theta_i) for a root of
/// g^natural or a weight of g_{-1/2}.
inline int adhr_eigenvalue(const FamilyData& data, RhoChoice choice, const Weight& v, Stratum stratum) {
  reject_omega3(choice);
  if (stratum == Stratum::EvenRoot && !data.is_root(v)) {
    throw domain_error(format_coords(v) + " is not a root of g^natural");
  }
  if (stratum == Stratum::HalfWeight && data.find_half_weight(v) == nullptr) {
    throw domain_error(format_coords(v) + " is not a weight of g_{-1/2}");
  }
  const RhoR rho = rho_r(data.family, choice);
  const Rational value = Rational(4) * data.inner(v, rho.coords) / data.theta_norm(rho.ideal);
  if (!value.is_integer()) {
    throw consistency_error("non-integral ad(h^R) eigenvalue " + value.to_string() + " on " + format_coords(v));
  }
  return static_cast<int>(value.to_long());
}

/// beta_k(a, b) = delta_ij M_i(k) (theta_i|theta_i)/2 (a|b) for a in ideal i,
/// b in ideal j.
inline Rational beta_k(const FamilyData& data, const Rational& k, const Weight& a, const Weight& b) {
  const auto ia = data.ideal_of(a);
  const auto ib = data.ideal_of(b);
  if (!ia || !ib || *ia != *ib) return Rational(0);
  const auto caps = level_capacities(data.family, k).capacities;
  return caps[*ia] * data.theta_norm(*ia) / Rational(2) * data.inner(a, b);
}

// ---------------------------------------------------------------------------
// Positive half-sets of g_{-1/2}

/// A set of distinct g_{-1/2} weights is admissible when it contains exactly
/// one of each pair {eta, -eta} and is closed under adding positive roots of
/// g^natural (whenever the sum is again a g_{-1/2} weight).
inline bool is_admissible_half_set(const FamilyData& data, const std::vector<Weight>& set) {
  auto contains = [&](const Weight& w) { return std::find(set.begin(), set.end(), w) != set.end(); };
  if (set.size() * 2 != data.half_weights.size()) return false;
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (data.find_half_weight(set[i]) == nullptr) return false;
    if (contains(-set[i])) return false;
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      if (set[i] == set[j]) return false;
    }
  }
  for (const auto& eta : set) {
    for (const auto& alpha : data.positive_roots) {
      const Weight up = eta + alpha;
      if (data.find_half_weight(up) != nullptr && !contains(up)) return false;
    }
  }
  return true;
}

/// rho_R = 1/2 sum_{eta in set} dim(g_{-1/2})_eta eta.
inline Weight rho_r_from_half_weights(const FamilyData& data, const std::vector<Weight>& set) {
  if (set.size() * 2 != data.half_weights.size()) {
    throw domain_error("a positive half-set has " + std::to_string(data.half_weights.size() / 2) +
                       " weights, got " + std::to_string(set.size()));
  }
  for (const auto& eta : set) {
    if (data.find_half_weight(eta) == nullptr) {
      throw domain_error(format_coords(eta) + " is not a weight of g_{-1/2}");
    }
  }
  if (!is_admissible_half_set(data, set)) {
    throw domain_error("half-set is not a positive system compatible with Delta^natural_+");
  }
  Weight sum = Weight::zero(data.family);
  for (const auto& eta : set) {
    sum += Rational(data.find_half_weight(eta)->multiplicity) * eta;
  }
  return Rational(1, 2) * sum;
}

/// Every admissible half-set, by exhaustive search over sign choices.
inline std::vector<std::vector<Weight>> admissible_half_sets(const FamilyData& data) {
  std::vector<Weight> reps;
  for (const auto& hw : data.half_weights) {
    if (std::find(reps.begin(), reps.end(), -hw.weight) == reps.end()) reps.push_back(hw.weight);
  }
  std::vector<std::vector<Weight>> out;
  const std::size_t count = std::size_t{1} << reps.size();
  for (std::size_t mask = 0; mask < count; ++mask) {
    std::vector<Weight> set;
    for (std::size_t i = 0; i < reps.size(); ++i) {
      set.push_back((mask >> i) & 1U ? -reps[i] : reps[i]);
    }
    std::sort(set.begin(), set.end());
    if (is_admissible_half_set(data, set)) out.push_back(std::move(set));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// The standard rho_R choice (or F(4)'s omega_3^1) whose coordinates equal `w`.
inline std::optional<RhoChoice> match_rho(const Family& family, const Weight& w) {
  for (RhoChoice c : rho_choices(family)) {
    if (rho_r(family, c).coords == w) return c;
  }
  return std::nullopt;
}

}  // namespace sflow
