#pragma once

// Parameter grids and whole-grid verification drivers.

#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "sflow/catalog.hpp"
#include "sflow/family.hpp"
#include "sflow/parallel.hpp"
#include "sflow/rational.hpp"
#include "sflow/spectral_flow.hpp"
#include "sflow/weight_domain.hpp"

namespace sflow {

struct GridCase {
  Family family;
  Rational k;
  RhoChoice rho = RhoChoice::Omega1;

  std::string label() const { return family.spec_string() + " k=" + k.to_string() + " rho=" + to_string(rho); }
};

struct GridBounds {
  long psl22_max_capacity = 20;
  long spo_min_r = 3;
  long spo_max_r = 6;
  long spo_max_capacity = 8;
  long d21_max_mn = 5;
  long d21_max_t = 6;
  long f4_max_capacity = 6;
};

/// Every (family, k, rho) in the bounded grid; rho runs over all choices
/// except F(4)'s omega_3.
inline std::vector<GridCase> verification_grid(const GridBounds& b = {}) {
  std::vector<GridCase> out;
  auto add_all_rho = [&](const Family& f, const Rational& k) {
    for (RhoChoice rho : rho_choices(f)) {
      if (rho != RhoChoice::Omega3) out.push_back({f, k, rho});
    }
  };
  const Family psl = Family::psl22();
  for (long M = 0; M <= b.psl22_max_capacity; ++M) add_all_rho(psl, level_for_capacity(psl, M));
  for (long r = b.spo_min_r; r <= b.spo_max_r; ++r) {
    const Family f = Family::spo(r);
    for (long M = 0; M <= b.spo_max_capacity; ++M) add_all_rho(f, level_for_capacity(f, M));
  }
  for (long m = 1; m <= b.d21_max_mn; ++m) {
    for (long n = 1; n <= b.d21_max_mn; ++n) {
      if (std::gcd(m, n) != 1) continue;
      for (long t = 1; t <= b.d21_max_t; ++t) {
        const Family f = Family::d21(m, n, t);
        add_all_rho(f, d21_level(f));
      }
    }
  }
  const Family f4 = Family::f4();
  for (long M = 0; M <= b.f4_max_capacity; ++M) add_all_rho(f4, level_for_capacity(f4, M));
  return out;
}

enum class Check { Mf, Bijection, Crosscheck };

inline std::string to_string(Check c) {
  switch (c) {
    case Check::Mf: return "mf";
    case Check::Bijection: return "bijection";
    case Check::Crosscheck: return "crosscheck";
  }
  return "?";
}

struct CaseResult {
  GridCase grid_case;
  std::size_t cases = 0;  ///< weights (or pairs) examined
  bool pass = true;
  std::optional<std::string> witness;
};

struct SweepReport {
  Check check = Check::Mf;
  std::vector<CaseResult> results;

  std::size_t total_cases() const {
    std::size_t n = 0;
    for (const auto& r : results) n += r.cases;
    return n;
  }
  bool pass() const {
    for (const auto& r : results) {
      if (!r.pass) return false;
    }
    return true;
  }
  const CaseResult* first_failure() const {
    for (const auto& r : results) {
      if (!r.pass) return &r;
    }
    return nullptr;
  }
};

/// Runs one check on one grid case. `scales` rescales the form per ideal.
/// The crosscheck uses l = 0 and l = 7/5 for each weight.
inline CaseResult run_check(Check check, const GridCase& gc, const FormScales& scales = {}) {
  const FamilyData data = family_data(gc.family, scales);
  CaseResult res{gc, 0, true, std::nullopt};
  switch (check) {
    case Check::Mf:
      for (const auto& nu : enumerate(SectorLattice(gc.family, gc.k, Sector::NS, gc.rho))) {
        ++res.cases;
        const auto rep = verify_mf(data, gc.k, gc.rho, nu);
        if (!rep.equal && res.pass) {
          res.pass = false;
          res.witness = "nu=" + format_coords(nu) + " lhs=" + rep.lhs.to_string() + " rhs=" + rep.rhs.to_string();
        }
      }
      break;
    case Check::Bijection: {
      const auto rep = bijection_check(data, gc.k, gc.rho);
      res.cases = rep.ns_count;
      res.pass = rep.bijective();
      if (!res.pass) {
        res.witness = "ns=" + std::to_string(rep.ns_count) + " r=" + std::to_string(rep.r_count) +
                      (rep.counterexample ? " at " + format_coords(*rep.counterexample) : std::string());
      }
      break;
    }
    case Check::Crosscheck:
      for (const auto& nu : enumerate(SectorLattice(gc.family, gc.k, Sector::NS, gc.rho))) {
        for (const Rational& ell : {Rational(0), Rational(7, 5)}) {
          ++res.cases;
          const auto rep = flowed_ell_crosscheck(data, gc.k, gc.rho, {nu, ell});
          if (!rep.equal && res.pass) {
            res.pass = false;
            res.witness = "nu=" + format_coords(nu) + " ell=" + ell.to_string() + " pairing=" +
                          rep.via_pairing.to_string() + " coordinates=" + rep.via_coordinates.to_string();
          }
        }
      }
      break;
  }
  return res;
}

inline SweepReport run_sweep(Check check, const std::vector<GridCase>& grid, const FormScales& scales = {},
                             unsigned threads = worker_count()) {
  SweepReport rep{check, {}};
  rep.results = parallel_map(
      grid.size(), [&](std::size_t i) { return run_check(check, grid[i], scales); }, threads);
  return rep;
}

/// Form scales with every ideal of `family` multiplied by `s`.
inline FormScales uniform_scales(const Family& family, const Rational& s) {
  return FormScales(family.ideal_count(), s);
}

}  // namespace sflow
