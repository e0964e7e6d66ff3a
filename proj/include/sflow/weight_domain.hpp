#pragma once

// Dominant weight sets P_+^k(NS) and P_+^k(R).
//
// P_+^k(R) uses the fixed positive system Delta^natural_+ and is the same for
// every rho_R. P_+^k(NS) uses Delta^NS_+ = {alpha(h^R) < 0} u
// {alpha in Delta_+ : alpha(h^R) = 0}, so it depends on the rho_R choice.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "sflow/catalog.hpp"
#include "sflow/errors.hpp"
#include "sflow/family.hpp"
#include "sflow/rational.hpp"
#include "sflow/weight.hpp"

namespace sflow {

enum class Sector { NS, R };

inline std::string to_string(Sector s) { return s == Sector::NS ? "ns" : "r"; }

inline Sector parse_sector(std::string_view s) {
  if (s == "ns" || s == "NS") return Sector::NS;
  if (s == "r" || s == "R") return Sector::R;
  throw parse_error("unknown sector '" + std::string(s) + "' (expected ns or r)");
}

class SectorLattice {
 public:
  SectorLattice(Family family, Rational k, Sector sector, RhoChoice rho)
      : family_(family), k_(std::move(k)), sector_(sector), rho_(rho) {
    family_.validate();
    require_rho(family_, rho_);
    if (!in_unitary_range(family_, k_)) {
      throw domain_error("k=" + k_.to_string() + " is not in the unitary range of " + family_.display_name());
    }
    if (sector_ == Sector::NS && rho_ == RhoChoice::Omega3) {
      throw domain_error("the Neveu-Schwarz lattice is defined for rho_R = omega_1^1 only in F(4)");
    }
    capacities_ = level_capacities(family_, k_).capacities;
  }

  SectorLattice(Family family, Rational k, Sector sector)
      : SectorLattice(family, std::move(k), sector, default_rho(family)) {}

  const Family& family() const { return family_; }
  const Rational& k() const { return k_; }
  Sector sector() const { return sector_; }
  RhoChoice rho() const { return rho_; }
  const std::vector<Rational>& capacities() const { return capacities_; }

 private:
  Family family_;
  Rational k_;
  Sector sector_;
  RhoChoice rho_;
  std::vector<Rational> capacities_;
};

namespace detail {

inline bool same_parity_class(const std::vector<Rational>& c) {
  const bool integral = std::all_of(c.begin(), c.end(), [](const Rational& x) { return x.is_integer(); });
  const bool half_odd = std::all_of(c.begin(), c.end(), [](const Rational& x) { return x.is_half_odd(); });
  return integral || half_odd;
}

inline bool in_box(const Rational& x, const Rational& hi) {
  return x.is_integer() && x.sign() >= 0 && x <= hi;
}

// so(2r) R-sector chain: m1 >= ... >= m_{r-1} >= |m_r|, m1 + m2 <= M.
inline bool spo_r_chain(const std::vector<Rational>& m, const Rational& cap) {
  if (!same_parity_class(m)) return false;
  const std::size_t r = m.size();
  for (std::size_t i = 0; i + 2 < r; ++i) {
    if (m[i] < m[i + 1]) return false;
  }
  if (m[r - 2] < m[r - 1].abs()) return false;
  return m[0] + m[1] <= cap;
}

// so(2r) NS chain for rho = omega_r: -|m1| >= m2 >= ... >= m_r, -m_{r-1} - m_r <= M.
inline bool spo_ns_chain(const std::vector<Rational>& m, const Rational& cap) {
  if (!same_parity_class(m)) return false;
  const std::size_t r = m.size();
  if (-m[0].abs() < m[1]) return false;
  for (std::size_t i = 1; i + 1 < r; ++i) {
    if (m[i] < m[i + 1]) return false;
  }
  return -m[r - 2] - m[r - 1] <= cap;
}

// so(7): m1 >= m2 >= m3 >= 0, m1 + m2 <= M, one parity class.
inline bool f4_chain(const std::vector<Rational>& m, const Rational& cap) {
  if (!same_parity_class(m)) return false;
  return m[0] >= m[1] && m[1] >= m[2] && m[2].sign() >= 0 && m[0] + m[1] <= cap;
}

}  // namespace detail

/// Membership of `nu` in the lattice's dominant set.
inline bool is_dominant(const SectorLattice& lattice, const Weight& nu) {
  if (nu.family() != lattice.family()) {
    throw domain_error("weight family " + nu.family().display_name() + " does not match lattice family " +
                       lattice.family().display_name());
  }
  const auto& cap = lattice.capacities();
  std::vector<Rational> m = nu.coords();
  const bool ns = lattice.sector() == Sector::NS;
  switch (lattice.family().kind) {
    case FamilyKind::Psl22: {
      // NS: -(r/2)(d1 - d2); R: (r/2)(d1 - d2); 0 <= r <= M1, r integral.
      const Rational r = Rational(2) * (ns ? m[1] : m[0]);
      return detail::in_box(r, cap[0]);
    }
    case FamilyKind::Spo2_2r: {
      if (!ns) return detail::spo_r_chain(m, cap[0]);
      if (lattice.rho() == RhoChoice::OmegaNextToLast) m.back() = -m.back();
      return detail::spo_ns_chain(m, cap[0]);
    }
    case FamilyKind::D21: {
      if (ns) {
        if (lattice.rho() == RhoChoice::Omega1) {
          m[0] = -m[0];
        } else {
          m[1] = -m[1];
        }
      }
      return detail::in_box(m[0], cap[0]) && detail::in_box(m[1], cap[1]);
    }
    case FamilyKind::F4: {
      if (ns) m[0] = -m[0];
      return detail::f4_chain(m, cap[0]);
    }
  }
  return false;
}

namespace detail {

// All sequences m1 >= m2 >= ... >= m_len >= floor (steps of 1) drawn from
// the parity class starting at `base`, with every entry <= top.
inline void descending_chains(std::size_t len, const Rational& top, const Rational& floor,
                              std::vector<Rational>& prefix, const std::function<void(const std::vector<Rational>&)>& emit) {
  if (prefix.size() == len) {
    emit(prefix);
    return;
  }
  const Rational hi = prefix.empty() ? top : prefix.back();
  for (Rational v = floor; v <= hi; v += Rational(1)) {
    prefix.push_back(v);
    descending_chains(len, top, floor, prefix, emit);
    prefix.pop_back();
  }
}

// R-sector so(2r) weights. Generated from m1 >= ... >= m_{r-1} >= |m_r|.
inline std::vector<std::vector<Rational>> spo_r_weights(std::size_t r, const Rational& cap) {
  std::vector<std::vector<Rational>> out;
  for (const Rational& base : {Rational(0), Rational(1, 2)}) {
    std::vector<Rational> prefix;
    descending_chains(r - 1, cap, base, prefix, [&](const std::vector<Rational>& head) {
      if (head[0] + head[1] > cap) return;
      const Rational& last = head.back();
      for (Rational v = -last; v <= last; v += Rational(1)) {
        auto w = head;
        w.push_back(v);
        out.push_back(std::move(w));
      }
    });
  }
  return out;
}

inline std::vector<std::vector<Rational>> f4_r_weights(const Rational& cap) {
  std::vector<std::vector<Rational>> out;
  for (const Rational& base : {Rational(0), Rational(1, 2)}) {
    std::vector<Rational> prefix;
    descending_chains(3, cap, base, prefix, [&](const std::vector<Rational>& w) {
      if (w[0] + w[1] <= cap) out.push_back(w);
    });
  }
  return out;
}

}  // namespace detail

/// Every dominant weight of the lattice, sorted lexicographically by coordinates.
inline std::vector<Weight> enumerate(const SectorLattice& lattice) {
  const Family& f = lattice.family();
  const auto& cap = lattice.capacities();
  const bool ns = lattice.sector() == Sector::NS;
  std::vector<std::vector<Rational>> raw;
  switch (f.kind) {
    case FamilyKind::Psl22: {
      for (Rational r = 0; r <= cap[0]; r += Rational(1)) {
        const Rational h = r / Rational(2);
        raw.push_back(ns ? std::vector<Rational>{-h, h} : std::vector<Rational>{h, -h});
      }
      break;
    }
    case FamilyKind::Spo2_2r: {
      raw = detail::spo_r_weights(static_cast<std::size_t>(f.r), cap[0]);
      if (ns) {
        // Delta^NS_+ is the image of Delta_+ under eps_i -> -eps_{r+1-i}.
        for (auto& w : raw) {
          std::reverse(w.begin(), w.end());
          for (auto& x : w) x = -x;
          if (lattice.rho() == RhoChoice::OmegaNextToLast) w.back() = -w.back();
        }
      }
      break;
    }
    case FamilyKind::D21: {
      for (Rational a = 0; a <= cap[0]; a += Rational(1)) {
        for (Rational b = 0; b <= cap[1]; b += Rational(1)) {
          std::vector<Rational> w{a, b};
          if (ns) {
            if (lattice.rho() == RhoChoice::Omega1) {
              w[0] = -w[0];
            } else {
              w[1] = -w[1];
            }
          }
          raw.push_back(std::move(w));
        }
      }
      break;
    }
    case FamilyKind::F4: {
      raw = detail::f4_r_weights(cap[0]);
      if (ns) {
        for (auto& w : raw) w[0] = -w[0];
      }
      break;
    }
  }
  std::vector<Weight> out;
  out.reserve(raw.size());
  for (auto& c : raw) out.emplace_back(f, std::move(c));
  std::sort(out.begin(), out.end());
  return out;
}

/// The integer r labelling a psl(2|2) weight +-(r/2)(delta1 - delta2).
inline Rational psl22_label(const Weight& w, Sector sector) {
  if (w.family().kind != FamilyKind::Psl22) throw domain_error("psl22_label needs a psl(2|2) weight");
  return Rational(2) * (sector == Sector::NS ? w[1] : w[0]);
}

}  // namespace sflow
