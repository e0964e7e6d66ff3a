#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <vector>

#include "sflow/catalog.hpp"
#include "sflow/errors.hpp"
#include "sflow/weight_domain.hpp"

using namespace sflow;

namespace {

const Rational h(1, 2);

Weight w(const Family& f, std::vector<Rational> c) { return Weight(f, std::move(c)); }

bool one_class(const std::vector<Rational>& c) {
  return std::all_of(c.begin(), c.end(), [](const Rational& x) { return x.is_integer(); }) ||
         std::all_of(c.begin(), c.end(), [](const Rational& x) { return x.is_half_odd(); });
}

// Ramond dominance read off the catalog's simple roots and highest roots.
bool r_dominant_by_roots(const FamilyData& d, const std::vector<Rational>& caps, const Weight& nu) {
  for (const auto& a : d.simple_roots) {
    const Rational pairing = Rational(2) * d.inner(nu, a) / d.inner(a, a);
    if (!pairing.is_integer() || pairing.sign() < 0) return false;
  }
  for (std::size_t i = 0; i < d.ideals.size(); ++i) {
    const Weight& theta = d.ideals[i].highest_root;
    if (Rational(2) * d.inner(nu, theta) / d.inner(theta, theta) > caps[i]) return false;
  }
  return true;
}

// Neveu-Schwarz dominance written out family by family from the label description.
bool ns_dominant_by_labels(const Family& f, RhoChoice rho, const std::vector<Rational>& caps, std::vector<Rational> m) {
  auto box = [](const Rational& x, const Rational& hi) { return x.is_integer() && x.sign() >= 0 && x <= hi; };
  switch (f.kind) {
    case FamilyKind::Psl22:
      return (m[0] + m[1]).is_zero() && box(Rational(2) * m[1], caps[0]);
    case FamilyKind::Spo2_2r: {
      if (rho == RhoChoice::OmegaNextToLast) m.back() = -m.back();
      if (!one_class(m)) return false;
      if (-m[0].abs() < m[1]) return false;
      for (std::size_t i = 1; i + 1 < m.size(); ++i) {
        if (m[i] < m[i + 1]) return false;
      }
      return -m[m.size() - 2] - m.back() <= caps[0];
    }
    case FamilyKind::D21:
      return rho == RhoChoice::Omega1 ? box(-m[0], caps[0]) && box(m[1], caps[1])
                                      : box(m[0], caps[0]) && box(-m[1], caps[1]);
    case FamilyKind::F4: {
      if (!one_class(m)) return false;
      const Rational m1 = -m[0];
      return m1 >= m[1] && m[1] >= m[2] && m[2].sign() >= 0 && m1 + m[1] <= caps[0];
    }
  }
  return false;
}

void for_each_in_box(std::size_t dim, const Rational& bound, const std::function<void(const std::vector<Rational>&)>& fn) {
  std::vector<Rational> c(dim, -bound);
  while (true) {
    fn(c);
    std::size_t i = 0;
    for (; i < dim; ++i) {
      c[i] += h;
      if (c[i] <= bound) break;
      c[i] = -bound;
    }
    if (i == dim) return;
  }
}

std::vector<Weight> brute_force(const SectorLattice& lattice) {
  const Family& f = lattice.family();
  const FamilyData d = family_data(f);
  const Rational bound = *std::max_element(lattice.capacities().begin(), lattice.capacities().end()) + Rational(1);
  std::vector<Weight> out;
  for_each_in_box(f.dimension(), bound, [&](const std::vector<Rational>& c) {
    if (f.kind == FamilyKind::Psl22 && !(c[0] + c[1]).is_zero()) return;
    const Weight nu(f, c);
    const bool in = lattice.sector() == Sector::R ? r_dominant_by_roots(d, lattice.capacities(), nu)
                                                  : ns_dominant_by_labels(f, lattice.rho(), lattice.capacities(), c);
    if (in) out.push_back(nu);
  });
  std::sort(out.begin(), out.end());
  return out;
}

struct LatticeCase {
  Family family;
  Rational k;
};

std::vector<LatticeCase> oracle_cases() {
  std::vector<LatticeCase> out;
  for (long cap : {0, 1, 2, 5}) out.push_back({Family::psl22(), level_for_capacity(Family::psl22(), Rational(cap))});
  for (int r : {3, 4}) {
    for (long cap : {0, 1, 2, 3}) out.push_back({Family::spo(r), level_for_capacity(Family::spo(r), Rational(cap))});
  }
  for (const Family& f : {Family::d21(1, 1, 1), Family::d21(1, 2, 1), Family::d21(2, 3, 1), Family::d21(1, 3, 2)}) {
    out.push_back({f, d21_level(f)});
  }
  for (long cap : {0, 1, 2, 3, 4}) out.push_back({Family::f4(), level_for_capacity(Family::f4(), Rational(cap))});
  return out;
}

}  // namespace

TEST(WeightDomain, DominanceExamples) {
  const Family psl = Family::psl22();
  EXPECT_TRUE(is_dominant(SectorLattice(psl, Rational(-3), Sector::NS), w(psl, {-h, h})));
  EXPECT_FALSE(is_dominant(SectorLattice(psl, Rational(-3), Sector::NS), w(psl, {h, -h})));
  const Family spo = Family::spo(3);
  const Rational t(3, 2);
  EXPECT_TRUE(is_dominant(SectorLattice(spo, Rational(-2), Sector::R), w(spo, {t, t, t})));
  EXPECT_FALSE(is_dominant(SectorLattice(spo, Rational(-2), Sector::R), w(spo, {2, 2, 0})));
  EXPECT_FALSE(is_dominant(SectorLattice(spo, Rational(-2), Sector::R), w(spo, {1, h, 0})));
  const Family f4 = Family::f4();
  EXPECT_FALSE(is_dominant(SectorLattice(f4, Rational(-4, 3), Sector::R), w(f4, {2, 0, 0})));
  EXPECT_TRUE(is_dominant(SectorLattice(f4, Rational(-4, 3), Sector::R), w(f4, {1, 0, 0})));
}

TEST(WeightDomain, EnumerationExamples) {
  const Family psl = Family::psl22();
  EXPECT_EQ(enumerate(SectorLattice(psl, Rational(-3), Sector::NS)),
            (std::vector<Weight>{w(psl, {-1, 1}), w(psl, {-h, h}), w(psl, {0, 0})}));
  const Family d21 = Family::d21(1, 2, 1);
  EXPECT_EQ(enumerate(SectorLattice(d21, Rational(-2, 3), Sector::R)),
            (std::vector<Weight>{w(d21, {0, 0}), w(d21, {0, 1})}));
  const Family f4 = Family::f4();
  EXPECT_EQ(enumerate(SectorLattice(f4, Rational(-4, 3), Sector::NS)),
            (std::vector<Weight>{w(f4, {-1, 0, 0}), w(f4, {-h, h, h}), w(f4, {0, 0, 0})}));
}

TEST(WeightDomain, EnumerationMatchesBruteForce) {
  for (const auto& c : oracle_cases()) {
    for (RhoChoice rho : rho_choices(c.family)) {
      if (rho == RhoChoice::Omega3) continue;
      for (Sector s : {Sector::NS, Sector::R}) {
        const SectorLattice lattice(c.family, c.k, s, rho);
        const auto listed = enumerate(lattice);
        EXPECT_EQ(listed, brute_force(lattice))
            << c.family.spec_string() << " k=" << c.k << " " << to_string(s) << " " << to_string(rho);
        for (const auto& nu : listed) EXPECT_TRUE(is_dominant(lattice, nu));
      }
    }
  }
}

TEST(WeightDomain, EnumerationIsSortedAndUnique) {
  const auto all = enumerate(SectorLattice(Family::spo(5), level_for_capacity(Family::spo(5), Rational(4)), Sector::R));
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
  EXPECT_EQ(std::adjacent_find(all.begin(), all.end()), all.end());
}

TEST(WeightDomain, RejectsLevelsOutsideTheUnitaryRange) {
  EXPECT_THROW(SectorLattice(Family::psl22(), Rational(-3, 2), Sector::NS), domain_error);
  EXPECT_THROW(SectorLattice(Family::d21(1, 2, 1), Rational(-1), Sector::R), domain_error);
  EXPECT_THROW(SectorLattice(Family::f4(), Rational(-4, 3), Sector::NS, RhoChoice::Omega3), domain_error);
}

TEST(WeightDomain, Psl22Labels) {
  const Family psl = Family::psl22();
  EXPECT_EQ(psl22_label(w(psl, {-1, 1}), Sector::NS), Rational(2));
  EXPECT_EQ(psl22_label(w(psl, {h, -h}), Sector::R), Rational(1));
  EXPECT_EQ(parse_sector("r"), Sector::R);
  EXPECT_THROW(parse_sector("x"), parse_error);
}
