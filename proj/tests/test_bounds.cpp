#include <gtest/gtest.h>

#include <vector>

#include "oracle_data.hpp"
#include "sflow/bounds.hpp"
#include "sflow/errors.hpp"

using namespace sflow;

namespace {

const Rational h(1, 2);

Weight w(const Family& f, std::vector<Rational> c) { return Weight(f, std::move(c)); }

}  // namespace

TEST(Bounds, NeveuSchwarzExamples) {
  const Family psl = Family::psl22();
  EXPECT_EQ(a_ns(psl, Rational(-3), w(psl, {-h, h})), h);
  const Family spo = Family::spo(3);
  EXPECT_EQ(a_ns(spo, Rational(-2), Weight::zero(spo)), Rational(0));
  const Family d21 = Family::d21(1, 2, 1);
  EXPECT_EQ(a_ns(d21, Rational(-2, 3), w(d21, {0, 1})), Rational(1, 4));
}

TEST(Bounds, RamondExamples) {
  const Family psl = Family::psl22();
  for (const auto& nu : enumerate(SectorLattice(psl, Rational(-3), Sector::R))) {
    EXPECT_EQ(a_r(psl, Rational(-3), nu), h);
  }
  const Family spo = Family::spo(3);
  const Rational t(3, 2);
  EXPECT_EQ(a_r(spo, Rational(-2), w(spo, {t, t, t})), Rational(9, 8));
  const Family f4 = Family::f4();
  EXPECT_EQ(a_r(f4, Rational(-4, 3), w(f4, {1, 0, 0})), h);
}

TEST(Bounds, MatchIndependentOracle) {
  for (const auto& c : oracle::load_derived()) {
    for (const auto& e : c.weights) {
      EXPECT_EQ(a_ns(c.family, c.k, e.nu, c.rho), e.a_ns) << c.family.spec_string() << " " << format_coords(e.nu);
      EXPECT_EQ(a_r(c.family, c.k, e.nu_r), e.a_r) << c.family.spec_string() << " " << format_coords(e.nu_r);
      EXPECT_EQ(bound(c.family, c.k, Sector::NS, e.nu, c.rho), e.a_ns);
    }
  }
}

TEST(Bounds, PreconditionsAreEnforced) {
  const Family spo = Family::spo(3);
  EXPECT_THROW(a_r(spo, Rational(-2), w(spo, {2, 2, 0})), domain_error);
  EXPECT_NO_THROW(a_r(spo, Rational(-2), w(spo, {2, 2, 0}), Precondition::Relax));
  EXPECT_THROW(a_ns(spo, Rational(-2), w(spo, {1, 1, 1})), domain_error);
  EXPECT_THROW(a_ns(Family::f4(), Rational(-4, 3), Weight::zero(Family::f4()), RhoChoice::Omega3), domain_error);
  EXPECT_THROW(a_ns(Family::d21(1, 2, 1), Rational(-1), Weight::zero(Family::d21(1, 2, 1)), Precondition::Relax),
               domain_error);
}

TEST(Bounds, CriticalLevels) {
  EXPECT_THROW(a_r(Family::spo(3), Rational(1), Weight::zero(Family::spo(3)), Precondition::Relax),
               critical_level_error);
  EXPECT_THROW(a_ns(Family::f4(), Rational(2), Weight::zero(Family::f4()), Precondition::Relax), critical_level_error);
}
