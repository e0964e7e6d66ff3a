#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "oracle_data.hpp"
#include "sflow/errors.hpp"
#include "sflow/spectral_flow.hpp"

using namespace sflow;

namespace {

const Rational h(1, 2);

Weight w(const Family& f, std::vector<Rational> c) { return Weight(f, std::move(c)); }

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-40, 40);
  std::uniform_int_distribution<long> den(1, 12);
  return Rational(num(rng), den(rng));
}

}  // namespace

TEST(SpectralFlow, FlowExamples) {
  const FamilyData psl = family_data(Family::psl22());
  const HighestWeight p = flow_hw(psl, Rational(-3), RhoChoice::Omega1, {w(psl.family, {-h, h}), h});
  EXPECT_EQ(p.nu, w(psl.family, {h, -h}));
  EXPECT_EQ(p.ell, h);

  const FamilyData spo = family_data(Family::spo(3));
  const Rational t(3, 2);
  const HighestWeight s = flow_hw(spo, Rational(-2), RhoChoice::OmegaLast, {Weight::zero(spo.family), 0});
  EXPECT_EQ(s.nu, w(spo.family, {t, t, t}));
  EXPECT_EQ(s.ell, Rational(9, 8));

  const FamilyData f4 = family_data(Family::f4());
  const HighestWeight f = flow_hw(f4, Rational(-4, 3), RhoChoice::Omega1, {Weight::zero(f4.family), 0});
  EXPECT_EQ(f.nu, w(f4.family, {1, 0, 0}));
  EXPECT_EQ(f.ell, h);
}

TEST(SpectralFlow, InverseExamples) {
  const FamilyData psl = family_data(Family::psl22());
  const HighestWeight p = unflow_hw(psl, Rational(-3), RhoChoice::Omega1, {w(psl.family, {h, -h}), h});
  EXPECT_EQ(p.nu, w(psl.family, {-h, h}));
  EXPECT_EQ(p.ell, h);

  const FamilyData d21 = family_data(Family::d21(1, 2, 1));
  const HighestWeight d =
      unflow_hw(d21, Rational(-2, 3), RhoChoice::Omega1, {w(d21.family, {0, 1}), Rational(1, 4)});
  EXPECT_EQ(d.nu, w(d21.family, {0, 1}));
  EXPECT_EQ(d.ell, Rational(1, 4));
}

TEST(SpectralFlow, MatchesIndependentOracle) {
  for (const auto& c : oracle::load_derived()) {
    const FamilyData data = family_data(c.family);
    for (const auto& e : c.weights) {
      const HighestWeight img = flow_hw(data, c.k, c.rho, {e.nu, e.a_ns});
      EXPECT_EQ(img.nu, e.nu_r) << c.family.spec_string() << " " << format_coords(e.nu);
      EXPECT_EQ(img.ell, e.ell_r) << c.family.spec_string() << " " << format_coords(e.nu);
      const MfReport mf = verify_mf(data, c.k, c.rho, e.nu);
      EXPECT_TRUE(mf.equal);
      EXPECT_EQ(mf.rhs, e.a_r);
    }
  }
}

TEST(SpectralFlow, MfExamples) {
  const FamilyData psl = family_data(Family::psl22());
  const MfReport p = verify_mf(psl, Rational(-3), RhoChoice::Omega1, w(psl.family, {-h, h}));
  EXPECT_EQ(p.lhs, h);
  EXPECT_EQ(p.rhs, h);
  const FamilyData spo = family_data(Family::spo(3));
  const MfReport s = verify_mf(spo, Rational(-2), RhoChoice::OmegaLast, Weight::zero(spo.family));
  EXPECT_EQ(s.lhs, Rational(9, 8));
  EXPECT_TRUE(s.equal);
  const FamilyData d21 = family_data(Family::d21(1, 2, 1));
  const MfReport d = verify_mf(d21, Rational(-2, 3), RhoChoice::Omega1, w(d21.family, {0, 1}));
  EXPECT_EQ(d.lhs, Rational(1, 4));
  EXPECT_EQ(d.rhs, Rational(1, 4));
  EXPECT_THROW(verify_mf(spo, Rational(-2), RhoChoice::OmegaLast, w(spo.family, {1, 1, 1})), domain_error);
}

TEST(SpectralFlow, SpoBothRhoChoices) {
  const Family f = Family::spo(5);
  const FamilyData data = family_data(f);
  const Rational k = level_for_capacity(f, Rational(4));
  for (RhoChoice rho : {RhoChoice::OmegaLast, RhoChoice::OmegaNextToLast}) {
    for (const auto& nu : enumerate(SectorLattice(f, k, Sector::NS, rho))) {
      EXPECT_TRUE(verify_mf(data, k, rho, nu).equal) << to_string(rho) << " " << format_coords(nu);
    }
    EXPECT_TRUE(bijection_check(data, k, rho).bijective());
  }
}

TEST(SpectralFlow, BijectionExamples) {
  const auto p = bijection_check(family_data(Family::psl22()), Rational(-3), RhoChoice::Omega1);
  EXPECT_EQ(p.ns_count, 3u);
  EXPECT_EQ(p.r_count, 3u);
  EXPECT_TRUE(p.bijective());
  const auto d = bijection_check(family_data(Family::d21(1, 2, 1)), Rational(-2, 3), RhoChoice::Omega1);
  EXPECT_EQ(d.ns_count, 2u);
  EXPECT_TRUE(d.bijective());
  const auto f = bijection_check(family_data(Family::f4()), Rational(-4, 3), RhoChoice::Omega1);
  EXPECT_EQ(f.ns_count, f.r_count);
  EXPECT_TRUE(f.bijective());
  EXPECT_FALSE(f.counterexample.has_value());
}

TEST(SpectralFlow, RoundTripOffTheLattice) {
  std::mt19937_64 rng(7);
  for (const Family& f : {Family::psl22(), Family::spo(4), Family::d21(2, 3, 1), Family::f4()}) {
    const FamilyData data = family_data(f);
    const Rational k = f.kind == FamilyKind::D21 ? d21_level(f) : level_for_capacity(f, Rational(3));
    for (RhoChoice rho : rho_choices(f)) {
      if (rho == RhoChoice::Omega3) continue;
      for (int i = 0; i < 50; ++i) {
        std::vector<Rational> c(f.dimension());
        for (auto& x : c) x = random_rational(rng);
        if (f.kind == FamilyKind::Psl22) c[1] = -c[0];
        const HighestWeight hw{Weight(f, c), random_rational(rng)};
        EXPECT_EQ(unflow_hw(data, k, rho, flow_hw(data, k, rho, hw)).nu, hw.nu);
        EXPECT_EQ(unflow_hw(data, k, rho, flow_hw(data, k, rho, hw)).ell, hw.ell);
        EXPECT_EQ(flow_hw(data, k, rho, unflow_hw(data, k, rho, hw)).ell, hw.ell);
        EXPECT_TRUE(flowed_ell_crosscheck(data, k, rho, hw).equal);
      }
    }
  }
}

TEST(SpectralFlow, CrosscheckExamples) {
  const FamilyData psl = family_data(Family::psl22());
  const auto p = flowed_ell_crosscheck(psl, Rational(-3), RhoChoice::Omega1, {w(psl.family, {-h, h}), h});
  EXPECT_EQ(p.via_pairing, h);
  EXPECT_EQ(p.via_coordinates, h);
  const FamilyData f4 = family_data(Family::f4());
  const auto f = flowed_ell_crosscheck(f4, Rational(-4, 3), RhoChoice::Omega1, {Weight::zero(f4.family), 0});
  EXPECT_EQ(f.via_pairing, h);
  const FamilyData spo = family_data(Family::spo(3));
  const auto s = flowed_ell_crosscheck(spo, Rational(-2), RhoChoice::OmegaLast, {Weight::zero(spo.family), 0});
  EXPECT_EQ(s.via_pairing, Rational(9, 8));
  EXPECT_TRUE(s.equal);
}

TEST(SpectralFlow, RescaledFormGivesTheSameFlow) {
  const Family f = Family::d21(1, 3, 2);
  const FamilyData base = family_data(f);
  const FamilyData skew = family_data(f, {Rational(7, 3), Rational(11, 5)});
  const Rational k = d21_level(f);
  for (RhoChoice rho : rho_choices(f)) {
    for (const auto& nu : enumerate(SectorLattice(f, k, Sector::NS, rho))) {
      const HighestWeight a = flow_hw(base, k, rho, {nu, Rational(2, 7)});
      const HighestWeight b = flow_hw(skew, k, rho, {nu, Rational(2, 7)});
      EXPECT_EQ(a.nu, b.nu);
      EXPECT_EQ(a.ell, b.ell);
      EXPECT_EQ(verify_mf(skew, k, rho, nu).rhs, verify_mf(base, k, rho, nu).rhs);
    }
  }
}

TEST(SpectralFlow, RejectsUnsupportedInputs) {
  const FamilyData f4 = family_data(Family::f4());
  EXPECT_THROW(flow_hw(f4, Rational(-4, 3), RhoChoice::Omega3, {Weight::zero(f4.family), 0}), domain_error);
  EXPECT_THROW(flow_hw(f4, Rational(-1), RhoChoice::Omega1, {Weight::zero(f4.family), 0}), domain_error);
  EXPECT_THROW(flow_hw(f4, Rational(-4, 3), RhoChoice::OmegaLast, {Weight::zero(f4.family), 0}), domain_error);
}

TEST(TwistBookkeeping, CentralCharge) {
  EXPECT_EQ(twisted_central_charge(Rational(5, 2), 0, Rational(3)), Rational(5, 2));
  EXPECT_EQ(twisted_central_charge(Rational(6), h, Rational(4)), Rational(-6));
  EXPECT_EQ(twisted_central_charge(Rational(-7, 3), Rational(2, 5), 0), Rational(-7, 3));
}

TEST(TwistBookkeeping, ConformalWeights) {
  EXPECT_EQ(conformal_weight_shift(Rational(1), Rational(1, 4), 2), h);
  EXPECT_EQ(conformal_weight_shift(Rational(3, 2), Rational(1, 4), 1), Rational(5, 4));
  EXPECT_EQ(conformal_weight_shift(Rational(2), 0, -1), Rational(2));
  EXPECT_THROW(conformal_weight_shift(Rational(1, 3), 0, 0), domain_error);
  EXPECT_THROW(conformal_weight_shift(Rational(-1), 0, 0), domain_error);
}

TEST(TwistBookkeeping, Composition) {
  EXPECT_EQ(twist_composition(Rational(1, 4), 0), Rational(1, 4));
  EXPECT_EQ(twist_composition(Rational(1, 8), Rational(1, 8)), Rational(1, 4));
  EXPECT_EQ(twist_composition(h, h), Rational(1));
  EXPECT_FALSE(is_ramond_twist(h, h));
  EXPECT_TRUE(is_ramond_twist(ramond_partner(Rational(3, 7)), Rational(3, 7)));
}
