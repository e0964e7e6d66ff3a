#include <gtest/gtest.h>

#include "sflow/errors.hpp"
#include "sflow/modes.hpp"

using namespace sflow;

namespace {

const Rational h(1, 2);

}  // namespace

TEST(Cyclotomic8, RootsOfUnity) {
  EXPECT_EQ(Cyclotomic8::zeta_power(4), Cyclotomic8(Rational(-1)));
  EXPECT_EQ(Cyclotomic8::zeta_power(3) * Cyclotomic8::zeta_power(5), Cyclotomic8(Rational(1)));
  EXPECT_EQ(Cyclotomic8::zeta_power(-2), Cyclotomic8::zeta_power(6));
  EXPECT_EQ(Cyclotomic8::zeta_power(-1).as_root_of_unity(), 7);
  EXPECT_FALSE((Cyclotomic8::zeta_power(1) + Cyclotomic8::zeta_power(0)).as_root_of_unity().has_value());
  EXPECT_TRUE((Cyclotomic8::zeta_power(2) + Cyclotomic8::zeta_power(6)).is_zero());
}

TEST(Modes, ToRamondExamples) {
  const ModeTransform j = mode_transform(Generator::J, -2, Rational(1), Direction::ToRamond);
  EXPECT_EQ(j.phase_exp, 2);
  EXPECT_EQ(j.new_index, Rational(0));
  EXPECT_EQ(j.central, Rational(0));

  const ModeTransform g = mode_transform(Generator::G, 1, Rational(0), Direction::ToRamond);
  EXPECT_EQ(g.phase_exp, 7);
  EXPECT_EQ(g.new_index, h);

  const ModeTransform l = mode_transform(Generator::L, 0, Rational(0), Direction::ToRamond);
  EXPECT_EQ(l.phase_exp, 0);
  EXPECT_EQ(l.new_index, Rational(0));
  EXPECT_EQ(l.central, Rational(1, 8));
  EXPECT_EQ(l.auxiliary, h);

  const ModeTransform j0 = mode_transform(Generator::J, 0, Rational(0), Direction::ToRamond);
  EXPECT_EQ(j0.central, h);
}

TEST(Modes, FromRamondInvertsIndexAndPhase) {
  for (int gamma : {-2, 0, 2}) {
    for (int n = -2; n <= 2; ++n) {
      const ModeTransform to = mode_transform(Generator::J, gamma, Rational(n), Direction::ToRamond);
      const ModeTransform back = mode_transform(Generator::J, gamma, to.new_index, Direction::FromRamond);
      EXPECT_EQ((to.phase_exp + back.phase_exp) % 8, 0);
      EXPECT_EQ(back.new_index, Rational(n));
      EXPECT_EQ(back.central, -to.central);
    }
  }
}

TEST(Modes, LInverseConstant) {
  const ModeTransform l = mode_transform(Generator::L, 0, Rational(0), Direction::FromRamond);
  EXPECT_EQ(l.central, Rational(1, 8));
  EXPECT_EQ(l.auxiliary, -h);
  EXPECT_EQ(l_inverse_residual(Rational(1, 8)), Rational(0));
  EXPECT_EQ(l_inverse_residual(Rational(3, 8)), Rational(1, 4));
}

TEST(Modes, RoundTripExamples) {
  EXPECT_TRUE(roundtrip_check(Generator::J, -2, Rational(1)));
  EXPECT_TRUE(roundtrip_check(Generator::G, 1, Rational(0)));
  EXPECT_TRUE(roundtrip_check(Generator::L, 0, Rational(0)));
}

TEST(Modes, RoundTripsOverAllLegalModes) {
  int count = 0;
  for (int twice = -4; twice <= 4; ++twice) {
    const Rational n(twice, 2);
    for (int gamma : {-2, 0, 2}) {
      if (n.is_integer()) {
        EXPECT_TRUE(roundtrip_check(Generator::J, gamma, n));
        ++count;
      }
    }
    for (int gamma : {-1, 1}) {
      EXPECT_TRUE(roundtrip_check(Generator::G, gamma, n));
      ++count;
    }
    if (n.is_integer()) {
      EXPECT_TRUE(roundtrip_check(Generator::L, 0, n));
      EXPECT_TRUE(roundtrip_check(Generator::JHr, 0, n));
      count += 2;
    }
  }
  EXPECT_EQ(count, 43);
}

TEST(Modes, IllegalModesAreRejected) {
  EXPECT_THROW(mode_transform(Generator::J, 1, Rational(0), Direction::ToRamond), domain_error);
  EXPECT_THROW(mode_transform(Generator::G, 0, Rational(0), Direction::ToRamond), domain_error);
  EXPECT_THROW(mode_transform(Generator::L, 2, Rational(0), Direction::ToRamond), domain_error);
  EXPECT_THROW(mode_transform(Generator::L, 0, h, Direction::ToRamond), domain_error);
  EXPECT_THROW(mode_transform(Generator::G, 1, Rational(1, 3), Direction::ToRamond), domain_error);
  EXPECT_THROW(parse_generator("X"), parse_error);
}

TEST(Modes, CentralTermsEvaluate) {
  const FamilyData psl = family_data(Family::psl22());
  const CentralValues v = central_values(psl, Rational(-3), RhoChoice::Omega1);
  EXPECT_EQ(v.beta_hr_hr, Rational(4));
  const EvaluatedSum l = evaluate_central(rewrite(Generator::L, 0, Rational(0), Direction::ToRamond), v);
  EXPECT_EQ(l.constant, Cyclotomic8(h));
  EXPECT_EQ(l.modes.terms().size(), 2u);
}
