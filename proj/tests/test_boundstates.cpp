#include <gtest/gtest.h>

#include "support.hpp"

using namespace attrkit;

namespace {

const QVector kH{Rational(1)};

}  // namespace

TEST(BoundStates, PairingConvention) {
  auto g = presets::quintic();
  ChargePair p(structure_sheaf(g), line_bundle(kH, g), g);
  EXPECT_EQ(p.pairing(), -5);
  EXPECT_EQ(p.pairing(), euler_pairing(line_bundle(kH, g), structure_sheaf(g), g));
}

TEST(BoundStates, SelfPair) {
  std::mt19937 rng(61);
  auto g = presets::p11222();
  for (int i = 0; i < 20; ++i) {
    auto c = gen::random_record(rng, g);
    ChargePair p(c, c, g);
    EXPECT_EQ(p.pairing(), 0);
    auto b = bps_bound_condition(p, {0.1, -0.2}, {1.0, 2.0}, g);
    EXPECT_EQ(b.lhs, 0.0);
    EXPECT_TRUE(b.holds);
    EXPECT_THROW(tau_vs(p, {0.0, 0.0}, {1.0, 1.0}, g), std::domain_error);
  }
}

TEST(BoundStates, QuinticRegression) {
  auto g = presets::quintic();
  ChargePair p(structure_sheaf(g), line_bundle(kH, g), g);
  auto b = bps_bound_condition(p, {0.0}, {3.0}, g);
  EXPECT_NEAR(b.im_product, -318.22916666666666667, 1e-10);
  EXPECT_NEAR(b.lhs, 1591.1458333333333333, 1e-9);
  EXPECT_TRUE(b.holds);
  EXPECT_NEAR(tau_vs(p, {0.0}, {3.0}, g), 4.0083028392184335234, 1e-12);
  EXPECT_THROW(bps_bound_condition(p, {0.0}, {0.0}, g), std::domain_error);
}

TEST(BoundStates, SwapSymmetryAndRescale) {
  std::mt19937 rng(62);
  auto g = presets::p11222();
  const DVector B{0.3, -0.1}, J{1.2, 0.7};
  for (int i = 0; i < 50; ++i) {
    auto a = gen::random_record(rng, g), b = gen::random_record(rng, g);
    ChargePair ab(a, b, g), ba(b, a, g);
    auto x = bps_bound_condition(ab, B, J, g), y = bps_bound_condition(ba, B, J, g);
    EXPECT_NEAR(x.lhs, y.lhs, 1e-9 * std::max(1.0, std::abs(x.lhs)));
    if (ab.pairing() != 0) EXPECT_NEAR(tau_vs(ab, B, J, g), tau_vs(ba, B, J, g), 1e-9);
    ChargePair scaled(rescale(a, Rational(3)), rescale(b, Rational(3)), g);
    auto z = bps_bound_condition(scaled, B, J, g);
    EXPECT_NEAR(z.lhs, 81.0 * x.lhs, 1e-9 * std::max(1.0, std::abs(z.lhs)));
    if (std::abs(x.lhs) > 1e-9) EXPECT_EQ(z.holds, x.holds);
  }
}

TEST(BoundStates, LargeVolumeForm) {
  auto g = presets::quintic();
  ChargePair p(structure_sheaf(g), line_bundle(kH, g), g);
  auto lv = large_volume_condition(p, kH, g);
  EXPECT_EQ(lv.chi, 5);
  EXPECT_EQ(lv.delta_mu, 5);
  EXPECT_TRUE(lv.holds);
  ChargePair q(line_bundle(kH, g), structure_sheaf(g), g);
  auto lq = large_volume_condition(q, kH, g);
  EXPECT_EQ(lq.chi, -5);
  EXPECT_EQ(lq.delta_mu, -5);
  EXPECT_TRUE(lq.holds);
  ChargePair e(structure_sheaf(g), rescale(structure_sheaf(g), Rational(2)), g);
  auto le = large_volume_condition(e, kH, g);
  EXPECT_EQ(le.delta_mu, 0);
  EXPECT_EQ(le.interpretation, "equal slopes");
  EXPECT_THROW(large_volume_condition(ChargePair(structure_sheaf(g), ChernRecord(Rational(0), kH, {Rational(0)}, Rational(0)), g), kH, g),
               std::domain_error);
}

TEST(BoundStates, LargeVolumeLeadingTerm) {
  auto g = presets::quintic();
  const double t = 1e3;
  Complex za = central_charge(structure_sheaf(g), {0.0}, {t}, g);
  Complex zb = central_charge(line_bundle(kH, g), {0.0}, {t}, g);
  const double exact = (za * std::conj(zb)).imag();
  const double leading = -t * t * t * 5.0 * (5.0 * t * t - 0.0) / 12.0;
  EXPECT_NEAR(exact, -2083325694450520.8333, 1e3);
  EXPECT_LT(std::abs(exact - leading) / std::abs(leading), 1e-2);
}

TEST(BoundStates, ExtensionChern) {
  auto g = presets::quintic();
  EXPECT_EQ(extension_chern(1, 0, kH, g), structure_sheaf(g));
  auto e = extension_chern(2, 1, kH, g);
  EXPECT_EQ(e.rank, 1);
  EXPECT_EQ(e.ch2, QVector{Rational(-5)});
  EXPECT_EQ(e.ch3, -5);
  EXPECT_THROW(extension_chern(1, 1, kH, g), std::invalid_argument);
  double prev = 0.0;
  for (long p = 2; p <= 50; ++p) {
    auto c = extension_chern(p, 1, kH, g);
    const double c2 = to_double(c.c2(g)[0]), c3 = to_double(c.c3(g));
    const double ratio = c3 * c3 * to_double(c.rank) / (c2 * c2 * c2);
    EXPECT_GT(ratio, prev);
    prev = ratio;
    EXPECT_GE(bogomolov(c, kH, g), 0);
  }
  auto g2 = presets::p11169();
  std::mt19937 rng(63);
  for (int i = 0; i < 20; ++i) EXPECT_NO_THROW(extension_chern(gen::rint(rng, 2, 9).convert_to<long>(), 1, gen::random_vector(rng, 2, 0, 4), g2));
}

TEST(BoundStates, ClosureBudgetAndDeterminism) {
  auto g = presets::quintic();
  std::vector<ChernRecord> seed{structure_sheaf(g), line_bundle(kH, g)};
  EXPECT_EQ(j_closure(seed, {0.0}, {3.0}, g, 0), seed);
  auto c1 = j_closure(seed, {0.0}, {3.0}, g, 5);
  auto c2 = j_closure(seed, {0.0}, {3.0}, g, 5);
  EXPECT_EQ(c1, c2);
  EXPECT_LE(c1.size(), seed.size() + 5);
  EXPECT_GT(c1.size(), seed.size());
  EXPECT_EQ(c1[2], structure_sheaf(g) + line_bundle(kH, g));
  for (long budget = 0; budget <= 8; ++budget) EXPECT_LE(j_closure(seed, {0.0}, {3.0}, g, budget).size(), seed.size() + budget);
  EXPECT_THROW(j_closure(seed, {0.0}, {3.0}, g, -1), std::invalid_argument);
}

TEST(BoundStates, ClosureRejectsViolatingPair) {
  auto g = presets::quintic();
  std::vector<ChernRecord> seed{structure_sheaf(g), tangent_quintic(g)};
  ChargePair p(seed[0], seed[1], g);
  ASSERT_FALSE(bps_bound_condition(p, {0.0}, {3.0}, g).holds);
  EXPECT_EQ(j_closure(seed, {0.0}, {3.0}, g, 10), seed);
}

TEST(BoundStates, GuessBound) {
  auto g = presets::quintic();
  auto tq = tangent_quintic(g);
  auto e = guess_bound(tq, kH, g, Rational(0));
  EXPECT_NEAR(e.lhs.approx, 159.04337619782999286, 1e-9);
  EXPECT_EQ(e.status, BoundStatus::violated);
  double prev = e.lhs.approx;
  for (int c = 1; c <= 10; ++c) {
    auto ec = guess_bound(tq, kH, g, Rational(c));
    EXPECT_GT(ec.lhs.approx, prev);
    prev = ec.lhs.approx;
  }
  EXPECT_THROW(guess_bound(line_bundle(kH, g), kH, g, Rational(0)), std::domain_error);
  EXPECT_THROW(guess_bound(tq, {Rational(-1)}, g, Rational(0)), std::invalid_argument);
  EXPECT_EQ(guess_bound(monad_chern(3, 1, kH, g).record, kH, g, Rational(0)).status, BoundStatus::not_applicable);
}
