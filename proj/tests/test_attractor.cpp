#include <gtest/gtest.h>

#include <numbers>

#include "support.hpp"

using namespace attrkit;

namespace {

const QVector kH{Rational(1)};
constexpr double kTight = 1e-12;

ChernRecord tq() { return tangent_quintic(presets::quintic()); }

/// Z at B = 0, J = tH on a b2 = 1 geometry from the series
/// gamma6 - i t H.gamma4 - t^2/2 H^2.gamma2 + i t^3/6 H^3 gamma0.
Complex series_charge(const QClass& gamma, double t, double h3) {
  const Complex i(0.0, 1.0);
  return to_double(gamma.d6) - i * t * to_double(gamma.d4[0]) - t * t / 2 * h3 * to_double(gamma.d2[0]) +
         i * (t * t * t / 6 * h3) * to_double(gamma.d0);
}

}  // namespace

TEST(CentralCharge, StructureSheafOnQuintic) {
  auto g = presets::quintic();
  Complex z = central_charge(structure_sheaf(g), {0.0}, {1.0}, g);
  EXPECT_NEAR(z.real(), 0.0, kTight);
  EXPECT_NEAR(z.imag(), -1.25, kTight);
  EXPECT_NEAR(z_norm_sq(structure_sheaf(g), {0.0}, {1.0}, g), 0.3125, kTight);
  EXPECT_THROW(central_charge(structure_sheaf(g), {0.0}, {-1.0}, g), std::domain_error);
  EXPECT_THROW(central_charge(structure_sheaf(g), {0.0}, {0.0}, g), std::domain_error);
}

TEST(CentralCharge, LargeVolumeSeriesAndHomogeneity) {
  auto g = presets::quintic();
  std::mt19937 rng(41);
  for (int i = 0; i < 50; ++i) {
    auto c = gen::random_record(rng, g);
    const double t = std::uniform_real_distribution<double>(0.5, 5.0)(rng);
    Complex z = central_charge(c, {0.0}, {t}, g);
    Complex s = series_charge(mukai(c, g), t, 5.0);
    EXPECT_NEAR(std::abs(z - s), 0.0, 1e-9 * std::max(1.0, std::abs(s)));
    Complex zn = central_charge(rescale(c, Rational(3)), {0.3}, {t}, g);
    EXPECT_NEAR(std::abs(zn - 3.0 * central_charge(c, {0.3}, {t}, g)), 0.0, 1e-9 * std::max(1.0, std::abs(zn)));
    EXPECT_GE(z_norm_sq(c, {0.3}, {t}, g), 0.0);
  }
}

TEST(CentralCharge, CorrectionTerm) {
  auto g = presets::quintic();
  auto c = tq();
  Complex d = central_charge(c, {0.2}, {1.5}, g, true) - central_charge(c, {0.2}, {1.5}, g, false);
  const double two_pi = 2 * std::numbers::pi;
  EXPECT_NEAR(d.real(), 0.0, kTight);
  EXPECT_NEAR(d.imag(), -3.0 * kZeta3 * -200.0 / (two_pi * two_pi * two_pi), kTight);
}

TEST(PositiveRank, TangentBundleOfQuintic) {
  auto g = presets::quintic();
  auto out = solve_positive_rank(tq(), g);
  EXPECT_EQ(out.target, QVector{Rational(175, 12)});
  EXPECT_EQ(out.verdict, Verdict::c3_bound_violated);
  ASSERT_TRUE(out.H_tilde);
  EXPECT_NEAR((*out.H_tilde)[0], 1.7078251276599330639, 1e-12);
  EXPECT_NEAR(*out.htilde_cube, 24.905783111707357181, 1e-10);
  EXPECT_EQ(*out.c3_reduced, -200);
  EXPECT_NEAR(*out.s, -200.0 / 140.88838503239731947, 1e-12);
  EXPECT_FALSE(out.solution);
  auto b = c3_bound(tq(), g);
  EXPECT_EQ(b.status, BoundStatus::violated);
  EXPECT_NEAR(b.margin.approx, -59.111614967602680533, 1e-9);
}

TEST(PositiveRank, VanishingC3) {
  auto g = presets::p11222();
  auto f = gen::forward_instance({Rational(1), Rational(2)}, 0.0, Rational(2), {Rational(1), Rational(-1)}, g);
  auto out = solve_positive_rank(f.record, g);
  ASSERT_EQ(out.verdict, Verdict::in_att);
  EXPECT_EQ(*out.c3_reduced, 0);
  EXPECT_EQ(out.solution->xi, 0.0);
  EXPECT_NEAR(out.solution->lambda, std::sqrt(2.0), kTight);
  EXPECT_NEAR(out.solution->B[0], 0.5, kTight);
  EXPECT_NEAR(out.solution->B[1], -0.5, kTight);
  EXPECT_EQ(c3_bound(f.record, g).status, BoundStatus::satisfied);
}

TEST(PositiveRank, ForwardRoundTrip) {
  std::mt19937 rng(42);
  for (auto g : {presets::quintic(), presets::p11222()}) {
    for (int i = 0; i < 50; ++i) {
      auto f = gen::random_forward_instance(rng, g);
      auto out = solve_positive_rank(f.record, g);
      ASSERT_EQ(out.verdict, Verdict::in_att) << g.name() << " " << i;
      const auto& s = *out.solution;
      EXPECT_LT(s.residual, 1e-8);
      EXPECT_NEAR(s.xi, f.xi, 1e-9 * std::max(1.0, std::abs(f.xi)));
      for (std::size_t a = 0; a < g.b2(); ++a) {
        EXPECT_NEAR(s.H_tilde[a], f.h[a], 1e-9);
        EXPECT_NEAR(s.J[a], f.J[a], 1e-9);
        EXPECT_NEAR(s.B[a], f.B[a], 1e-9);
      }
      EXPECT_NEAR(s.lambda * s.lambda, 2.0 / (1.0 + s.xi * s.xi), kTight);
      EXPECT_EQ(s.large_volume, *std::min_element(s.J.begin(), s.J.end()) > 1.0);
    }
  }
}

TEST(PositiveRank, RescaleAndTwist) {
  std::mt19937 rng(43);
  auto g = presets::p11222();
  for (int i = 0; i < 30; ++i) {
    auto f = gen::random_forward_instance(rng, g);
    auto base = solve_positive_rank(f.record, g);
    ASSERT_TRUE(base.solution);
    auto scaled = solve_positive_rank(rescale(f.record, Rational(gen::rint(rng, 2, 7))), g);
    ASSERT_TRUE(scaled.solution);
    EXPECT_NEAR(scaled.solution->lambda, base.solution->lambda, 1e-9);
    for (std::size_t a = 0; a < 2; ++a) EXPECT_NEAR(scaled.solution->J[a], base.solution->J[a], 1e-9);
    QVector L = gen::random_vector(rng, 2, -3, 3);
    auto tw = solve_positive_rank(twist(f.record, L, g), g);
    ASSERT_TRUE(tw.solution);
    for (std::size_t a = 0; a < 2; ++a) {
      EXPECT_NEAR(tw.solution->B[a], base.solution->B[a] + to_double(L[a]), 1e-9);
      EXPECT_NEAR(tw.solution->J[a], base.solution->J[a], 1e-9);
    }
    EXPECT_NEAR(tw.solution->xi, base.solution->xi, 1e-9);
  }
}

TEST(PositiveRank, InteriorRecordsSatisfyBogomolov) {
  std::mt19937 rng(44);
  auto g = presets::p11222();
  for (int i = 0; i < 50; ++i) {
    auto f = gen::random_forward_instance(rng, g);
    ASSERT_EQ(solve_positive_rank(f.record, g).verdict, Verdict::in_att);
    EXPECT_GE(bogomolov(f.record, {Rational(1), Rational(0)}, g), 0);
    EXPECT_GE(bogomolov(f.record, {Rational(0), Rational(1)}, g), 0);
  }
}

TEST(PositiveRank, AnalyticPointIsStationary) {
  std::mt19937 rng(45);
  for (auto g : {presets::quintic(), presets::p11222()}) {
    for (int i = 0; i < 10; ++i) {
      auto f = gen::random_forward_instance(rng, g);
      auto out = solve_positive_rank(f.record, g);
      ASSERT_TRUE(out.solution);
      const double value = z_norm_sq(f.record, out.solution->B, out.solution->J, g);
      DVector grad = z_norm_gradient(f.record, out.solution->B, out.solution->J, g);
      for (double x : grad) EXPECT_LT(std::abs(x) / std::max(1.0, value), 1e-5);
    }
  }
}

TEST(PositiveRank, FailureClasses) {
  auto q = presets::quintic();
  EXPECT_EQ(solve_positive_rank(monad_chern(3, 1, kH, q).record, q).verdict, Verdict::no_real_htilde);
  auto g = presets::p11222();
  // H~^2 pairing (1, 1) forces h = +-(1/2, -1/4).
  ChernRecord outside(Rational(1), {Rational(0), Rational(0)}, {Rational(-10, 3), Rational(-2)}, Rational(0));
  auto out = solve_positive_rank(outside, g);
  EXPECT_EQ(out.verdict, Verdict::htilde_outside_cone);
  ASSERT_EQ(out.roots.size(), 1u);
  EXPECT_NEAR(std::abs(out.roots[0][0]), 0.5, kTight);
  EXPECT_NEAR(out.roots[0][1] / out.roots[0][0], -0.5, kTight);
  // h^2 = 2 on the quintic with r = 3 makes the bound exactly 80.
  ChernRecord edge(Rational(3), {Rational(0)}, {Rational(-145, 4)}, Rational(40));
  EXPECT_EQ(solve_positive_rank(edge, q).verdict, Verdict::boundary);
  EXPECT_THROW(solve_positive_rank(ChernRecord(Rational(0), {Rational(1)}, {Rational(0)}, Rational(0)), q),
               std::domain_error);
}

TEST(RankZero, WorkedExample) {
  auto g = presets::quintic();
  auto w = SurfaceBundleRecord::from_lift(Rational(2), {Rational(0)}, Rational(10), kH, g);
  EXPECT_EQ(surface_discriminant(w, kH, g), Rational(65, 3));
  auto out = solve_rank_zero(w, kH, g);
  ASSERT_EQ(out.verdict, Verdict::in_att);
  EXPECT_EQ(*out.xi_sq, Rational(4, 13));
  const auto& s = *out.solution;
  EXPECT_NEAR(s.xi, 2.0 / std::sqrt(13.0), kTight);
  EXPECT_NEAR(s.J[0], 1.8027756377319946466, 1e-12);
  EXPECT_NEAR(s.B[0], -0.5, kTight);
  EXPECT_NEAR(s.C_bar.imag(), -2.0 * s.xi, kTight);
  EXPECT_LT(s.residual, 1e-8);
}

TEST(RankZero, Thresholds) {
  auto g = presets::quintic();
  SurfaceBundleRecord w;
  w.rank = 2;
  w.c1_sq = 0;
  w.c1_dot_D = 0;
  w.c2_num = Rational(55, 12);
  EXPECT_EQ(surface_discriminant(w, kH, g), 0);
  EXPECT_EQ(solve_rank_zero(w, kH, g).verdict, Verdict::boundary);
  w.c2_num = 4;
  EXPECT_EQ(solve_rank_zero(w, kH, g).verdict, Verdict::rank_zero_outside);
  EXPECT_THROW(solve_rank_zero(w, {Rational(-1)}, g), std::invalid_argument);
  auto g2 = presets::p11222();
  EXPECT_THROW(solve_rank_zero(w, {Rational(1), Rational(1)}, g2), std::invalid_argument);
}

TEST(RankZero, PredicateMatchesConjecture) {
  std::mt19937 rng(46);
  auto g = presets::p11169();
  for (int i = 0; i < 100; ++i) {
    QVector D = gen::random_vector(rng, 2, 1, 3);
    auto w = SurfaceBundleRecord::from_lift(gen::rint(rng, 2, 6), gen::random_vector(rng, 2, -5, 5),
                                            gen::rint(rng, -20, 60), D, g);
    auto out = solve_rank_zero(w, D, g);
    auto conj = rank_zero_conjecture(w, D, g);
    EXPECT_EQ(out.verdict == Verdict::in_att, conj.satisfied());
    if (out.solution) EXPECT_LT(out.solution->residual, 1e-8 * std::max(1.0, to_double(cube(D, g))));
  }
}

TEST(Bounds, AmpleBoundDominates) {
  auto q = presets::quintic();
  auto direct = c3_bound(tq(), q);
  auto ample = c3_bound_ample(tq(), kH, q);
  EXPECT_NEAR(ample.lhs.approx, direct.lhs.approx, 1e-9);
  EXPECT_NEAR(ample.lhs.approx, 140.88838503239731947, 1e-9);
  std::mt19937 rng(47);
  auto g = presets::p11222();
  for (int i = 0; i < 20; ++i) {
    auto f = gen::random_forward_instance(rng, g);
    auto b = c3_bound(f.record, g);
    auto out = solve_positive_rank(f.record, g);
    auto at_h = c3_bound_ample(f.record, out.solution->H_tilde, g);
    EXPECT_NEAR(at_h.lhs.approx, b.lhs.approx, 1e-8 * b.lhs.approx);
    for (int k = 0; k < 10; ++k) {
      auto w = gen::random_vector(rng, 2, 1, 20);
      EXPECT_GE(c3_bound_ample(f.record, w, g).lhs.approx, b.lhs.approx * (1 - 1e-12));
    }
  }
}

TEST(Bounds, ExistenceConjecture) {
  auto q = presets::quintic();
  auto rep = existence_conjecture(tq(), q);
  EXPECT_TRUE(rep.find("existence.htilde_ample")->satisfied());
  EXPECT_EQ(rep.find("existence.c3")->status, BoundStatus::violated);
  EXPECT_FALSE(rep.all_satisfied());
  std::mt19937 rng(48);
  auto g = presets::p11222();
  for (int i = 0; i < 20; ++i) {
    auto f = gen::forward_instance({gen::rint(rng, 1, 5), gen::rint(rng, 1, 5)}, 0.7, Rational(3),
                                       gen::random_vector(rng, 2, -2, 2), g);
    EXPECT_TRUE(existence_conjecture(f.record, g).all_satisfied());
    auto tw = existence_conjecture(twist(f.record, gen::random_vector(rng, 2, -3, 3), g), g);
    EXPECT_TRUE(tw.all_satisfied());
  }
  EXPECT_THROW(existence_conjecture(structure_sheaf(q), q), std::domain_error);
}

TEST(Charges, ChargeMap) {
  auto g = presets::p11222();
  auto o = charge_map(structure_sheaf(g), g);
  EXPECT_EQ(o.p0, 1);
  EXPECT_EQ(o.p, QVector(2, Rational(0)));
  EXPECT_EQ(o.q, (QVector{Rational(-56, 12), Rational(-2)}));
  EXPECT_EQ(o.q0, 0);
  std::mt19937 rng(49);
  std::vector<QVector> I{{Rational(1), Rational(0)}, {Rational(0), Rational(1)}};
  for (int i = 0; i < 20; ++i) {
    auto a = gen::random_record(rng, g), b = gen::random_record(rng, g);
    auto qa = charge_map(a, g), qb = charge_map(b, g), qs = charge_map(a + b, g);
    EXPECT_EQ(qs.p0, qa.p0 + qb.p0);
    for (std::size_t k = 0; k < 2; ++k) EXPECT_EQ(qs.q[k], qa.q[k] + qb.q[k]);
    auto qi = charge_map(a, g, I);
    for (std::size_t k = 0; k < 2; ++k) EXPECT_EQ(qi.q[k] - qa.q[k], a.c1[k]);
  }
  EXPECT_THROW(charge_map(structure_sheaf(g), g, {{Rational(1), Rational(2)}, {Rational(0), Rational(1)}}),
               std::invalid_argument);
}

TEST(Minimizer, RecoversAnalyticPoint) {
  std::mt19937 rng(50);
  for (auto g : {presets::quintic(), presets::p11222()}) {
    for (int i = 0; i < 5; ++i) {
      auto f = gen::random_forward_instance(rng, g);
      auto m = minimize_z_norm(f.record, DVector(g.b2(), 0.0), DVector(g.b2(), 1.0), g);
      EXPECT_EQ(m.status, MinimizeStatus::interior_minimum);
      EXPECT_GT(m.value, 0.0);
      for (std::size_t a = 0; a < g.b2(); ++a) {
        EXPECT_NEAR(m.B[a], f.B[a], 1e-4);
        EXPECT_NEAR(m.J[a], f.J[a], 1e-4);
      }
      auto scaled = minimize_z_norm(rescale(f.record, Rational(2)), DVector(g.b2(), 0.0), DVector(g.b2(), 1.0), g);
      EXPECT_NEAR(scaled.value, 4.0 * m.value, 1e-6 * std::max(1.0, m.value));
    }
  }
}

TEST(Minimizer, ChargesWithoutInteriorAttractor) {
  auto g = presets::quintic();
  auto o = minimize_z_norm(structure_sheaf(g), {0.0}, {1.0}, g);
  EXPECT_EQ(o.status, MinimizeStatus::zero_of_z);
  auto t = minimize_z_norm(tq(), {0.0}, {1.0}, g);
  EXPECT_EQ(t.status, MinimizeStatus::zero_of_z);
  auto again = minimize_z_norm(tq(), {0.0}, {1.0}, g);
  EXPECT_EQ(again.B, t.B);
  EXPECT_EQ(again.J, t.J);
}
