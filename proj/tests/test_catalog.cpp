#include <gtest/gtest.h>

#include "support.hpp"

using namespace attrkit;

namespace {

const QVector kH{Rational(1)};

FibrationData p11169_fibration() {
  FibrationData f;
  f.sigma_pi_pair = {{Rational(0), Rational(1)}};
  f.fiber_pair = {Rational(1), Rational(0)};
  f.c1_base = {Rational(3)};
  f.ample_normals = {{Rational(1)}};
  f.effective_normals = {{Rational(1)}};
  return f;
}

}  // namespace

TEST(Catalog, TangentQuintic) {
  auto g = presets::quintic();
  auto tq = tangent_quintic(g);
  EXPECT_EQ(tq.c2(g), QVector{Rational(50)});
  EXPECT_EQ(tq.c3(g), -200);
  EXPECT_EQ(bogomolov(tq, kH, g), Rational(50, 3));
  EXPECT_THROW(tangent_quintic(presets::p11222()), std::invalid_argument);
  EXPECT_THROW(jardim_record(presets::p11169()), std::invalid_argument);
}

TEST(Catalog, MonadClasses) {
  auto g = presets::quintic();
  auto m = monad_chern(3, 2, kH, g);
  EXPECT_EQ(m.c2_coeff, 3);
  EXPECT_EQ(m.c3_coeff, 8);
  EXPECT_EQ(m.record.c2(g), QVector{Rational(15)});
  EXPECT_EQ(m.record.c3(g), 40);
  EXPECT_TRUE(m.stability_proviso);
  const long c3_expected[] = {10, 40, 100, 190, 310, 460, 640, 850, 1090, 1360};
  for (long n = 1; n <= 10; ++n) {
    auto mn = monad_chern(3, n, kH, g);
    EXPECT_EQ(mn.record.c2(g), QVector{Rational(15 * (n - 1))});
    EXPECT_EQ(mn.record.c3(g), c3_expected[n - 1]);
  }
  EXPECT_THROW(monad_chern(2, 4, kH, g), std::invalid_argument);
  EXPECT_THROW(monad_chern(3, 4, {Rational(1), Rational(1)}, g), std::invalid_argument);
}

TEST(Catalog, MonadGrowthAndFirstViolation) {
  auto g = presets::quintic();
  for (long n = 10; n < 100; ++n) {
    auto a = monad_chern(3, n, kH, g), b = monad_chern(3, n + 1, kH, g);
    // c2 grows linearly and c3 quadratically in n.
    EXPECT_EQ(b.c2_coeff - a.c2_coeff, 3);
    EXPECT_EQ((b.c3_coeff - a.c3_coeff) - (a.c3_coeff - monad_chern(3, n - 1, kH, g).c3_coeff), 6);
  }
  long first = 0;
  for (long n = 1; n <= 10 && first == 0; ++n) {
    auto e = c3_bound(monad_chern(3, n, kH, g).record, g);
    if (e.status == BoundStatus::violated) first = n;
  }
  EXPECT_EQ(first, 2);
  auto e2 = c3_bound(monad_chern(3, 2, kH, g).record, g);
  EXPECT_NEAR(e2.lhs.approx, 12.6014, 1e-3);
  EXPECT_EQ(*e2.rhs.exact, 40);
  EXPECT_EQ(c3_bound(monad_chern(3, 1, kH, g).record, g).status, BoundStatus::not_applicable);
}

TEST(Catalog, SpectralC2) {
  auto f = p11169_fibration();
  auto zero = spectral_c2(3, {Rational(0)}, Rational(0), f);
  EXPECT_EQ(zero.c2, (QVector{Rational(0), Rational(0)}));
  EXPECT_FALSE(zero.eta_ample);
  EXPECT_FALSE(zero.eta_minus_rc1_effective);

  auto s = spectral_c2(3, {Rational(9)}, Rational(102), f);
  EXPECT_EQ(s.c2, (QVector{Rational(102), Rational(9)}));
  EXPECT_TRUE(s.eta_ample);
  EXPECT_TRUE(s.eta_minus_rc1_effective);

  // c2(M) - 12 sigma pi^* c1(B) is a multiple of the fiber.
  auto g = presets::p11169();
  QVector shifted = g.c2_pair();
  for (std::size_t a = 0; a < 2; ++a) shifted[a] -= 12 * f.c1_base[0] * f.sigma_pi_pair[0][a];
  EXPECT_EQ(shifted, (QVector{Rational(102), Rational(0)}));

  bool was_ample = false, was_effective = false;
  for (int eta = -2; eta <= 12; ++eta) {
    auto r = spectral_c2(3, {Rational(eta)}, Rational(0), f);
    EXPECT_EQ(r.eta_ample, eta > 0);
    EXPECT_EQ(r.eta_minus_rc1_effective, eta >= 9);
    EXPECT_TRUE(r.eta_ample || !was_ample);
    EXPECT_TRUE(r.eta_minus_rc1_effective || !was_effective);
    was_ample = r.eta_ample;
    was_effective = r.eta_minus_rc1_effective;
  }
  EXPECT_THROW(spectral_c2(3, {Rational(1), Rational(1)}, Rational(0), f), std::invalid_argument);
  FibrationData empty;
  EXPECT_THROW(spectral_c2(3, {Rational(1)}, Rational(0), empty), std::invalid_argument);
}

TEST(Catalog, Jardim) {
  auto g = presets::quintic();
  auto j = jardim_record(g);
  EXPECT_EQ(j.record.rank, 3);
  EXPECT_EQ(j.record.c1, QVector{Rational(-1)});
  EXPECT_EQ(j.record.c2(g), QVector{Rational(5)});
  auto conj = j.report.find("conj_bogomolov");
  ASSERT_NE(conj, nullptr);
  EXPECT_EQ(*conj->lhs.exact, 20);
  EXPECT_EQ(*conj->rhs.exact, Rational(75, 2));
  EXPECT_EQ(conj->status, BoundStatus::violated);
  EXPECT_TRUE(j.report.find("bogomolov")->satisfied());
  EXPECT_EQ(*j.report.find("bogomolov_delta2")->lhs.exact, Rational(10, 9));
  EXPECT_TRUE(j.report.find("bogomolov_delta2")->satisfied());
}

TEST(Catalog, JardimContractedSurfaceData) {
  SurfaceBoundInput v{3, Rational(5), Rational(5), Rational(50), Rational(0), SurfaceKind::general};
  auto rep = surface_index_bounds(v);
  ASSERT_EQ(rep.entries.size(), 1u);
  EXPECT_EQ(*rep.entries[0].margin.exact, Rational(-35, 2));
  EXPECT_EQ(rep.entries[0].status, BoundStatus::violated);
}

TEST(Catalog, YoshiokaThreshold) {
  auto below = yoshioka_check(SurfaceBoundInput::k3(2, Rational(0), Rational(1)));
  EXPECT_EQ(below.status, BoundStatus::violated);
  auto at = yoshioka_check(SurfaceBoundInput::k3(2, Rational(0), Rational(3, 2)));
  EXPECT_EQ(at.status, BoundStatus::boundary);
  EXPECT_EQ(*at.margin.exact, 0);
  EXPECT_TRUE(yoshioka_check(SurfaceBoundInput::k3(2, Rational(0), Rational(2))).satisfied());
  SurfaceBoundInput fano{2, Rational(0), Rational(2), Rational(3), Rational(9), SurfaceKind::fano};
  EXPECT_THROW(yoshioka_check(fano), std::invalid_argument);
}

TEST(Catalog, YoshiokaMarginOffsetsConjecture) {
  std::mt19937 rng(71);
  for (int i = 0; i < 50; ++i) {
    auto v = SurfaceBoundInput::k3(static_cast<long>(gen::rint(rng, 2, 6).convert_to<int>()), gen::rint(rng, -6, 6),
                                   gen::rint(rng, -10, 20));
    auto rep = surface_index_bounds(v);
    EXPECT_EQ(*rep.find("yoshioka")->margin.exact, *rep.find("conj_bogomolov")->margin.exact + 2);
  }
}

TEST(Catalog, SurfaceIndexBounds) {
  auto k3 = surface_index_bounds(SurfaceBoundInput::k3(2, Rational(0), Rational(4)));
  EXPECT_EQ(*k3.find("k3_index")->margin.exact, 0);
  EXPECT_EQ(k3.find("k3_index")->status, BoundStatus::boundary);
  EXPECT_NE(k3.find("yoshioka"), nullptr);
  EXPECT_EQ(surface_index_bounds(SurfaceBoundInput::k3(2, Rational(2), Rational(4))).find("k3_index")->status,
            BoundStatus::not_applicable);

  SurfaceBoundInput p2{2, Rational(0), Rational(2), Rational(3), Rational(9), SurfaceKind::fano};
  auto fano = surface_index_bounds(p2);
  EXPECT_EQ(*fano.find("fano_index")->margin.exact, 0);
  EXPECT_NE(fano.find("maruyama"), nullptr);
  EXPECT_NE(fano.find("conj_bogomolov"), nullptr);

  EXPECT_THROW(surface_index_bounds(SurfaceBoundInput{1, 0, 0, 24, 0, SurfaceKind::k3}), std::invalid_argument);
  EXPECT_THROW(surface_index_bounds(SurfaceBoundInput{2, 0, 0, 23, 0, SurfaceKind::k3}), std::invalid_argument);
  EXPECT_THROW(surface_index_bounds(SurfaceBoundInput{2, 0, 0, 3, 0, SurfaceKind::fano}), std::invalid_argument);
  EXPECT_EQ(parse_surface_kind("ample_canonical"), SurfaceKind::ample_canonical);
  EXPECT_THROW(parse_surface_kind("k4"), std::invalid_argument);
}

TEST(Catalog, ConstructionsSatisfyBogomolov) {
  auto g = presets::quintic();
  for (long n = 1; n <= 40; ++n) EXPECT_GE(bogomolov(monad_chern(3, n, kH, g).record, kH, g), 0);
  for (long r = 3; r <= 8; ++r) EXPECT_GE(bogomolov(monad_chern(r, r + 2, kH, g).record, kH, g), 0);
}
