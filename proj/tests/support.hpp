// Shared generators for the test suites.
#pragma once

#include <cmath>
#include <random>

#include <attrkit/attrkit.hpp>

namespace attrkit::gen {

inline Rational rint(std::mt19937& rng, int lo, int hi) {
  return Rational(std::uniform_int_distribution<int>(lo, hi)(rng));
}

/// Rank in [1, 6], integer Chern classes in [-10, 10].
inline ChernRecord random_record(std::mt19937& rng, const ThreefoldData& g, int rank_lo = 1) {
  QVector c1(g.b2()), c2(g.b2());
  for (auto& x : c1) x = rint(rng, -10, 10);
  for (auto& x : c2) x = rint(rng, -10, 10);
  return ChernRecord::from_chern_classes(rint(rng, rank_lo, 6), c1, c2, rint(rng, -10, 10), g);
}

inline QVector random_vector(std::mt19937& rng, std::size_t n, int lo, int hi) {
  QVector v(n);
  for (auto& x : v) x = rint(rng, lo, hi);
  return v;
}

inline QClass random_class(std::mt19937& rng, const ThreefoldData& g) {
  return QClass(rint(rng, -10, 10), random_vector(rng, g.b2(), -10, 10), random_vector(rng, g.b2(), -10, 10),
                rint(rng, -10, 10));
}

/// Rounds to a rational with denominator 10^6.
inline Rational round_rational(double x) {
  return Rational(static_cast<long long>(std::llround(x * 1e6)), 1000000);
}

/// A record built from prescribed attractor data: H~ = h, first Chern class
/// c1 and c3 of the c1 = 0 twist chosen so that xi is close to xi_target.
struct ForwardInstance {
  ChernRecord record;
  DVector h;
  double xi = 0.0;  // exact for the rounded c3
  DVector B;
  DVector J;
};

inline ForwardInstance forward_instance(const QVector& h, double xi_target, const Rational& r, const QVector& c1,
                                        const ThreefoldData& g) {
  const std::size_t n = g.b2();
  QVector t = product_pairing(h, h, g);
  QVector ch2(n);
  for (std::size_t a = 0; a < n; ++a) ch2[a] = -(r * t[a] + r * g.c2_pair()[a] / 24);
  const double h3 = to_double(cube(h, g));
  const double s_target = xi_target / std::sqrt(1.0 + xi_target * xi_target);
  const Rational c3 = round_rational(s_target * kC3Coefficient * to_double(r) * h3);
  ChernRecord reduced(r, QVector(n, Rational(0)), ch2, c3 / 2);
  QVector L(c1);
  for (auto& x : L) x /= r;
  ForwardInstance f;
  f.record = twist(reduced, L, g);
  f.h = to_double(h);
  const double s = 3.0 * to_double(c3) / (std::pow(2.0, 2.5) * to_double(r) * h3);
  f.xi = s / std::sqrt(1.0 - s * s);
  const double lambda = std::sqrt(2.0 / (1.0 + f.xi * f.xi));
  for (std::size_t a = 0; a < n; ++a) {
    f.J.push_back(lambda * f.h[a]);
    f.B.push_back(to_double(c1[a] / r) - f.xi * f.J.back());
  }
  return f;
}

inline ForwardInstance random_forward_instance(std::mt19937& rng, const ThreefoldData& g) {
  QVector h(g.b2());
  for (auto& x : h) x = Rational(std::uniform_int_distribution<int>(1, 20)(rng), 10);
  const double xi = std::uniform_real_distribution<double>(-2.0, 2.0)(rng);
  const Rational r = rint(rng, 1, 6);
  QVector c1 = random_vector(rng, g.b2(), -3, 3);
  return forward_instance(h, xi, r, c1, g);
}

}  // namespace attrkit::gen
