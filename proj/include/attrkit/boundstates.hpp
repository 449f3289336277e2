// Algebraic conditions for two-center bound states: the pairing-sign
// condition, the decay time at a wall, its large-volume slope form, the
// J-closure of a charge set, extension Chern characters, and a parametrized
// c3 bound.
#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include <attrkit/attractor.hpp>

namespace attrkit {

/// Two charges and <a, b> = chi(hom(b, a)) = -chi(a, b); always recomputed.
class ChargePair {
 public:
  ChargePair(ChernRecord a, ChernRecord b, const ThreefoldData& g)
      : a_(std::move(a)), b_(std::move(b)), pairing_(euler_pairing(b_, a_, g)) {}

  const ChernRecord& a() const { return a_; }
  const ChernRecord& b() const { return b_; }
  const Rational& pairing() const { return pairing_; }

 private:
  ChernRecord a_;
  ChernRecord b_;
  Rational pairing_;
};

struct BpsCondition {
  bool holds = false;
  double lhs = 0.0;        // <a, b> Im(Z_a conj(Z_b))
  double im_product = 0.0;  // Im(Z_a conj(Z_b))
};

inline BpsCondition bps_bound_condition(const ChargePair& pair, const DVector& B, const DVector& J,
                                        const ThreefoldData& g, bool corrections = false) {
  const Complex za = central_charge(pair.a(), B, J, g, corrections);
  const Complex zb = central_charge(pair.b(), B, J, g, corrections);
  BpsCondition out;
  out.im_product = (za * std::conj(zb)).imag();
  out.lhs = to_double(pair.pairing()) * out.im_product;
  out.holds = out.lhs >= 0.0;
  return out;
}

/// 2 Im(Z_a conj(Z_b)) / (|Z_a + Z_b| <a, b>).
inline double tau_vs(const ChargePair& pair, const DVector& B, const DVector& J, const ThreefoldData& g,
                     bool corrections = false) {
  if (pair.pairing() == 0) throw std::domain_error("tau_vs: vanishing pairing");
  const Complex za = central_charge(pair.a(), B, J, g, corrections);
  const Complex zb = central_charge(pair.b(), B, J, g, corrections);
  const double total = std::abs(za + zb);
  if (total == 0.0) throw std::domain_error("tau_vs: vanishing total central charge");
  return 2.0 * (za * std::conj(zb)).imag() / (total * to_double(pair.pairing()));
}

struct LargeVolumeCondition {
  bool holds = false;
  Rational chi;          // chi(a, b) = chi(hom(a, b))
  Rational delta_mu;     // mu(b) - mu(a)
  Rational product;      // chi * delta_mu
  std::string interpretation;
};

/// chi(hom(a, b)) (mu(b) - mu(a)) >= 0, exact.
inline LargeVolumeCondition large_volume_condition(const ChargePair& pair, const QVector& J, const ThreefoldData& g) {
  if (pair.a().rank <= 0 || pair.b().rank <= 0) throw std::domain_error("large_volume_condition: ranks must be positive");
  LargeVolumeCondition out;
  out.chi = -pair.pairing();
  out.delta_mu = slope(pair.b(), J, g) - slope(pair.a(), J, g);
  out.product = out.chi * out.delta_mu;
  out.holds = out.product >= 0;
  if (out.delta_mu == 0) {
    out.interpretation = "equal slopes";
  } else if (!out.holds) {
    out.interpretation = "pairing sign opposes the slope order";
  } else if (out.delta_mu > 0) {
    out.interpretation = "mu(a) < mu(b): needs Hom(a,b) != 0 or Ext^2(a,b) = Ext^1(b,a) != 0";
  } else {
    out.interpretation = "mu(b) < mu(a): needs Hom(b,a) != 0 or Ext^2(b,a) = Ext^1(a,b) != 0";
  }
  return out;
}

/// ch(E) for 0 -> E -> O(qJ)^p -> O(pJ)^q -> 0, i.e. p e^{qJ} - q e^{pJ}.
inline ChernRecord extension_chern(long p, long q, const QVector& J, const ThreefoldData& g) {
  if (p <= q) throw std::invalid_argument("extension_chern: requires p > q");
  QVector qJ(J), pJ(J);
  for (auto& x : qJ) x *= q;
  for (auto& x : pJ) x *= p;
  QClass ch = exp2(qJ, g) * Rational(p) - exp2(pJ, g) * Rational(q);

  // Closed form (p-q) + pq(q-p)/2 J^2 + pq(q^2-p^2)/6 J^3.
  const Rational P(p), Q(q);
  QClass closed(g.b2());
  closed.d0 = P - Q;
  auto jj = product_pairing(J, J, g);
  for (std::size_t a = 0; a < g.b2(); ++a) closed.d4[a] = P * Q * (Q - P) / 2 * jj[a];
  closed.d6 = P * Q * (Q * Q - P * P) / 6 * cube(J, g);
  if (!(ch == closed)) throw std::logic_error("extension_chern: series and closed form disagree");
  return from_even_class(ch);
}

/// Smallest superset of the seed closed under sums of pairs satisfying the
/// bound-state condition at (B, J), capped at `budget` new elements.
/// Rounds are breadth-first; within a round, pairs (i < j) are visited in
/// lexicographic order and only pairs involving an element new in the
/// previous round are considered after the first round.
inline std::vector<ChernRecord> j_closure(const std::vector<ChernRecord>& seed, const DVector& B, const DVector& J,
                                          const ThreefoldData& g, long budget, bool corrections = false) {
  if (budget < 0) throw std::invalid_argument("j_closure: budget must be nonnegative");
  require_interior(J, g, "j_closure");
  std::vector<ChernRecord> out;
  for (const auto& c : seed) {
    bool dup = false;
    for (const auto& o : out) dup = dup || o == c;
    if (!dup) out.push_back(c);
  }
  long added = 0;
  std::size_t fresh_from = 0;
  while (added < budget) {
    const std::size_t n = out.size();
    std::vector<ChernRecord> round;
    for (std::size_t i = 0; i < n && added + static_cast<long>(round.size()) < budget; ++i) {
      for (std::size_t j = std::max(i + 1, fresh_from); j < n; ++j) {
        if (added + static_cast<long>(round.size()) >= budget) break;
        ChargePair pair(out[i], out[j], g);
        if (!bps_bound_condition(pair, B, J, g, corrections).holds) continue;
        ChernRecord sum = out[i] + out[j];
        bool dup = false;
        for (const auto& o : out) dup = dup || o == sum;
        for (const auto& o : round) dup = dup || o == sum;
        if (!dup) round.push_back(std::move(sum));
      }
    }
    if (round.empty()) break;
    fresh_from = n;
    added += static_cast<long>(round.size());
    for (auto& c : round) out.push_back(std::move(c));
  }
  return out;
}

/// |c3| against the sum of a zeta(3) correction term, the attractor term and
/// const_c r (c2.J/r)^2 (J^3)^{-2/3}; for c1 = 0 and ample J.
inline BoundsEntry guess_bound(const ChernRecord& c, const QVector& J, const ThreefoldData& g, const Rational& const_c) {
  detail::require_dims(c, g);
  if (c.rank <= 0) throw std::domain_error("guess_bound: rank must be positive");
  for (const auto& x : c.c1)
    if (x != 0) throw std::domain_error("guess_bound: requires vanishing first Chern class");
  if (!in_kahler_cone(J, g, true).member) throw std::invalid_argument("guess_bound: J must be strictly ample");
  if (const_c < 0) throw std::invalid_argument("guess_bound: constant must be nonnegative");

  const double r = to_double(c.rank);
  const double j3 = to_double(cube(J, g));
  const Rational c2J = dot(c.c2(g), J);
  const double c2J_r = to_double(c2J / c.rank);
  const double two_pi = 2.0 * std::numbers::pi;
  const Rational radicand = dot(reduce_charge(c, g).target, J);
  if (c2J_r < 0.0 || radicand < 0) {
    return not_applicable("guess_bound", "c2.J or (c2/r - c2(M)/24).J is negative");
  }
  const double zeta_term = 2.0 * kZeta3 * std::abs(static_cast<double>(g.euler())) / (two_pi * two_pi * two_pi) * r *
                           std::sqrt(c2J_r) * std::pow(j3, -1.0 / 6.0);
  const double attractor_term = kC3Coefficient * r * std::pow(to_double(radicand), 1.5) / std::sqrt(j3);
  const double const_term = to_double(const_c) * r * c2J_r * c2J_r * std::pow(j3, -2.0 / 3.0);
  BoundsEntry e = make_entry("guess_bound", Value(zeta_term + attractor_term + const_term), Value(abs(c.c3(g))));
  e.note = "zeta(3) term " + std::to_string(zeta_term) + ", attractor term " + std::to_string(attractor_term) +
           ", constant term " + std::to_string(const_term);
  return e;
}

}  // namespace attrkit
