// Named constructions (tangent bundle of the quintic, monads, spectral-cover
// c2, the Jardim example) and the index bounds for bundles on surfaces.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <attrkit/attractor.hpp>

namespace attrkit {

namespace detail {

inline void require_quintic(const ThreefoldData& g, const char* op) {
  if (g.b2() != 1 || g.intersection(0, 0, 0) != 5 || g.c2_pair()[0] != 50) {
    throw std::invalid_argument(std::string(op) + ": requires the quintic (b2 = 1, H^3 = 5, c2.H = 50)");
  }
}

}  // namespace detail

/// ch(TQ) = 3 - 10 H^2 - 20 H^3.
inline ChernRecord tangent_quintic(const ThreefoldData& g) {
  detail::require_quintic(g, "tangent_quintic");
  return ChernRecord(Rational(3), {Rational(0)}, {Rational(-50)}, Rational(-100));
}

struct MonadRecord {
  ChernRecord record;
  Rational c2_coeff;  // c2 = c2_coeff H^2
  Rational c3_coeff;  // c3 = c3_coeff H^3
  bool stability_proviso = true;  // stable only for n sufficiently large
};

/// Kernel of O(1)^{n+1} -> O(n+1) ... : c1 = 0,
/// c2 = (r/2)(2n+1-r) H^2, c3 = (-r(r-1)(r-2)/6 + (r/2)(2(n+1)^2 - r(2n-r+3))) H^3.
inline MonadRecord monad_chern(long r, long n, const QVector& H, const ThreefoldData& g) {
  if (r < 3) throw std::invalid_argument("monad_chern: rank must be at least 3");
  if (H.size() != g.b2()) throw std::invalid_argument("monad_chern: H dimension does not match geometry");
  const Rational R(r), N(n);
  MonadRecord out;
  out.c2_coeff = R / 2 * (2 * N + 1 - R);
  out.c3_coeff = -R * (R - 1) * (R - 2) / 6 + R / 2 * (2 * (N + 1) * (N + 1) - R * (2 * N - R + 3));
  QVector c2 = product_pairing(H, H, g);
  for (auto& x : c2) x *= out.c2_coeff;
  out.record = ChernRecord::from_chern_classes(R, QVector(g.b2(), Rational(0)), c2, out.c3_coeff * cube(H, g), g);
  return out;
}

/// Pairings of the spectral-cover building blocks with the threefold basis,
/// and the cone data of the base in coordinates of a base basis {l_i}.
struct FibrationData {
  std::vector<QVector> sigma_pi_pair;   // sigma pi^* l_i . J_a, one vector per base class
  QVector fiber_pair;                   // F . J_a
  QVector c1_base;                      // c1(B) in the base basis
  std::vector<QVector> ample_normals;   // eta ample iff n . eta > 0 for all n
  std::vector<QVector> effective_normals;  // x effective iff n . x >= 0 for all n
};

struct SpectralC2 {
  QVector c2;  // pairing vector of sigma pi^* eta + m_V F
  bool eta_ample = false;
  bool eta_minus_rc1_effective = false;
};

inline SpectralC2 spectral_c2(long r, const QVector& eta, const Rational& m_V, const FibrationData& f) {
  const std::size_t nb = f.sigma_pi_pair.size();
  if (nb == 0 || f.fiber_pair.empty()) throw std::invalid_argument("spectral_c2: missing fibration data");
  if (eta.size() != nb || f.c1_base.size() != nb) throw std::invalid_argument("spectral_c2: base dimension mismatch");
  for (const auto& v : f.sigma_pi_pair)
    if (v.size() != f.fiber_pair.size()) throw std::invalid_argument("spectral_c2: pairing length mismatch");
  if (f.ample_normals.empty() || f.effective_normals.empty())
    throw std::invalid_argument("spectral_c2: missing base cone data");

  SpectralC2 out;
  out.c2 = f.fiber_pair;
  for (auto& x : out.c2) x *= m_V;
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t a = 0; a < out.c2.size(); ++a) out.c2[a] += eta[i] * f.sigma_pi_pair[i][a];

  auto pair = [](const QVector& n, const QVector& x) {
    if (n.size() != x.size()) throw std::invalid_argument("spectral_c2: cone normal length mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += n[i] * x[i];
    return s;
  };
  out.eta_ample = true;
  for (const auto& n : f.ample_normals) out.eta_ample = out.eta_ample && pair(n, eta) > 0;
  QVector shifted(eta);
  for (std::size_t i = 0; i < nb; ++i) shifted[i] -= r * f.c1_base[i];
  out.eta_minus_rc1_effective = true;
  for (const auto& n : f.effective_normals)
    out.eta_minus_rc1_effective = out.eta_minus_rc1_effective && pair(n, shifted) >= 0;
  return out;
}

struct JardimResult {
  ChernRecord record;
  BoundsReport report;
};

/// r = 3, c1 = -H, c2 = H^2 on the quintic.
inline JardimResult jardim_record(const ThreefoldData& g) {
  detail::require_quintic(g, "jardim_record");
  const Rational r = 3;
  const QVector H{Rational(1)};
  JardimResult out;
  out.record = ChernRecord::from_chern_classes(r, {Rational(-1)}, product_pairing(H, H, g), Rational(0), g);
  const Rational c1sqH = triple(out.record.c1, out.record.c1, H, g);
  const Rational lhs = (2 * r * dot(out.record.c2(g), H) - (r - 1) * c1sqH);
  const Rational rhs = r * r / 12 * dot(g.c2_pair(), H);
  BoundsEntry conj = make_entry("conj_bogomolov", Value(lhs), Value(rhs));
  conj.note = "lhs = (2r c2 - (r-1) c1^2).H, rhs = (r^2/12) c2(M).H";
  BoundsEntry classical = make_entry("bogomolov", Value(lhs), Value(Rational(0)));
  classical.note = "lhs = (2r c2 - (r-1) c1^2).H";
  BoundsEntry delta = make_entry("bogomolov_delta2", Value(bogomolov(out.record, H, g)), Value(Rational(0)));
  delta.note = "lhs = Delta2.H";
  out.report.add(std::move(conj));
  out.report.add(std::move(classical));
  out.report.add(std::move(delta));
  return out;
}

// ---------------------------------------------------------------------------
// Surfaces

enum class SurfaceKind { k3, fano, ample_canonical, general };

inline const char* to_string(SurfaceKind k) {
  switch (k) {
    case SurfaceKind::k3: return "k3";
    case SurfaceKind::fano: return "fano";
    case SurfaceKind::ample_canonical: return "ample_canonical";
    case SurfaceKind::general: return "general";
  }
  return "?";
}

inline SurfaceKind parse_surface_kind(const std::string& s) {
  if (s == "k3") return SurfaceKind::k3;
  if (s == "fano") return SurfaceKind::fano;
  if (s == "ample_canonical") return SurfaceKind::ample_canonical;
  if (s == "general") return SurfaceKind::general;
  throw std::invalid_argument("unknown surface kind '" + s + "'");
}

inline constexpr long kK3SecondChern = 24;

struct SurfaceBoundInput {
  long r = 2;
  Rational c1_sq;
  Rational c2_num;
  Rational c2D;
  Rational c1D_sq;
  SurfaceKind kind = SurfaceKind::general;

  static SurfaceBoundInput k3(long r, Rational c1_sq, Rational c2_num) {
    return {r, std::move(c1_sq), std::move(c2_num), Rational(kK3SecondChern), Rational(0), SurfaceKind::k3};
  }
};

inline void validate_surface_input(const SurfaceBoundInput& v) {
  if (v.r < 2) throw std::invalid_argument("surface bounds: rank must be at least 2");
  switch (v.kind) {
    case SurfaceKind::k3:
      if (v.c2D != kK3SecondChern || v.c1D_sq != 0)
        throw std::invalid_argument("surface bounds: a K3 surface has c2 = 24 and c1^2 = 0");
      break;
    case SurfaceKind::fano:
    case SurfaceKind::ample_canonical:
      if (v.c1D_sq <= 0) throw std::invalid_argument("surface bounds: c1(D)^2 must be positive for this kind");
      break;
    case SurfaceKind::general:
      break;
  }
}

inline Rational surface_conjecture_lhs(const SurfaceBoundInput& v) {
  const Rational r(v.r);
  return 2 * r * v.c2_num - (r - 1) * v.c1_sq - r * r / 12 * v.c2D;
}

/// 2r c2 - (r-1) c1^2 - (r^2/12) 24 >= -2 on a K3.
inline BoundsEntry yoshioka_check(const SurfaceBoundInput& v) {
  validate_surface_input(v);
  if (v.kind != SurfaceKind::k3) throw std::invalid_argument("yoshioka_check: requires a K3 surface");
  BoundsEntry e = make_entry("yoshioka", Value(surface_conjecture_lhs(v)), Value(Rational(-2)));
  e.note = "lhs = 2r c2 - (r-1) c1^2 - (r^2/12) c2(K3); equality only for exceptional bundles";
  return e;
}

inline BoundsReport surface_index_bounds(const SurfaceBoundInput& v) {
  validate_surface_input(v);
  const Rational r(v.r);
  BoundsReport rep;
  if (v.kind == SurfaceKind::k3) {
    if (v.c1_sq == 0) {
      BoundsEntry e = make_entry("k3_index", Value(r * v.c2_num - r * r / 12 * v.c2D), Value(Rational(0)));
      e.note = "lhs = r c2 - (r^2/12) c2(D), c1 = 0";
      rep.add(std::move(e));
    } else {
      rep.add(not_applicable("k3_index", "requires c1 = 0"));
    }
    rep.add(yoshioka_check(v));
  }
  if (v.kind == SurfaceKind::fano) {
    if (v.c1_sq == 0) {
      BoundsEntry e =
          make_entry("fano_index", Value(r * v.c2_num - r * r / 12 * (v.c2D + v.c1D_sq)), Value(Rational(0)));
      e.note = "lhs = r c2 - (r^2/12)(c2(D) + c1(D)^2), c1 = 0";
      rep.add(std::move(e));
    } else {
      rep.add(not_applicable("fano_index", "requires c1 = 0"));
    }
    BoundsEntry m = make_entry(
        "maruyama", Value(2 * r * v.c2_num - (r - 1) * v.c1_sq - r * r / 12 * (v.c2D + v.c1D_sq)), Value(Rational(-1)));
    m.note = "lhs = 2r c2 - (r-1) c1^2 - (r^2/12)(c2(D) + c1(D)^2), for K.H < 0";
    rep.add(std::move(m));
  }
  BoundsEntry conj = make_entry("conj_bogomolov", Value(surface_conjecture_lhs(v)), Value(Rational(0)));
  conj.note = "lhs = 2r c2 - (r-1) c1^2 - (r^2/12) c2(D)";
  rep.add(std::move(conj));
  return rep;
}

}  // namespace attrkit
