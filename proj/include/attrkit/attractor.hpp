// Central charge, the analytic attractor solutions for positive rank and for
// sheaves supported on an ample divisor, the c3 bounds and the existence
// predicates built on them, and the map to symplectic charges.
#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include <attrkit/bounds.hpp>
#include <attrkit/chern.hpp>
#include <attrkit/pushforward.hpp>

namespace attrkit {

inline constexpr double kZeta3 = 1.2020569031595942853997;

/// 2^{5/2} / 3, the coefficient of r H~^3 in the c3 bound.
inline const double kC3Coefficient = std::pow(2.0, 2.5) / 3.0;

// ---------------------------------------------------------------------------
// Central charge

/// Omega = e^{B+iJ}, plus i zeta(3) chi/(2 pi)^3 in degree 6 when corrections are on.
inline CClass omega_hat(const DVector& B, const DVector& J, const ThreefoldData& g, bool corrections = false) {
  if (B.size() != g.b2() || J.size() != g.b2()) throw std::invalid_argument("omega_hat: dimension mismatch");
  std::vector<Complex> t(g.b2());
  for (std::size_t a = 0; a < g.b2(); ++a) t[a] = Complex(B[a], J[a]);
  CClass om = exp2(t, g);
  if (corrections) {
    const double two_pi = 2.0 * std::numbers::pi;
    om.d6 += Complex(0.0, kZeta3 * static_cast<double>(g.euler()) / (two_pi * two_pi * two_pi));
  }
  return om;
}

/// Z = integral of e^{-(B+iJ)} gamma, evaluated for a precomputed Mukai vector. No cone check.
inline Complex central_charge_of(const CClass& gamma, const DVector& B, const DVector& J, const ThreefoldData& g,
                                 bool corrections = false) {
  return integrate(wedge(involute(omega_hat(B, J, g, corrections)), gamma, g));
}

inline void require_interior(const DVector& J, const ThreefoldData& g, const char* op) {
  if (!in_kahler_cone(J, g, true).member) {
    throw std::domain_error(std::string(op) + ": J must lie strictly inside the Kahler cone");
  }
}

inline Complex central_charge(const ChernRecord& c, const DVector& B, const DVector& J, const ThreefoldData& g,
                              bool corrections = false) {
  require_interior(J, g, "central_charge");
  return central_charge_of(convert_class<Complex>(mukai(c, g)), B, J, g, corrections);
}

/// |Z|^2 / integral J^3 for a precomputed Mukai vector. No cone check.
inline double z_norm_sq_of(const CClass& gamma, const DVector& B, const DVector& J, const ThreefoldData& g,
                           bool corrections = false) {
  return std::norm(central_charge_of(gamma, B, J, g, corrections)) / cube(J, g);
}

inline double z_norm_sq(const ChernRecord& c, const DVector& B, const DVector& J, const ThreefoldData& g,
                        bool corrections = false) {
  require_interior(J, g, "z_norm_sq");
  return z_norm_sq_of(convert_class<Complex>(mukai(c, g)), B, J, g, corrections);
}

// ---------------------------------------------------------------------------
// Attractor solutions

enum class Branch { positive_rank, rank_zero };
enum class ConeStatus { interior, boundary, outside };
enum class Verdict { in_att, boundary, no_real_htilde, htilde_outside_cone, c3_bound_violated, rank_zero_outside };

inline const char* to_string(Branch b) { return b == Branch::positive_rank ? "positive_rank" : "rank_zero"; }

inline const char* to_string(ConeStatus s) {
  switch (s) {
    case ConeStatus::interior: return "interior";
    case ConeStatus::boundary: return "boundary";
    case ConeStatus::outside: return "outside";
  }
  return "?";
}

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::in_att: return "in_att";
    case Verdict::boundary: return "boundary_of_att";
    case Verdict::no_real_htilde: return "no_real_htilde";
    case Verdict::htilde_outside_cone: return "htilde_outside_cone";
    case Verdict::c3_bound_violated: return "c3_bound_violated";
    case Verdict::rank_zero_outside: return "not_in_att_rank_zero";
  }
  return "?";
}

struct AttractorTolerances {
  double newton = 1e-10;      // H~ residual, relative to max(1, |target|)
  double cone = kConeTolerance;
  double s_boundary = 1e-12;  // | |s| - 1 | below this is the boundary of ATT
  double residual = 1e-8;     // accepted residual of gamma = Re(C Omega)
};

struct AttractorSolution {
  Branch branch = Branch::positive_rank;
  DVector H_tilde;
  double xi = 0.0;
  double lambda = 0.0;
  DVector B;
  DVector J;
  Complex C_bar;
  double residual = 0.0;
  ConeStatus cone_status = ConeStatus::interior;
  bool large_volume = false;  // min J coefficient > 1
};

struct AttractorOutcome {
  Verdict verdict = Verdict::no_real_htilde;
  std::optional<AttractorSolution> solution;
  QVector target;                       // pairing vector of H~^2 (positive rank)
  std::vector<DVector> roots;           // real H~ found by Newton, one of each +- pair
  std::optional<DVector> H_tilde;       // root in the closed cone, if any
  std::optional<double> htilde_cube;
  std::optional<Rational> c3_reduced;   // c3 after twisting to c1 = 0
  std::optional<double> s;              // 3 c3 / (2^{5/2} r H~^3)
  std::optional<Rational> xi_sq;        // rank-zero branch, exact
  std::optional<Rational> surface_discriminant;  // 2r c2 - (r-1) c1^2 - (r^2/12) c2(D)
  std::string note;

  ConeStatus cone_status() const {
    switch (verdict) {
      case Verdict::in_att: return ConeStatus::interior;
      case Verdict::boundary: return ConeStatus::boundary;
      default: return ConeStatus::outside;
    }
  }
};

/// Max-norm of gamma - Re(C Omega) over all graded components.
inline double attractor_residual(const QClass& gamma, Complex C_bar, const DVector& B, const DVector& J,
                                 const ThreefoldData& g) {
  CClass rhs = omega_hat(B, J, g) * C_bar;
  double r = std::abs(to_double(gamma.d0) - rhs.d0.real());
  for (std::size_t a = 0; a < g.b2(); ++a) {
    r = std::max(r, std::abs(to_double(gamma.d2[a]) - rhs.d2[a].real()));
    r = std::max(r, std::abs(to_double(gamma.d4[a]) - rhs.d4[a].real()));
  }
  return std::max(r, std::abs(to_double(gamma.d6) - rhs.d6.real()));
}

// ---------------------------------------------------------------------------
// H~ with sum_bc D_abc h_b h_c = t_a

struct HTildeSearch {
  std::vector<DVector> roots;
  std::vector<double> residuals;
  std::optional<std::size_t> chosen;  // index into roots of the selected root in the closed cone
  ConeMembership membership;
};

namespace detail {

inline DVector quadratic_residual(const DVector& h, const DVector& t, const ThreefoldData& g) {
  DVector f = product_pairing(h, h, g);
  for (std::size_t a = 0; a < f.size(); ++a) f[a] -= t[a];
  return f;
}

inline double max_abs(const DVector& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

inline double norm2(const DVector& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

/// Damped Newton from one start; returns the root on convergence.
inline std::optional<DVector> newton_quadratic(DVector h, const DVector& t, const ThreefoldData& g, double tol_abs) {
  const std::size_t n = g.b2();
  constexpr int kMaxIter = 200;
  DVector f = quadratic_residual(h, t, g);
  for (int it = 0; it < kMaxIter; ++it) {
    if (max_abs(f) <= tol_abs) {
      // Two undamped polishing steps, kept only if they help.
      for (int k = 0; k < 2; ++k) {
        Eigen::MatrixXd jac(n, n);
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b) {
            double s = 0.0;
            for (std::size_t c = 0; c < n; ++c) s += g.coeff<double>(a, b, c) * h[c];
            jac(a, b) = 2.0 * s;
          }
        Eigen::VectorXd rhs(n);
        for (std::size_t a = 0; a < n; ++a) rhs(a) = -f[a];
        Eigen::FullPivLU<Eigen::MatrixXd> lu(jac);
        if (!lu.isInvertible()) break;
        Eigen::VectorXd step = lu.solve(rhs);
        DVector trial(h);
        for (std::size_t a = 0; a < n; ++a) trial[a] += step(a);
        DVector ft = quadratic_residual(trial, t, g);
        if (max_abs(ft) >= max_abs(f)) break;
        h = std::move(trial);
        f = std::move(ft);
      }
      return h;
    }
    Eigen::MatrixXd jac(n, n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        double s = 0.0;
        for (std::size_t c = 0; c < n; ++c) s += g.coeff<double>(a, b, c) * h[c];
        jac(a, b) = 2.0 * s;
      }
    Eigen::VectorXd rhs(n);
    for (std::size_t a = 0; a < n; ++a) rhs(a) = -f[a];
    Eigen::FullPivLU<Eigen::MatrixXd> lu(jac);
    if (!lu.isInvertible()) return std::nullopt;
    Eigen::VectorXd step = lu.solve(rhs);
    const double f_norm = norm2(f);
    double alpha = 1.0;
    bool accepted = false;
    while (alpha > 1e-12) {
      DVector trial(h);
      for (std::size_t a = 0; a < n; ++a) trial[a] += alpha * step(a);
      DVector ft = quadratic_residual(trial, t, g);
      if (norm2(ft) < f_norm) {
        h = std::move(trial);
        f = std::move(ft);
        accepted = true;
        break;
      }
      alpha *= 0.5;
    }
    if (!accepted) return std::nullopt;
  }
  return std::nullopt;
}

/// Representative of {h, -h} with the larger cone margin.
inline DVector canonical_sign(const DVector& h, const ThreefoldData& g) {
  DVector neg(h);
  for (auto& x : neg) x = -x;
  return in_kahler_cone(neg, g, false).margin > in_kahler_cone(h, g, false).margin ? neg : h;
}

}  // namespace detail

/// Multi-start Newton: every cone ray and pairwise midpoint of rays, at scales 0.1, 1, 10.
inline HTildeSearch solve_htilde(const DVector& target, const ThreefoldData& g,
                                 const AttractorTolerances& tol = {}) {
  const std::size_t n = g.b2();
  if (target.size() != n) throw std::invalid_argument("solve_htilde: dimension mismatch");
  const double tol_abs = tol.newton * std::max(1.0, detail::max_abs(target));

  std::vector<DVector> starts;
  for (double scale : {0.1, 1.0, 10.0}) {
    for (std::size_t a = 0; a < n; ++a) {
      DVector s(n, 0.0);
      s[a] = scale;
      starts.push_back(std::move(s));
    }
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) {
        DVector s(n, 0.0);
        s[a] = 0.5 * scale;
        s[b] = 0.5 * scale;
        starts.push_back(std::move(s));
      }
  }

  HTildeSearch out;
  for (const auto& start : starts) {
    auto root = detail::newton_quadratic(start, target, g, tol_abs);
    if (!root) continue;
    DVector h = detail::canonical_sign(*root, g);
    const double res = detail::max_abs(detail::quadratic_residual(h, target, g));
    bool duplicate = false;
    for (std::size_t k = 0; k < out.roots.size(); ++k) {
      DVector diff(h);
      for (std::size_t a = 0; a < n; ++a) diff[a] -= out.roots[k][a];
      if (detail::max_abs(diff) <= 1e-7 * std::max(1.0, detail::max_abs(h))) {
        duplicate = true;
        if (res < out.residuals[k]) {
          out.roots[k] = h;
          out.residuals[k] = res;
        }
        break;
      }
    }
    if (!duplicate) {
      out.roots.push_back(h);
      out.residuals.push_back(res);
    }
  }

  // Selection among roots in the closed cone: smallest residual, then lexicographic.
  const double tie = tol_abs * 1e-3;
  for (std::size_t k = 0; k < out.roots.size(); ++k) {
    auto m = in_kahler_cone(out.roots[k], g, false, tol.cone);
    if (!m.member) continue;
    if (!out.chosen) {
      out.chosen = k;
      out.membership = m;
      continue;
    }
    const std::size_t c = *out.chosen;
    bool better = out.residuals[k] < out.residuals[c] - tie ||
                  (std::abs(out.residuals[k] - out.residuals[c]) <= tie && out.roots[k] < out.roots[c]);
    if (better) {
      out.chosen = k;
      out.membership = m;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Positive rank

/// Data of the record twisted to c1 = 0: the H~^2 target pairing and c3.
struct ReducedCharge {
  Rational rank;
  QVector target;  // (c2 - (r/24) c2(M)) / r of the twisted record
  Rational c3;     // 2 ch3 of the twisted record
};

inline ReducedCharge reduce_charge(const ChernRecord& c, const ThreefoldData& g) {
  if (c.rank <= 0) throw std::domain_error("positive-rank attractor: rank must be positive");
  ChernRecord tw = untwist(c, g);
  ReducedCharge out;
  out.rank = c.rank;
  out.target.resize(g.b2());
  for (std::size_t a = 0; a < g.b2(); ++a) {
    out.target[a] = (-tw.ch2[a] - c.rank * g.c2_pair()[a] / 24) / c.rank;
  }
  out.c3 = 2 * tw.ch3;
  return out;
}

inline AttractorOutcome solve_positive_rank(const ChernRecord& c, const ThreefoldData& g,
                                            const AttractorTolerances& tol = {}) {
  detail::require_dims(c, g);
  ReducedCharge red = reduce_charge(c, g);
  AttractorOutcome out;
  out.target = red.target;
  out.c3_reduced = red.c3;

  HTildeSearch search = solve_htilde(to_double(red.target), g, tol);
  out.roots = search.roots;
  if (search.roots.empty()) {
    out.verdict = Verdict::no_real_htilde;
    out.note = "no real solution of H~^2 = target";
    return out;
  }
  if (!search.chosen) {
    out.verdict = Verdict::htilde_outside_cone;
    out.note = "real H~ exists but neither sign lies in the closed Kahler cone";
    return out;
  }
  const DVector h = search.roots[*search.chosen];
  out.H_tilde = h;
  const double r = to_double(c.rank);
  const double h3 = cube(h, g);
  out.htilde_cube = h3;
  const double c3 = to_double(red.c3);

  double s;
  if (h3 <= 0.0) {
    if (red.c3 != 0) {
      out.verdict = Verdict::c3_bound_violated;
      out.note = "H~^3 vanishes on the cone boundary while c3 is nonzero";
      return out;
    }
    s = 0.0;
  } else {
    s = 3.0 * c3 / (std::pow(2.0, 2.5) * r * h3);
  }
  out.s = s;
  if (std::abs(s) > 1.0 + tol.s_boundary) {
    out.verdict = Verdict::c3_bound_violated;
    out.note = "|c3| exceeds (2^{5/2}/3) r H~^3";
    return out;
  }
  if (std::abs(std::abs(s) - 1.0) <= tol.s_boundary) {
    out.verdict = Verdict::boundary;
    out.note = "|c3| saturates the bound; xi diverges";
    return out;
  }

  AttractorSolution sol;
  sol.branch = Branch::positive_rank;
  sol.H_tilde = h;
  sol.xi = s / std::sqrt(1.0 - s * s);
  sol.lambda = std::sqrt(2.0 / (1.0 + sol.xi * sol.xi));
  sol.J.resize(g.b2());
  sol.B.resize(g.b2());
  for (std::size_t a = 0; a < g.b2(); ++a) {
    sol.J[a] = sol.lambda * h[a];
    sol.B[a] = to_double(c.c1[a]) / r - sol.xi * sol.J[a];
  }
  sol.C_bar = Complex(r, -r * sol.xi);
  sol.residual = attractor_residual(mukai(c, g), sol.C_bar, sol.B, sol.J, g);
  sol.cone_status = search.membership.boundary ? ConeStatus::boundary : ConeStatus::interior;
  sol.large_volume = *std::min_element(sol.J.begin(), sol.J.end()) > 1.0;
  out.verdict = sol.cone_status == ConeStatus::interior ? Verdict::in_att : Verdict::boundary;
  if (sol.cone_status == ConeStatus::boundary) out.note = "H~ lies on the boundary of the Kahler cone";
  if (sol.residual >= tol.residual) out.note += (out.note.empty() ? "" : "; ") + std::string("residual above tolerance");
  out.solution = std::move(sol);
  return out;
}

// ---------------------------------------------------------------------------
// Rank zero: sheaves supported on an ample divisor D

/// Lift of c1 to H^2(M): the supplied one, or for b2 = 1 the unique class
/// with the given c1 . D|_D (hard Lefschetz).
inline QVector lefschetz_lift(const SurfaceBundleRecord& w, const QVector& D, const ThreefoldData& g) {
  if (w.c1_lift) return *w.c1_lift;
  if (g.b2() == 1) {
    const Rational dd = triple(QVector{Rational(1)}, D, D, g);
    if (dd == 0) throw std::invalid_argument("lefschetz_lift: degenerate divisor");
    return QVector{w.c1_dot_D / dd};
  }
  throw MissingLift("rank-zero attractor: c1_lift is required when b2 > 1");
}

/// 2r c2 - (r-1) c1^2 - (r^2/12) c2(D).
inline Rational surface_discriminant(const SurfaceBundleRecord& w, const QVector& D, const ThreefoldData& g) {
  const SurfaceData s = divisor_chern(D, g);
  return 2 * w.rank * w.c2_num - (w.rank - 1) * w.c1_sq - w.rank * w.rank * s.c2D / 12;
}

/// Solution with C = -i r xi, J = D / xi, B = c1/r - D/2 and
/// xi^2 = r^2 D^3 / (3 (2r c2 - (r-1) c1^2 - (r^2/12) c2(D))).
inline AttractorOutcome solve_rank_zero(const SurfaceBundleRecord& w, const QVector& D, const ThreefoldData& g,
                                        const AttractorTolerances& tol = {}) {
  validate_surface_record(w, D, g);
  if (!in_kahler_cone(D, g, true, tol.cone).member) {
    throw std::invalid_argument("rank-zero attractor: divisor must be strictly ample");
  }
  const QVector lift = lefschetz_lift(w, D, g);
  const SurfaceData surf = divisor_chern(D, g);
  const Rational L = surface_discriminant(w, D, g);

  AttractorOutcome out;
  out.surface_discriminant = L;
  if (L < 0) {
    out.verdict = Verdict::rank_zero_outside;
    out.note = "2r c2 - (r-1) c1^2 - (r^2/12) c2(D) is negative";
    return out;
  }
  if (L == 0) {
    out.verdict = Verdict::boundary;
    out.note = "2r c2 - (r-1) c1^2 - (r^2/12) c2(D) vanishes; xi diverges";
    return out;
  }
  const Rational xi_sq = w.rank * w.rank * surf.d_cubed / (3 * L);
  out.xi_sq = xi_sq;

  AttractorSolution sol;
  sol.branch = Branch::rank_zero;
  const double r = to_double(w.rank);
  sol.xi = std::sqrt(to_double(xi_sq));
  sol.lambda = 1.0 / sol.xi;
  sol.H_tilde = to_double(D);
  sol.J.resize(g.b2());
  sol.B.resize(g.b2());
  for (std::size_t a = 0; a < g.b2(); ++a) {
    sol.J[a] = sol.lambda * sol.H_tilde[a];
    sol.B[a] = to_double(lift[a] / w.rank - D[a] / 2);
  }
  sol.C_bar = Complex(0.0, -r * sol.xi);
  SurfaceBundleRecord lifted = w;
  lifted.c1_lift = lift;
  sol.residual = attractor_residual(push_mukai(lifted, D, g), sol.C_bar, sol.B, sol.J, g);
  sol.cone_status = ConeStatus::interior;
  sol.large_volume = *std::min_element(sol.J.begin(), sol.J.end()) > 1.0;
  out.H_tilde = sol.H_tilde;
  out.verdict = Verdict::in_att;
  if (sol.residual >= tol.residual) out.note = "residual above tolerance";
  out.solution = std::move(sol);
  return out;
}

// ---------------------------------------------------------------------------
// Bounds

/// |c3| <= (2^{5/2}/3) r H~^3, as lhs = bound, rhs = |c3|.
inline BoundsEntry c3_bound(const ChernRecord& c, const ThreefoldData& g, const AttractorTolerances& tol = {}) {
  ReducedCharge red = reduce_charge(c, g);
  HTildeSearch search = solve_htilde(to_double(red.target), g, tol);
  if (!search.chosen) {
    return not_applicable("c3_bound", search.roots.empty() ? "no real H~" : "H~ outside the Kahler cone");
  }
  const double bound = kC3Coefficient * to_double(red.rank) * cube(search.roots[*search.chosen], g);
  BoundsEntry e = make_entry("c3_bound", Value(bound), Value(abs(red.c3)));
  e.note = "lhs = (2^{5/2}/3) r H~^3, rhs = |c3|";
  return e;
}

/// Bound along an ample class w, computed from the radicand (H~^2 . w) and w^3.
inline BoundsEntry c3_bound_along(const ReducedCharge& red, double radicand, double w_cubed, std::string id) {
  if (radicand < 0.0) return not_applicable(std::move(id), "H~^2 . w is negative");
  const double bound = kC3Coefficient * to_double(red.rank) * std::pow(radicand, 1.5) / std::sqrt(w_cubed);
  BoundsEntry e = make_entry(std::move(id), Value(bound), Value(abs(red.c3)));
  e.note = "lhs = (2^{5/2}/3) r ((c2/r - c2(M)/24).w)^{3/2} (w^3)^{-1/2}, rhs = |c3|";
  return e;
}

inline BoundsEntry c3_bound_ample(const ChernRecord& c, const QVector& w, const ThreefoldData& g) {
  if (!in_kahler_cone(w, g, true).member) throw std::invalid_argument("c3_bound_ample: w must be strictly ample");
  ReducedCharge red = reduce_charge(c, g);
  return c3_bound_along(red, to_double(dot(red.target, w)), to_double(cube(w, g)), "c3_bound_ample");
}

inline BoundsEntry c3_bound_ample(const ChernRecord& c, const DVector& w, const ThreefoldData& g) {
  if (!in_kahler_cone(w, g, true).member) throw std::invalid_argument("c3_bound_ample: w must be strictly ample");
  ReducedCharge red = reduce_charge(c, g);
  return c3_bound_along(red, dot(to_double(red.target), w), cube(w, g), "c3_bound_ample");
}

/// Existence predicate for reflexive sheaves of rank r > 1:
/// (a) an ample H~ with H~^2 = (2r c2 - (r-1) c1^2 - (r^2/12) c2(M)) / (2r^2);
/// (b) |c3| of the c1 = 0 twist strictly below (2^{5/2}/3) r H~^3.
inline BoundsReport existence_conjecture(const ChernRecord& c, const ThreefoldData& g, const AttractorTolerances& tol = {}) {
  detail::require_dims(c, g);
  if (c.rank <= 1) throw std::domain_error("existence_conjecture: rank must exceed 1");
  ReducedCharge red = reduce_charge(c, g);
  HTildeSearch search = solve_htilde(to_double(red.target), g, tol);
  BoundsReport rep;

  const Rational literal =
      (cube(c.c1, g) + 3 * c.rank * (c.rank * c.ch3 - dot(c.ch2, c.c1))) / (6 * c.rank * c.rank);

  if (search.roots.empty()) {
    BoundsEntry a = not_applicable("existence.htilde_ample", "no real H~");
    a.status = BoundStatus::violated;
    rep.add(std::move(a));
    rep.add(not_applicable("existence.c3", "requires (a)"));
    return rep;
  }
  double best_margin = -std::numeric_limits<double>::infinity();
  std::optional<DVector> ample;
  for (const auto& h : search.roots) {
    auto m = in_kahler_cone(h, g, true, tol.cone);
    if (m.margin > best_margin) best_margin = m.margin;
    if (m.member && !ample) ample = h;
  }
  if (search.chosen) ample = search.roots[*search.chosen];
  BoundsEntry a = make_entry("existence.htilde_ample", Value(best_margin), Value(0.0), true, tol.cone);
  a.note = "lhs = normalized Kahler-cone margin of H~";
  const bool a_ok = a.satisfied();
  rep.add(std::move(a));
  if (!a_ok || !ample) {
    rep.add(not_applicable("existence.c3", "requires an ample H~"));
    return rep;
  }
  const double bound = kC3Coefficient * to_double(red.rank) * cube(*ample, g);
  BoundsEntry b = make_entry("existence.c3", Value(bound), Value(abs(red.c3)), true);
  b.note = "lhs = (2^{5/2}/3) r H~^3, rhs = |c3| of the c1 = 0 twist; (c1^3 + 3r(r ch3 - ch2 c1))/(6r^2) = " +
           to_string(literal);
  rep.add(std::move(b));
  return rep;
}

/// Existence predicate for bundles on an ample divisor: 2r c2 - (r-1) c1^2 - (r^2/12) c2(D) > 0.
inline BoundsEntry rank_zero_conjecture(const SurfaceBundleRecord& w, const QVector& D, const ThreefoldData& g) {
  validate_surface_record(w, D, g);
  if (w.rank <= 1) throw std::domain_error("rank_zero_conjecture: rank must exceed 1");
  BoundsEntry e = make_entry("rank_zero_existence", Value(surface_discriminant(w, D, g)), Value(Rational(0)), true);
  e.note = "lhs = 2r c2 - (r-1) c1^2 - (r^2/12) c2(D)";
  return e;
}

// ---------------------------------------------------------------------------
// Symplectic charges

struct ChargeVector {
  Rational p0;
  QVector p;
  QVector q;
  Rational q0;

  friend bool operator==(const ChargeVector&, const ChargeVector&) = default;
};

/// p0 = r, p^a = c1^a, q_a = -(ch2 + (r/12) c2(M))_a + (c1 A)_a, q0 = ch3.
/// An empty A means A = 0.
inline ChargeVector charge_map(const ChernRecord& c, const ThreefoldData& g, const std::vector<QVector>& A = {}) {
  detail::require_dims(c, g);
  const std::size_t n = g.b2();
  if (!A.empty()) {
    if (A.size() != n) throw std::invalid_argument("charge_map: A must be b2 x b2");
    for (std::size_t a = 0; a < n; ++a) {
      if (A[a].size() != n) throw std::invalid_argument("charge_map: A must be b2 x b2");
      for (std::size_t b = 0; b < n; ++b)
        if (A[a][b] != A[b][a]) throw std::invalid_argument("charge_map: A must be symmetric");
    }
  }
  ChargeVector out;
  out.p0 = c.rank;
  out.p = c.c1;
  out.q.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    Rational q = -(c.ch2[a] + c.rank * g.c2_pair()[a] / 12);
    if (!A.empty())
      for (std::size_t b = 0; b < n; ++b) q += c.c1[b] * A[b][a];
    out.q[a] = q;
  }
  out.q0 = c.ch3;
  return out;
}

}  // namespace attrkit
