// Local minimization of |Z|^2 / J^3 over complexified Kahler moduli (B, J),
// with J kept inside the open Kahler cone by a logarithmic barrier whose
// weight is decayed geometrically. Quasi-Newton (BFGS) steps on central
// finite-difference gradients. Used as an independent check of the analytic
// attractor solution.
#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include <attrkit/attractor.hpp>

namespace attrkit {

struct MinimizeOptions {
  bool corrections = false;
  long max_iterations = 100000;
  double barrier_start = 1e-2;
  double barrier_end = 1e-12;
  double barrier_decay = 1e-2;
  double gradient_tol = 1e-11;
  double zero_tol = 1e-9;       // value / max(1, start value) below this is a zero of Z
  double boundary_tol = 1e-6;   // normalized cone margin below this is a boundary flow
  double divergence = 1e6;      // |J| above this is a flow to infinite volume
};

enum class MinimizeStatus { interior_minimum, zero_of_z, boundary_flow, not_converged };

inline const char* to_string(MinimizeStatus s) {
  switch (s) {
    case MinimizeStatus::interior_minimum: return "interior_minimum";
    case MinimizeStatus::zero_of_z: return "zero_of_z";
    case MinimizeStatus::boundary_flow: return "boundary_flow";
    case MinimizeStatus::not_converged: return "not_converged";
  }
  return "?";
}

struct MinimizeResult {
  DVector start_B, start_J;
  double start_value = 0.0;
  DVector B, J;
  double value = 0.0;
  double gradient_norm = 0.0;  // max-norm of the finite-difference gradient of |Z|^2/J^3 at the end point
  double cone_margin = 0.0;
  long iterations = 0;
  MinimizeStatus status = MinimizeStatus::not_converged;
};

namespace detail {

/// Raw (unnormalized) cone margins: the entries of J and its Mori pairings.
inline DVector cone_margins(const DVector& J, const ThreefoldData& g) {
  DVector m(J);
  for (const auto& ray : g.mori_rays()) {
    double p = 0.0;
    for (std::size_t a = 0; a < J.size(); ++a) p += to_double(ray[a]) * J[a];
    m.push_back(p);
  }
  return m;
}

class BarrierObjective {
 public:
  BarrierObjective(const CClass& gamma, const ThreefoldData& g, bool corrections, double value_scale,
                   double length_scale)
      : gamma_(gamma), g_(g), corrections_(corrections), value_scale_(value_scale), length_scale_(length_scale) {}

  void set_weight(double mu) { mu_ = mu; }

  double plain(const Eigen::VectorXd& x) const {
    DVector B, J;
    split(x, B, J);
    for (double m : cone_margins(J, g_))
      if (!(m > 0.0)) return std::numeric_limits<double>::infinity();
    const double j3 = cube(J, g_);
    if (!(j3 > 0.0)) return std::numeric_limits<double>::infinity();
    return std::norm(central_charge_of(gamma_, B, J, g_, corrections_)) / j3;
  }

  double operator()(const Eigen::VectorXd& x) const {
    const double f = plain(x);
    if (!std::isfinite(f)) return f;
    DVector B, J;
    split(x, B, J);
    double barrier = 0.0;
    for (double m : cone_margins(J, g_)) barrier -= std::log(m / length_scale_);
    return f + mu_ * value_scale_ * barrier;
  }

  std::size_t b2() const { return g_.b2(); }

  static void split(const Eigen::VectorXd& x, DVector& B, DVector& J) {
    const std::size_t n = static_cast<std::size_t>(x.size()) / 2;
    B.assign(x.data(), x.data() + n);
    J.assign(x.data() + n, x.data() + 2 * n);
  }

 private:
  const CClass& gamma_;
  const ThreefoldData& g_;
  bool corrections_;
  double value_scale_;
  double length_scale_;
  double mu_ = 0.0;
};

/// Central differences, falling back to one-sided near an infeasible neighbour.
template <class F>
Eigen::VectorXd fd_gradient(const F& f, const Eigen::VectorXd& x, double fx) {
  Eigen::VectorXd grad(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const double h = 1e-6 * std::max(1.0, std::abs(x(i)));
    Eigen::VectorXd xp = x, xm = x;
    xp(i) += h;
    xm(i) -= h;
    const double fp = f(xp), fm = f(xm);
    if (std::isfinite(fp) && std::isfinite(fm)) {
      grad(i) = (fp - fm) / (2.0 * h);
    } else if (std::isfinite(fp)) {
      grad(i) = (fp - fx) / h;
    } else if (std::isfinite(fm)) {
      grad(i) = (fx - fm) / h;
    } else {
      grad(i) = 0.0;
    }
  }
  return grad;
}

}  // namespace detail

/// Finite-difference gradient of |Z|^2/J^3 in (B, J) at a point inside the cone.
inline DVector z_norm_gradient(const ChernRecord& c, const DVector& B, const DVector& J, const ThreefoldData& g,
                               bool corrections = false) {
  require_interior(J, g, "z_norm_gradient");
  const CClass gamma = convert_class<Complex>(mukai(c, g));
  detail::BarrierObjective obj(gamma, g, corrections, 1.0, 1.0);
  Eigen::VectorXd x(2 * g.b2());
  for (std::size_t a = 0; a < g.b2(); ++a) {
    x(a) = B[a];
    x(g.b2() + a) = J[a];
  }
  auto plain = [&](const Eigen::VectorXd& y) { return obj.plain(y); };
  Eigen::VectorXd grad = detail::fd_gradient(plain, x, plain(x));
  return DVector(grad.data(), grad.data() + grad.size());
}

inline MinimizeResult minimize_z_norm(const ChernRecord& c, const DVector& start_B, const DVector& start_J,
                                      const ThreefoldData& g, const MinimizeOptions& opt = {}) {
  detail::require_dims(c, g);
  if (start_B.size() != g.b2()) throw std::invalid_argument("minimize_z_norm: start B dimension mismatch");
  require_interior(start_J, g, "minimize_z_norm");
  const std::size_t n = g.b2();
  const CClass gamma = convert_class<Complex>(mukai(c, g));

  Eigen::VectorXd x(2 * n);
  for (std::size_t a = 0; a < n; ++a) {
    x(a) = start_B[a];
    x(n + a) = start_J[a];
  }

  MinimizeResult res;
  res.start_B = start_B;
  res.start_J = start_J;
  double length_scale = 0.0;
  for (double v : start_J) length_scale = std::max(length_scale, std::abs(v));

  detail::BarrierObjective probe(gamma, g, opt.corrections, 1.0, length_scale);
  res.start_value = probe.plain(x);
  const double value_scale = std::max(res.start_value, 1e-300);
  detail::BarrierObjective obj(gamma, g, opt.corrections, value_scale, length_scale);

  long iterations = 0;
  bool capped = false;
  for (double mu = opt.barrier_start; mu >= opt.barrier_end * 0.999 && !capped; mu *= opt.barrier_decay) {
    obj.set_weight(mu);
    Eigen::MatrixXd Hinv = Eigen::MatrixXd::Identity(2 * n, 2 * n);
    double fx = obj(x);
    Eigen::VectorXd grad = detail::fd_gradient(obj, x, fx);
    bool first_step = true;
    int stalls = 0;
    while (true) {
      if (++iterations > opt.max_iterations) {
        capped = true;
        break;
      }
      if (grad.lpNorm<Eigen::Infinity>() <= opt.gradient_tol * std::max(1.0, std::abs(fx))) break;
      Eigen::VectorXd dir = -Hinv * grad;
      if (dir.dot(grad) >= 0.0) {
        Hinv.setIdentity();
        dir = -grad;
      }
      double alpha = 1.0;
      if (first_step) alpha = std::min(1.0, 0.1 * std::max(1.0, x.lpNorm<Eigen::Infinity>()) / dir.lpNorm<Eigen::Infinity>());
      const double slope = grad.dot(dir);
      Eigen::VectorXd xn;
      double fn = std::numeric_limits<double>::infinity();
      bool accepted = false;
      for (int k = 0; k < 80; ++k) {
        xn = x + alpha * dir;
        fn = obj(xn);
        if (std::isfinite(fn) && fn <= fx + 1e-4 * alpha * slope) {
          accepted = true;
          break;
        }
        alpha *= 0.5;
      }
      if (!accepted) {
        if (Hinv.isIdentity()) break;
        Hinv.setIdentity();
        continue;
      }
      Eigen::VectorXd gn = detail::fd_gradient(obj, xn, fn);
      Eigen::VectorXd s = xn - x;
      Eigen::VectorXd y = gn - grad;
      const double sy = s.dot(y);
      if (first_step && sy > 0.0) {
        Hinv *= sy / y.dot(y);
        first_step = false;
      }
      if (sy > 1e-16 * s.norm() * y.norm()) {
        const double rho = 1.0 / sy;
        Eigen::MatrixXd I = Eigen::MatrixXd::Identity(2 * n, 2 * n);
        Hinv = (I - rho * s * y.transpose()) * Hinv * (I - rho * y * s.transpose()) + rho * s * s.transpose();
      }
      const bool tiny_step = s.lpNorm<Eigen::Infinity>() <= 1e-15 * std::max(1.0, x.lpNorm<Eigen::Infinity>());
      const bool tiny_change = std::abs(fx - fn) <= 1e-16 * std::max(1.0, std::abs(fx));
      stalls = (tiny_step || tiny_change) ? stalls + 1 : 0;
      x = xn;
      fx = fn;
      grad = gn;
      if (stalls >= 3) break;
    }
  }

  detail::BarrierObjective::split(x, res.B, res.J);
  res.value = obj.plain(x);
  res.iterations = iterations;
  auto plain = [&](const Eigen::VectorXd& y) { return obj.plain(y); };
  res.gradient_norm = detail::fd_gradient(plain, x, res.value).lpNorm<Eigen::Infinity>();
  res.cone_margin = in_kahler_cone(res.J, g, false).margin;
  double j_max = 0.0;
  for (double v : res.J) j_max = std::max(j_max, std::abs(v));

  if (capped) {
    res.status = MinimizeStatus::not_converged;
  } else if (res.value <= opt.zero_tol * std::max(1.0, res.start_value)) {
    res.status = MinimizeStatus::zero_of_z;
  } else if (res.cone_margin < opt.boundary_tol || j_max > opt.divergence) {
    res.status = MinimizeStatus::boundary_flow;
  } else {
    res.status = MinimizeStatus::interior_minimum;
  }
  return res;
}

}  // namespace attrkit
