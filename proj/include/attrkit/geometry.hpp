// Topological data of a Calabi-Yau threefold and exact arithmetic on its
// even cohomology ring H^0 + H^2 + H^4 + H^6.
//
// Degree-4 classes are stored through their pairing vector against the H^2
// basis {J_a}; this is faithful by Poincare duality when b4 = b2, and makes
// the degree-6 part of a product a plain dot product.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <attrkit/rational.hpp>

namespace attrkit {

/// One entry D_{abc} of the triple-intersection tensor, 0-based indices.
struct IntersectionEntry {
  std::size_t a = 0, b = 0, c = 0;
  Rational value;
};

class ThreefoldData {
 public:
  ThreefoldData() = default;

  /// Builds the geometry from a sparse list of intersection numbers. Each
  /// entry is copied to all index permutations; conflicting duplicates and
  /// any violated invariant abort construction.
  ThreefoldData(std::string name, std::size_t b2, const std::vector<IntersectionEntry>& entries,
                QVector c2_pair, long long euler, std::vector<QVector> mori_rays)
      : name_(std::move(name)),
        b2_(b2),
        intersect_(b2 * b2 * b2, Rational(0)),
        c2_pair_(std::move(c2_pair)),
        euler_(euler),
        mori_rays_(std::move(mori_rays)) {
    if (b2_ == 0) throw std::invalid_argument("geometry: b2 must be positive");
    std::vector<bool> seen(intersect_.size(), false);
    for (const auto& e : entries) {
      if (e.a >= b2_ || e.b >= b2_ || e.c >= b2_) {
        throw std::invalid_argument("geometry: intersection index out of range");
      }
      const std::array<std::size_t, 3> idx{e.a, e.b, e.c};
      const std::array<std::array<int, 3>, 6> perms{
          {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
      for (const auto& p : perms) {
        std::size_t flat = offset(idx[p[0]], idx[p[1]], idx[p[2]]);
        if (seen[flat] && intersect_[flat] != e.value) {
          throw std::invalid_argument("geometry: conflicting values for a symmetric intersection entry");
        }
        seen[flat] = true;
        intersect_[flat] = e.value;
      }
    }
    if (mori_rays_.empty()) {
      for (std::size_t a = 0; a < b2_; ++a) {
        QVector ray(b2_, Rational(0));
        ray[a] = 1;
        mori_rays_.push_back(std::move(ray));
      }
    }
    validate();
    intersect_d_.reserve(intersect_.size());
    for (const auto& q : intersect_) intersect_d_.push_back(to_double(q));
    c2_pair_d_ = to_double(c2_pair_);
  }

  const std::string& name() const { return name_; }
  std::size_t b2() const { return b2_; }
  long long euler() const { return euler_; }
  const QVector& c2_pair() const { return c2_pair_; }
  const DVector& c2_pair_double() const { return c2_pair_d_; }
  const std::vector<QVector>& mori_rays() const { return mori_rays_; }

  const Rational& intersection(std::size_t a, std::size_t b, std::size_t c) const {
    return intersect_[offset(a, b, c)];
  }

  /// D_{abc} in the coefficient type T (exact or double).
  template <class T>
  decltype(auto) coeff(std::size_t a, std::size_t b, std::size_t c) const {
    if constexpr (std::is_same_v<T, Rational>) {
      return intersect_[offset(a, b, c)];
    } else {
      return intersect_d_[offset(a, b, c)];
    }
  }

  template <class T>
  T c2(std::size_t a) const {
    if constexpr (std::is_same_v<T, Rational>) {
      return c2_pair_[a];
    } else {
      return T(c2_pair_d_[a]);
    }
  }

  /// The full (b2^3, row-major) symmetric tensor.
  const QVector& intersect_tensor() const { return intersect_; }

  /// Sparse upper-triangle listing (a <= b <= c, nonzero values).
  std::vector<IntersectionEntry> entries() const {
    std::vector<IntersectionEntry> out;
    for (std::size_t a = 0; a < b2_; ++a)
      for (std::size_t b = a; b < b2_; ++b)
        for (std::size_t c = b; c < b2_; ++c)
          if (intersection(a, b, c) != 0) out.push_back({a, b, c, intersection(a, b, c)});
    return out;
  }

  friend bool operator==(const ThreefoldData& x, const ThreefoldData& y) {
    return x.name_ == y.name_ && x.b2_ == y.b2_ && x.intersect_ == y.intersect_ &&
           x.c2_pair_ == y.c2_pair_ && x.euler_ == y.euler_ && x.mori_rays_ == y.mori_rays_;
  }

 private:
  std::size_t offset(std::size_t a, std::size_t b, std::size_t c) const {
    return (a * b2_ + b) * b2_ + c;
  }

  void validate() const {
    if (c2_pair_.size() != b2_) throw std::invalid_argument("geometry: c2_pair length differs from b2");
    for (const auto& x : c2_pair_) {
      if (x < 0) throw std::invalid_argument("geometry: c2(M).J_a must be nonnegative");
    }
    std::vector<bool> hit(b2_, false);
    for (const auto& ray : mori_rays_) {
      if (ray.size() != b2_) throw std::invalid_argument("geometry: Mori ray length differs from b2");
      std::size_t ones = 0, at = 0;
      for (std::size_t a = 0; a < b2_; ++a) {
        if (ray[a] == 1) ++ones, at = a;
        else if (ray[a] != 0) ones = b2_ + 1;
      }
      if (ones != 1) throw std::invalid_argument("geometry: only simplicial cones with the J_a as generators are supported");
      hit[at] = true;
    }
    if (mori_rays_.size() != b2_ || !std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }))
      throw std::invalid_argument("geometry: only simplicial cones with the J_a as generators are supported");
    // Positivity of the cubic form on the open orthant. With nonnegative
    // coefficients it suffices that one coefficient is positive; otherwise
    // probe an interior grid of the simplex.
    bool all_nonneg = std::all_of(intersect_.begin(), intersect_.end(), [](const Rational& q) { return q >= 0; });
    bool any_pos = std::any_of(intersect_.begin(), intersect_.end(), [](const Rational& q) { return q > 0; });
    if (!any_pos) throw std::invalid_argument("geometry: cubic form vanishes identically");
    if (all_nonneg) return;
    constexpr int kGrid = 12;
    std::vector<int> counts(b2_, 1);
    auto cube_at = [&](const std::vector<int>& v) {
      Rational s = 0;
      for (std::size_t a = 0; a < b2_; ++a)
        for (std::size_t b = 0; b < b2_; ++b)
          for (std::size_t c = 0; c < b2_; ++c) s += intersection(a, b, c) * v[a] * v[b] * v[c];
      return s;
    };
    // Enumerate compositions with positive parts of total kGrid + b2.
    std::vector<int> v(b2_, 1);
    auto recurse = [&](auto&& self, std::size_t pos, int remaining) -> void {
      if (pos + 1 == b2_) {
        v[pos] = remaining;
        if (cube_at(v) <= 0) throw std::invalid_argument("geometry: J^3 is not positive inside the Kahler cone");
        return;
      }
      for (int k = 1; k <= remaining - static_cast<int>(b2_ - pos - 1); ++k) {
        v[pos] = k;
        self(self, pos + 1, remaining - k);
      }
    };
    recurse(recurse, 0, kGrid + static_cast<int>(b2_));
  }

  std::string name_;
  std::size_t b2_ = 0;
  QVector intersect_;
  DVector intersect_d_;
  QVector c2_pair_;
  DVector c2_pair_d_;
  long long euler_ = 0;
  std::vector<QVector> mori_rays_;
};

/// Element of H^{2*}(M): (H^0 scalar, H^2 coefficients, H^4 pairing vector, integral of H^6).
template <class T>
struct EvenClass {
  T d0{};
  std::vector<T> d2;
  std::vector<T> d4;
  T d6{};

  EvenClass() = default;
  explicit EvenClass(std::size_t b2) : d0(0), d2(b2, T(0)), d4(b2, T(0)), d6(0) {}
  EvenClass(T s0, std::vector<T> s2, std::vector<T> s4, T s6)
      : d0(std::move(s0)), d2(std::move(s2)), d4(std::move(s4)), d6(std::move(s6)) {
    if (d2.size() != d4.size()) throw std::invalid_argument("EvenClass: d2/d4 length mismatch");
  }

  std::size_t b2() const { return d2.size(); }

  static EvenClass unit(std::size_t b2) {
    EvenClass x(b2);
    x.d0 = T(1);
    return x;
  }

  /// Degree-2 class with the given coefficients.
  static EvenClass two_form(std::vector<T> coeffs) {
    EvenClass x(coeffs.size());
    x.d2 = std::move(coeffs);
    return x;
  }

  EvenClass& operator+=(const EvenClass& o) {
    check_same(o);
    d0 += o.d0;
    for (std::size_t a = 0; a < b2(); ++a) {
      d2[a] += o.d2[a];
      d4[a] += o.d4[a];
    }
    d6 += o.d6;
    return *this;
  }
  EvenClass& operator-=(const EvenClass& o) {
    check_same(o);
    d0 -= o.d0;
    for (std::size_t a = 0; a < b2(); ++a) {
      d2[a] -= o.d2[a];
      d4[a] -= o.d4[a];
    }
    d6 -= o.d6;
    return *this;
  }
  EvenClass& operator*=(const T& s) {
    d0 *= s;
    for (auto& x : d2) x *= s;
    for (auto& x : d4) x *= s;
    d6 *= s;
    return *this;
  }

  friend EvenClass operator+(EvenClass x, const EvenClass& y) { return x += y; }
  friend EvenClass operator-(EvenClass x, const EvenClass& y) { return x -= y; }
  friend EvenClass operator*(EvenClass x, const T& s) { return x *= s; }
  friend EvenClass operator*(const T& s, EvenClass x) { return x *= s; }
  friend EvenClass operator-(EvenClass x) { return x *= T(-1); }
  friend bool operator==(const EvenClass& x, const EvenClass& y) {
    return x.d0 == y.d0 && x.d2 == y.d2 && x.d4 == y.d4 && x.d6 == y.d6;
  }

 private:
  void check_same(const EvenClass& o) const {
    if (o.b2() != b2()) throw std::invalid_argument("EvenClass: dimension mismatch");
  }
};

using QClass = EvenClass<Rational>;
using CClass = EvenClass<Complex>;

template <class T>
EvenClass<T> convert_class(const QClass& x) {
  EvenClass<T> out(x.b2());
  out.d0 = from_rational<T>(x.d0);
  for (std::size_t a = 0; a < x.b2(); ++a) {
    out.d2[a] = from_rational<T>(x.d2[a]);
    out.d4[a] = from_rational<T>(x.d4[a]);
  }
  out.d6 = from_rational<T>(x.d6);
  return out;
}

namespace detail {

template <class T>
void require_dims(const EvenClass<T>& x, const ThreefoldData& g) {
  if (x.d2.size() != g.b2() || x.d4.size() != g.b2()) {
    throw std::invalid_argument("class dimension does not match geometry '" + g.name() + "'");
  }
}

}  // namespace detail

/// Pairing vector of the product of two 2-forms: (x.y)_a = sum D_abc x_b y_c.
template <class T>
std::vector<T> product_pairing(std::span<const T> x, std::span<const T> y, const ThreefoldData& g) {
  const std::size_t n = g.b2();
  if (x.size() != n || y.size() != n) throw std::invalid_argument("two-form dimension does not match geometry");
  std::vector<T> out(n, T(0));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (x[b] == T(0)) continue;
      for (std::size_t c = 0; c < n; ++c) out[a] += g.coeff<T>(a, b, c) * x[b] * y[c];
    }
  return out;
}

template <class T>
std::vector<T> product_pairing(const std::vector<T>& x, const std::vector<T>& y, const ThreefoldData& g) {
  return product_pairing<T>(std::span<const T>(x), std::span<const T>(y), g);
}

/// D(x, y, z) = integral of x y z.
template <class T>
T triple(const std::vector<T>& x, const std::vector<T>& y, const std::vector<T>& z, const ThreefoldData& g) {
  auto xy = product_pairing(x, y, g);
  T s(0);
  for (std::size_t a = 0; a < g.b2(); ++a) s += xy[a] * z[a];
  return s;
}

template <class T>
T cube(const std::vector<T>& x, const ThreefoldData& g) {
  return triple(x, x, x, g);
}

template <class T>
T dot(const std::vector<T>& x, const std::vector<T>& y) {
  if (x.size() != y.size()) throw std::invalid_argument("dot: length mismatch");
  T s(0);
  for (std::size_t a = 0; a < x.size(); ++a) s += x[a] * y[a];
  return s;
}

/// Cup product truncated above degree 6.
template <class T>
EvenClass<T> wedge(const EvenClass<T>& x, const EvenClass<T>& y, const ThreefoldData& g) {
  detail::require_dims(x, g);
  detail::require_dims(y, g);
  const std::size_t n = g.b2();
  EvenClass<T> out(n);
  out.d0 = x.d0 * y.d0;
  auto xy = product_pairing(x.d2, y.d2, g);
  for (std::size_t a = 0; a < n; ++a) {
    out.d2[a] = x.d0 * y.d2[a] + y.d0 * x.d2[a];
    out.d4[a] = x.d0 * y.d4[a] + y.d0 * x.d4[a] + xy[a];
  }
  out.d6 = x.d0 * y.d6 + y.d0 * x.d6 + dot(x.d2, y.d4) + dot(y.d2, x.d4);
  return out;
}

template <class T>
T integrate(const EvenClass<T>& x) {
  return x.d6;
}

/// Truncated exponential 1 + x + x^2/2 + x^3/6 of a two-form.
template <class T>
EvenClass<T> exp2(const std::vector<T>& x, const ThreefoldData& g) {
  if (x.size() != g.b2()) throw std::invalid_argument("exp2: dimension does not match geometry");
  EvenClass<T> out = EvenClass<T>::unit(g.b2());
  out.d2 = x;
  auto sq = product_pairing(x, x, g);
  for (std::size_t a = 0; a < g.b2(); ++a) out.d4[a] = sq[a] / T(2);
  out.d6 = dot(sq, x) / T(6);
  return out;
}

/// log(x / x.d0) by the truncated series u - u^2/2 + u^3/3, u = x/x.d0 - 1.
template <class T>
EvenClass<T> log_unit(const EvenClass<T>& x, const ThreefoldData& g) {
  detail::require_dims(x, g);
  if (x.d0 == T(0)) throw std::domain_error("log_unit: vanishing degree-0 part");
  EvenClass<T> u = x * (T(1) / x.d0);
  u.d0 = T(0);
  EvenClass<T> u2 = wedge(u, u, g);
  EvenClass<T> u3 = wedge(u2, u, g);
  return u - u2 * (T(1) / T(2)) + u3 * (T(1) / T(3));
}

/// Exponential of a class with vanishing degree-0 part (inverse of log_unit).
template <class T>
EvenClass<T> exp_nilpotent(const EvenClass<T>& u, const ThreefoldData& g) {
  detail::require_dims(u, g);
  if (u.d0 != T(0)) throw std::domain_error("exp_nilpotent: degree-0 part must vanish");
  EvenClass<T> u2 = wedge(u, u, g);
  EvenClass<T> u3 = wedge(u2, u, g);
  return EvenClass<T>::unit(g.b2()) + u + u2 * (T(1) / T(2)) + u3 * (T(1) / T(6));
}

/// sqrt(Td(M)) = 1 + c2(M)/24 for trivial canonical bundle.
template <class T = Rational>
EvenClass<T> sqrt_todd(const ThreefoldData& g) {
  EvenClass<T> out = EvenClass<T>::unit(g.b2());
  for (std::size_t a = 0; a < g.b2(); ++a) out.d4[a] = g.c2<T>(a) / T(24);
  return out;
}

/// Inverse of sqrt(Td(M)) on the truncation: 1 - c2(M)/24.
template <class T = Rational>
EvenClass<T> sqrt_todd_inverse(const ThreefoldData& g) {
  EvenClass<T> out = EvenClass<T>::unit(g.b2());
  for (std::size_t a = 0; a < g.b2(); ++a) out.d4[a] = -g.c2<T>(a) / T(24);
  return out;
}

/// (-1)^k on H^{2k}: the dualizing involution.
template <class T>
EvenClass<T> involute(EvenClass<T> x) {
  for (auto& v : x.d2) v = -v;
  x.d6 = -x.d6;
  return x;
}

struct ConeMembership {
  bool member = false;
  bool boundary = false;
  double margin = 0.0;  // min over entries and Mori pairings, after scaling v to unit max-entry
};

inline constexpr double kConeTolerance = 1e-9;

/// Membership of a two-form in the (simplicial) Kahler cone generated by the basis.
template <class T>
ConeMembership in_kahler_cone(const std::vector<T>& v, const ThreefoldData& g, bool strict,
                              double tol = kConeTolerance) {
  if (v.size() != g.b2()) throw std::invalid_argument("in_kahler_cone: dimension does not match geometry");
  double scale = 0.0;
  std::vector<double> vd;
  for (const auto& x : v) {
    double d;
    if constexpr (std::is_same_v<T, Rational>) {
      d = to_double(x);
    } else {
      d = static_cast<double>(x);
    }
    vd.push_back(d);
    scale = std::max(scale, std::abs(d));
  }
  ConeMembership out;
  if (scale == 0.0) {
    out.margin = 0.0;
    out.boundary = true;
    out.member = !strict;
    return out;
  }
  double margin = *std::min_element(vd.begin(), vd.end()) / scale;
  for (const auto& ray : g.mori_rays()) {
    double p = 0.0;
    for (std::size_t a = 0; a < vd.size(); ++a) p += to_double(ray[a]) * vd[a];
    margin = std::min(margin, p / scale);
  }
  out.margin = margin;
  out.boundary = std::abs(margin) <= tol;
  out.member = strict ? margin > tol : margin >= -tol;
  if constexpr (std::is_same_v<T, Rational>) {
    // Exact inputs: boundary means an exactly vanishing margin.
    Rational exact_min = v[0];
    for (const auto& x : v) exact_min = std::min(exact_min, x);
    for (const auto& ray : g.mori_rays()) exact_min = std::min(exact_min, dot(ray, v));
    out.boundary = exact_min == 0;
    out.member = strict ? exact_min > 0 && margin > tol : exact_min >= 0;
  }
  return out;
}

struct AmplePositivity {
  bool holds = false;
  bool inputs_ample = false;
  Rational lhs;  // (H1 H2 H3)^3
  Rational rhs;  // H1^3 H2^3 H3^3
};

inline AmplePositivity ample_positivity_check(const QVector& h1, const QVector& h2, const QVector& h3,
                                              const ThreefoldData& g) {
  AmplePositivity out;
  out.inputs_ample = in_kahler_cone(h1, g, true).member && in_kahler_cone(h2, g, true).member &&
                     in_kahler_cone(h3, g, true).member;
  Rational mixed = triple(h1, h2, h3, g);
  out.lhs = mixed * mixed * mixed;
  out.rhs = cube(h1, g) * cube(h2, g) * cube(h3, g);
  out.holds = out.lhs >= out.rhs;
  return out;
}

/// Characteristic numbers of a divisor surface D in M.
struct SurfaceData {
  QVector divisor;
  Rational d_cubed;  // D^3
  Rational c1D_sq;   // c1(D)^2 = D^3, with c1(D) = -D|_D
  Rational c2D;      // D^3 + c2(M).D
  bool ample = false;
};

}  // namespace attrkit
