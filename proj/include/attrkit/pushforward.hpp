// Grothendieck-Riemann-Roch pushforward of bundle data on a divisor D to
// Chern characters on the threefold, and characteristic numbers of D.
//
// Surface quantities are carried as contracted numbers (integrals over D),
// with an optional lift of c1 to H^2(M).
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include <attrkit/chern.hpp>

namespace attrkit {

class MissingLift : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SurfaceBundleRecord {
  Rational rank;
  std::optional<QVector> c1_lift;
  Rational c1_sq;      // integral over D of c1^2
  Rational c1_dot_D;   // integral over D of c1 . D|_D
  Rational c2_num;     // integral over D of c2

  Rational ch2_num() const { return c1_sq / 2 - c2_num; }

  /// Builds a record from a lift, filling the contractions from it.
  static SurfaceBundleRecord from_lift(Rational r, QVector lift, const Rational& c2, const QVector& D,
                                       const ThreefoldData& g) {
    SurfaceBundleRecord w;
    w.rank = std::move(r);
    w.c1_sq = triple(lift, lift, D, g);
    w.c1_dot_D = triple(lift, D, D, g);
    w.c2_num = c2;
    w.c1_lift = std::move(lift);
    return w;
  }

  friend bool operator==(const SurfaceBundleRecord&, const SurfaceBundleRecord&) = default;
};

/// Checks the contractions against the lift, when one is present.
inline void validate_surface_record(const SurfaceBundleRecord& w, const QVector& D, const ThreefoldData& g) {
  if (D.size() != g.b2()) throw std::invalid_argument("divisor dimension does not match geometry");
  if (w.rank <= 0) throw std::invalid_argument("surface bundle rank must be positive");
  if (!w.c1_lift) return;
  if (w.c1_lift->size() != g.b2()) throw std::invalid_argument("c1_lift dimension does not match geometry");
  if (triple(*w.c1_lift, *w.c1_lift, D, g) != w.c1_sq) {
    throw std::invalid_argument("c1_sq is inconsistent with c1_lift: expected " +
                                to_string(triple(*w.c1_lift, *w.c1_lift, D, g)));
  }
  if (triple(*w.c1_lift, D, D, g) != w.c1_dot_D) {
    throw std::invalid_argument("c1_dot_D is inconsistent with c1_lift: expected " +
                                to_string(triple(*w.c1_lift, D, D, g)));
  }
}

/// c1(D) = -D|_D, c2(D) = D^3 + c2(M).D. Non-ample D is flagged, not rejected.
inline SurfaceData divisor_chern(const QVector& D, const ThreefoldData& g) {
  if (D.size() != g.b2()) throw std::invalid_argument("divisor dimension does not match geometry");
  SurfaceData s;
  s.divisor = D;
  s.d_cubed = cube(D, g);
  s.c1D_sq = s.d_cubed;
  s.c2D = s.d_cubed + dot(g.c2_pair(), D);
  s.ample = in_kahler_cone(D, g, true).member;
  return s;
}

/// The pushforward as contracted numbers; available without a lift.
struct PushScalars {
  Rational rank;      // always 0
  QVector c1;         // r D
  Rational ch2_dot_D;  // integral of ch2(i_* W) . D
  Rational ch3;
};

inline PushScalars grr_push_scalars(const SurfaceBundleRecord& w, const QVector& D, const ThreefoldData& g) {
  validate_surface_record(w, D, g);
  PushScalars p;
  p.rank = 0;
  p.c1 = D;
  for (auto& x : p.c1) x *= w.rank;
  const Rational d3 = cube(D, g);
  p.ch2_dot_D = -w.rank * d3 / 2 + w.c1_dot_D;
  p.ch3 = w.rank * d3 / 6 + w.ch2_num() - w.c1_dot_D / 2;
  return p;
}

/// ch(i_* W). The degree-4 pairing vector needs the lift of c1 unless b2 = 1.
inline ChernRecord grr_push(const SurfaceBundleRecord& w, const QVector& D, const ThreefoldData& g) {
  PushScalars p = grr_push_scalars(w, D, g);
  auto d2 = product_pairing(D, D, g);
  QVector ch2(g.b2());
  if (w.c1_lift) {
    auto cd = product_pairing(*w.c1_lift, D, g);
    for (std::size_t a = 0; a < g.b2(); ++a) ch2[a] = -w.rank * d2[a] / 2 + cd[a];
  } else if (g.b2() == 1) {
    if (D[0] == 0) throw std::invalid_argument("grr_push: zero divisor");
    // c1|_D . J = (c1|_D . D) / d for D = d J.
    ch2[0] = -w.rank * d2[0] / 2 + w.c1_dot_D / D[0];
  } else {
    throw MissingLift("grr_push: a lift of c1 to H^2(M) is required for the full degree-4 pairing vector");
  }
  return ChernRecord(p.rank, p.c1, ch2, p.ch3);
}

/// gamma(i_* W) assembled from the displayed closed form
/// r D - (r D^2/2 - c1) + (r D^3/8 + ch2 - D^2 c1/2 + (r/24) c2(D)).
inline QClass push_mukai(const SurfaceBundleRecord& w, const QVector& D, const ThreefoldData& g) {
  ChernRecord pushed = grr_push(w, D, g);
  SurfaceData s = divisor_chern(D, g);
  QClass out(g.b2());
  out.d0 = 0;
  out.d2 = pushed.c1;
  out.d4 = pushed.ch2;
  out.d6 = w.rank * s.d_cubed / 8 + w.ch2_num() - w.c1_dot_D / 2 + w.rank * s.c2D / 24;
  return out;
}

}  // namespace attrkit
