// Chern-character calculus on a threefold: conversions between Chern classes
// and characters, Mukai vectors, the Euler pairing, Drezet invariants, slope,
// Bogomolov discriminant, twists and rescaling.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <attrkit/geometry.hpp>

namespace attrkit {

/// Rank and Chern character of a sheaf. ch2 is a pairing vector, ch3 a number.
struct ChernRecord {
  Rational rank;
  QVector c1;
  QVector ch2;
  Rational ch3;

  ChernRecord() = default;
  ChernRecord(Rational r, QVector first, QVector second, Rational third)
      : rank(std::move(r)), c1(std::move(first)), ch2(std::move(second)), ch3(std::move(third)) {
    if (c1.size() != ch2.size()) throw std::invalid_argument("ChernRecord: c1/ch2 length mismatch");
  }

  std::size_t b2() const { return c1.size(); }

  /// Pairing vector of c2 = c1^2/2 - ch2.
  QVector c2(const ThreefoldData& g) const {
    auto sq = product_pairing(c1, c1, g);
    QVector out(b2());
    for (std::size_t a = 0; a < b2(); ++a) out[a] = sq[a] / 2 - ch2[a];
    return out;
  }

  /// Integral of c3, from ch3 = (c1^3 - 3 c1 c2 + 3 c3)/6.
  Rational c3(const ThreefoldData& g) const {
    return 2 * ch3 - cube(c1, g) / 3 + dot(c1, c2(g));
  }

  static ChernRecord from_chern_classes(Rational r, QVector c1, const QVector& c2_pair, const Rational& c3,
                                        const ThreefoldData& g) {
    if (c1.size() != g.b2() || c2_pair.size() != g.b2()) {
      throw std::invalid_argument("ChernRecord: dimension does not match geometry");
    }
    auto sq = product_pairing(c1, c1, g);
    QVector ch2(g.b2());
    for (std::size_t a = 0; a < g.b2(); ++a) ch2[a] = sq[a] / 2 - c2_pair[a];
    Rational ch3 = (cube(c1, g) - 3 * dot(c1, c2_pair) + 3 * c3) / 6;
    return ChernRecord(std::move(r), std::move(c1), std::move(ch2), ch3);
  }

  ChernRecord& operator+=(const ChernRecord& o) {
    if (o.b2() != b2()) throw std::invalid_argument("ChernRecord: dimension mismatch");
    rank += o.rank;
    for (std::size_t a = 0; a < b2(); ++a) {
      c1[a] += o.c1[a];
      ch2[a] += o.ch2[a];
    }
    ch3 += o.ch3;
    return *this;
  }
  /// Direct sum.
  friend ChernRecord operator+(ChernRecord x, const ChernRecord& y) { return x += y; }
  friend bool operator==(const ChernRecord&, const ChernRecord&) = default;
};

namespace detail {

inline void require_dims(const ChernRecord& c, const ThreefoldData& g) {
  if (c.c1.size() != g.b2() || c.ch2.size() != g.b2()) {
    throw std::invalid_argument("Chern record dimension does not match geometry '" + g.name() + "'");
  }
}

inline void require_rank(const ChernRecord& c, const char* op) {
  if (c.rank == 0) throw std::domain_error(std::string(op) + ": rank must be nonzero");
}

}  // namespace detail

inline QClass to_even_class(const ChernRecord& c) { return QClass(c.rank, c.c1, c.ch2, c.ch3); }

inline ChernRecord from_even_class(const QClass& x) { return ChernRecord(x.d0, x.d2, x.d4, x.d6); }

inline ChernRecord structure_sheaf(const ThreefoldData& g) {
  return ChernRecord(Rational(1), QVector(g.b2(), Rational(0)), QVector(g.b2(), Rational(0)), Rational(0));
}

/// ch(O(L)) = e^L.
inline ChernRecord line_bundle(const QVector& L, const ThreefoldData& g) { return from_even_class(exp2(L, g)); }

/// Generalized Mukai vector ch . sqrt(Td(M)).
inline QClass mukai(const ChernRecord& c, const ThreefoldData& g) {
  detail::require_dims(c, g);
  return wedge(to_even_class(c), sqrt_todd(g), g);
}

/// chi(a, b) = sum (-1)^l dim Ext^l(a, b) = integral of (dual gamma(a)) gamma(b).
inline Rational euler_pairing(const ChernRecord& a, const ChernRecord& b, const ThreefoldData& g) {
  return integrate(wedge(involute(mukai(a, g)), mukai(b, g), g));
}

/// Drezet invariants read off from log(ch/r) = Delta1 - Delta2 + Delta3.
struct DrezetInvariants {
  QVector delta1;  // two-form coefficients
  QVector delta2;  // pairing vector
  Rational delta3;  // integral

  friend bool operator==(const DrezetInvariants&, const DrezetInvariants&) = default;
};

inline DrezetInvariants drezet(const ChernRecord& c, const ThreefoldData& g) {
  detail::require_dims(c, g);
  detail::require_rank(c, "drezet");
  QClass lg = log_unit(to_even_class(c), g);
  DrezetInvariants out;
  out.delta1 = lg.d2;
  out.delta2.resize(g.b2());
  for (std::size_t a = 0; a < g.b2(); ++a) out.delta2[a] = -lg.d4[a];
  out.delta3 = lg.d6;
  return out;
}

/// ch(a (x) b) = ch(a) ch(b).
inline ChernRecord tensor(const ChernRecord& a, const ChernRecord& b, const ThreefoldData& g) {
  detail::require_dims(a, g);
  detail::require_dims(b, g);
  return from_even_class(wedge(to_even_class(a), to_even_class(b), g));
}

inline ChernRecord twist(const ChernRecord& c, const QVector& L, const ThreefoldData& g) {
  return tensor(c, line_bundle(L, g), g);
}

/// Twist by -c1/r, leaving a record with vanishing first Chern class.
inline ChernRecord untwist(const ChernRecord& c, const ThreefoldData& g) {
  detail::require_rank(c, "untwist");
  QVector L(c.c1);
  for (auto& x : L) x = -x / c.rank;
  return twist(c, L, g);
}

inline ChernRecord rescale(const ChernRecord& c, const Rational& N) {
  if (N <= 0) throw std::invalid_argument("rescale: factor must be positive");
  ChernRecord out = c;
  out.rank *= N;
  for (auto& x : out.c1) x *= N;
  for (auto& x : out.ch2) x *= N;
  out.ch3 *= N;
  return out;
}

/// mu = (c1 . J^2) / r.
template <class T = Rational>
T slope(const ChernRecord& c, const std::vector<T>& J, const ThreefoldData& g) {
  detail::require_dims(c, g);
  detail::require_rank(c, "slope");
  std::vector<T> c1(c.c1.size());
  for (std::size_t a = 0; a < c1.size(); ++a) c1[a] = from_rational<T>(c.c1[a]);
  return triple(c1, J, J, g) / from_rational<T>(c.rank);
}

/// Delta2 . J; the Bogomolov inequality holds iff this is nonnegative.
inline Rational bogomolov(const ChernRecord& c, const QVector& J, const ThreefoldData& g) {
  if (J.size() != g.b2()) throw std::invalid_argument("bogomolov: J dimension does not match geometry");
  return dot(drezet(c, g).delta2, J);
}

/// Checks that (r, c1, c2, c3) are integral. H^4 classes are tested through
/// their pairings, which is exact when the basis {J_a} spans H^2(M, Z).
inline bool is_integral(const ChernRecord& c, const ThreefoldData& g) {
  if (!is_integer(c.rank)) return false;
  for (const auto& x : c.c1)
    if (!is_integer(x)) return false;
  for (const auto& x : c.c2(g))
    if (!is_integer(x)) return false;
  return is_integer(c.c3(g));
}

}  // namespace attrkit
