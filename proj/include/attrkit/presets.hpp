// Built-in geometries.
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <attrkit/geometry.hpp>

namespace attrkit::presets {

/// Quintic hypersurface in P^4: H^3 = 5, c2.H = 50, chi = -200.
inline ThreefoldData quintic() {
  return ThreefoldData("quintic", 1, {{0, 0, 0, Rational(5)}}, {Rational(50)}, -200, {{Rational(1)}});
}

/// Degree-8 hypersurface in P(1,1,2,2,2), Kahler generators (H, L):
/// H^3 = 8, H^2 L = 4, c2.H = 56, c2.L = 24, chi = -168.
inline ThreefoldData p11222() {
  return ThreefoldData("p11222", 2, {{0, 0, 0, Rational(8)}, {0, 0, 1, Rational(4)}}, {Rational(56), Rational(24)},
                       -168, {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}});
}

/// Degree-18 hypersurface in P(1,1,1,6,9), elliptic over P^2, generators
/// J1 = 3L + E, J2 = L: J1^3 = 9, J1^2 J2 = 3, J1 J2^2 = 1, c2.J = (102, 36), chi = -540.
inline ThreefoldData p11169() {
  return ThreefoldData("p11169", 2, {{0, 0, 0, Rational(9)}, {0, 0, 1, Rational(3)}, {0, 1, 1, Rational(1)}},
                       {Rational(102), Rational(36)}, -540,
                       {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}});
}

inline std::vector<std::string> names() { return {"quintic", "p11222", "p11169"}; }

inline std::optional<ThreefoldData> find(std::string_view name) {
  if (name == "quintic") return quintic();
  if (name == "p11222") return p11222();
  if (name == "p11169") return p11169();
  return std::nullopt;
}

}  // namespace attrkit::presets
