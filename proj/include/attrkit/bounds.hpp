// Inequality reports. Every entry reads "lhs >= rhs" (or ">" when strict),
// so margin = lhs - rhs is nonnegative exactly when the bound is satisfied.
#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <attrkit/rational.hpp>

namespace attrkit {

/// A number that is exact when no square root intervened.
struct Value {
  std::optional<Rational> exact;
  double approx = 0.0;

  Value() = default;
  Value(const Rational& q) : exact(q), approx(to_double(q)) {}  // NOLINT(google-explicit-constructor)
  Value(double d) : approx(d) {}                                // NOLINT(google-explicit-constructor)
};

enum class BoundStatus { satisfied, boundary, violated, not_applicable };

inline const char* to_string(BoundStatus s) {
  switch (s) {
    case BoundStatus::satisfied: return "satisfied";
    case BoundStatus::boundary: return "boundary";
    case BoundStatus::violated: return "violated";
    case BoundStatus::not_applicable: return "not_applicable";
  }
  return "?";
}

inline constexpr double kThresholdTolerance = 1e-9;

struct BoundsEntry {
  std::string id;
  Value lhs;
  Value rhs;
  Value margin;
  bool strict = false;
  BoundStatus status = BoundStatus::not_applicable;
  std::string note;

  bool satisfied() const { return status == BoundStatus::satisfied || (!strict && status == BoundStatus::boundary); }
};

/// Evaluates lhs >= rhs (or lhs > rhs). Exact comparisons when both sides are
/// exact, otherwise |margin| < tol is reported as a boundary case.
inline BoundsEntry make_entry(std::string id, Value lhs, Value rhs, bool strict = false,
                              double tol = kThresholdTolerance) {
  BoundsEntry e;
  e.id = std::move(id);
  e.strict = strict;
  if (lhs.exact && rhs.exact) {
    Rational m = *lhs.exact - *rhs.exact;
    e.margin = Value(m);
    e.status = m > 0 ? BoundStatus::satisfied : (m == 0 ? BoundStatus::boundary : BoundStatus::violated);
  } else {
    double m = lhs.approx - rhs.approx;
    e.margin = Value(m);
    e.status = std::abs(m) < tol ? BoundStatus::boundary : (m > 0 ? BoundStatus::satisfied : BoundStatus::violated);
  }
  e.lhs = std::move(lhs);
  e.rhs = std::move(rhs);
  return e;
}

inline BoundsEntry not_applicable(std::string id, std::string note) {
  BoundsEntry e;
  e.id = std::move(id);
  e.status = BoundStatus::not_applicable;
  e.note = std::move(note);
  return e;
}

struct BoundsReport {
  std::vector<BoundsEntry> entries;

  void add(BoundsEntry e) { entries.push_back(std::move(e)); }

  const BoundsEntry* find(const std::string& id) const {
    for (const auto& e : entries)
      if (e.id == id) return &e;
    return nullptr;
  }

  bool all_satisfied() const {
    for (const auto& e : entries)
      if (e.status != BoundStatus::not_applicable && !e.satisfied()) return false;
    return true;
  }
};

}  // namespace attrkit
