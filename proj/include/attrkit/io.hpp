// JSON ingestion and serialization. Rationals are written as "p/q" strings;
// on input, strings, integers and JSON numbers are accepted (numbers via
// their shortest decimal form).
#pragma once

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include <attrkit/boundstates.hpp>
#include <attrkit/catalog.hpp>
#include <attrkit/presets.hpp>

namespace attrkit::io {

using json = nlohmann::ordered_json;

/// Malformed input, with the offending field path.
class InputError : public std::runtime_error {
 public:
  InputError(std::string where, const std::string& what)
      : std::runtime_error(where.empty() ? what : where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

// ---------------------------------------------------------------------------
// Scalars

inline Rational rational_from_json(const json& j, const std::string& where) {
  try {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(Integer(j.dump()));
    if (j.is_number_float()) return parse_rational(j.dump());
  } catch (const std::invalid_argument& e) {
    throw InputError(where, e.what());
  }
  throw InputError(where, "expected a rational (\"p/q\" string or number)");
}

inline QVector qvector_from_json(const json& j, const std::string& where, std::optional<std::size_t> size = {}) {
  if (!j.is_array()) throw InputError(where, "expected a list");
  if (size && j.size() != *size) {
    throw InputError(where, "expected " + std::to_string(*size) + " entries, got " + std::to_string(j.size()));
  }
  QVector out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(rational_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

inline long long integer_from_json(const json& j, const std::string& where) {
  if (j.is_number_integer()) return j.get<long long>();
  if (j.is_string()) {
    Rational q = rational_from_json(j, where);
    if (is_integer(q)) return boost::multiprecision::numerator(q).convert_to<long long>();
  }
  throw InputError(where, "expected an integer");
}

inline const json& require(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) throw InputError(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw InputError(where.empty() ? key : where + "." + key, "missing field");
  return *it;
}

inline std::string join(const std::string& where, const char* key) { return where.empty() ? key : where + "." + key; }

inline json to_json(const Rational& q) { return to_string(q); }

inline json to_json(const QVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

/// 17 significant digits.
inline std::string decimal(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline json to_json(double x) { return decimal(x); }

inline json to_json(const DVector& v) {
  json out = json::array();
  for (double x : v) out.push_back(decimal(x));
  return out;
}

inline json to_json(const Complex& z) { return json{{"re", decimal(z.real())}, {"im", decimal(z.imag())}}; }

inline json to_json(const Value& v) { return v.exact ? json(to_string(*v.exact)) : json(decimal(v.approx)); }

// ---------------------------------------------------------------------------
// Files

inline json parse_text(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(source, e.what());
  }
}

inline json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path, "cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str(), path);
}

// ---------------------------------------------------------------------------
// Geometry

inline ThreefoldData geometry_from_json(const json& j) {
  const std::string name = require(j, "name", "").is_string() ? j["name"].get<std::string>() : "";
  const long long b2 = integer_from_json(require(j, "b2", ""), "b2");
  if (b2 <= 0) throw InputError("b2", "must be positive");
  const auto n = static_cast<std::size_t>(b2);
  const json& inter = require(j, "intersect", "");
  if (!inter.is_array()) throw InputError("intersect", "expected a list of [a, b, c, value]");
  std::vector<IntersectionEntry> entries;
  for (std::size_t i = 0; i < inter.size(); ++i) {
    const std::string w = "intersect[" + std::to_string(i) + "]";
    if (!inter[i].is_array() || inter[i].size() != 4) throw InputError(w, "expected [a, b, c, value]");
    IntersectionEntry e;
    const long long a = integer_from_json(inter[i][0], w + "[0]");
    const long long b = integer_from_json(inter[i][1], w + "[1]");
    const long long c = integer_from_json(inter[i][2], w + "[2]");
    if (a < 0 || b < 0 || c < 0) throw InputError(w, "indices must be nonnegative");
    e.a = static_cast<std::size_t>(a);
    e.b = static_cast<std::size_t>(b);
    e.c = static_cast<std::size_t>(c);
    e.value = rational_from_json(inter[i][3], w + "[3]");
    entries.push_back(e);
  }
  QVector c2 = qvector_from_json(require(j, "c2_pair", ""), "c2_pair", n);
  const long long euler = integer_from_json(require(j, "euler", ""), "euler");
  std::vector<QVector> rays;
  if (j.contains("mori_rays")) {
    const json& mr = j["mori_rays"];
    if (!mr.is_array()) throw InputError("mori_rays", "expected a list of lists");
    for (std::size_t i = 0; i < mr.size(); ++i)
      rays.push_back(qvector_from_json(mr[i], "mori_rays[" + std::to_string(i) + "]", n));
  }
  try {
    return ThreefoldData(name, n, entries, std::move(c2), euler, std::move(rays));
  } catch (const std::invalid_argument& e) {
    throw InputError("geometry", e.what());
  }
}

inline json to_json(const ThreefoldData& g) {
  json inter = json::array();
  for (const auto& e : g.entries()) inter.push_back(json::array({e.a, e.b, e.c, to_string(e.value)}));
  json rays = json::array();
  for (const auto& r : g.mori_rays()) rays.push_back(to_json(r));
  return json{{"name", g.name()},   {"b2", g.b2()},       {"intersect", inter},
              {"c2_pair", to_json(g.c2_pair())}, {"euler", g.euler()}, {"mori_rays", rays}};
}

/// A preset name, a file path, or a name looked up in $ATTRKIT_GEOMETRY_DIR.
inline ThreefoldData load_geometry(const std::string& name) {
  if (auto p = presets::find(name)) return *p;
  namespace fs = std::filesystem;
  if (fs::is_regular_file(name)) return geometry_from_json(read_file(name));
  if (const char* dir = std::getenv("ATTRKIT_GEOMETRY_DIR")) {
    fs::path candidate = fs::path(dir) / (name + ".json");
    if (fs::is_regular_file(candidate)) return geometry_from_json(read_file(candidate.string()));
  }
  throw InputError("--geometry", "no preset, file or ATTRKIT_GEOMETRY_DIR entry named '" + name + "'");
}

// ---------------------------------------------------------------------------
// Chern records

inline ChernRecord record_from_json(const json& j, const ThreefoldData& g, const std::string& where = "") {
  if (!j.is_object()) throw InputError(where, "expected an object");
  const std::size_t n = g.b2();
  Rational rank = rational_from_json(require(j, "rank", where), join(where, "rank"));
  QVector c1 = qvector_from_json(require(j, "c1", where), join(where, "c1"), n);
  const bool has_c2 = j.contains("c2_pair"), has_ch2 = j.contains("ch2_pair");
  const bool has_c3 = j.contains("c3"), has_ch3 = j.contains("ch3");
  if (has_c2 == has_ch2) throw InputError(where, "exactly one of c2_pair and ch2_pair is required");
  if (has_c3 == has_ch3) throw InputError(where, "exactly one of c3 and ch3 is required");

  QVector c2 = has_c2 ? qvector_from_json(j["c2_pair"], join(where, "c2_pair"), n) : QVector{};
  QVector ch2 = has_ch2 ? qvector_from_json(j["ch2_pair"], join(where, "ch2_pair"), n) : QVector{};
  if (has_c2) {
    auto sq = product_pairing(c1, c1, g);
    ch2.resize(n);
    for (std::size_t a = 0; a < n; ++a) ch2[a] = sq[a] / 2 - c2[a];
  }
  Rational ch3;
  if (has_ch3) {
    ch3 = rational_from_json(j["ch3"], join(where, "ch3"));
  } else {
    const Rational c3 = rational_from_json(j["c3"], join(where, "c3"));
    if (!has_c2) {
      auto sq = product_pairing(c1, c1, g);
      c2.resize(n);
      for (std::size_t a = 0; a < n; ++a) c2[a] = sq[a] / 2 - ch2[a];
    }
    ch3 = (cube(c1, g) - 3 * dot(c1, c2) + 3 * c3) / 6;
  }
  return ChernRecord(std::move(rank), std::move(c1), std::move(ch2), std::move(ch3));
}

inline json to_json(const ChernRecord& c) {
  return json{{"rank", to_string(c.rank)}, {"c1", to_json(c.c1)}, {"ch2_pair", to_json(c.ch2)}, {"ch3", to_string(c.ch3)}};
}

/// Record plus the derived Chern classes, for reports.
inline json describe(const ChernRecord& c, const ThreefoldData& g) {
  json out = to_json(c);
  out["c2_pair"] = to_json(c.c2(g));
  out["c3"] = to_string(c.c3(g));
  return out;
}

inline std::vector<ChernRecord> records_from_json(const json& j, const ThreefoldData& g) {
  const json& list = j.is_object() && j.contains("records") ? j["records"] : j;
  if (!list.is_array()) throw InputError("records", "expected a list of Chern records");
  std::vector<ChernRecord> out;
  for (std::size_t i = 0; i < list.size(); ++i) out.push_back(record_from_json(list[i], g, "records[" + std::to_string(i) + "]"));
  return out;
}

// ---------------------------------------------------------------------------
// Surface data

inline bool is_surface_record(const json& j) { return j.is_object() && j.contains("divisor"); }

struct SurfaceInput {
  SurfaceBundleRecord bundle;
  QVector divisor;
};

inline SurfaceInput surface_record_from_json(const json& j, const ThreefoldData& g) {
  if (!j.is_object()) throw InputError("", "expected an object");
  const std::size_t n = g.b2();
  SurfaceInput in;
  in.divisor = qvector_from_json(require(j, "divisor", ""), "divisor", n);
  in.bundle.rank = rational_from_json(require(j, "rank", ""), "rank");
  if (j.contains("c1_lift")) in.bundle.c1_lift = qvector_from_json(j["c1_lift"], "c1_lift", n);
  const bool has_sq = j.contains("c1_sq"), has_dot = j.contains("c1_dot_D");
  if (in.bundle.c1_lift) {
    in.bundle.c1_sq = has_sq ? rational_from_json(j["c1_sq"], "c1_sq") : triple(*in.bundle.c1_lift, *in.bundle.c1_lift, in.divisor, g);
    in.bundle.c1_dot_D = has_dot ? rational_from_json(j["c1_dot_D"], "c1_dot_D") : triple(*in.bundle.c1_lift, in.divisor, in.divisor, g);
  } else {
    in.bundle.c1_sq = rational_from_json(require(j, "c1_sq", ""), "c1_sq");
    in.bundle.c1_dot_D = rational_from_json(require(j, "c1_dot_D", ""), "c1_dot_D");
  }
  in.bundle.c2_num = rational_from_json(require(j, "c2_num", ""), "c2_num");
  try {
    validate_surface_record(in.bundle, in.divisor, g);
  } catch (const std::invalid_argument& e) {
    throw InputError("surface record", e.what());
  }
  return in;
}

inline json to_json(const SurfaceInput& in) {
  json out{{"divisor", to_json(in.divisor)}, {"rank", to_string(in.bundle.rank)}};
  if (in.bundle.c1_lift) out["c1_lift"] = to_json(*in.bundle.c1_lift);
  out["c1_sq"] = to_string(in.bundle.c1_sq);
  out["c1_dot_D"] = to_string(in.bundle.c1_dot_D);
  out["c2_num"] = to_string(in.bundle.c2_num);
  return out;
}

inline SurfaceBoundInput surface_bound_input_from_json(const json& j) {
  if (!j.is_object()) throw InputError("", "expected an object");
  SurfaceBoundInput v;
  v.r = integer_from_json(require(j, "r", ""), "r");
  v.c1_sq = rational_from_json(require(j, "c1_sq", ""), "c1_sq");
  v.c2_num = rational_from_json(require(j, "c2_num", ""), "c2_num");
  const json& kind = require(j, "surface_kind", "");
  if (!kind.is_string()) throw InputError("surface_kind", "expected a string");
  try {
    v.kind = parse_surface_kind(kind.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw InputError("surface_kind", e.what());
  }
  if (v.kind == SurfaceKind::k3) {
    v.c2D = j.contains("c2D") ? rational_from_json(j["c2D"], "c2D") : Rational(kK3SecondChern);
    v.c1D_sq = j.contains("c1D_sq") ? rational_from_json(j["c1D_sq"], "c1D_sq") : Rational(0);
  } else {
    v.c2D = rational_from_json(require(j, "c2D", ""), "c2D");
    v.c1D_sq = rational_from_json(require(j, "c1D_sq", ""), "c1D_sq");
  }
  try {
    validate_surface_input(v);
  } catch (const std::invalid_argument& e) {
    throw InputError("surface bound input", e.what());
  }
  return v;
}

inline FibrationData fibration_from_json(const json& j, const ThreefoldData& g) {
  if (!j.is_object()) throw InputError("", "expected an object");
  auto rows = [&](const char* key, std::optional<std::size_t> size) {
    const json& m = require(j, key, "");
    if (!m.is_array() || m.empty()) throw InputError(key, "expected a nonempty list of lists");
    std::vector<QVector> out;
    for (std::size_t i = 0; i < m.size(); ++i)
      out.push_back(qvector_from_json(m[i], std::string(key) + "[" + std::to_string(i) + "]", size));
    return out;
  };
  FibrationData f;
  f.sigma_pi_pair = rows("sigma_pi_pair", g.b2());
  f.fiber_pair = qvector_from_json(require(j, "fiber_pair", ""), "fiber_pair", g.b2());
  const std::size_t nb = f.sigma_pi_pair.size();
  f.c1_base = qvector_from_json(require(j, "c1_base", ""), "c1_base", nb);
  f.ample_normals = rows("ample_normals", nb);
  f.effective_normals = rows("effective_normals", nb);
  return f;
}

// ---------------------------------------------------------------------------
// Reports

inline json to_json(const BoundsEntry& e) {
  json out{{"id", e.id}, {"status", to_string(e.status)}};
  if (e.status != BoundStatus::not_applicable) {
    out["lhs"] = to_json(e.lhs);
    out["rhs"] = to_json(e.rhs);
    out["margin"] = to_json(e.margin);
    out["strict"] = e.strict;
  }
  if (!e.note.empty()) out["note"] = e.note;
  return out;
}

inline json to_json(const BoundsReport& r) {
  json out = json::array();
  for (const auto& e : r.entries) out.push_back(to_json(e));
  return out;
}

inline std::vector<QVector> matrix_from_json(const json& j, std::size_t n) {
  const json& m = j.is_object() && j.contains("A") ? j["A"] : j;
  if (!m.is_array() || m.size() != n) throw InputError("A", "expected a b2 x b2 matrix");
  std::vector<QVector> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(qvector_from_json(m[i], "A[" + std::to_string(i) + "]", n));
  return out;
}

/// Indented plain-text rendering of a report.
inline void render_text(std::ostream& os, const json& j, int indent = 0) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  auto scalar = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  auto flat = [&](const json& v) {
    if (!v.is_array()) return false;
    for (const auto& x : v)
      if (x.is_structured()) return false;
    return true;
  };
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      const json& v = it.value();
      if (flat(v)) {
        os << pad << it.key() << ": [";
        for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << scalar(v[i]);
        os << "]\n";
      } else if (v.is_structured()) {
        os << pad << it.key() << ":\n";
        render_text(os, v, indent + 2);
      } else {
        os << pad << it.key() << ": " << scalar(v) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_object() && v.contains("id") && v.contains("status")) {
        os << pad << "- " << scalar(v["id"]) << ": " << scalar(v["status"]);
        if (v.contains("lhs")) os << "  lhs=" << scalar(v["lhs"]) << " rhs=" << scalar(v["rhs"]) << " margin=" << scalar(v["margin"]);
        os << "\n";
        if (v.contains("note")) os << pad << "    " << scalar(v["note"]) << "\n";
      } else if (flat(v)) {
        os << pad << "- [";
        for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << scalar(v[i]);
        os << "]\n";
      } else if (v.is_structured()) {
        os << pad << "-\n";
        render_text(os, v, indent + 2);
      } else {
        os << pad << "- " << scalar(v) << "\n";
      }
    }
  } else {
    os << pad << scalar(j) << "\n";
  }
}

}  // namespace attrkit::io
