// Report assembly for the command-line tool.
#pragma once

#include <string>
#include <vector>

#include <attrkit/io.hpp>
#include <attrkit/minimize.hpp>

namespace attrkit {

enum ExitStatus : int { kInterior = 0, kBoundary = 1, kOutside = 2, kInputError = 3 };

struct CheckOptions {
  bool corrections = false;
  std::vector<QVector> A;  // empty means A = 0
  AttractorTolerances tol;
};

struct CheckResult {
  io::json report;
  int status = kOutside;
};

inline int exit_status(Verdict v) {
  switch (v) {
    case Verdict::in_att: return kInterior;
    case Verdict::boundary: return kBoundary;
    default: return kOutside;
  }
}

inline io::json outcome_json(const AttractorOutcome& out, const ThreefoldData& g, const ChernRecord* c,
                             const CheckOptions& opt) {
  using io::to_json;
  io::json j{{"verdict", to_string(out.verdict)}, {"cone_status", to_string(out.cone_status())}};
  if (!out.note.empty()) j["note"] = out.note;
  if (!out.target.empty()) j["htilde_sq_target"] = to_json(out.target);
  if (out.surface_discriminant) j["surface_discriminant"] = to_json(*out.surface_discriminant);
  if (out.xi_sq) j["xi_sq"] = to_json(*out.xi_sq);
  if (!out.roots.empty()) {
    io::json roots = io::json::array();
    for (const auto& r : out.roots) roots.push_back(to_json(r));
    j["htilde_roots"] = roots;
  }
  if (out.H_tilde) j["H_tilde"] = to_json(*out.H_tilde);
  if (out.htilde_cube) {
    j["htilde_cube"] = to_json(*out.htilde_cube);
    if (g.b2() == 1 && out.H_tilde) {
      const double h = (*out.H_tilde)[0];
      j["htilde_coefficient_cube"] = to_json(h * h * h);
    }
  }
  if (out.c3_reduced) j["c3_reduced"] = to_json(*out.c3_reduced);
  if (out.s) j["s"] = to_json(*out.s);
  if (out.solution) {
    const AttractorSolution& s = *out.solution;
    io::json sol{{"branch", to_string(s.branch)},
                 {"xi", to_json(s.xi)},
                 {"lambda", to_json(s.lambda)},
                 {"B", to_json(s.B)},
                 {"J", to_json(s.J)},
                 {"C_bar", to_json(s.C_bar)},
                 {"residual", to_json(s.residual)},
                 {"cone_status", to_string(s.cone_status)},
                 {"large_volume", s.large_volume}};
    if (c) {
      sol["z_norm_sq"] = to_json(z_norm_sq_of(convert_class<Complex>(mukai(*c, g)), s.B, s.J, g, opt.corrections));
    }
    j["solution"] = sol;
  }
  return j;
}

inline io::json charge_json(const ChernRecord& c, const ThreefoldData& g, const CheckOptions& opt) {
  ChargeVector q = charge_map(c, g, opt.A);
  return io::json{{"p0", io::to_json(q.p0)}, {"p", io::to_json(q.p)}, {"q", io::to_json(q.q)}, {"q0", io::to_json(q.q0)}};
}

/// Bounds that need no attractor data: Bogomolov on each generator and the
/// c3 bounds along each generator.
inline BoundsReport generator_bounds(const ChernRecord& c, const ThreefoldData& g) {
  BoundsReport rep;
  for (std::size_t a = 0; a < g.b2(); ++a) {
    QVector ray(g.b2(), Rational(0));
    ray[a] = 1;
    BoundsEntry e = make_entry("bogomolov[" + std::to_string(a) + "]", Value(bogomolov(c, ray, g)), Value(Rational(0)));
    e.note = "lhs = Delta2.J_" + std::to_string(a);
    rep.add(std::move(e));
  }
  ReducedCharge red = reduce_charge(c, g);
  for (std::size_t a = 0; a < g.b2(); ++a) {
    QVector ray(g.b2(), Rational(0));
    ray[a] = 1;
    const std::string id = "c3_bound_ample[" + std::to_string(a) + "]";
    const Rational w3 = cube(ray, g);
    if (w3 <= 0) {
      rep.add(not_applicable(id, "J_" + std::to_string(a) + "^3 vanishes"));
      continue;
    }
    rep.add(c3_bound_along(red, to_double(dot(red.target, ray)), to_double(w3), id));
  }
  return rep;
}

inline CheckResult check_record(const ChernRecord& c, const ThreefoldData& g, const CheckOptions& opt = {}) {
  detail::require_dims(c, g);
  if (c.rank <= 0) {
    throw io::InputError("rank", "check needs positive rank; supply a surface record (with divisor) for rank 0");
  }
  CheckResult res;
  io::json& j = res.report;
  j["geometry"] = g.name();
  j["record"] = io::describe(c, g);
  j["integral"] = is_integral(c, g);
  if (c.rank != 0) {
    DrezetInvariants d = drezet(c, g);
    j["drezet"] = io::json{{"delta1", io::to_json(d.delta1)}, {"delta2", io::to_json(d.delta2)}, {"delta3", io::to_json(d.delta3)}};
  }
  j["charges"] = charge_json(c, g, opt);

  AttractorOutcome out = solve_positive_rank(c, g, opt.tol);
  j["attractor"] = outcome_json(out, g, &c, opt);

  BoundsReport bounds = generator_bounds(c, g);
  bounds.add(c3_bound(c, g, opt.tol));
  if (c.rank > 1) {
    for (auto& e : existence_conjecture(c, g, opt.tol).entries) bounds.add(std::move(e));
  }
  j["bounds"] = io::to_json(bounds);
  io::json violated = io::json::array();
  for (const auto& e : bounds.entries)
    if (e.status == BoundStatus::violated) violated.push_back(e.id);
  j["violated"] = violated;
  res.status = exit_status(out.verdict);
  j["status"] = res.status;
  return res;
}

inline CheckResult check_surface(const io::SurfaceInput& in, const ThreefoldData& g, const CheckOptions& opt = {}) {
  CheckResult res;
  io::json& j = res.report;
  j["geometry"] = g.name();
  j["surface_record"] = io::to_json(in);
  const SurfaceData s = divisor_chern(in.divisor, g);
  j["divisor"] = io::json{{"d_cubed", io::to_json(s.d_cubed)},
                          {"c1D_sq", io::to_json(s.c1D_sq)},
                          {"c2D", io::to_json(s.c2D)},
                          {"ample", s.ample}};
  if (!s.ample) throw io::InputError("divisor", "must be strictly ample");
  SurfaceBundleRecord lifted = in.bundle;
  try {
    lifted.c1_lift = lefschetz_lift(in.bundle, in.divisor, g);
  } catch (const MissingLift& e) {
    throw io::InputError("c1_lift", e.what());
  }
  const ChernRecord pushed = grr_push(lifted, in.divisor, g);
  j["pushforward"] = io::describe(pushed, g);
  const QClass gamma = push_mukai(lifted, in.divisor, g);
  j["mukai"] = io::json{{"d0", io::to_json(gamma.d0)}, {"d2", io::to_json(gamma.d2)}, {"d4", io::to_json(gamma.d4)}, {"d6", io::to_json(gamma.d6)}};
  const QClass two_path = mukai(pushed, g);
  if (!(two_path == gamma)) {
    j["mukai_note"] = "closed-form Mukai vector differs from mukai(pushforward): d6 " + to_string(gamma.d6) + " vs " +
                      to_string(two_path.d6);
  }
  j["charges"] = charge_json(pushed, g, opt);

  AttractorOutcome out = solve_rank_zero(lifted, in.divisor, g, opt.tol);
  j["attractor"] = outcome_json(out, g, &pushed, opt);
  BoundsReport bounds;
  if (in.bundle.rank > 1) bounds.add(rank_zero_conjecture(lifted, in.divisor, g));
  j["bounds"] = io::to_json(bounds);
  res.status = exit_status(out.verdict);
  j["status"] = res.status;
  return res;
}

inline io::json minimize_report(const ChernRecord& c, const DVector& B0, const DVector& J0, const ThreefoldData& g,
                                const CheckOptions& opt) {
  MinimizeOptions mo;
  mo.corrections = opt.corrections;
  MinimizeResult r = minimize_z_norm(c, B0, J0, g, mo);
  using io::to_json;
  io::json j{{"geometry", g.name()},
             {"record", io::describe(c, g)},
             {"start", {{"B", to_json(r.start_B)}, {"J", to_json(r.start_J)}, {"value", to_json(r.start_value)}}},
             {"end", {{"B", to_json(r.B)}, {"J", to_json(r.J)}, {"value", to_json(r.value)}}},
             {"gradient_norm", to_json(r.gradient_norm)},
             {"cone_margin", to_json(r.cone_margin)},
             {"iterations", r.iterations},
             {"status", to_string(r.status)}};
  if (c.rank > 0) {
    AttractorOutcome out = solve_positive_rank(c, g, opt.tol);
    if (out.solution) {
      double dist = 0.0;
      for (std::size_t a = 0; a < g.b2(); ++a) {
        dist = std::max(dist, std::abs(r.B[a] - out.solution->B[a]));
        dist = std::max(dist, std::abs(r.J[a] - out.solution->J[a]));
      }
      j["analytic_distance"] = to_json(dist);
    } else {
      j["analytic"] = to_string(out.verdict);
    }
  }
  return j;
}

inline io::json closure_report(const std::vector<ChernRecord>& seed, const DVector& B, const DVector& J, long budget,
                               const ThreefoldData& g, const CheckOptions& opt) {
  std::vector<ChernRecord> out = j_closure(seed, B, J, g, budget, opt.corrections);
  io::json recs = io::json::array();
  for (const auto& c : out) recs.push_back(io::to_json(c));
  return io::json{{"geometry", g.name()},
                  {"B", io::to_json(B)},
                  {"J", io::to_json(J)},
                  {"budget", budget},
                  {"seed_size", seed.size()},
                  {"size", out.size()},
                  {"records", recs}};
}

inline io::json bounds_command_report(const ChernRecord& c, const QVector& J, const Rational& const_c,
                                      const ThreefoldData& g, const CheckOptions& opt) {
  detail::require_dims(c, g);
  if (c.rank <= 0) throw io::InputError("rank", "bounds need positive rank");
  BoundsReport rep = generator_bounds(c, g);
  rep.add(c3_bound(c, g, opt.tol));
  if (in_kahler_cone(J, g, true).member) {
    rep.add(c3_bound_ample(c, J, g));
    bool c1_zero = true;
    for (const auto& x : c.c1) c1_zero = c1_zero && x == 0;
    rep.add(c1_zero ? guess_bound(c, J, g, const_c) : not_applicable("guess_bound", "requires c1 = 0"));
  }
  if (c.rank > 1)
    for (auto& e : existence_conjecture(c, g, opt.tol).entries) rep.add(std::move(e));
  return io::json{{"geometry", g.name()},
                  {"record", io::describe(c, g)},
                  {"J", io::to_json(J)},
                  {"const_c", io::to_json(const_c)},
                  {"bounds", io::to_json(rep)}};
}

inline io::json push_report(const io::SurfaceInput& in, const ThreefoldData& g) {
  const SurfaceData s = divisor_chern(in.divisor, g);
  PushScalars p = grr_push_scalars(in.bundle, in.divisor, g);
  io::json j{{"geometry", g.name()},
             {"surface_record", io::to_json(in)},
             {"divisor", {{"d_cubed", io::to_json(s.d_cubed)}, {"c1D_sq", io::to_json(s.c1D_sq)}, {"c2D", io::to_json(s.c2D)}, {"ample", s.ample}}},
             {"scalars", {{"c1", io::to_json(p.c1)}, {"ch2_dot_D", io::to_json(p.ch2_dot_D)}, {"ch3", io::to_json(p.ch3)}}}};
  if (!s.ample) j["warning"] = "divisor is not ample";
  if (in.bundle.c1_lift || g.b2() == 1) {
    const ChernRecord pushed = grr_push(in.bundle, in.divisor, g);
    j["record"] = io::to_json(pushed);
    const QClass gamma = push_mukai(in.bundle, in.divisor, g);
    j["mukai"] = io::json{{"d0", io::to_json(gamma.d0)}, {"d2", io::to_json(gamma.d2)}, {"d4", io::to_json(gamma.d4)}, {"d6", io::to_json(gamma.d6)}};
    j["two_path_equal"] = mukai(pushed, g) == gamma;
  } else {
    j["note"] = "no c1_lift: only the contracted numbers are available";
  }
  return j;
}

inline io::json surface_bounds_report(const SurfaceBoundInput& v) {
  return io::json{{"r", v.r},
                  {"surface_kind", to_string(v.kind)},
                  {"c1_sq", io::to_json(v.c1_sq)},
                  {"c2_num", io::to_json(v.c2_num)},
                  {"c2D", io::to_json(v.c2D)},
                  {"c1D_sq", io::to_json(v.c1D_sq)},
                  {"bounds", io::to_json(surface_index_bounds(v))}};
}

}  // namespace attrkit
