// attrkit command-line tool.
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <attrkit/attrkit.hpp>

using namespace attrkit;
using io::json;

namespace {

struct Globals {
  std::string geometry = "quintic";
  bool json_out = false;
  bool corrections = false;
  std::string const_c = "0";
  std::string a_matrix;
  long budget = 10;
  std::optional<double> tol;
};

DVector parse_dvector(const std::vector<double>& v, const ThreefoldData& g, const char* flag) {
  if (v.size() != g.b2()) throw io::InputError(flag, "expected " + std::to_string(g.b2()) + " components");
  return v;
}

QVector parse_qvector(const std::vector<std::string>& v, const ThreefoldData& g, const char* flag) {
  if (v.size() != g.b2()) throw io::InputError(flag, "expected " + std::to_string(g.b2()) + " components");
  QVector out;
  for (const auto& s : v) {
    try {
      out.push_back(parse_rational(s));
    } catch (const std::exception& e) {
      throw io::InputError(flag, e.what());
    }
  }
  return out;
}

Rational parse_flag_rational(const std::string& s, const char* flag) {
  try {
    return parse_rational(s);
  } catch (const std::exception& e) {
    throw io::InputError(flag, e.what());
  }
}

void emit(const json& j, const Globals& opt) {
  if (opt.json_out) {
    std::cout << j.dump(2) << "\n";
  } else {
    io::render_text(std::cout, j);
  }
}

CheckOptions check_options(const Globals& opt, const ThreefoldData& g) {
  CheckOptions c;
  c.corrections = opt.corrections;
  if (!opt.a_matrix.empty()) c.A = io::matrix_from_json(io::read_file(opt.a_matrix), g.b2());
  if (opt.tol) {
    if (!(*opt.tol > 0)) throw io::InputError("--tol", "must be positive");
    c.tol.residual = *opt.tol;
  }
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"attrkit: attractor-point and existence-bound checks for Chern data on Calabi-Yau threefolds"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals opt;
  double tol_value = 0.0;
  app.add_option("--geometry", opt.geometry, "preset name, geometry JSON file, or name under $ATTRKIT_GEOMETRY_DIR")
      ->capture_default_str();
  app.add_flag("--json", opt.json_out, "machine-readable JSON output");
  app.add_flag("--corrections", opt.corrections, "include the zeta(3) correction in the central charge");
  app.add_option("--const-c", opt.const_c, "constant in the guessed c3 bound")->capture_default_str();
  app.add_option("--a-matrix", opt.a_matrix, "JSON file with the b2 x b2 matrix A of the charge map");
  app.add_option("--budget", opt.budget, "closure budget")->capture_default_str();
  auto* tol_opt = app.add_option("--tol", tol_value, "accepted attractor residual");

  std::string record_file;
  std::vector<double> B_in, J_in;
  std::vector<std::string> Jq_in;

  auto* check = app.add_subcommand("check", "full report for a Chern record or surface record");
  check->add_option("record", record_file, "record JSON file")->required();

  auto* minimize = app.add_subcommand("minimize", "numerically minimize |Z|^2 / J^3");
  minimize->add_option("record", record_file, "record JSON file")->required();
  minimize->add_option("--B", B_in, "start B (default 0)");
  minimize->add_option("--J", J_in, "start J (default all ones)");

  auto* catalog = app.add_subcommand("catalog", "named constructions");
  catalog->require_subcommand(1);
  std::string out_file;
  catalog->add_option("--out", out_file, "also write the record JSON to this file");
  auto* cat_tq = catalog->add_subcommand("tangent-quintic", "tangent bundle of the quintic");
  long mon_r = 3, mon_n = 2;
  auto* cat_monad = catalog->add_subcommand("monad", "monad bundle on the quintic");
  cat_monad->add_option("--r", mon_r, "rank")->capture_default_str();
  cat_monad->add_option("--n", mon_n, "degree parameter")->capture_default_str();
  auto* cat_jardim = catalog->add_subcommand("jardim", "the r = 3, c1 = -H, c2 = H^2 example");
  long ext_p = 2, ext_q = 1;
  auto* cat_ext = catalog->add_subcommand("extension", "p e^{qJ} - q e^{pJ}");
  cat_ext->add_option("--p", ext_p)->capture_default_str();
  cat_ext->add_option("--q", ext_q)->capture_default_str();
  cat_ext->add_option("--J", Jq_in, "ample class (default all ones)");
  std::string fib_file;
  std::vector<std::string> eta_in;
  std::string m_v = "0";
  long spectral_r = 3;
  auto* cat_spectral = catalog->add_subcommand("spectral", "c2 of a spectral-cover bundle");
  cat_spectral->add_option("--fibration", fib_file, "fibration data JSON file")->required();
  cat_spectral->add_option("--eta", eta_in, "eta in the base basis")->required();
  cat_spectral->add_option("--m-v", m_v, "fiber coefficient")->capture_default_str();
  cat_spectral->add_option("--r", spectral_r, "rank")->capture_default_str();

  auto* closure = app.add_subcommand("closure", "J-closure of a seed set of records");
  closure->add_option("seeds", record_file, "seed records JSON file")->required();
  closure->add_option("--B", B_in, "B (default 0)");
  closure->add_option("--J", J_in, "J")->required();

  auto* bounds = app.add_subcommand("bounds", "existence bounds at an ample class");
  bounds->add_option("record", record_file, "record JSON file")->required();
  bounds->add_option("--J", Jq_in, "ample class (default all ones)");

  auto* push = app.add_subcommand("push", "pushforward of a bundle on a divisor");
  push->add_option("record", record_file, "surface record JSON file")->required();

  auto* surface = app.add_subcommand("surface-bounds", "index bounds for a bundle on a surface");
  surface->add_option("input", record_file, "surface bound input JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }
  if (tol_opt->count() > 0) opt.tol = tol_value;

  try {
    const ThreefoldData g = io::load_geometry(opt.geometry);
    const CheckOptions copt = check_options(opt, g);
    auto ones = [&] { return DVector(g.b2(), 1.0); };
    auto qones = [&] { return QVector(g.b2(), Rational(1)); };

    if (*check) {
      const json j = io::read_file(record_file);
      CheckResult res = io::is_surface_record(j) ? check_surface(io::surface_record_from_json(j, g), g, copt)
                                                 : check_record(io::record_from_json(j, g), g, copt);
      emit(res.report, opt);
      return res.status;
    }
    if (*minimize) {
      const ChernRecord c = io::record_from_json(io::read_file(record_file), g);
      const DVector B0 = B_in.empty() ? DVector(g.b2(), 0.0) : parse_dvector(B_in, g, "--B");
      const DVector J0 = J_in.empty() ? ones() : parse_dvector(J_in, g, "--J");
      if (!in_kahler_cone(J0, g, true).member) throw io::InputError("--J", "start point must be strictly ample");
      emit(minimize_report(c, B0, J0, g, copt), opt);
      return 0;
    }
    if (*catalog) {
      std::optional<ChernRecord> record;
      json extra;
      if (*cat_tq) {
        record = tangent_quintic(g);
      } else if (*cat_monad) {
        if (g.b2() != 1) throw io::InputError("--geometry", "monad needs a b2 = 1 geometry");
        MonadRecord m = monad_chern(mon_r, mon_n, qones(), g);
        record = m.record;
        extra = json{{"c2_coeff", io::to_json(m.c2_coeff)},
                     {"c3_coeff", io::to_json(m.c3_coeff)},
                     {"stability_proviso", "stable only for n sufficiently large"}};
      } else if (*cat_jardim) {
        JardimResult jr = jardim_record(g);
        record = jr.record;
        extra = json{{"jardim_bounds", io::to_json(jr.report)}};
      } else if (*cat_ext) {
        const QVector J = Jq_in.empty() ? qones() : parse_qvector(Jq_in, g, "--J");
        record = extension_chern(ext_p, ext_q, J, g);
      } else if (*cat_spectral) {
        const FibrationData f = io::fibration_from_json(io::read_file(fib_file), g);
        QVector eta;
        for (const auto& s : eta_in) eta.push_back(parse_flag_rational(s, "--eta"));
        const SpectralC2 s = spectral_c2(spectral_r, eta, parse_flag_rational(m_v, "--m-v"), f);
        emit(json{{"geometry", g.name()},
                  {"c2_pair", io::to_json(s.c2)},
                  {"eta_ample", s.eta_ample},
                  {"eta_minus_rc1_effective", s.eta_minus_rc1_effective}},
             opt);
        return 0;
      }
      json rec = io::to_json(*record);
      json j{{"construction", catalog->get_subcommands().front()->get_name()}, {"record", rec}};
      if (!extra.is_null()) j["details"] = extra;
      if (record->rank > 0) j["check"] = check_record(*record, g, copt).report;
      if (!out_file.empty()) {
        std::ofstream out(out_file);
        if (!out) throw io::InputError(out_file, "cannot write file");
        out << rec.dump(2) << "\n";
      }
      emit(j, opt);
      return 0;
    }
    if (*closure) {
      const auto seeds = io::records_from_json(io::read_file(record_file), g);
      const DVector B = B_in.empty() ? DVector(g.b2(), 0.0) : parse_dvector(B_in, g, "--B");
      const DVector J = parse_dvector(J_in, g, "--J");
      if (!in_kahler_cone(J, g, true).member) throw io::InputError("--J", "must be strictly ample");
      if (opt.budget < 0) throw io::InputError("--budget", "must be nonnegative");
      emit(closure_report(seeds, B, J, opt.budget, g, copt), opt);
      return 0;
    }
    if (*bounds) {
      const ChernRecord c = io::record_from_json(io::read_file(record_file), g);
      const QVector J = Jq_in.empty() ? qones() : parse_qvector(Jq_in, g, "--J");
      emit(bounds_command_report(c, J, parse_flag_rational(opt.const_c, "--const-c"), g, copt), opt);
      return 0;
    }
    if (*push) {
      emit(push_report(io::surface_record_from_json(io::read_file(record_file), g), g), opt);
      return 0;
    }
    if (*surface) {
      emit(surface_bounds_report(io::surface_bound_input_from_json(io::read_file(record_file))), opt);
      return 0;
    }
  } catch (const io::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::domain_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
