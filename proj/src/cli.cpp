#include "leray/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

#include "leray/bigraded.hpp"
#include "leray/fixtures.hpp"
#include "leray/gl_cohomology.hpp"
#include "leray/hypersurface.hpp"
#include "leray/kernels.hpp"
#include "leray/serialize.hpp"
#include "leray/spectral.hpp"

namespace leray::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

ModuliInstance instance_arg(int n, int d) {
  try {
    return ModuliInstance::make(n, d);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::string join(const std::vector<std::int64_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + "]";
}

int cmd_verify(int n, int d, bool as_json, std::ostream& out) {
  const VerifierReport report = verify_instance(instance_arg(n, d));
  if (as_json)
    out << to_json(report).dump() << '\n';
  else
    out << render_table(report);
  return report.nonvanishing || !report.satisfies_hypothesis() ? kExitOk : kExitNegative;
}

int cmd_factor(const std::string& total_path, const std::string& divisor_path, bool as_text, std::ostream& out) {
  const auto total = polynomial_from_json(read_json_file(total_path));
  const auto divisor = polynomial_from_json(read_json_file(divisor_path));
  if (divisor.is_zero()) throw FormatError("divisor is the zero polynomial");
  const DivisionResult result = exact_divide(total, divisor);
  if (result.exact()) {
    out << (as_text ? result.quotient().to_string() : to_json(result.quotient()).dump()) << '\n';
    return kExitOk;
  }
  const auto& ob = result.obstruction();
  if (as_text) {
    out << "inexact division: obstructed at term "
        << BigradedPolynomial::monomial(ob.at.t, ob.at.u, ob.coefficient).to_string() << " (" << ob.reason << ")\n";
  } else {
    out << json{{"exact", false}, {"obstruction", to_json(ob)}}.dump() << '\n';
  }
  return kExitNegative;
}

int cmd_gl(int n, bool as_json, bool unweighted, std::ostream& out) {
  if (n < 0) throw UsageError("gl needs n >= 0");
  const auto p = unweighted ? gl_poincare(n) : gl_poincare_serre(n);
  out << (as_json ? to_json(p).dump() : p.to_string()) << '\n';
  return kExitOk;
}

int cmd_chern(int n, int d, bool as_json, std::ostream& out) {
  const auto inst = instance_arg(n, d);
  const auto series = gauss_chern_total(inst);
  const auto top = chern_top_coefficient(inst);
  const auto degree = chern_degree(inst);
  if (as_json) {
    out << json{{"n", n}, {"d", d}, {"series", to_json(series)}, {"top_coefficient", top.to_string()},
                {"degree", degree.get_str()}}
               .dump()
        << '\n';
  } else {
    out << "c(gamma^*E/F) = " << series.to_string() << " mod h^" << series.order() << '\n'
        << "c_" << n - 1 << " = " << top.to_string() << '\n'
        << "degree = " << degree.get_str() << '\n';
  }
  return kExitOk;
}

int cmd_disc(int n, int d, bool as_json, std::ostream& out) {
  const auto deg = discriminant_degree(instance_arg(n, d));
  if (as_json)
    out << json{{"n", n}, {"d", d}, {"discriminant_degree", deg.get_str()}}.dump() << '\n';
  else
    out << deg.get_str() << '\n';
  return kExitOk;
}

int cmd_ss_check(const std::string& e2_path, const std::string& betti_path, bool as_json, std::ostream& out) {
  const auto e2 = grid_from_json(read_json_file(e2_path));
  const auto betti = betti_from_json(read_json_file(betti_path));
  const bool degenerates = check_degeneration(e2, betti);
  const auto totals = total_dimensions(e2);
  if (as_json) {
    out << json{{"degenerates", degenerates}, {"e2_totals", totals}, {"total_betti", betti}}.dump() << '\n';
  } else {
    out << "E_" << e2.page() << " antidiagonal totals: " << join(totals) << '\n'
        << "abutment Betti numbers: " << join(betti) << '\n'
        << "degenerates: " << (degenerates ? "true" : "false") << '\n';
  }
  return degenerates ? kExitOk : kExitNegative;
}

int cmd_sweep(int n_max, int d_max, bool as_json, std::ostream& out) {
  if (n_max < 1 || d_max < 2) throw UsageError("sweep needs n_max >= 1 and d_max >= 2");
  const SweepResult result = sweep(n_max, d_max);
  if (as_json) {
    json rows = json::array();
    for (const auto& row : result.rows) {
      json r = row.report ? to_json(*row.report) : json{{"n", row.instance.n}, {"d", row.instance.d}};
      r["violation"] = row.violation;
      if (!row.error.empty()) r["error"] = row.error;
      rows.push_back(std::move(r));
    }
    out << json{{"rows", rows}, {"violations", result.violations}}.dump() << '\n';
  } else {
    out << std::setw(4) << "n" << std::setw(4) << "d" << "  " << std::left << std::setw(13) << "nonvanishing"
        << std::setw(10) << "status" << "r_n^*[S] = (d-1)^{n+1} + (-1)^n" << std::right << '\n';
    for (const auto& row : result.rows) {
      out << std::setw(4) << row.instance.n << std::setw(4) << row.instance.d << "  " << std::left << std::setw(13)
          << (row.report ? (row.report->nonvanishing ? "true" : "false") : "-") << std::setw(10)
          << (row.violation ? "VIOLATION" : (row.instance.satisfies_hypothesis() ? "ok" : "boundary"));
      out << (row.report ? row.report->pullback_coefficient.get_str() : row.error) << std::right << '\n';
    }
    out << result.violations << " violations\n";
  }
  return result.violations == 0 ? kExitOk : kExitNegative;
}

int cmd_fixtures(const std::string& dir, std::ostream& out) {
  write_fixtures(dir);
  for (const auto& [stem, poly] : standard_fixtures()) out << stem << ".json  " << poly.to_string() << '\n';
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact cohomology bookkeeping for moduli of smooth hypersurfaces", "leray"};
  app.require_subcommand(1);

  int n = 0;
  int d = 0;
  int n_max = 0;
  int d_max = 0;
  bool as_json = false;
  bool as_table = false;
  bool as_text = false;
  bool unweighted = false;
  std::string file_a;
  std::string file_b;

  auto* verify = app.add_subcommand("verify", "Nonvanishing certificate for one (n, d)");
  verify->add_option("n", n, "ambient dimension")->required();
  verify->add_option("d", d, "hypersurface degree")->required();
  auto* json_flag = verify->add_flag("--json", as_json, "machine-readable output");
  verify->add_flag("--table", as_table, "aligned text table (default)")->excludes(json_flag);

  auto* factor = app.add_subcommand("factor", "Exact division of Poincaré–Serre polynomials");
  factor->add_option("total", file_a, "dividend JSON file")->required();
  factor->add_option("divisor", file_b, "divisor JSON file")->required();
  factor->add_flag("--text", as_text, "print polynomials in human-readable form");

  auto* gl = app.add_subcommand("gl", "Poincaré–Serre polynomial of GL_n");
  gl->add_option("n", n, "rank")->required();
  gl->add_flag("--json", as_json, "JSON output");
  gl->add_flag("--poincare", unweighted, "forget weights (u = 1)");

  auto* chern = app.add_subcommand("chern", "Total Chern class c(gamma^*E/F) on the Fermat hypersurface");
  chern->add_option("n", n)->required();
  chern->add_option("d", d)->required();
  chern->add_flag("--json", as_json, "JSON output");

  auto* disc = app.add_subcommand("disc", "Degree of the discriminant");
  disc->add_option("n", n)->required();
  disc->add_option("d", d)->required();
  disc->add_flag("--json", as_json, "JSON output");

  auto* ss = app.add_subcommand("ss-check", "Does a spectral sequence degenerate at its given page?");
  ss->add_option("e2", file_a, "grid JSON file")->required();
  ss->add_option("betti", file_b, "abutment Betti numbers JSON file")->required();
  ss->add_flag("--json", as_json, "JSON output");

  auto* sw = app.add_subcommand("sweep", "Verify every instance 1<=n<=n_max, 2<=d<=d_max");
  sw->add_option("n_max", n_max)->required();
  sw->add_option("d_max", d_max)->required();
  sw->add_flag("--json", as_json, "JSON output");

  auto* fx = app.add_subcommand("fixtures", "Regenerate the fixture JSON files");
  fx->add_option("dir", file_a, "output directory")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (verify->parsed()) return cmd_verify(n, d, as_json, out);
    if (factor->parsed()) return cmd_factor(file_a, file_b, as_text, out);
    if (gl->parsed()) return cmd_gl(n, as_json, unweighted, out);
    if (chern->parsed()) return cmd_chern(n, d, as_json, out);
    if (disc->parsed()) return cmd_disc(n, d, as_json, out);
    if (ss->parsed()) return cmd_ss_check(file_a, file_b, as_json, out);
    if (sw->parsed()) return cmd_sweep(n_max, d_max, as_json, out);
    if (fx->parsed()) return cmd_fixtures(file_a, out);
  } catch (const CrossCheckFailure& e) {
    err << "cross-check failure: " << e.what() << '\n';
    return kExitCrossCheck;
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << '\n';
    return kExitUsage;
  } catch (const FormatError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace leray::cli
