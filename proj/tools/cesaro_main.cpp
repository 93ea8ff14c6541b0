// Command-line front end: run verification suites, compute norms and
// K-curves, and emit CSV/JSON for downstream plotting.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cesaro/families.hpp"
#include "cesaro/interpolation.hpp"
#include "cesaro/io.hpp"
#include "cesaro/kfunctional.hpp"
#include "cesaro/norms.hpp"
#include "cesaro/suites.hpp"

namespace {

using namespace cesaro;

std::string resolve_out_path(const std::string& path) {
  if (path.empty() || path.front() == '/') return path;
  const char* dir = std::getenv("CESARO_OUT_DIR");
  if (dir == nullptr || *dir == '\0') return path;
  return std::string(dir) + "/" + path;
}

std::vector<double> parse_list(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
  return out;
}

Weight weight_from_name(const std::string& name) {
  if (name == "one") return Weight::one();
  if (name == "inv_t") return Weight::inv_t();
  if (name == "log_inv") return Weight::log_inv();
  if (name == "log_e") return Weight::log_e();
  if (name == "one_minus_t") return Weight::one_minus_t();
  throw std::invalid_argument("unknown weight '" + name + "'");
}

CoupleSpec couple_from_token(const std::string& token) {
  auto colon = token.find(':');
  std::string head = token.substr(0, colon);
  std::vector<std::string> args;
  if (colon != std::string::npos) {
    std::stringstream ss(token.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) args.push_back(item);
  }
  if (head == "weighted_l1") {
    if (args.size() != 2) throw std::invalid_argument("weighted_l1 needs two weights");
    return CoupleSpec::weighted_l1(weight_from_name(args[0]), weight_from_name(args[1]));
  }
  if (head == "l1_linf") return CoupleSpec::l1_linf();
  if (head == "discrete") return CoupleSpec::discrete();
  if (head == "ces1_cesinf") return CoupleSpec::ces1_cesinf();
  if (head == "l1w_cesinf") {
    if (args.size() != 1) throw std::invalid_argument("l1w_cesinf needs one weight");
    return CoupleSpec::l1w_cesinf(weight_from_name(args[0]));
  }
  if (head == "l1_cesinf_halfline") return CoupleSpec::l1_cesinf_halfline();
  if (head == "restricted") {
    if (args.size() != 3) throw std::invalid_argument("restricted needs weight,lo,hi");
    return CoupleSpec::restricted(weight_from_name(args[0]), std::stod(args[1]),
                                  std::stod(args[2]));
  }
  throw std::invalid_argument("unknown couple '" + token + "'");
}

struct FunctionInput {
  std::string file;
  std::string breaks_csv, vals_csv;
  double const_val = -1.0;
  std::string domain = "unit";
  double t_max = 1.0;

  StepFunction build() const {
    if (!file.empty()) return read_function_spec_file(file);
    Domain dom = (domain == "halfline") ? Domain::half_line(t_max) : Domain::unit();
    if (const_val >= 0.0) return StepFunction::constant(const_val, dom);
    if (breaks_csv.empty() || vals_csv.empty())
      throw std::invalid_argument("provide --fn, --const, or --breaks/--vals");
    std::vector<double> br = parse_list(breaks_csv);
    if (br.empty() || br.front() != 0.0) br.insert(br.begin(), 0.0);
    return StepFunction(dom, br, parse_list(vals_csv));
  }
};

void add_function_options(CLI::App* cmd, FunctionInput& fi) {
  cmd->add_option("--fn", fi.file, "function spec file (see README for the format)");
  cmd->add_option("--const", fi.const_val, "constant function value");
  cmd->add_option("--breaks", fi.breaks_csv, "comma-separated breakpoints (0 implied)");
  cmd->add_option("--vals", fi.vals_csv, "comma-separated piece values");
  cmd->add_option("--domain", fi.domain, "unit | halfline")
      ->check(CLI::IsMember({"unit", "halfline"}));
  cmd->add_option("--T", fi.t_max, "half-line truncation");
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::string full = resolve_out_path(path);
  std::ofstream os(full);
  if (!os) throw std::invalid_argument("cannot write '" + full + "'");
  os << text;
}

std::string p_margin(const Assertion& a) {
  std::ostringstream os;
  os << "  (margin " << format_g17(a.margin) << ")";
  return os.str();
}

int run_verify(const std::string& suite_token_str, SuiteConfig cfg,
               const std::string& config_path, const std::string& out_path) {
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) throw std::invalid_argument("cannot open config '" + config_path + "'");
    nlohmann::json j = nlohmann::json::parse(in);
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("count")) cfg.count = j["count"].get<int>();
    if (j.contains("mesh_n")) cfg.mesh_n = j["mesh_n"].get<int>();
    if (j.contains("tol")) cfg.tol = j["tol"].get<double>();
    if (j.contains("gauss_order")) cfg.quad.gauss_order = j["gauss_order"].get<int>();
    if (j.contains("rel_tol")) cfg.quad.rel_tol = j["rel_tol"].get<double>();
  }
  auto suite = suite_from_token(suite_token_str);
  if (!suite) {
    std::cerr << "unknown suite '" << suite_token_str << "'\n";
    return 2;
  }
  Report rep = run_suite(*suite, cfg);
  for (const Assertion& a : rep.assertions) {
    std::cout << (a.pass ? "pass  " : "FAIL  ") << a.id << p_margin(a) << "\n";
    if (!a.pass && !a.detail.empty()) std::cout << "      worst case: " << a.detail << "\n";
  }
  if (!out_path.empty()) write_text(out_path, report_to_json(rep).dump(2) + "\n");
  std::cout << (rep.pass() ? "suite passed" : "suite FAILED") << "\n";
  return rep.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cesaro/Copson operators, K-functionals, and interpolation norms"};
  app.require_subcommand(1);

  // verify
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite_name, config_path, verify_out;
  SuiteConfig cfg;
  verify->add_option("--suite", suite_name, "suite name")->required();
  verify->add_option("--seed", cfg.seed, "corpus seed");
  verify->add_option("--count", cfg.count, "corpus size override (0 = default)");
  verify->add_option("--mesh", cfg.mesh_n, "starting mesh cells for variational solves");
  verify->add_option("--tol", cfg.tol, "solver tolerance");
  verify->add_option("--config", config_path, "JSON config file");
  verify->add_option("--out", verify_out, "report JSON path");

  // kcurve
  auto* kcurve = app.add_subcommand("kcurve", "sample a K-functional curve as CSV");
  FunctionInput kc_fn;
  add_function_options(kcurve, kc_fn);
  std::string couple_token = "ces1_cesinf", method = "lp", seq_csv, kcurve_out;
  double tmin = 1e-4, tmax = 10.0;
  int points = 200, mesh_n = 512;
  double tol = 1e-8;
  kcurve->add_option("--seq", seq_csv, "sequence terms for the discrete couple");
  kcurve->add_option("--couple", couple_token, "couple name (see README)");
  kcurve->add_option("--method", method, "closed | lp")
      ->check(CLI::IsMember({"closed", "lp"}));
  kcurve->add_option("--tmin", tmin, "grid start");
  kcurve->add_option("--tmax", tmax, "grid end");
  kcurve->add_option("--points", points, "grid points");
  kcurve->add_option("--mesh", mesh_n, "mesh cells for variational couples");
  kcurve->add_option("--tol", tol, "solver tolerance");
  kcurve->add_option("--out", kcurve_out, "CSV path (stdout when omitted)");

  // norm
  auto* norm = app.add_subcommand("norm", "compute one norm of a step function");
  FunctionInput nm_fn;
  add_function_options(norm, nm_fn);
  std::string space = "ces", weight_name = "one", norm_couple = "ces1_cesinf";
  double p = 2.0, theta = -1.0;
  int norm_mesh = 512;
  double norm_tol = 1e-8;
  norm->add_option("--space", space,
                   "ces | cop | ces_log | ces_inf | lp | theta_p | theta_inf")
      ->check(CLI::IsMember({"ces", "cop", "ces_log", "ces_inf", "lp", "theta_p", "theta_inf"}));
  norm->add_option("--p", p, "exponent");
  norm->add_option("--weight", weight_name, "weight for lp");
  norm->add_option("--couple", norm_couple, "couple for the theta norms");
  norm->add_option("--theta", theta, "interpolation parameter (default 1 - 1/p)");
  norm->add_option("--mesh", norm_mesh, "mesh cells for variational couples");
  norm->add_option("--tol", norm_tol, "solver tolerance");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "counterexample family sweeps as CSV");
  std::string family = "tail", sweep_out, h_csv, s_csv;
  int kmin = 1, kmax = 8;
  double sweep_p = 2.0;
  int sweep_mesh = 512;
  double sweep_tol = 1e-8;
  sweep->add_option("--family", family, "tail (h = 1-2^-k) | prefix (s = e^-k)")
      ->check(CLI::IsMember({"tail", "prefix"}));
  sweep->add_option("--p", sweep_p, "exponent");
  sweep->add_option("--kmin", kmin, "first index");
  sweep->add_option("--kmax", kmax, "last index");
  sweep->add_option("--h-values", h_csv, "explicit h list, overrides the dyadic ladder");
  sweep->add_option("--s-values", s_csv, "explicit s list, overrides the exponential ladder");
  sweep->add_option("--mesh", sweep_mesh, "mesh cells (prefix family)");
  sweep->add_option("--tol", sweep_tol, "solver tolerance (prefix family)");
  sweep->add_option("--out", sweep_out, "CSV path (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    QuadConfig q;
    if (verify->parsed()) return run_verify(suite_name, cfg, config_path, verify_out);

    if (kcurve->parsed()) {
      KCurve kc = [&] {
        if (!seq_csv.empty() || couple_token == "discrete") {
          if (seq_csv.empty()) throw std::invalid_argument("discrete couple needs --seq");
          return build_kcurve(Seq(parse_list(seq_csv)), {tmin, tmax, points});
        }
        CoupleSpec couple = couple_from_token(couple_token);
        KMethod m = (method == "closed") ? KMethod::ClosedForm : KMethod::LP;
        if (couple.variational() && m == KMethod::ClosedForm) {
          std::cerr << "couple '" << couple_token << "' has no closed form\n";
          std::exit(2);
        }
        return build_kcurve(kc_fn.build(), couple, {tmin, tmax, points}, m, mesh_n, tol, q);
      }();
      write_text(kcurve_out, kcurve_csv(kc, q));
      return 0;
    }

    if (norm->parsed()) {
      StepFunction f = nm_fn.build();
      double value = 0.0;
      if (space == "ces")
        value = ces_norm(f, p, q);
      else if (space == "cop")
        value = cop_norm(f, p, q);
      else if (space == "ces_log")
        value = ces_log_norm(f, p, q);
      else if (space == "ces_inf")
        value = ces_norm(f, kInfP, q);
      else if (space == "theta_p" || space == "theta_inf") {
        CoupleSpec couple = couple_from_token(norm_couple);
        KMethod m = couple.variational() ? KMethod::LP : KMethod::ClosedForm;
        KCurve kc = build_kcurve(f, couple, {1e-5, 4.0, 160}, m, norm_mesh, norm_tol, q);
        double th = theta >= 0.0 ? theta : 1.0 - 1.0 / p;
        value = (space == "theta_p") ? theta_p_norm(kc, th, p, q).value
                                     : theta_inf_norm(kc, th);
      } else {
        value = lp_weighted(f, p, weight_from_name(weight_name), q);
      }
      std::cout << format_g17(value) << "\n";
      return 0;
    }

    if (sweep->parsed()) {
      std::ostringstream os;
      os << "parameter,value_lhs,value_rhs,bound,pass\n";
      if (family == "tail") {
        // parameter h; lhs/rhs are the Copson and Cesaro norms, the bound is
        // the certified lower bound for (lhs/rhs)^p
        std::vector<double> hs = h_csv.empty() ? std::vector<double>{} : parse_list(h_csv);
        if (hs.empty())
          for (int k = kmin; k <= kmax; ++k) hs.push_back(1.0 - std::pow(2.0, -k));
        for (double h : hs) {
          TailSingularFamily fam(h);
          double copn = fam.cop_norm(sweep_p, q), cesn = fam.ces_norm(sweep_p, q);
          double lhs = std::pow(copn / cesn, sweep_p), bound = fam.ratio_lower_bound(sweep_p);
          os << format_g17(fam.h) << "," << format_g17(copn) << "," << format_g17(cesn) << ","
             << format_g17(bound) << "," << (lhs >= bound * (1.0 - 1e-9) ? "1" : "0") << "\n";
        }
      } else {
        // parameter s; lhs is the (theta,inf) norm, rhs the Cesaro norm, the
        // bound certifies lhs/rhs from below
        CoupleSpec couple = CoupleSpec::ces1_cesinf();
        std::vector<double> ss = s_csv.empty() ? std::vector<double>{} : parse_list(s_csv);
        if (ss.empty())
          for (int k = kmin; k <= kmax; ++k) ss.push_back(std::exp(-static_cast<double>(k)));
        for (double s : ss) {
          PrefixIndicatorFamily fam(s);
          KCurve kc = build_kcurve(fam.step(), couple, {1e-5, 2.0, 140}, KMethod::LP,
                                   sweep_mesh, sweep_tol, q);
          double ti = theta_inf_norm(kc, 1.0 - 1.0 / sweep_p);
          double cesn = fam.ces_norm(sweep_p);
          double ratio = ti / cesn, bound = fam.ratio_bound(sweep_p);
          os << format_g17(fam.s) << "," << format_g17(ti) << "," << format_g17(cesn) << ","
             << format_g17(bound) << "," << (ratio >= bound * (1.0 - 1e-9) ? "1" : "0") << "\n";
        }
      }
      write_text(sweep_out, os.str());
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
