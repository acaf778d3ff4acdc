// Command-line front end: reads a JSON problem config, runs the requested
// computation, writes a single JSON report to standard output.
// Exit codes: 0 success, 2 usage or validation failure, 3 internal assertion.
#include <fstream>
#include <iostream>
#include <memory>
#include <numeric>

#include <CLI11.hpp>
#include <json.hpp>

#include "asf/hessenberg.hpp"
#include "asf/oracle.hpp"
#include "asf/report.hpp"
#include "asf/torus.hpp"

using nlohmann::json;

namespace {

struct CommonOpts {
  std::string config_path;
  int radius = -1;  // -1 = keep config value
  bool no_auto_extend = false;
  bool quotient_central = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--config", opts.config_path, "problem config file (JSON)")
      ->required();
  cmd->add_option("--radius", opts.radius, "translation enumeration radius");
  cmd->add_flag("--no-auto-extend", opts.no_auto_extend,
                "do not grow the radius until saturation");
  cmd->add_flag("--quotient-central", opts.quotient_central,
                "reduce to one fundamental window modulo central translations");
}

asf::ProblemConfig load_config(const CommonOpts& opts) {
  std::ifstream in(opts.config_path);
  if (!in) throw std::invalid_argument("cannot open " + opts.config_path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("config parse error: ") + e.what());
  }
  auto cfg = asf::parse_config(j);
  if (opts.radius >= 0) cfg.radius = opts.radius;
  if (opts.no_auto_extend) cfg.auto_extend = false;
  if (opts.quotient_central) cfg.quotient_by_central = true;
  return cfg;
}

int cmd_paving(const CommonOpts& opts) {
  auto problem = asf::build_problem(load_config(opts));
  auto report = asf::assemble(problem);
  std::cout << asf::paving_report_json(problem, report).dump(2) << "\n";
  return 0;
}

int cmd_hessenberg(const CommonOpts& opts) {
  // The fixed-point datum at the base orbit: H = the pseudo-Levi at x,
  // threshold and grading as in one paving cell.
  auto problem = asf::build_problem(load_config(opts));
  problem.validate();
  asf::RootDatum h = asf::levi_at(problem.datum, problem.x);
  asf::HessenbergSpec spec(h);
  spec.parabolic_point = problem.y;
  for (size_t i = 0; i < spec.parabolic_point.coords.size(); ++i)
    spec.parabolic_point.coords[i] -= problem.x.coords[i];
  spec.t = problem.t - problem.s;
  spec.rep_piece = problem.rep_piece();
  spec.v_support = problem.effective_support();

  std::unique_ptr<asf::CoinvariantEngine> engine;
  if (!h.is_torus()) engine = std::make_unique<asf::CoinvariantEngine>(h);

  json out;
  out["problem"] = asf::problem_json(problem);
  out["h"] = {{"rank", h.rank()},
              {"num_roots", h.roots().size()},
              {"is_torus", h.is_torus()}};
  out["ambient_dim"] = asf::ambient_dim(spec);
  out["codim_condition"] = asf::codim_condition(spec);
  bool empty = asf::is_empty(spec, engine.get());
  out["empty"] = empty;
  if (!empty) out["dim"] = asf::hessenberg_dim(spec, engine.get());
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_torus(const CommonOpts& opts) {
  auto cfg = load_config(opts);
  auto datum = asf::config_datum(cfg);
  auto x = asf::resolve_torus_point(datum, cfg.torus);
  auto levi = asf::levi_at(datum, x);
  auto pos = datum.alcove_position(x);
  auto rep = cfg.rep == "adjoint" ? asf::adjoint_rep(datum)
                                  : asf::standard_rep(datum);
  auto adm = asf::equivalued_admissible(datum, x, cfg.s, rep);

  json out;
  json coords = json::array();
  for (const auto& c : x.coords) coords.push_back(asf::rat_to_string(c));
  out["x"] = coords;
  out["order_l"] = adm.order_l.convert_to<long long>();
  out["h"] = {{"rank", levi.rank()},
              {"num_roots", levi.roots().size()},
              {"is_torus", levi.is_torus()}};
  out["alcove_interior"] = pos.interior;
  out["num_walls"] = pos.walls.size();
  out["admissible"] = {{"ok", adm.ok},
                       {"reason", adm.reason},
                       {"warning", adm.warning},
                       {"piece_dim", adm.piece.dim()}};
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_oracle(const CommonOpts& opts, int q_flag) {
  auto cfg = load_config(opts);
  cfg.quotient_by_central = true;  // oracle window = one fundamental window
  if (q_flag > 0) cfg.oracle_q = q_flag;
  auto problem = asf::build_problem(cfg);
  if (problem.datum.isogeny() != asf::Isogeny::gl)
    throw std::invalid_argument("oracle limit: gl-type data only");
  int n = problem.datum.dim();
  if (n > 3) throw std::invalid_argument("oracle limit: n <= 3");
  asf::Rat m_rat = problem.s * n;
  if (!asf::is_integer(m_rat))
    throw std::invalid_argument("oracle limit: s must be m/n");
  int m = static_cast<int>(numerator(m_rat).convert_to<long long>());
  if (m < 1 || std::gcd(m, n) != 1)
    throw std::invalid_argument("oracle limit: need m >= 1, gcd(m, n) = 1");
  bool y_zero = true;
  for (const auto& c : problem.y.coords) y_zero &= (c == 0);
  if (!y_zero || problem.t != 0)
    throw std::invalid_argument("oracle limit: y = 0 and t = 0 only");

  auto oracle_report = asf::oracle::run_oracle(n, m, cfg.oracle_q,
                                               cfg.oracle_N);
  auto paving_report = asf::assemble(problem);
  auto verdict = asf::oracle::compare_with_paving(oracle_report, paving_report);
  std::cout << asf::oracle_report_json(oracle_report, &verdict).dump(2)
            << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hessenberg paving structure of equivalued affine fibers"};
  app.require_subcommand(1);

  CommonOpts paving_opts, hess_opts, torus_opts, oracle_opts;
  int oracle_q = 0;

  auto* paving = app.add_subcommand("paving", "full paving report");
  add_common(paving, paving_opts);
  auto* hess = app.add_subcommand("hessenberg",
                                  "emptiness/dimension of the base datum");
  add_common(hess, hess_opts);
  auto* torus = app.add_subcommand("torus",
                                   "grading point, pseudo-Levi, alcove status");
  add_common(torus, torus_opts);
  auto* oracle = app.add_subcommand("oracle",
                                    "lattice-count cross validation (gl only)");
  add_common(oracle, oracle_opts);
  oracle->add_option("--q", oracle_q, "field size (prime)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (paving->parsed()) return cmd_paving(paving_opts);
    if (hess->parsed()) return cmd_hessenberg(hess_opts);
    if (torus->parsed()) return cmd_torus(torus_opts);
    if (oracle->parsed()) return cmd_oracle(oracle_opts, oracle_q);
  } catch (const std::invalid_argument& e) {
    std::cout << asf::error_json("validation", e.what()).dump(2) << "\n";
    std::cerr << "validation failure: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cout << asf::error_json("internal", e.what()).dump(2) << "\n";
    std::cerr << "internal assertion: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
