#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "asf/oracle.hpp"
#include "asf/paving.hpp"
#include "asf/torus.hpp"

namespace asf {

/// Problem description as read from a config file. Field names match the
/// JSON keys one to one.
struct ProblemConfig {
  Family family = Family::A;
  int rank = 1;
  Isogeny isogeny = Isogeny::simply_connected;
  std::string rep = "adjoint";  // or "standard"
  TorusSpec torus;
  Rat s;
  Rat t;
  std::optional<RatVec> y;  // default: the base point 0
  std::vector<IntVec> v_support;
  int radius = 3;
  bool auto_extend = true;
  bool quotient_by_central = false;
  int oracle_q = 2;
  int oracle_N = 0;  // 0 = derived from the problem
};

/// Throws std::invalid_argument with a readable message on malformed input.
ProblemConfig parse_config(const nlohmann::json& j);

RootDatum config_datum(const ProblemConfig& cfg);
PavingProblem build_problem(const ProblemConfig& cfg);

/// The single-document report schema: problem echo, cells, affine_paving,
/// poly coefficient list, truncation note. Key order is alphabetical, so
/// identical inputs serialize byte-identically.
nlohmann::json problem_json(const PavingProblem& problem);
nlohmann::json paving_report_json(const PavingProblem& problem,
                                  const PavingReport& report);
nlohmann::json oracle_report_json(const oracle::OracleReport& report,
                                  const oracle::CompareVerdict* verdict);
nlohmann::json error_json(const std::string& kind, const std::string& message);

}  // namespace asf
