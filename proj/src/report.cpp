#include "asf/report.hpp"

#include <stdexcept>

namespace asf {

namespace {

using nlohmann::json;

Family family_from_string(const std::string& s) {
  if (s == "A") return Family::A;
  if (s == "B") return Family::B;
  if (s == "C") return Family::C;
  if (s == "D") return Family::D;
  if (s == "G2") return Family::G2;
  throw std::invalid_argument("unknown family: " + s);
}

Isogeny isogeny_from_string(const std::string& s) {
  if (s == "simply_connected") return Isogeny::simply_connected;
  if (s == "adjoint") return Isogeny::adjoint;
  if (s == "gl") return Isogeny::gl;
  throw std::invalid_argument("unknown isogeny: " + s);
}

Rat rat_field(const json& j, const std::string& key) {
  if (!j.contains(key))
    throw std::invalid_argument("missing field: " + key);
  const auto& v = j.at(key);
  if (v.is_number_integer()) return Rat(Int(v.get<long long>()));
  if (v.is_string()) return rat_from_string(v.get<std::string>());
  throw std::invalid_argument("field " + key +
                              " must be an integer or a \"p/q\" string");
}

RatVec rat_vector(const json& arr, const std::string& key) {
  if (!arr.is_array())
    throw std::invalid_argument("field " + key + " must be an array");
  RatVec out;
  for (const auto& v : arr) {
    if (v.is_number_integer())
      out.push_back(Rat(Int(v.get<long long>())));
    else if (v.is_string())
      out.push_back(rat_from_string(v.get<std::string>()));
    else
      throw std::invalid_argument("entries of " + key +
                                  " must be integers or \"p/q\" strings");
  }
  return out;
}

json rat_vec_json(const RatVec& v) {
  json arr = json::array();
  for (const auto& r : v) arr.push_back(rat_to_string(r));
  return arr;
}

json int_vec_json(const IntVec& v) {
  json arr = json::array();
  for (const auto& e : v) arr.push_back(e.convert_to<long long>());
  return arr;
}

}  // namespace

ProblemConfig parse_config(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("config must be an object");
  ProblemConfig cfg;
  cfg.family = family_from_string(j.value("family", std::string("A")));
  cfg.rank = j.value("rank", 1);
  cfg.isogeny = isogeny_from_string(
      j.value("isogeny", std::string("simply_connected")));
  cfg.rep = j.value("rep", std::string("adjoint"));
  if (cfg.rep != "adjoint" && cfg.rep != "standard")
    throw std::invalid_argument("rep must be adjoint or standard");

  if (j.contains("torus")) {
    const auto& t = j.at("torus");
    std::string mode = t.value("mode", std::string("coxeter"));
    if (mode == "coxeter") {
      cfg.torus.mode = TorusMode::coxeter;
    } else if (mode == "weakly_coxeter") {
      cfg.torus.mode = TorusMode::weakly_coxeter;
      for (const auto& idx : t.value("levi_selection", json::array()))
        cfg.torus.levi_selection.push_back(idx.get<int>());
    } else if (mode == "kac") {
      cfg.torus.mode = TorusMode::kac;
      cfg.torus.kac_x.coords = rat_vector(t.at("x"), "torus.x");
      cfg.torus.kac_l = Int(t.value("l", 1));
    } else {
      throw std::invalid_argument("unknown torus mode: " + mode);
    }
  }

  cfg.s = rat_field(j, "s");
  cfg.t = j.contains("t") ? rat_field(j, "t") : Rat(0);
  if (j.contains("y")) cfg.y = rat_vector(j.at("y"), "y");
  if (j.contains("v_support"))
    for (const auto& w : j.at("v_support")) {
      IntVec coords;
      for (const auto& c : w) coords.push_back(Int(c.get<long long>()));
      cfg.v_support.push_back(coords);
    }
  cfg.radius = j.value("radius", 3);
  cfg.auto_extend = j.value("auto_extend", true);
  cfg.quotient_by_central = j.value("quotient_by_central", false);
  if (j.contains("oracle")) {
    cfg.oracle_q = j.at("oracle").value("q", 2);
    cfg.oracle_N = j.at("oracle").value("N", 0);
  }
  return cfg;
}

RootDatum config_datum(const ProblemConfig& cfg) {
  return RootDatum::build(cfg.family, cfg.rank, cfg.isogeny);
}

PavingProblem build_problem(const ProblemConfig& cfg) {
  RootDatum datum = config_datum(cfg);
  PavingProblem p(datum);
  p.rep = cfg.rep == "adjoint" ? adjoint_rep(p.datum) : standard_rep(p.datum);
  p.x = resolve_torus_point(p.datum, cfg.torus);
  p.s = cfg.s;
  p.t = cfg.t;
  p.y = cfg.y ? ApartmentPoint{*cfg.y} : zero_point(p.datum.dim());
  for (const auto& coords : cfg.v_support) p.v_support.push_back({coords});
  p.radius = cfg.radius;
  p.auto_extend = cfg.auto_extend;
  p.quotient_by_central = cfg.quotient_by_central;
  return p;
}

nlohmann::json problem_json(const PavingProblem& problem) {
  json j;
  if (problem.datum.family())
    j["family"] = family_name(*problem.datum.family());
  j["rank"] = problem.datum.rank();
  j["isogeny"] = isogeny_name(problem.datum.isogeny());
  j["rep"] = problem.rep.name;
  j["x"] = rat_vec_json(problem.x.coords);
  j["s"] = rat_to_string(problem.s);
  j["y"] = rat_vec_json(problem.y.coords);
  j["t"] = rat_to_string(problem.t);
  json support = json::array();
  for (const auto& w : problem.v_support) support.push_back(int_vec_json(w.coords));
  j["v_support"] = support;
  j["radius"] = problem.radius;
  j["auto_extend"] = problem.auto_extend;
  j["quotient_by_central"] = problem.quotient_by_central;
  return j;
}

nlohmann::json paving_report_json(const PavingProblem& problem,
                                  const PavingReport& report) {
  json j;
  j["problem"] = problem_json(problem);
  json cells = json::array();
  for (const auto& rec : report.cells) {
    json c;
    c["orbit"] = {{"translation", int_vec_json(rec.orbit.translation)},
                  {"word", rec.orbit.finite.word}};
    json yp = json::array();
    for (const auto& v : rec.y_prime.coords) yp.push_back(rat_to_string(v));
    c["point"] = yp;
    c["empty"] = rec.empty;
    if (!rec.empty) {
      c["base_dim"] = *rec.base_dim;
      json layers = json::array();
      for (const auto& [r, rank] : rec.layer_ranks)
        layers.push_back({{"r", rat_to_string(r)},
                          {"rank", rank.convert_to<long long>()}});
      c["layers"] = layers;
      c["dim"] = rec.dim_total->convert_to<long long>();
      if (rec.dim_rootcount)
        c["dim_rootcount"] = rec.dim_rootcount->convert_to<long long>();
    }
    cells.push_back(c);
  }
  j["cells"] = cells;
  j["affine_paving"] = report.affine_paving;
  if (report.max_dim) j["max_dim"] = report.max_dim->convert_to<long long>();
  json poly = json::array();
  for (const auto& c : report.poly) poly.push_back(c.convert_to<long long>());
  j["poly"] = poly;
  j["truncation"] = report.truncation_note;
  j["truncated"] = report.truncated;
  return j;
}

nlohmann::json oracle_report_json(const oracle::OracleReport& report,
                                  const oracle::CompareVerdict* verdict) {
  json j;
  j["provenance"] = "oracle";
  j["n"] = report.n;
  j["m"] = report.m;
  j["q"] = report.q;
  j["truncation"] = report.truncation;
  j["window"] = {{"det_val", report.window.det_val.convert_to<long long>()},
                 {"bound", report.window.bound}};
  json labels = json::array();
  for (const auto& [label, count] : report.per_label)
    labels.push_back({{"label", int_vec_json(label)},
                      {"count", count.convert_to<long long>()}});
  j["per_label"] = labels;
  j["total"] = report.total.convert_to<long long>();
  if (verdict) {
    j["verdict"] = {{"match", verdict->match}, {"detail", verdict->detail}};
  }
  return j;
}

nlohmann::json error_json(const std::string& kind, const std::string& message) {
  return nlohmann::json{{"error", {{"kind", kind}, {"message", message}}}};
}

}  // namespace asf
