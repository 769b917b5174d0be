#include "grmin/json_io.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace grmin {

namespace {

std::string pair_key(int i, int j) {
  return std::to_string(i) + "," + std::to_string(j);
}

std::pair<int, int> parse_pair_key(const std::string& key) {
  const auto comma = key.find(',');
  if (comma == std::string::npos) {
    throw std::invalid_argument("bad pair key '" + key + "'");
  }
  try {
    const int i = std::stoi(key.substr(0, comma));
    const int j = std::stoi(key.substr(comma + 1));
    if (i < 1 || j <= i) {
      throw std::invalid_argument("");
    }
    return {i, j};
  } catch (const std::exception&) {
    throw std::invalid_argument("bad pair key '" + key + "'");
  }
}

}  // namespace

json matrix_to_json(const PointMatrix& X) {
  json j;
  j["n"] = X.n();
  json cols = json::array();
  for (const auto& c : X.columns()) {
    cols.push_back({c[0], c[1]});
  }
  j["columns"] = std::move(cols);
  return j;
}

PointMatrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("columns")) {
    throw std::invalid_argument("matrix json must have fields n and columns");
  }
  const int n = j.at("n").get<int>();
  const auto& cols_json = j.at("columns");
  if (!cols_json.is_array() || static_cast<int>(cols_json.size()) != n) {
    throw std::invalid_argument("matrix json: columns does not match n");
  }
  std::vector<PointMatrix::Column> cols;
  cols.reserve(cols_json.size());
  for (const auto& c : cols_json) {
    if (!c.is_array() || c.size() != 2) {
      throw std::invalid_argument("matrix json: each column must be [u, v]");
    }
    cols.push_back({c.at(0).get<double>(), c.at(1).get<double>()});
  }
  return PointMatrix(std::move(cols));
}

json plucker_to_json(const PluckerVector& P) {
  json j;
  for (const PairIndex& p : ordered_pairs(P.n())) {
    j[pair_key(p.i, p.j)] = P.at(p.i, p.j);
  }
  return j;
}

PluckerVector plucker_from_json(const json& j) {
  if (!j.is_object() || j.empty()) {
    throw std::invalid_argument("plucker json must be a non-empty map");
  }
  int n = 0;
  std::map<std::pair<int, int>, double> values;
  for (const auto& [key, v] : j.items()) {
    const auto pair = parse_pair_key(key);
    values[pair] = v.get<double>();
    n = std::max(n, pair.second);
  }
  if (values.size() != static_cast<std::size_t>(n) * (n - 1) / 2) {
    throw std::invalid_argument("plucker json: expected one entry per pair");
  }
  PluckerVector P(n);
  for (const auto& [pair, v] : values) {
    P.set(pair.first, pair.second, v);
  }
  return P;
}

json outer_to_json(const OuterOrbitData& data) {
  json j;
  for (const auto& [pair, v] : data.values()) {
    j[pair_key(pair.first, pair.second)] = v;
  }
  return j;
}

OuterOrbitData outer_from_json(const json& j) {
  if (!j.is_object() || j.empty()) {
    throw std::invalid_argument("outer-orbit json must be a non-empty map");
  }
  int n = 0;
  std::map<std::pair<int, int>, double> values;
  for (const auto& [key, v] : j.items()) {
    const auto pair = parse_pair_key(key);
    values[pair] = v.get<double>();
    n = std::max(n, pair.second);
  }
  return OuterOrbitData(n, std::move(values));
}

json orbit_table_to_json(const OrbitTable& table) {
  json j;
  j["n"] = table.n();
  j["d"] = table.d();
  json orbits = json::object();
  json distinct = json::object();
  for (int k = 1; k <= table.n() - 1; ++k) {
    json o = json::array();
    for (const PairIndex& p : table.orbit(k)) o.push_back({p.i, p.j});
    orbits[std::to_string(k)] = std::move(o);
  }
  for (int k = 1; k <= table.d(); ++k) {
    json s = json::array();
    for (const PairIndex& p : table.distinct(k)) s.push_back({p.i, p.j});
    distinct[std::to_string(k)] = std::move(s);
  }
  j["orbits"] = std::move(orbits);
  j["distinct"] = std::move(distinct);
  return j;
}

namespace {

json slack_list_to_json(const std::vector<SlackEntry>& entries) {
  json arr = json::array();
  for (const SlackEntry& e : entries) {
    arr.push_back({{"jkl", {e.j, e.k, e.l}}, {"slack", e.slack}});
  }
  return arr;
}

}  // namespace

json certificate_to_json(const CertificateReport& report) {
  json j;
  j["n"] = report.n;
  j["passed"] = report.passed;
  j["E_value"] = report.E_value;
  j["L_value"] = report.L_value;
  j["lower_bound_gap"] = report.lower_bound_gap;
  j["a_min"] = report.a_min;
  j["relation_max_residual"] = report.relation_max_residual;
  j["geomean_violations"] = slack_list_to_json(report.geomean_violations);
  j["linear_violations"] = slack_list_to_json(report.linear_violations);
  j["tol_rel"] = report.tol.rel;
  j["tol_abs"] = report.tol.abs;
  return j;
}

json qfamily_to_json(const QFamilyReport& report) {
  json j;
  j["n"] = report.n;
  j["q"] = report.q;
  j["E_Cq"] = report.E_Cq;
  j["E_C"] = report.E_C;
  j["equal_loss"] = report.equal_loss;
  j["proportional_to_C"] = report.proportional_to_C;
  j["odd_orbit_max_change"] = report.odd_orbit_max_change;
  j["even_orbit_scale_check"] = report.even_orbit_scale_check;
  j["q_admissible"] = {report.q_interval.lo, report.q_interval.hi};
  return j;
}

json optimization_to_json(const OptimizationResult& result) {
  json j;
  j["best_E"] = result.best_E;
  j["gap_to_theory"] = result.gap_to_theory;
  j["iterations"] = result.iterations;
  j["best_matrix"] = matrix_to_json(to_matrix(result.best_param));
  j["best_theta"] = result.best_param.theta;
  j["best_radius"] = result.best_param.radius;
  json restarts = json::array();
  for (const RestartSummary& r : result.restarts) {
    restarts.push_back({{"index", r.index},
                        {"E", r.E},
                        {"iterations", r.iterations},
                        {"converged", r.converged}});
  }
  j["restarts"] = std::move(restarts);
  return j;
}

void write_geomeans_csv(std::ostream& os, const GeoMeans& G) {
  os << std::setprecision(17);
  os << "k,D_k,a_k\n";
  for (int k = 1; k <= G.n - 1; ++k) {
    os << k << "," << G.D_at(k) << ",";
    if (!G.a.empty()) {
      os << G.a[static_cast<std::size_t>(k - 1)];
    }
    os << "\n";
  }
}

void write_slacks_csv(std::ostream& os, const std::vector<SlackEntry>& slacks) {
  os << std::setprecision(17);
  os << "j,k,l,slack\n";
  for (const SlackEntry& e : slacks) {
    os << e.j << "," << e.k << "," << e.l << "," << e.slack << "\n";
  }
}

void write_plateau_csv(std::ostream& os,
                       const std::vector<std::pair<double, double>>& rows) {
  os << std::setprecision(17);
  os << "q,E\n";
  for (const auto& [q, e] : rows) {
    os << q << "," << e << "\n";
  }
}

}  // namespace grmin
