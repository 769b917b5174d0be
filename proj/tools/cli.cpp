#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "grmin/json_io.hpp"
#include "grmin/rng.hpp"
#include "grmin/version.hpp"

namespace grmin::cli {

namespace {

struct Options {
  int n = 5;
  std::uint64_t seed = 0;
  int restarts = 20;
  double tol_rel = 1e-9;
  double tol_abs = 1e-12;
  double q = 1.02;
  std::string matrix = "cyclic";
  std::string matrix_file;
  std::string outer_file;
  std::string out;
  std::string csv;
};

struct Outcome {
  json report;
  bool passed = false;
};

Tolerance tolerance(const Options& opt) { return {opt.tol_rel, opt.tol_abs}; }

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open file '" + path + "'");
  }
  json j;
  in >> j;
  return j;
}

PointMatrix resolve_matrix(const Options& opt) {
  if (!opt.matrix_file.empty()) {
    return matrix_from_json(load_json_file(opt.matrix_file));
  }
  if (opt.matrix == "cyclic") {
    return cyclic_matrix(opt.n);
  }
  if (opt.matrix == "random") {
    return to_matrix(sample_positive(opt.n, opt.seed));
  }
  return matrix_from_json(load_json_file(opt.matrix));
}

void write_text_file(const std::string& path, const std::string& text) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) {
      throw std::runtime_error("cannot write '" + tmp.string() + "'");
    }
    out << text;
  }
  fs::rename(tmp, target);
}

void write_csv(const std::string& path,
               const std::function<void(std::ostream&)>& writer) {
  std::ostringstream buffer;
  writer(buffer);
  write_text_file(path, buffer.str());
}

std::string fnv1a_hex(const std::string& text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

Outcome cmd_certify(const Options& opt) {
  const PointMatrix X = resolve_matrix(opt);
  const CertificateReport report = certify_point(X, tolerance(opt));
  if (!opt.csv.empty()) {
    const GeoMeans G = geometric_means(normalized(minors(X)));
    write_csv(opt.csv, [&](std::ostream& os) {
      write_slacks_csv(os, geomean_slacks(G));
    });
  }
  return {certificate_to_json(report), report.passed};
}

Outcome cmd_minimize(const Options& opt) {
  OptimizerConfig cfg;
  cfg.n = opt.n;
  cfg.restarts = opt.restarts;
  cfg.seed = opt.seed;
  const OptimizationResult result = minimize(cfg);
  const double optimum = optimal_loss(opt.n);
  const bool passed =
      result.gap_to_theory >= -(opt.tol_abs + opt.tol_rel * optimum);
  return {optimization_to_json(result), passed};
}

Outcome cmd_reconstruct(const Options& opt) {
  const Tolerance tol = tolerance(opt);
  json report;
  bool passed = false;
  if (!opt.outer_file.empty()) {
    const OuterOrbitData data = outer_from_json(load_json_file(opt.outer_file));
    const PointMatrix Y = reconstruct(data, tol);
    const PluckerVector Q = minors(Y);
    double max_rel = 0.0;
    for (const auto& [pair, v] : data.values()) {
      max_rel = std::max(max_rel,
                         std::abs(Q.at(pair.first, pair.second) - v) / v);
    }
    report["n"] = data.n();
    report["matrix"] = matrix_to_json(Y);
    report["outer_max_rel_error"] = max_rel;
    passed = max_rel <= tol.rel;
  } else {
    const PointMatrix X = resolve_matrix(opt);
    const PluckerVector P = minors(X);
    const OuterOrbitData data = extract_outer_orbits(P);
    const PointMatrix Y = reconstruct(data, tol);
    passed = proportional(P, minors(Y), tol);
    report["n"] = data.n();
    report["outer"] = outer_to_json(data);
    report["matrix"] = matrix_to_json(Y);
    report["roundtrip_proportional"] = passed;
  }
  return {std::move(report), passed};
}

Outcome cmd_qfamily(const Options& opt) {
  const QFamilyReport report = verify_nonuniqueness(opt.n, opt.q);
  if (!opt.csv.empty()) {
    // Plateau sweep a little past both interval endpoints.
    std::vector<std::pair<double, double>> rows;
    const double lo = report.q_interval.lo * 0.98;
    const double hi = report.q_interval.hi * 1.02;
    const int steps = 100;
    for (int s = 0; s <= steps; ++s) {
      const double q = lo + (hi - lo) * s / steps;
      rows.emplace_back(q,
                        plucker_ratio(minors(q_transform(cyclic_matrix(opt.n), q))));
    }
    write_csv(opt.csv,
              [&](std::ostream& os) { write_plateau_csv(os, rows); });
  }
  bool passed = report.even_orbit_scale_check &&
                report.odd_orbit_max_change <= 1e-12;
  if (report.q_interval.contains(opt.q)) {
    passed = passed && report.equal_loss;
  }
  if (opt.q != 1.0) {
    passed = passed && !report.proportional_to_C;
  } else {
    passed = passed && report.proportional_to_C;
  }
  return {qfamily_to_json(report), passed};
}

Outcome cmd_breduce(const Options& opt) {
  const Tolerance tol = tolerance(opt);
  const PointMatrix X = resolve_matrix(opt);
  const PointMatrix Y = positive_reduction(X);
  const PluckerVector PX = minors(X);
  const PluckerVector QY = minors(Y);

  std::vector<double> abs_in;
  for (double v : PX.entries()) abs_in.push_back(std::abs(v));
  std::vector<double> out_vals(QY.entries());
  std::sort(abs_in.begin(), abs_in.end());
  std::sort(out_vals.begin(), out_vals.end());
  double max_diff = 0.0;
  for (std::size_t e = 0; e < abs_in.size(); ++e) {
    max_diff = std::max(max_diff, std::abs(abs_in[e] - out_vals[e]));
  }
  const bool positive = is_positive(QY, tol);
  const bool multiset_match = max_diff <= tol.abs + tol.rel;

  json report;
  report["n"] = X.n();
  report["input"] = matrix_to_json(X);
  report["output"] = matrix_to_json(Y);
  report["minors_positive"] = positive;
  report["multiset_match"] = multiset_match;
  report["multiset_max_diff"] = max_diff;
  report["B_value"] = abs_minor_ratio(X);
  report["E_value"] = plucker_ratio(QY, tol);
  return {std::move(report), positive && multiset_match};
}

Outcome cmd_orbits(const Options& opt) {
  const OrbitTable& table = shared_orbit_table(opt.n);
  json report = orbit_table_to_json(table);
  const PointMatrix X = resolve_matrix(opt);
  GeoMeans G = geometric_means(normalized(minors(X)));
  G.a = normalized_logs(G, tolerance(opt));
  report["D"] = G.D;
  report["a"] = G.a;
  if (!opt.csv.empty()) {
    write_csv(opt.csv, [&](std::ostream& os) { write_geomeans_csv(os, G); });
  }
  return {std::move(report), true};
}

Outcome cmd_relations(const Options& opt) {
  const Tolerance tol = tolerance(opt);
  const PointMatrix X = resolve_matrix(opt);
  const PluckerVector P = minors(X);
  const int n = P.n();

  double max_rel = 0.0;
  long relations = 0;
  for (int i = 1; i <= n - 3; ++i) {
    for (int j = i + 1; j <= n - 2; ++j) {
      for (int k = j + 1; k <= n - 1; ++k) {
        for (int l = k + 1; l <= n; ++l) {
          const std::array<int, 4> quad{i, j, k, l};
          for (int m = 0; m < n; ++m) {
            const double scale = shifted_relation_scale(P, quad, m);
            if (scale > 0.0) {
              max_rel = std::max(
                  max_rel,
                  std::abs(shifted_relation_residual(P, quad, m)) / scale);
            }
            ++relations;
          }
        }
      }
    }
  }

  const int triples = 1000;
  double max_uvw = 0.0;
  Rng rng(split_seed(opt.seed, 0x757677));
  for (int t = 0; t < triples; ++t) {
    PointMatrix::Column u{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    PointMatrix::Column v{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    PointMatrix::Column w{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    max_uvw = std::max(max_uvw, uvw_residual(u, v, w));
  }

  json report;
  report["n"] = n;
  report["relations_checked"] = relations;
  report["relation_max_rel_residual"] = max_rel;
  report["uvw_triples_checked"] = triples;
  report["uvw_max_residual"] = max_uvw;
  const bool passed = max_rel <= tol.rel && max_uvw <= tol.rel;
  return {std::move(report), passed};
}

json config_echo(const std::string& name, const Options& opt) {
  json cfg;
  cfg["n"] = opt.n;
  cfg["seed"] = opt.seed;
  cfg["tol_rel"] = opt.tol_rel;
  cfg["tol_abs"] = opt.tol_abs;
  cfg["matrix"] = opt.matrix;
  cfg["matrix_file"] = opt.matrix_file;
  if (name == "minimize") cfg["restarts"] = opt.restarts;
  if (name == "qfamily") cfg["q"] = opt.q;
  if (name == "reconstruct") cfg["outer_file"] = opt.outer_file;
  cfg["out"] = opt.out;
  cfg["csv"] = opt.csv;
  return cfg;
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{"Plucker coordinate and minor-ratio toolkit for Gr>0(2,n)"};
  app.require_subcommand(1);

  Options opt;
  const auto add_common = [&](CLI::App* sub, bool with_matrix) {
    sub->add_option("--n", opt.n, "number of columns n (>= 3)");
    sub->add_option("--seed", opt.seed, "seed for all randomness");
    sub->add_option("--tol-rel", opt.tol_rel, "relative tolerance");
    sub->add_option("--tol-abs", opt.tol_abs, "absolute tolerance");
    sub->add_option("--out", opt.out, "report path (default: stdout)");
    sub->add_option("--csv", opt.csv, "auxiliary CSV path");
    if (with_matrix) {
      sub->add_option("--matrix", opt.matrix,
                      "matrix source: cyclic | random | file path");
      sub->add_option("--matrix-file", opt.matrix_file,
                      "matrix file (overrides --matrix)");
    }
  };

  add_common(app.add_subcommand(
                 "certify", "run the full inequality certificate on a point"),
             true);
  auto* minimize_cmd = app.add_subcommand(
      "minimize", "search for the minimal coordinate ratio");
  add_common(minimize_cmd, false);
  minimize_cmd->add_option("--restarts", opt.restarts, "optimizer restarts");
  auto* reconstruct_cmd = app.add_subcommand(
      "reconstruct", "rebuild a point from its outer-orbit coordinates (odd n)");
  add_common(reconstruct_cmd, true);
  reconstruct_cmd->add_option("--outer-file", opt.outer_file,
                              "outer-orbit data file (instead of a matrix)");
  auto* qfamily_cmd = app.add_subcommand(
      "qfamily", "check the non-uniqueness family C^q (n mod 4 = 2)");
  add_common(qfamily_cmd, false);
  qfamily_cmd->add_option("--q", opt.q, "column scaling parameter q > 0");
  add_common(app.add_subcommand(
                 "breduce", "flip and sort columns into the positive chart"),
             true);
  add_common(app.add_subcommand("orbits",
                                "orbit table and geometric means for one n"),
             true);
  add_common(app.add_subcommand(
                 "relations", "residuals of the quadratic and vector identities"),
             true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  const auto started = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    if (name == "certify") outcome = cmd_certify(opt);
    else if (name == "minimize") outcome = cmd_minimize(opt);
    else if (name == "reconstruct") outcome = cmd_reconstruct(opt);
    else if (name == "qfamily") outcome = cmd_qfamily(opt);
    else if (name == "breduce") outcome = cmd_breduce(opt);
    else if (name == "orbits") outcome = cmd_orbits(opt);
    else outcome = cmd_relations(opt);
  } catch (const std::exception& e) {
    std::cerr << "grmin " << name << ": " << e.what() << "\n";
    return 2;
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
          .count();

  json manifest;
  manifest["tool"] = "grmin";
  manifest["version"] = kVersion;
  manifest["subcommand"] = name;
  manifest["config"] = config_echo(name, opt);
  manifest["wall_time_s"] = elapsed;
  manifest["result_digest"] = fnv1a_hex(outcome.report.dump());

  json doc;
  doc["manifest"] = std::move(manifest);
  doc["report"] = std::move(outcome.report);
  doc["passed"] = outcome.passed;

  try {
    if (opt.out.empty()) {
      std::cout << doc.dump(2) << "\n";
    } else {
      write_text_file(opt.out, doc.dump(2) + "\n");
    }
  } catch (const std::exception& e) {
    std::cerr << "grmin " << name << ": " << e.what() << "\n";
    return 2;
  }
  return outcome.passed ? 0 : 1;
}

int run(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("grmin");
  for (const std::string& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data());
}

}  // namespace grmin::cli
