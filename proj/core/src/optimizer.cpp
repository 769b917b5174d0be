#include "grmin/optimizer.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "grmin/extremal.hpp"
#include "grmin/plucker.hpp"
#include "grmin/rng.hpp"

namespace grmin {

namespace {

constexpr double kAngleGap = 1e-3;  // sampling margin and minimal gap
constexpr double kZClamp = 30.0;    // keeps exp() comfortably finite

double clamped_exp(double z) {
  return std::exp(std::clamp(z, -kZClamp, kZClamp));
}

/// Free vector layout: n+1 log-increments defining the angles, then n log
/// radii. Angles come out of normalized positive increments, so they are
/// strictly increasing inside (0, pi) for every z.
struct Chart {
  int n;

  std::size_t dim() const { return 2 * static_cast<std::size_t>(n) + 1; }

  AngleRadiusParam to_param(const std::vector<double>& z) const {
    const std::size_t un = static_cast<std::size_t>(n);
    std::vector<double> g(un + 1);
    for (std::size_t i = 0; i <= un; ++i) g[i] = clamped_exp(z[i]);
    const double total = std::accumulate(g.begin(), g.end(), 0.0);
    AngleRadiusParam p;
    p.theta.resize(un);
    p.radius.resize(un);
    double cum = 0.0;
    for (std::size_t i = 0; i < un; ++i) {
      cum += g[i];
      p.theta[i] = M_PI * cum / total;
    }
    for (std::size_t i = 0; i < un; ++i) {
      p.radius[i] = clamped_exp(z[un + 1 + i]);
    }
    return p;
  }

  std::vector<double> from_param(const AngleRadiusParam& p) const {
    std::vector<double> z(dim());
    double prev = 0.0;
    for (int i = 0; i < n; ++i) {
      z[static_cast<std::size_t>(i)] =
          std::log(p.theta[static_cast<std::size_t>(i)] - prev);
      prev = p.theta[static_cast<std::size_t>(i)];
    }
    z[static_cast<std::size_t>(n)] = std::log(M_PI - prev);
    for (int i = 0; i < n; ++i) {
      z[static_cast<std::size_t>(n + 1 + i)] =
          std::log(p.radius[static_cast<std::size_t>(i)]);
    }
    return z;
  }

  /// tau = 0: the exact objective log(max minor) - log(min minor).
  /// tau > 0: its log-sum-exp smoothing, used by the continuation stages
  /// (the raw minimax surface stalls simplex search in higher dimensions).
  /// +inf if a minor degenerates.
  double objective(const std::vector<double>& z, double tau) const {
    const AngleRadiusParam p = to_param(z);
    std::vector<double> logs;
    logs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const double m = p.radius[static_cast<std::size_t>(i)] *
                         p.radius[static_cast<std::size_t>(j)] *
                         std::sin(p.theta[static_cast<std::size_t>(j)] -
                                  p.theta[static_cast<std::size_t>(i)]);
        if (!(m > 0.0)) return std::numeric_limits<double>::infinity();
        logs.push_back(std::log(m));
      }
    }
    const double max_l = *std::max_element(logs.begin(), logs.end());
    const double min_l = *std::min_element(logs.begin(), logs.end());
    if (tau == 0.0) return max_l - min_l;
    double soft_max = 0.0;
    double soft_min = 0.0;
    for (double l : logs) {
      soft_max += std::exp((l - max_l) / tau);
      soft_min += std::exp((min_l - l) / tau);
    }
    return (max_l + tau * std::log(soft_max)) -
           (min_l - tau * std::log(soft_min));
  }
};

struct NmOutcome {
  std::vector<double> z;
  double f = 0.0;
  int iterations = 0;
  bool converged = false;
};

NmOutcome nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                      const std::vector<double>& z0, double scale,
                      int max_iters, double spread_tol) {
  const std::size_t dim = z0.size();
  // Dimension-adaptive expansion/contraction/shrink coefficients.
  const double expand = 1.0 + 2.0 / static_cast<double>(dim);
  const double contract = 0.75 - 0.5 / static_cast<double>(dim);
  const double shrink = 1.0 - 1.0 / static_cast<double>(dim);
  std::vector<std::vector<double>> x(dim + 1, z0);
  std::vector<double> fx(dim + 1);
  for (std::size_t i = 0; i < dim; ++i) x[i + 1][i] += scale;
  for (std::size_t i = 0; i <= dim; ++i) fx[i] = f(x[i]);

  const auto order = [&] {
    std::vector<std::size_t> idx(dim + 1);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return fx[a] < fx[b]; });
    std::vector<std::vector<double>> xs(dim + 1);
    std::vector<double> fs(dim + 1);
    for (std::size_t i = 0; i <= dim; ++i) {
      xs[i] = std::move(x[idx[i]]);
      fs[i] = fx[idx[i]];
    }
    x = std::move(xs);
    fx = std::move(fs);
  };

  NmOutcome out;
  int iter = 0;
  for (; iter < max_iters; ++iter) {
    order();
    if (fx[dim] - fx[0] < spread_tol) {
      out.converged = true;
      break;
    }
    std::vector<double> centroid(dim, 0.0);
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t c = 0; c < dim; ++c) centroid[c] += x[i][c];
    }
    for (double& c : centroid) c /= static_cast<double>(dim);

    const auto blend = [&](double t) {
      std::vector<double> p(dim);
      for (std::size_t c = 0; c < dim; ++c) {
        p[c] = centroid[c] + t * (x[dim][c] - centroid[c]);
      }
      return p;
    };

    const std::vector<double> xr = blend(-1.0);
    const double fr = f(xr);
    if (fr < fx[0]) {
      const std::vector<double> xe = blend(-expand);
      const double fe = f(xe);
      if (fe < fr) {
        x[dim] = xe;
        fx[dim] = fe;
      } else {
        x[dim] = xr;
        fx[dim] = fr;
      }
      continue;
    }
    if (fr < fx[dim - 1]) {
      x[dim] = xr;
      fx[dim] = fr;
      continue;
    }
    if (fr < fx[dim]) {
      const std::vector<double> xc = blend(-contract);
      const double fc = f(xc);
      if (fc <= fr) {
        x[dim] = xc;
        fx[dim] = fc;
        continue;
      }
    } else {
      const std::vector<double> xc = blend(contract);
      const double fc = f(xc);
      if (fc < fx[dim]) {
        x[dim] = xc;
        fx[dim] = fc;
        continue;
      }
    }
    // Shrink towards the best vertex.
    for (std::size_t i = 1; i <= dim; ++i) {
      for (std::size_t c = 0; c < dim; ++c) {
        x[i][c] = x[0][c] + shrink * (x[i][c] - x[0][c]);
      }
      fx[i] = f(x[i]);
    }
  }
  order();
  out.z = x[0];
  out.f = fx[0];
  out.iterations = iter;
  return out;
}

}  // namespace

void AngleRadiusParam::validate() const {
  if (theta.size() < 3 || theta.size() != radius.size()) {
    throw std::invalid_argument(
        "AngleRadiusParam: need n >= 3 matching angles and radii");
  }
  double prev = 0.0;
  for (double t : theta) {
    if (!(t > prev && t < M_PI)) {
      throw std::invalid_argument(
          "AngleRadiusParam: angles must be strictly increasing in (0, pi)");
    }
    prev = t;
  }
  for (double r : radius) {
    if (!(r > 0.0)) {
      throw std::invalid_argument("AngleRadiusParam: radii must be positive");
    }
  }
}

PointMatrix to_matrix(const AngleRadiusParam& p) {
  p.validate();
  std::vector<PointMatrix::Column> cols;
  cols.reserve(p.theta.size());
  for (std::size_t i = 0; i < p.theta.size(); ++i) {
    cols.push_back(
        {p.radius[i] * std::cos(p.theta[i]), p.radius[i] * std::sin(p.theta[i])});
  }
  return PointMatrix(std::move(cols));
}

AngleRadiusParam cyclic_param(int n) {
  if (n < 3) {
    throw std::invalid_argument("cyclic_param: need n >= 3");
  }
  AngleRadiusParam p;
  const double shift = M_PI / (2 * n);
  for (int i = 0; i < n; ++i) {
    p.theta.push_back(i * M_PI / n + shift);
    p.radius.push_back(1.0);
  }
  return p;
}

AngleRadiusParam sample_positive(int n, std::uint64_t seed) {
  if (n < 3) {
    throw std::invalid_argument("sample_positive: need n >= 3");
  }
  const double span = M_PI - (n + 1) * kAngleGap;
  if (!(span > 0.0)) {
    throw std::invalid_argument("sample_positive: n too large for the angle gap");
  }
  Rng rng(seed);
  std::vector<double> u(static_cast<std::size_t>(n));
  for (double& v : u) v = rng.uniform();
  std::sort(u.begin(), u.end());
  AngleRadiusParam p;
  p.theta.reserve(u.size());
  p.radius.reserve(u.size());
  for (int i = 0; i < n; ++i) {
    p.theta.push_back((i + 1) * kAngleGap + u[static_cast<std::size_t>(i)] * span);
  }
  for (int i = 0; i < n; ++i) {
    p.radius.push_back(std::exp(rng.uniform(-1.0, 1.0)));
  }
  return p;
}

OptimizationResult minimize(const OptimizerConfig& cfg,
                            const AngleRadiusParam* initial) {
  if (cfg.n < 3 || cfg.restarts < 1 || cfg.max_iters < 3 ||
      !(cfg.simplex_scale > 0.0) || !(cfg.spread_tol > 0.0)) {
    throw std::invalid_argument("minimize: invalid configuration");
  }
  const Chart chart{cfg.n};

  // Continuation schedule: smoothed stages guide the simplex into the
  // right active-set region, the exact stages polish. Scales are relative
  // to cfg.simplex_scale.
  struct Stage {
    double tau;
    double scale;
  };
  const std::array<Stage, 5> stages{{{0.5, 1.0},
                                     {0.05, 0.4},
                                     {0.005, 0.1},
                                     {0.0, 0.04},
                                     {0.0, 0.004}}};

  OptimizationResult result;
  std::vector<double> best_z;
  double best_f = std::numeric_limits<double>::infinity();

  for (int r = 0; r < cfg.restarts; ++r) {
    std::vector<double> z(chart.dim());
    if (r == 0 && initial != nullptr) {
      initial->validate();
      z = chart.from_param(*initial);
    } else {
      Rng rng(split_seed(cfg.seed, static_cast<std::uint64_t>(r)));
      for (double& v : z) v = rng.uniform(-1.0, 1.0);
    }

    RestartSummary summary;
    summary.index = r;
    const int stage_iters =
        std::max(1, cfg.max_iters / static_cast<int>(stages.size()));
    std::vector<double> z_best = z;
    double f_cur = chart.objective(z, 0.0);
    for (const Stage& stage : stages) {
      const auto objective = [&chart, &stage](const std::vector<double>& p) {
        return chart.objective(p, stage.tau);
      };
      NmOutcome nm = nelder_mead(objective, z, cfg.simplex_scale * stage.scale,
                                 stage_iters, cfg.spread_tol);
      summary.iterations += nm.iterations;
      summary.converged = nm.converged;
      z = std::move(nm.z);
      const double f_exact = chart.objective(z, 0.0);
      if (f_exact < f_cur) {
        f_cur = f_exact;
        z_best = z;
      }
    }
    summary.E = std::exp(f_cur);
    result.restarts.push_back(summary);
    result.iterations += summary.iterations;
    if (f_cur < best_f) {
      best_f = f_cur;
      best_z = z_best;
    }
  }

  if (!std::isfinite(best_f)) {
    throw std::runtime_error("minimize: no restart produced a finite objective");
  }
  result.best_param = chart.to_param(best_z);
  result.best_E = plucker_ratio(minors(to_matrix(result.best_param)));
  result.gap_to_theory = result.best_E - SineTable(cfg.n).optimal_ratio();
  return result;
}

}  // namespace grmin
