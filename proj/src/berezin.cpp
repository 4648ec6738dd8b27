#include "toespec/berezin.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

namespace toespec {

namespace {

void check_levels(const std::vector<int>& levels) {
  if (levels.empty()) throw std::invalid_argument("berezin: empty level range");
  for (int m : levels)
    if (m < 0) throw std::invalid_argument("berezin: level must be >= 0");
}

TowerTable build_table(int n, const std::vector<int>& levels, int k_max,
                       const std::function<double(int, int)>& eig) {
  TowerTable table;
  table.n = n;
  table.levels = levels;
  table.k_max = k_max;
  table.values.reserve(levels.size());
  for (int m : levels) {
    std::vector<double> row(static_cast<size_t>(k_max) + 1);
    for (int k = 0; k <= k_max; ++k) row[static_cast<size_t>(k)] = eig(m, k);
    table.values.push_back(std::move(row));
  }
  return table;
}

SupNormReport sup_report(const TowerTable& table, double sup_f) {
  SupNormReport report;
  report.sup_f = sup_f;
  std::vector<double> xs, ys;
  for (size_t i = 0; i < table.levels.size(); ++i) {
    SupNormRow row;
    row.m = table.levels[i];
    int argmax = 0;
    for (int k = 0; k <= table.k_max; ++k) {
      double v = std::abs(table.value(static_cast<int>(i), k));
      if (v > row.norm) {
        row.norm = v;
        argmax = k;
      }
    }
    row.deviation = std::abs(row.norm - sup_f);
    row.max_at_kmax = (argmax == table.k_max);
    report.tail_limited = report.tail_limited || row.max_at_kmax;
    if (row.deviation > 0.0 && row.m > 0) {
      xs.push_back(std::log(static_cast<double>(row.m)));
      ys.push_back(std::log(row.deviation));
    }
    report.rows.push_back(row);
  }
  if (xs.size() >= 2) report.fitted_rate = fit_line(xs, ys).slope;
  return report;
}

}  // namespace

TowerTable tower_eigenvalues(const std::function<double(double)>& f, int n,
                             const std::vector<int>& levels, int k_max, double tol) {
  check_levels(levels);
  return build_table(n, levels, k_max, [&](int m, int k) {
    return radial_eigenvalue_quadrature(f, RadialWeight::power(static_cast<double>(m)), n, k,
                                        tol);
  });
}

TowerTable tower_eigenvalues(const RadialPoly& f, int n, const std::vector<int>& levels,
                             int k_max) {
  check_levels(levels);
  return build_table(n, levels, k_max, [&](int m, int k) {
    return radial_eigenvalue_beta(f, static_cast<double>(m), n, k);
  });
}

namespace {

double sup_on_unit_interval(const std::function<double(double)>& f) {
  double sup = 0.0;
  for (int i = 0; i <= 2048; ++i) sup = std::max(sup, std::abs(f(i / 2048.0)));
  return sup;
}

}  // namespace

SupNormReport sup_norm_limit(const std::function<double(double)>& f, int n,
                             const std::vector<int>& levels, int k_max, double tol) {
  return sup_report(tower_eigenvalues(f, n, levels, k_max, tol), sup_on_unit_interval(f));
}

SupNormReport sup_norm_limit(const RadialPoly& f, int n, const std::vector<int>& levels,
                             int k_max) {
  return sup_report(tower_eigenvalues(f, n, levels, k_max),
                    sup_on_unit_interval([&f](double rho) { return f(rho); }));
}

StarSeries expansion_check(const RadialPoly& f, const RadialPoly& g, int n,
                           const std::vector<int>& levels, int k_max, int report_k) {
  check_levels(levels);
  const RadialPoly fg = f.times(g);
  StarSeries series;
  std::vector<double> xs, ys;
  // E(m,k) tabulated once; reused for the norm rows and the C1 extraction
  std::vector<std::vector<double>> e_rows;
  for (int m : levels) {
    std::vector<double> e(static_cast<size_t>(k_max) + 1);
    StarSeriesRow row;
    row.m = m;
    int argmax = 0;
    for (int k = 0; k <= k_max; ++k) {
      double lf = radial_eigenvalue_beta(f, m, n, k);
      double lg = radial_eigenvalue_beta(g, m, n, k);
      double lfg = radial_eigenvalue_beta(fg, m, n, k);
      e[static_cast<size_t>(k)] = lf * lg - lfg;
      double v = std::abs(e[static_cast<size_t>(k)]);
      if (v > row.norm_e) {
        row.norm_e = v;
        argmax = k;
      }
    }
    if (argmax == k_max && row.norm_e > 0.0)
      throw std::invalid_argument("expansion_check: k_max too small, sup attained at k_max");
    e_rows.push_back(std::move(e));
    if (row.norm_e > 0.0 && m > 0) {
      xs.push_back(std::log(static_cast<double>(m)));
      ys.push_back(std::log(row.norm_e));
    }
    series.rows.push_back(row);
  }
  if (xs.size() >= 3) {
    LineFit fit = fit_line(xs, ys);
    series.fitted_exponent = -fit.slope;
    series.fitted_constant = std::exp(fit.intercept);
  }
  // C1 data: limit of (m+n+1) E(m,k), Richardson extrapolation in 1/(m+n+1)
  // over the last three levels.
  if (levels.size() >= 3) {
    const size_t last = levels.size() - 1;
    for (int k = 0; k <= std::min(report_k, k_max); ++k) {
      double h[3], y[3];
      for (int q = 0; q < 3; ++q) {
        size_t idx = last - 2 + static_cast<size_t>(q);
        double scale = levels[idx] + n + 1.0;
        h[q] = 1.0 / scale;
        y[q] = scale * e_rows[idx][static_cast<size_t>(k)];
      }
      // quadratic extrapolation to h = 0
      double l0 = (h[1] * h[2]) / ((h[0] - h[1]) * (h[0] - h[2]));
      double l1 = (h[0] * h[2]) / ((h[1] - h[0]) * (h[1] - h[2]));
      double l2 = (h[0] * h[1]) / ((h[2] - h[0]) * (h[2] - h[1]));
      series.c1_estimates.push_back(y[0] * l0 + y[1] * l1 + y[2] * l2);
    }
  }
  return series;
}

std::vector<double> number_operator(const std::vector<int>& levels, int n) {
  check_levels(levels);
  std::vector<double> diag;
  diag.reserve(levels.size());
  for (int m : levels) diag.push_back(static_cast<double>(m + n + 1));
  return diag;
}

double metric_factor_modulus(int n, double rho) {
  if (rho < 0.0 || rho >= 1.0)
    throw std::domain_error("metric_factor_modulus: rho must be in [0,1)");
  // place z = (rho, 0, .., 0); g_jk = d_j dbar_k log(1/r) with r = 1 - |z|^2
  const double s = rho * rho;
  const double r = 1.0 - s;
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      double zj = (j == 0) ? rho : 0.0;
      double zk = (k == 0) ? rho : 0.0;
      g(j, k) = ((j == k) ? 1.0 / r : 0.0) + zj * zk / (r * r);
    }
  }
  return std::pow(r, n + 1) * std::abs(g.determinant());
}

SpectrumStream disc_bundle_model_stream(int n) {
  // combined (level m, degree k) stream: value 2(n+1+s) at s = m+k with
  // total multiplicity binomial(n+s, n)
  return SpectrumStream::analytic(
      [n](std::int64_t s) { return 2.0 * (n + 1 + s); },
      [n](std::int64_t s) { return binomial(static_cast<int>(s) + n, n); });
}

}  // namespace toespec
