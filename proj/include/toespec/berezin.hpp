#pragma once

#include <functional>
#include <vector>

#include "toespec/operators.hpp"
#include "toespec/spectral.hpp"

namespace toespec {

// Eigenvalue table of radial tower Toeplitz operators: value(m, k) is the
// degree-k eigenvalue of T_f on the weighted level A^2(B^n, r^m).
struct TowerTable {
  int n = 0;
  std::vector<int> levels;  // the m values
  int k_max = 0;
  std::vector<std::vector<double>> values;  // [level][k]

  double value(int level_index, int k) const {
    return values.at(static_cast<size_t>(level_index)).at(static_cast<size_t>(k));
  }
};

TowerTable tower_eigenvalues(const std::function<double(double)>& f, int n,
                             const std::vector<int>& levels, int k_max, double tol = 1e-10);
TowerTable tower_eigenvalues(const RadialPoly& f, int n, const std::vector<int>& levels,
                             int k_max);

struct SupNormRow {
  int m = 0;
  double norm = 0.0;
  double deviation = 0.0;  // |norm - sup|f||
  bool max_at_kmax = false;
};

struct SupNormReport {
  std::vector<SupNormRow> rows;
  double sup_f = 0.0;
  double fitted_rate = 0.0;  // log-log slope of deviation against m (when it decays)
  bool tail_limited = false;
};

// ||pi_m T_f pi_m|| = max_k |eigenvalue(m,k)| over k <= k_max; convergence to
// sup |f| with a fitted rate. Rows whose maximum sits at k_max are flagged.
SupNormReport sup_norm_limit(const std::function<double(double)>& f, int n,
                             const std::vector<int>& levels, int k_max, double tol = 1e-10);
SupNormReport sup_norm_limit(const RadialPoly& f, int n, const std::vector<int>& levels,
                             int k_max);

struct StarSeriesRow {
  int m = 0;
  double norm_e = 0.0;  // || pi_m (T_f T_g - T_fg) pi_m ||
};

struct StarSeries {
  std::vector<StarSeriesRow> rows;
  double fitted_exponent = 0.0;   // decay exponent of ||E(m)|| against m
  double fitted_constant = 0.0;   // c in ||E(m)|| ~ c m^-p
  // Richardson-extrapolated limit of (m+n+1) E(m,k) per degree k <= report_k;
  // exploratory output for the first star-product correction.
  std::vector<double> c1_estimates;
};

// Semiclassical remainder per level for radial f, g (all operators are
// simultaneously diagonal). k_max must be large enough that the sup over k
// is attained in range; levels should span at least a decade for the fit.
StarSeries expansion_check(const RadialPoly& f, const RadialPoly& g, int n,
                           const std::vector<int>& levels, int k_max, int report_k = 8);

// Diagonal of the number operator: m + n + 1 per level.
std::vector<double> number_operator(const std::vector<int>& levels, int n);

// |r^{n+1} det g_{jk}| for the ball Kahler potential log 1/r, evaluated
// numerically from the matrix; constant 1 on the ball.
double metric_factor_modulus(int n, double rho);

// Stand-in for the disc-bundle tower operator: level-plus-degree growth with
// ball multiplicities, combined over all levels; spectral dimension n+1.
SpectrumStream disc_bundle_model_stream(int n);

}  // namespace toespec
