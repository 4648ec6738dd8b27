#include "toespec/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace toespec {

SpectrumStream SpectrumStream::analytic(std::function<double(std::int64_t)> eigenvalue,
                                        std::function<std::int64_t(std::int64_t)> multiplicity) {
  SpectrumStream s;
  s.analytic_ = true;
  s.eig_ = std::move(eigenvalue);
  s.mult_ = std::move(multiplicity);
  return s;
}

SpectrumStream SpectrumStream::from_values(std::vector<double> sorted_values) {
  SpectrumStream s;
  std::sort(sorted_values.begin(), sorted_values.end(),
            [](double a, double b) { return std::abs(a) < std::abs(b); });
  // coalesce near-identical levels so multiplicities are visible
  const double tol = 1e-9;
  for (double v : sorted_values) {
    if (!s.values_.empty() && std::abs(std::abs(v) - s.values_.back()) <=
                                  tol * std::max(1.0, s.values_.back())) {
      s.mults_.back() += 1;
    } else {
      s.values_.push_back(std::abs(v));
      s.mults_.push_back(1);
    }
  }
  return s;
}

double SpectrumStream::value(std::int64_t k) const {
  if (analytic_) return std::abs(eig_(k));
  return values_.at(static_cast<size_t>(k));
}

std::int64_t SpectrumStream::multiplicity(std::int64_t k) const {
  if (analytic_) return mult_(k);
  return mults_.at(static_cast<size_t>(k));
}

std::int64_t SpectrumStream::level_count() const {
  if (analytic_) throw std::logic_error("SpectrumStream: analytic stream has no level count");
  return static_cast<std::int64_t>(values_.size());
}

SpectrumStream spectrum_of(const TruncatedOperator& op, double herm_tol) {
  double res = hermiticity_residual(op, true);
  if (res > herm_tol)
    throw std::invalid_argument("spectrum_of: operator not Hermitian on interior, residual " +
                                std::to_string(res));
  Matrix block = op.interior_block();
  Eigen::SelfAdjointEigenSolver<Matrix> es(block);
  if (es.info() != Eigen::Success) throw std::runtime_error("spectrum_of: eigensolver failed");
  std::vector<double> vals(es.eigenvalues().data(),
                           es.eigenvalues().data() + es.eigenvalues().size());
  return SpectrumStream::from_values(std::move(vals));
}

std::int64_t counting(const SpectrumStream& s, double lambda, std::int64_t level_cap) {
  if (lambda <= 0.0) throw std::domain_error("counting: lambda must be > 0");
  std::int64_t count = 0;
  std::int64_t levels = s.finite() ? s.level_count() : level_cap;
  for (std::int64_t k = 0; k < levels; ++k) {
    if (s.value(k) >= lambda) break;  // sorted by absolute value
    count += s.multiplicity(k);
  }
  return count;
}

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("fit_line: bad input");
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0) throw std::invalid_argument("fit_line: degenerate abscissae");
  LineFit fit;
  fit.slope = (n * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / n;
  for (size_t i = 0; i < x.size(); ++i)
    fit.residual = std::max(fit.residual, std::abs(fit.intercept + fit.slope * x[i] - y[i]));
  return fit;
}

WeylFit weyl_fit(const SpectrumStream& s, double lambda_lo, double lambda_hi, int samples,
                 std::int64_t level_cap) {
  if (!(lambda_hi > lambda_lo) || lambda_lo <= 0.0)
    throw std::invalid_argument("weyl_fit: degenerate range");
  if (samples < 20) throw std::invalid_argument("weyl_fit: need >= 20 samples");
  std::vector<double> lams(static_cast<size_t>(samples));
  for (int i = 0; i < samples; ++i)
    lams[static_cast<size_t>(i)] =
        lambda_lo * std::pow(lambda_hi / lambda_lo, static_cast<double>(i) / (samples - 1));
  // single ascending scan over levels
  std::vector<double> xs, ys;
  xs.reserve(lams.size());
  ys.reserve(lams.size());
  std::int64_t count = 0, k = 0;
  std::int64_t levels = s.finite() ? s.level_count() : level_cap;
  for (double lam : lams) {
    while (k < levels && s.value(k) < lam) {
      count += s.multiplicity(k);
      ++k;
    }
    if (count > 0) {
      xs.push_back(std::log(lam));
      ys.push_back(std::log(static_cast<double>(count)));
    }
  }
  if (xs.size() < 20) throw std::invalid_argument("weyl_fit: too few populated samples");
  LineFit lf = fit_line(xs, ys);
  WeylFit fit;
  fit.exponent = lf.slope;
  fit.prefactor = std::exp(lf.intercept);
  fit.residual = lf.residual;
  return fit;
}

double zeta_partial(const SpectrumStream& s, double sexp, std::int64_t N) {
  if (sexp <= 0.0) throw std::domain_error("zeta_partial: s must be > 0");
  double acc = 0.0;
  std::int64_t seen = 0, k = 0;
  std::int64_t levels = s.finite() ? s.level_count() : N;  // at most N levels needed
  while (seen < N && k < levels) {
    double v = s.value(k);
    if (v == 0.0) throw std::domain_error("zeta_partial: zero eigenvalue");
    std::int64_t m = std::min<std::int64_t>(s.multiplicity(k), N - seen);
    acc += static_cast<double>(m) * std::pow(v, -sexp);
    seen += m;
    ++k;
  }
  return acc;
}

double spectral_dimension(const SpectrumStream& s, std::int64_t levels) {
  std::int64_t top = s.finite() ? s.level_count() : levels;
  if (top < 4) throw std::invalid_argument("spectral_dimension: too few levels");
  double hi = s.value(top - 1);
  double lo = hi / 10.0;
  if (lo <= s.value(0)) lo = s.value(0) * 1.5;
  return weyl_fit(s, lo, hi, 40, top).exponent;
}

double dixmier_log_average(const SpectrumStream& s, double sexp, std::int64_t N) {
  return dixmier_log_average_weighted(s, [](std::int64_t) { return 1.0; }, sexp, N);
}

double dixmier_log_average_weighted(const SpectrumStream& s,
                                    const std::function<double(std::int64_t)>& a, double sexp,
                                    std::int64_t N) {
  if (N < 1000) throw std::invalid_argument("dixmier_log_average: N must be >= 1e3");
  // |lambda| ascending  =>  |lambda|^{-s} descending; stream in order
  double acc = 0.0;
  std::int64_t seen = 0, k = 0;
  std::int64_t levels = s.finite() ? s.level_count() : N;
  while (seen < N && k < levels) {
    double v = s.value(k);
    if (v == 0.0) throw std::domain_error("dixmier_log_average: zero eigenvalue");
    std::int64_t m = std::min<std::int64_t>(s.multiplicity(k), N - seen);
    acc += static_cast<double>(m) * a(k) * std::pow(v, -sexp);
    seen += m;
    ++k;
  }
  return acc / std::log(static_cast<double>(N));
}

double sphere_contact_volume(int n) {
  static std::map<int, double> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  // Stokes: the contact volume of S^{2n-1} equals 2^n n! mu(B^n).
  double v = std::pow(2.0, n) * std::exp(log_factorial(n)) * ball_volume(n);
  cache[n] = v;
  return v;
}

double dixmier_closed_form_ball(double symbol_order, double coefficient_at_eta, int n) {
  if (std::abs(symbol_order + static_cast<double>(n)) > 1e-12)
    throw std::invalid_argument("dixmier_closed_form_ball: symbol order must be -n");
  const double vol = sphere_contact_volume(n);
  const double two_pi_n = std::pow(2.0 * std::numbers::pi, n);
  return coefficient_at_eta * vol / (std::exp(log_factorial(n)) * two_pi_n);
}

}  // namespace toespec
