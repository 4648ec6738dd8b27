#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "toespec/operators.hpp"

namespace toespec {

// Eigenvalue stream sorted by nondecreasing absolute value, either from an
// analytic rule (eigenvalue(k), multiplicity(k)) or from an explicit
// diagonalization. Counting, zeta and Dixmier estimators consume it lazily.
class SpectrumStream {
 public:
  static SpectrumStream analytic(std::function<double(std::int64_t)> eigenvalue,
                                 std::function<std::int64_t(std::int64_t)> multiplicity);
  static SpectrumStream from_values(std::vector<double> sorted_values);

  // |eigenvalue| of the k-th distinct level (ascending).
  double value(std::int64_t k) const;
  std::int64_t multiplicity(std::int64_t k) const;
  bool finite() const { return !analytic_; }
  std::int64_t level_count() const;  // only for finite streams

  // pointwise transform |lambda| -> |lambda|^(-s) keeping multiplicities;
  // the result is sorted decreasing, exposed through dixmier helpers.
  // (streams stay immutable; estimators below do the transforming)

 private:
  SpectrumStream() = default;
  bool analytic_ = false;
  std::function<double(std::int64_t)> eig_;
  std::function<std::int64_t(std::int64_t)> mult_;
  std::vector<double> values_;
  std::vector<std::int64_t> mults_;
};

// Interior-block spectrum of a Hermitian truncated operator. Rejects inputs
// whose interior Hermiticity residual exceeds herm_tol.
SpectrumStream spectrum_of(const TruncatedOperator& op, double herm_tol = 1e-10);

// M(lambda) = #{ j : |lambda_j| < lambda }, counted with multiplicity; the
// scan is capped at level_cap levels for analytic streams.
std::int64_t counting(const SpectrumStream& s, double lambda, std::int64_t level_cap = 2000000);

struct WeylFit {
  double exponent = 0.0;
  double prefactor = 0.0;
  double residual = 0.0;  // max abs deviation of log M from the fit
};

// Least-squares fit of log M(lambda) against log lambda over log-spaced
// samples in [lambda_lo, lambda_hi].
WeylFit weyl_fit(const SpectrumStream& s, double lambda_lo, double lambda_hi, int samples = 40,
                 std::int64_t level_cap = 2000000);

// sum_{j <= N} |lambda_j|^{-s}, expanded with multiplicity.
double zeta_partial(const SpectrumStream& s, double sexp, std::int64_t N);

// Weyl slope over the top decade of the first `levels` levels.
double spectral_dimension(const SpectrumStream& s, std::int64_t levels = 100000);

// (1/log N) sum_{j<=N} mu_j with mu_j the eigenvalues of |D|^{-s} sorted
// decreasing, expanded with multiplicity.
double dixmier_log_average(const SpectrumStream& s, double sexp, std::int64_t N);

// Same logarithmic mean for the product a |D|^{-s}, where a is diagonal on
// the same levels with value a_k at level k.
double dixmier_log_average_weighted(const SpectrumStream& s,
                                    const std::function<double(std::int64_t)>& a, double sexp,
                                    std::int64_t N);

// \int_{S^{2n-1}} eta ^ (d eta)^{n-1} = 2^n n! mu(B^n), evaluated through the
// ball-volume quadrature and cached. Equals (2 pi)^n.
double sphere_contact_volume(int n);

// Closed-form Dixmier trace on the ball for a symbol of order -n with
// constant coefficient c: (1/(n! (2 pi)^n)) * c * contact volume = c/n!.
double dixmier_closed_form_ball(double symbol_order, double coefficient_at_eta, int n);

// least squares slope/intercept of y against x
struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;
};
LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace toespec
