#pragma once

#include <deque>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "toespec/multiindex.hpp"

namespace toespec {

// Radial weight w(rho) = r(rho)^m * g(rho) on the closed unit ball, with the
// defining function fixed to r(rho) = 1 - rho^2. Requires m > -1 and g > 0.
class RadialWeight {
 public:
  // Pure power weight w = r^m.
  static RadialWeight power(double m);
  // General radial weight r^m * g(rho).
  RadialWeight(double m, std::function<double(double)> g);

  double exponent() const { return m_; }
  bool is_power() const { return is_power_; }
  double g(double rho) const { return g_ ? g_(rho) : 1.0; }
  double operator()(double rho) const;  // w(rho)

  static double defining_function(double rho) { return 1.0 - rho * rho; }

 private:
  RadialWeight() = default;
  double m_ = 0.0;
  bool is_power_ = true;
  std::function<double(double)> g_;
};

struct QuadratureError : std::runtime_error {
  QuadratureError(const std::string& what, double partial_value, double error_estimate)
      : std::runtime_error(what), partial(partial_value), estimate(error_estimate) {}
  double partial;
  double estimate;
};

// Adaptive Gauss-Legendre integration of f over [0,1] to estimated error
// <= max(tol, tol*|I|). Throws QuadratureError (carrying the partial value)
// when the panel budget is exhausted.
double quadrature_radial(const std::function<double(double)>& f, double tol = 1e-12,
                         int max_panels = 1 << 14);

// Lebesgue volume of the unit ball in C^n, computed through the polar-form
// radial integral (cached per n).
double ball_volume(int n);

// b_alpha = [ \int_{B^n} |z^alpha|^2 w dmu ]^{-1/2} via polar reduction.
double bergman_constant(const MultiIndex& alpha, const RadialWeight& weight,
                        double tol = 1e-12);
// Closed form for w = 1: ((|alpha|+n)! / (n! alpha! vol))^{1/2}.
double bergman_constant_unweighted(const MultiIndex& alpha);

// a_alpha = (t^{|alpha|} alpha!)^{-1/2}.
double fock_constant(const MultiIndex& alpha, double t);

// Real polynomial, coefficients in increasing powers of x.
class Polynomial {
 public:
  Polynomial() : c_{0.0} {}
  explicit Polynomial(std::vector<double> c) : c_(std::move(c)) {}
  static Polynomial constant(double v) { return Polynomial({v}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<double>& coefficients() const { return c_; }
  double operator()(double x) const;

  Polynomial times_x() const;
  Polynomial derivative() const;
  Polynomial scaled(double s) const;
  Polynomial plus(const Polynomial& other) const;

 private:
  std::vector<double> c_;
};

// One Hermite function h_k in a single variable, stored exactly as
// p(x) * exp(-x^2 / 2t). The polynomial factor carries the normalization.
struct HermiteFunction1D {
  Polynomial p;
  double t = 1.0;
  double operator()(double x) const;
};

// Generates h_alpha on demand through the raising recurrence
//   h_{k+1} = (t(k+1))^{-1/2} * 2^{-1/2} (x - t d/dx) h_k,
// starting from h_0 = (pi t)^{-1/4} exp(-x^2/2t) per variable. Safe for
// concurrent reads; the cache grows under a lock and hands out stable
// references.
class HermiteBasis {
 public:
  HermiteBasis(int n, double t);

  int complex_dimension() const { return n_; }
  double parameter() const { return t_; }

  const HermiteFunction1D& factor(int k) const;  // 1-d h_k, cached
  double eval(const MultiIndex& alpha, const std::vector<double>& x) const;

 private:
  int n_;
  double t_;
  mutable std::mutex mutex_;
  mutable std::deque<HermiteFunction1D> cache_;
};

double hermite_eval(const MultiIndex& alpha, double t, const std::vector<double>& x);

// Gauss-Hermite nodes and weights for \int f(y) e^{-y^2} dy (Golub-Welsch).
struct GaussHermiteRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussHermiteRule gauss_hermite(int node_count);

}  // namespace toespec
