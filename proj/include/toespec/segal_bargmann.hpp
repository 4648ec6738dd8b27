#pragma once

#include <complex>
#include <vector>

#include "toespec/bases.hpp"
#include "toespec/multiindex.hpp"

namespace toespec {

using Cx = std::complex<double>;

// Sum of separable terms (prod_j p_j(x_j)) * exp(-x^2/2t). Closed under
// multiplication by x_j and d/dx_j, which keeps the transform checks free
// of finite differences.
class GaussianPolynomial {
 public:
  using Term = std::vector<Polynomial>;  // one 1-d polynomial per coordinate

  GaussianPolynomial(int n, double t);  // zero function
  static GaussianPolynomial hermite(const MultiIndex& alpha, double t);

  int dimension() const { return n_; }
  double parameter() const { return t_; }
  const std::vector<Term>& terms() const { return terms_; }
  void add_term(Term term);

  GaussianPolynomial apply_multiply_x(int j) const;  // x_j .
  GaussianPolynomial apply_derivative(int j) const;  // d/dx_j
  GaussianPolynomial apply_raising(int j) const;     // (x_j - t d_j)/sqrt 2
  GaussianPolynomial apply_lowering(int j) const;    // (x_j + t d_j)/sqrt 2
  GaussianPolynomial apply_number() const;           // (1/2) sum_j (x_j^2 - t^2 d_j^2)
  GaussianPolynomial scaled(double s) const;
  GaussianPolynomial plus(const GaussianPolynomial& other) const;

  double operator()(const std::vector<double>& x) const;

 private:
  int n_;
  double t_;
  std::vector<Term> terms_;
};

// Numerical Segal-Bargmann transform with a fixed Gauss-Hermite table.
class SBTransform {
 public:
  SBTransform(int n, double t, int node_count = 64);

  int dimension() const { return n_; }
  double parameter() const { return t_; }
  int node_count() const { return static_cast<int>(rule_.nodes.size()); }

  // (W_t f)(z) by Gauss-Hermite quadrature.
  Cx forward(const GaussianPolynomial& f, const std::vector<Cx>& z) const;
  Cx forward_hermite(const MultiIndex& alpha, const std::vector<Cx>& z) const;

  // Taylor coefficients of the entire function W_t f, for every gamma in the
  // target enumeration, extracted by discrete Fourier sums on unit tori.
  std::vector<Cx> forward_coefficients(const GaussianPolynomial& f,
                                       const BasisEnumeration& target) const;

  // Coefficient transport u_alpha -> h_alpha evaluated at x.
  Cx inverse(const std::vector<Cx>& fock_coeffs, const BasisEnumeration& basis,
             const std::vector<double>& x) const;

  // Integral form of the inverse transform (quadrature over C^n), used as a
  // cross-check of the coefficient transport.
  Cx inverse_integral(const std::vector<Cx>& fock_coeffs, const BasisEnumeration& basis,
                      const std::vector<double>& x) const;

 private:
  int n_;
  double t_;
  GaussHermiteRule rule_;
  int torus_points_;
};

struct IntertwiningReport {
  double residual_x = 0.0;        // W x_j W^-1 = (z_j + t d_j)/sqrt 2
  double residual_d = 0.0;        // W d_j W^-1 = (-z_j + t d_j)/sqrt 2
  double residual_number = 0.0;   // nu_t(N) u_alpha = t(|alpha|+n/2) u_alpha
  double residual_raising = 0.0;  // W A_j^* = z_j W
  double max_residual() const;
};

IntertwiningReport intertwining_check(int n, double t, int max_degree, int node_count = 64);

// Max-abs residual of the Gram matrix <W h_a, W h_b>_F - delta over
// |a|,|b| <= max_degree; Fock pairings are analytic in the coefficients.
double sb_gram_residual(int n, double t, int max_degree, int node_count = 64);

// max over |alpha| <= max_degree of max_gamma |coeff_gamma(W h_alpha) - a_alpha delta|.
double sb_basis_mapping_error(int n, double t, int max_degree, int node_count = 64);

}  // namespace toespec
