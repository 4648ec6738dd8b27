#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "toespec/bases.hpp"

namespace toespec {

// Point on the unit sphere S^{2n-1} in C^n.
using SpherePoint = std::vector<std::complex<double>>;

// Geometry of the sphere with the defining function r = 1 - |z|^2 and the
// Euclidean Hermitian structure: ||eta|| = 1, ||dr|| = sqrt(2), d_k r = -conj(z_k),
// -R(r) = |z|^2 = 1.
struct SphereContext {
  int n = 1;
  static constexpr double eta_norm = 1.0;
  static constexpr double dr_norm_over_eta = 1.4142135623730951;  // sqrt 2
  static constexpr double normal_derivative_r = -2.0;             // d_n (1-rho^2) at rho=1
  static constexpr double minus_euler_r = 1.0;                    // -R(r) on the sphere

  static std::complex<double> d_r(const SpherePoint& x, int k) { return -std::conj(x[static_cast<size_t>(k)]); }
  static double eta_component(const SpherePoint& x, int j) { return -x[static_cast<size_t>(j)].imag(); }

  // deterministic sample grid used by ellipticity and property checks
  std::vector<SpherePoint> sample_points(int count, unsigned seed = 20240u) const;
};

// Principal symbol of a generalized Toeplitz operator restricted to the cone
// over the sphere: sigma(x', xi') = coeff(x') * ||xi'||^order.
struct GtoSymbol {
  double order = 0.0;
  std::function<std::complex<double>(const SpherePoint&)> coeff;

  std::complex<double> eval(const SpherePoint& x, double xi_norm) const;
  static GtoSymbol constant(double order, std::complex<double> c);
};

GtoSymbol identity_symbol();

// order adds, coefficients multiply
GtoSymbol mul(const GtoSymbol& a, const GtoSymbol& b);

bool is_elliptic(const GtoSymbol& a, const SphereContext& ctx, int samples = 64,
                 double floor_value = 1e-12);

// order negated, coefficient inverted; rejects non-elliptic input
GtoSymbol parametrix(const GtoSymbol& a, const SphereContext& ctx);

// sigma(Lambda_w) = (1/2) Gamma(m_w+1) g_w(x') ||eta||^{m_w} ||xi'||^{-(m_w+1)}.
GtoSymbol lambda_symbol(const RadialWeight& weight);
// Same coefficient through the integer-exponent normal-derivative form
// 2^{-(m+1)} d_n^m w(x') ||xi'||^{-(m+1)}; magnitudes agree for w = r^m.
double lambda_symbol_integer_form_magnitude(int m);

// First-order differential data sum_{|nu|<=d} a_nu r^jpow d^nu with d in {0,1}.
struct FirstOrderData {
  int d = 0;      // differential order
  int jpow = 0;   // power of r in the coefficient
  // coefficient closures on the sphere; a_unit[k] multiplies d_k (d = 1)
  std::function<std::complex<double>(const SpherePoint&)> a_scalar;  // d = 0
  std::vector<std::function<std::complex<double>(const SpherePoint&)>> a_unit;  // d = 1
};

// sigma(T_{Lambda_wP}) per the boundary-reduction formula; order d-(m_w+1+j).
GtoSymbol lambda_P_symbol(const RadialWeight& weight, const FirstOrderData& p);

// sigma of the boundary image of the weighted normal derivative operator at
// w = 1: order 1, coefficient -2 ||eta|| (constant -2 on the sphere).
GtoSymbol weighted_normal_derivative_symbol();

// sigma of the boundary image of tau_t(P_j): order 1/2, coefficient
// 2^{3/4} (t/2)^{1/2} eta_j(x') on the cone.
GtoSymbol dirac_component_symbol(int j, double t);

// sigma(psi(T_f)) for f vanishing to order jvan with normal derivative data
// d_n^j f on the sphere: (Gamma(m_w+j+1)/Gamma(m_w+1)) 2^{-j}/j! d_n^j f ||xi'||^{-j}.
GtoSymbol psi_Tf_symbol(int jvan, const std::function<std::complex<double>(const SpherePoint&)>& dnj_f,
                        double m_w);

}  // namespace toespec
