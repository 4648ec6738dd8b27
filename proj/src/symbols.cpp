#include "toespec/symbols.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace toespec {

std::vector<SpherePoint> SphereContext::sample_points(int count, unsigned seed) const {
  std::mt19937 gen(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<SpherePoint> pts;
  pts.reserve(static_cast<size_t>(count) + 4 * static_cast<size_t>(n));
  // canonical axis points first; coefficients with symmetry zeros vanish here
  for (int j = 0; j < n; ++j)
    for (const std::complex<double>& phase :
         {std::complex<double>(1, 0), std::complex<double>(-1, 0), std::complex<double>(0, 1),
          std::complex<double>(0, -1)}) {
      SpherePoint x(static_cast<size_t>(n), 0.0);
      x[static_cast<size_t>(j)] = phase;
      pts.push_back(std::move(x));
    }
  for (int i = 0; i < count; ++i) {
    SpherePoint x(static_cast<size_t>(n));
    double norm2 = 0.0;
    for (int j = 0; j < n; ++j) {
      x[static_cast<size_t>(j)] = {gauss(gen), gauss(gen)};
      norm2 += std::norm(x[static_cast<size_t>(j)]);
    }
    double inv = 1.0 / std::sqrt(norm2);
    for (auto& z : x) z *= inv;
    pts.push_back(std::move(x));
  }
  return pts;
}

std::complex<double> GtoSymbol::eval(const SpherePoint& x, double xi_norm) const {
  return coeff(x) * std::pow(xi_norm, order);
}

GtoSymbol GtoSymbol::constant(double order, std::complex<double> c) {
  return GtoSymbol{order, [c](const SpherePoint&) { return c; }};
}

GtoSymbol identity_symbol() { return GtoSymbol::constant(0.0, 1.0); }

GtoSymbol mul(const GtoSymbol& a, const GtoSymbol& b) {
  auto ca = a.coeff, cb = b.coeff;
  return GtoSymbol{a.order + b.order,
                   [ca, cb](const SpherePoint& x) { return ca(x) * cb(x); }};
}

bool is_elliptic(const GtoSymbol& a, const SphereContext& ctx, int samples, double floor_value) {
  for (const SpherePoint& x : ctx.sample_points(samples))
    if (std::abs(a.coeff(x)) <= floor_value) return false;
  return true;
}

GtoSymbol parametrix(const GtoSymbol& a, const SphereContext& ctx) {
  if (!is_elliptic(a, ctx))
    throw std::invalid_argument("parametrix: symbol is not elliptic on the sample grid");
  auto c = a.coeff;
  return GtoSymbol{-a.order, [c](const SpherePoint& x) { return 1.0 / c(x); }};
}

GtoSymbol lambda_symbol(const RadialWeight& weight) {
  const double m = weight.exponent();
  const double gamma = std::tgamma(m + 1.0);
  // g_w on the sphere is the boundary value g_w(1); eta norm is 1
  const double gboundary = weight.g(1.0);
  return GtoSymbol::constant(-(m + 1.0), 0.5 * gamma * gboundary);
}

double lambda_symbol_integer_form_magnitude(int m) {
  if (m < 0) throw std::domain_error("lambda_symbol_integer_form_magnitude: m must be >= 0");
  // d_n^m (r^m) on the sphere = m! (d_n r)^m with |d_n r| = 2
  double dn_m_w = std::exp(log_factorial(m)) * std::pow(std::abs(SphereContext::normal_derivative_r),
                                                        static_cast<double>(m));
  return std::pow(2.0, -(m + 1.0)) * dn_m_w;
}

GtoSymbol lambda_P_symbol(const RadialWeight& weight, const FirstOrderData& p) {
  if (p.d < 0 || p.d > 1) throw std::invalid_argument("lambda_P_symbol: d must be 0 or 1");
  const double m = weight.exponent();
  const double j = static_cast<double>(p.jpow);
  const double order = p.d - (m + 1.0 + j);
  const double gamma = std::tgamma(m + 1.0 + j);
  const double sign = (p.d % 2 == 0) ? 1.0 : -1.0;
  const double eta_pow = std::pow(SphereContext::eta_norm, -p.d + m + j);
  auto gw = [weight](const SpherePoint&) { return weight.g(1.0); };
  if (p.d == 0) {
    auto a0 = p.a_scalar ? p.a_scalar
                         : [](const SpherePoint&) { return std::complex<double>(1.0); };
    return GtoSymbol{order, [=](const SpherePoint& x) {
                       return sign * 0.5 * gamma * eta_pow * gw(x) * a0(x);
                     }};
  }
  auto a_unit = p.a_unit;
  return GtoSymbol{order, [=](const SpherePoint& x) {
                     std::complex<double> sum = 0.0;
                     for (size_t k = 0; k < a_unit.size(); ++k)
                       sum += a_unit[k](x) * SphereContext::d_r(x, static_cast<int>(k));
                     return sign * 0.5 * gamma * eta_pow * gw(x) * sum;
                   }};
}

GtoSymbol weighted_normal_derivative_symbol() {
  return GtoSymbol::constant(1.0, -2.0 * SphereContext::eta_norm);
}

GtoSymbol dirac_component_symbol(int j, double t) {
  if (t <= 0.0) throw std::domain_error("dirac_component_symbol: t must be > 0");
  const double pref = std::pow(2.0, 0.75) * std::sqrt(0.5 * t) *
                      std::sqrt(SphereContext::eta_norm / SphereContext::minus_euler_r);
  return GtoSymbol{0.5, [pref, j](const SpherePoint& x) {
                     return std::complex<double>(pref * SphereContext::eta_component(x, j));
                   }};
}

GtoSymbol psi_Tf_symbol(int jvan,
                        const std::function<std::complex<double>(const SpherePoint&)>& dnj_f,
                        double m_w) {
  if (jvan < 0) throw std::invalid_argument("psi_Tf_symbol: vanishing order must be >= 0");
  const double pref = std::tgamma(m_w + jvan + 1.0) / std::tgamma(m_w + 1.0) *
                      std::pow(2.0, -jvan) / std::exp(log_factorial(jvan));
  return GtoSymbol{-static_cast<double>(jvan),
                   [pref, dnj_f](const SpherePoint& x) { return pref * dnj_f(x); }};
}

}  // namespace toespec
