#include "toespec/bases.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

namespace toespec {

RadialWeight RadialWeight::power(double m) {
  if (m <= -1.0) throw std::domain_error("RadialWeight: exponent must be > -1");
  RadialWeight w;
  w.m_ = m;
  w.is_power_ = true;
  return w;
}

RadialWeight::RadialWeight(double m, std::function<double(double)> g)
    : m_(m), is_power_(false), g_(std::move(g)) {
  if (m <= -1.0) throw std::domain_error("RadialWeight: exponent must be > -1");
  if (!g_) throw std::invalid_argument("RadialWeight: missing g factor");
}

double RadialWeight::operator()(double rho) const {
  double r = defining_function(rho);
  double v = (m_ == 0.0) ? 1.0 : std::pow(r, m_);
  return v * g(rho);
}

namespace {

// 15-point Gauss-Legendre rule on [-1,1]; nodes via Newton on P_15.
struct GaussLegendre15 {
  double x[15];
  double w[15];
  GaussLegendre15() {
    const int n = 15;
    for (int i = 0; i < n; ++i) {
      double xi = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = xi;
        for (int k = 2; k <= n; ++k) {
          double p2 = ((2.0 * k - 1.0) * xi * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        double dp = n * (xi * p1 - p0) / (xi * xi - 1.0);
        double dx = p1 / dp;
        xi -= dx;
        if (std::abs(dx) < 1e-16) break;
      }
      double p0 = 1.0, p1 = xi;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * xi * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      double dp = n * (xi * p1 - p0) / (xi * xi - 1.0);
      x[i] = xi;
      w[i] = 2.0 / ((1.0 - xi * xi) * dp * dp);
    }
  }
};

const GaussLegendre15& gl15() {
  static const GaussLegendre15 rule;
  return rule;
}

double gl15_panel(const std::function<double(double)>& f, double a, double b) {
  const auto& r = gl15();
  const double h = 0.5 * (b - a), m = 0.5 * (a + b);
  double s = 0.0;
  for (int i = 0; i < 15; ++i) s += r.w[i] * f(m + h * r.x[i]);
  return h * s;
}

struct Panel {
  double a, b, value;
};

}  // namespace

namespace {

// Bisect panels whose two-half refinement disagrees with the whole-panel
// value by more than its share of tol*scale.
double adaptive_gl(const std::function<double(double)>& f, double tol, double scale,
                   int max_panels) {
  std::vector<Panel> stack{{0.0, 1.0, gl15_panel(f, 0.0, 1.0)}};
  double done = 0.0, done_err = 0.0;
  int used = 1;
  while (!stack.empty()) {
    Panel p = stack.back();
    stack.pop_back();
    double m = 0.5 * (p.a + p.b);
    double left = gl15_panel(f, p.a, m);
    double right = gl15_panel(f, m, p.b);
    used += 2;
    double err = std::abs(left + right - p.value);
    if (err <= tol * scale * (p.b - p.a) || (p.b - p.a) < 1e-15) {
      done += left + right;
      done_err += err;
      continue;
    }
    if (used > max_panels) {
      double partial = done + left + right;
      for (const Panel& q : stack) partial += q.value;
      throw QuadratureError("quadrature_radial: panel budget exhausted", partial,
                            done_err + err);
    }
    stack.push_back({p.a, m, left});
    stack.push_back({m, p.b, right});
  }
  return done;
}

}  // namespace

double quadrature_radial(const std::function<double(double)>& f, double tol, int max_panels) {
  if (tol < 1e-14) throw std::invalid_argument("quadrature_radial: tol must be >= 1e-14");
  double crude = std::abs(gl15_panel(f, 0.0, 1.0));
  double value = adaptive_gl(f, tol, std::max(1.0, crude), max_panels);
  // second pass pins relative accuracy for integrals much smaller than 1
  // (sharply peaked high moments)
  double mag = std::abs(value);
  if (mag > 0.0 && mag < 0.5) value = adaptive_gl(f, tol, mag, max_panels);
  return value;
}

double ball_volume(int n) {
  if (n < 1) throw std::invalid_argument("ball_volume: n must be >= 1");
  static std::map<int, double> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  // mu(B^n) = surf(S^{2n-1}) * \int_0^1 t^{2n-1} dt, radial factor by quadrature.
  double surf = 2.0 * std::pow(std::numbers::pi, n) / std::exp(log_factorial(n - 1));
  double radial = quadrature_radial([n](double t) { return std::pow(t, 2 * n - 1); }, 1e-13);
  double v = surf * radial;
  cache[n] = v;
  return v;
}

namespace {

// \int_{B^n} |z^alpha|^2 w(|z|) dmu
//   = [2 pi^n alpha! / (n-1+|alpha|)!] * \int_0^1 t^{2n+2|alpha|-1} w(t) dt.
double monomial_weighted_norm2(const MultiIndex& alpha, const RadialWeight& w, double tol) {
  const int n = alpha.size();
  const int k = alpha.degree();
  double log_ang = std::log(2.0) + n * std::log(std::numbers::pi) + log_factorial(alpha) -
                   log_factorial(n - 1 + k);
  double radial = quadrature_radial(
      [&](double t) { return std::pow(t, 2 * n + 2 * k - 1) * w(t); }, tol);
  return std::exp(log_ang) * radial;
}

}  // namespace

double bergman_constant(const MultiIndex& alpha, const RadialWeight& weight, double tol) {
  return 1.0 / std::sqrt(monomial_weighted_norm2(alpha, weight, tol));
}

double bergman_constant_unweighted(const MultiIndex& alpha) {
  const int n = alpha.size();
  double lg = 0.5 * (log_factorial(alpha.degree() + n) - log_factorial(n) -
                     log_factorial(alpha) - std::log(ball_volume(n)));
  return std::exp(lg);
}

double fock_constant(const MultiIndex& alpha, double t) {
  if (t <= 0.0) throw std::domain_error("fock_constant: t must be > 0");
  return std::exp(-0.5 * (alpha.degree() * std::log(t) + log_factorial(alpha)));
}

double Polynomial::operator()(double x) const {
  double v = 0.0;
  for (size_t i = c_.size(); i-- > 0;) v = v * x + c_[i];
  return v;
}

Polynomial Polynomial::times_x() const {
  std::vector<double> c(c_.size() + 1, 0.0);
  for (size_t i = 0; i < c_.size(); ++i) c[i + 1] = c_[i];
  return Polynomial(std::move(c));
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return Polynomial();
  std::vector<double> c(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * static_cast<double>(i);
  return Polynomial(std::move(c));
}

Polynomial Polynomial::scaled(double s) const {
  std::vector<double> c(c_);
  for (double& v : c) v *= s;
  return Polynomial(std::move(c));
}

Polynomial Polynomial::plus(const Polynomial& other) const {
  std::vector<double> c(std::max(c_.size(), other.c_.size()), 0.0);
  for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
  for (size_t i = 0; i < other.c_.size(); ++i) c[i] += other.c_[i];
  return Polynomial(std::move(c));
}

double HermiteFunction1D::operator()(double x) const {
  return p(x) * std::exp(-x * x / (2.0 * t));
}

HermiteBasis::HermiteBasis(int n, double t) : n_(n), t_(t) {
  if (n < 1) throw std::invalid_argument("HermiteBasis: n must be >= 1");
  if (t <= 0.0) throw std::domain_error("HermiteBasis: t must be > 0");
  cache_.push_back({Polynomial::constant(std::pow(std::numbers::pi * t, -0.25)), t});
}

const HermiteFunction1D& HermiteBasis::factor(int k) const {
  std::lock_guard<std::mutex> lock(mutex_);
  while (static_cast<int>(cache_.size()) <= k) {
    const Polynomial& p = cache_.back().p;
    int j = static_cast<int>(cache_.size()) - 1;
    // 2^{-1/2} (x - t d/dx) applied to p(x) e^{-x^2/2t} gives (2x p - t p') / sqrt(2).
    Polynomial q = p.times_x().scaled(2.0).plus(p.derivative().scaled(-t_));
    double norm = 1.0 / std::sqrt(2.0 * t_ * (j + 1));
    cache_.push_back({q.scaled(norm), t_});
  }
  return cache_[static_cast<size_t>(k)];
}

double HermiteBasis::eval(const MultiIndex& alpha, const std::vector<double>& x) const {
  if (alpha.size() != n_ || static_cast<int>(x.size()) != n_)
    throw std::invalid_argument("HermiteBasis: dimension mismatch");
  double v = 1.0;
  for (int j = 0; j < n_; ++j) v *= factor(alpha[j])(x[static_cast<size_t>(j)]);
  return v;
}

double hermite_eval(const MultiIndex& alpha, double t, const std::vector<double>& x) {
  HermiteBasis basis(alpha.size(), t);
  return basis.eval(alpha, x);
}

GaussHermiteRule gauss_hermite(int node_count) {
  if (node_count < 1) throw std::invalid_argument("gauss_hermite: need >= 1 node");
  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(node_count, node_count);
  for (int i = 0; i + 1 < node_count; ++i) {
    double b = std::sqrt(0.5 * (i + 1));
    j(i, i + 1) = b;
    j(i + 1, i) = b;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(j);
  GaussHermiteRule rule;
  rule.nodes.resize(static_cast<size_t>(node_count));
  rule.weights.resize(static_cast<size_t>(node_count));
  const double sqrt_pi = std::sqrt(std::numbers::pi);
  for (int i = 0; i < node_count; ++i) {
    rule.nodes[static_cast<size_t>(i)] = es.eigenvalues()(i);
    double v0 = es.eigenvectors()(0, i);
    rule.weights[static_cast<size_t>(i)] = sqrt_pi * v0 * v0;
  }
  return rule;
}

}  // namespace toespec
