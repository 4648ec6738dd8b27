#include "toespec/segal_bargmann.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace toespec {

GaussianPolynomial::GaussianPolynomial(int n, double t) : n_(n), t_(t) {
  if (n < 1) throw std::invalid_argument("GaussianPolynomial: n must be >= 1");
  if (t <= 0.0) throw std::domain_error("GaussianPolynomial: t must be > 0");
}

void GaussianPolynomial::add_term(Term term) {
  if (static_cast<int>(term.size()) != n_)
    throw std::invalid_argument("GaussianPolynomial: term dimension mismatch");
  terms_.push_back(std::move(term));
}

GaussianPolynomial GaussianPolynomial::hermite(const MultiIndex& alpha, double t) {
  GaussianPolynomial f(alpha.size(), t);
  HermiteBasis basis(alpha.size(), t);
  Term term;
  term.reserve(static_cast<size_t>(alpha.size()));
  for (int j = 0; j < alpha.size(); ++j) term.push_back(basis.factor(alpha[j]).p);
  f.add_term(std::move(term));
  return f;
}

GaussianPolynomial GaussianPolynomial::apply_multiply_x(int j) const {
  GaussianPolynomial out(n_, t_);
  for (const Term& term : terms_) {
    Term next = term;
    next[static_cast<size_t>(j)] = term[static_cast<size_t>(j)].times_x();
    out.terms_.push_back(std::move(next));
  }
  return out;
}

GaussianPolynomial GaussianPolynomial::apply_derivative(int j) const {
  // d/dx_j [p e^{-x^2/2t}] = (p' - x p / t) e^{-x^2/2t}
  GaussianPolynomial out(n_, t_);
  for (const Term& term : terms_) {
    Term next = term;
    const Polynomial& p = term[static_cast<size_t>(j)];
    next[static_cast<size_t>(j)] = p.derivative().plus(p.times_x().scaled(-1.0 / t_));
    out.terms_.push_back(std::move(next));
  }
  return out;
}

GaussianPolynomial GaussianPolynomial::apply_raising(int j) const {
  const double s = 1.0 / std::sqrt(2.0);
  return apply_multiply_x(j).scaled(s).plus(apply_derivative(j).scaled(-t_ * s));
}

GaussianPolynomial GaussianPolynomial::apply_lowering(int j) const {
  const double s = 1.0 / std::sqrt(2.0);
  return apply_multiply_x(j).scaled(s).plus(apply_derivative(j).scaled(t_ * s));
}

GaussianPolynomial GaussianPolynomial::apply_number() const {
  GaussianPolynomial out(n_, t_);
  for (int j = 0; j < n_; ++j) {
    GaussianPolynomial xx = apply_multiply_x(j).apply_multiply_x(j);
    GaussianPolynomial dd = apply_derivative(j).apply_derivative(j);
    out = out.plus(xx.scaled(0.5).plus(dd.scaled(-0.5 * t_ * t_)));
  }
  return out;
}

GaussianPolynomial GaussianPolynomial::scaled(double s) const {
  GaussianPolynomial out(n_, t_);
  for (const Term& term : terms_) {
    Term next = term;
    next[0] = term[0].scaled(s);
    out.terms_.push_back(std::move(next));
  }
  return out;
}

GaussianPolynomial GaussianPolynomial::plus(const GaussianPolynomial& other) const {
  if (other.n_ != n_ || other.t_ != t_)
    throw std::invalid_argument("GaussianPolynomial: mismatched parameters");
  GaussianPolynomial out(n_, t_);
  out.terms_ = terms_;
  out.terms_.insert(out.terms_.end(), other.terms_.begin(), other.terms_.end());
  return out;
}

double GaussianPolynomial::operator()(const std::vector<double>& x) const {
  if (static_cast<int>(x.size()) != n_)
    throw std::invalid_argument("GaussianPolynomial: dimension mismatch");
  double poly = 0.0;
  for (const Term& term : terms_) {
    double prod = 1.0;
    for (int j = 0; j < n_; ++j) prod *= term[static_cast<size_t>(j)](x[static_cast<size_t>(j)]);
    poly += prod;
  }
  double x2 = 0.0;
  for (double v : x) x2 += v * v;
  return poly * std::exp(-x2 / (2.0 * t_));
}

SBTransform::SBTransform(int n, double t, int node_count)
    : n_(n), t_(t), rule_(gauss_hermite(node_count)), torus_points_(16) {
  if (n < 1) throw std::invalid_argument("SBTransform: n must be >= 1");
  if (t <= 0.0) throw std::domain_error("SBTransform: t must be > 0");
}

Cx SBTransform::forward(const GaussianPolynomial& f, const std::vector<Cx>& z) const {
  if (f.dimension() != n_ || static_cast<int>(z.size()) != n_)
    throw std::invalid_argument("SBTransform: dimension mismatch");
  if (f.parameter() != t_) throw std::invalid_argument("SBTransform: parameter mismatch");
  // With x = sqrt(t) y the integrand per coordinate is
  //   sqrt(t) p(sqrt t y) exp(sqrt 2 y z / sqrt t) e^{-y^2},
  // handled exactly enough by the Gauss-Hermite table for |z| = O(1).
  const double sq_t = std::sqrt(t_);
  Cx z2 = 0.0;
  for (const Cx& v : z) z2 += v * v;
  Cx total = 0.0;
  for (const auto& term : f.terms()) {
    Cx prod = 1.0;
    for (int j = 0; j < n_; ++j) {
      Cx s = 0.0;
      const Cx a = std::sqrt(2.0) * z[static_cast<size_t>(j)] / sq_t;
      for (size_t i = 0; i < rule_.nodes.size(); ++i) {
        double y = rule_.nodes[i];
        s += rule_.weights[i] * term[static_cast<size_t>(j)](sq_t * y) * std::exp(a * y);
      }
      prod *= sq_t * s;
    }
    total += prod;
  }
  const double pref = std::pow(std::numbers::pi * t_, -0.25 * n_);
  return pref * std::exp(-z2 / (2.0 * t_)) * total;
}

Cx SBTransform::forward_hermite(const MultiIndex& alpha, const std::vector<Cx>& z) const {
  return forward(GaussianPolynomial::hermite(alpha, t_), z);
}

std::vector<Cx> SBTransform::forward_coefficients(const GaussianPolynomial& f,
                                                  const BasisEnumeration& target) const {
  if (target.complex_dimension() != n_)
    throw std::invalid_argument("SBTransform: enumeration dimension mismatch");
  if (target.cutoff() >= torus_points_)
    throw std::invalid_argument("SBTransform: cutoff exceeds torus resolution");
  if (2 * target.cutoff() + 10 > node_count())
    throw std::invalid_argument("SBTransform: node budget too small for requested degree");
  const int np = torus_points_;
  // sample W_t f on the product of unit circles
  std::vector<Cx> samples;
  const int total = static_cast<int>(std::pow(np, n_));
  samples.reserve(static_cast<size_t>(total));
  std::vector<int> idx(static_cast<size_t>(n_), 0);
  std::vector<Cx> z(static_cast<size_t>(n_));
  for (int s = 0; s < total; ++s) {
    int rem = s;
    for (int j = 0; j < n_; ++j) {
      idx[static_cast<size_t>(j)] = rem % np;
      rem /= np;
      double th = 2.0 * std::numbers::pi * idx[static_cast<size_t>(j)] / np;
      z[static_cast<size_t>(j)] = Cx(std::cos(th), std::sin(th));
    }
    samples.push_back(forward(f, z));
  }
  // discrete Fourier sum per target index
  std::vector<Cx> coeffs(static_cast<size_t>(target.dimension()), Cx(0.0));
  for (int g = 0; g < target.dimension(); ++g) {
    const MultiIndex& gamma = target[g];
    Cx acc = 0.0;
    for (int s = 0; s < total; ++s) {
      int rem = s;
      double phase = 0.0;
      for (int j = 0; j < n_; ++j) {
        int ij = rem % np;
        rem /= np;
        phase -= 2.0 * std::numbers::pi * ij * gamma[j] / np;
      }
      acc += samples[static_cast<size_t>(s)] * Cx(std::cos(phase), std::sin(phase));
    }
    coeffs[static_cast<size_t>(g)] = acc / static_cast<double>(total);
  }
  return coeffs;
}

Cx SBTransform::inverse(const std::vector<Cx>& fock_coeffs, const BasisEnumeration& basis,
                        const std::vector<double>& x) const {
  if (static_cast<int>(fock_coeffs.size()) != basis.dimension())
    throw std::invalid_argument("SBTransform: coefficient count mismatch");
  HermiteBasis hb(n_, t_);
  Cx acc = 0.0;
  for (int i = 0; i < basis.dimension(); ++i)
    acc += fock_coeffs[static_cast<size_t>(i)] * hb.eval(basis[i], x);
  return acc;
}

Cx SBTransform::inverse_integral(const std::vector<Cx>& fock_coeffs,
                                 const BasisEnumeration& basis,
                                 const std::vector<double>& x) const {
  // (W^-1 F)(x) = (pi t)^{-5n/4} \int e^{(-zbar^2 + 2 sqrt2 x zbar - x^2)/2t}
  //               F(z) e^{-|z|^2/t} dmu(z), with F in the monomial basis
  //               F(z) = sum_alpha c_alpha u_alpha(z).
  // Substituting z = sqrt(t)(u + iv) reduces each coordinate to a double
  // Gauss-Hermite sum against e^{-u^2-v^2}.
  auto u_alpha = [&](const MultiIndex& alpha, const std::vector<Cx>& z) {
    Cx m = fock_constant(alpha, t_);
    for (int j = 0; j < n_; ++j)
      for (int p = 0; p < alpha[j]; ++p) m *= z[static_cast<size_t>(j)];
    return m;
  };
  const double sq_t = std::sqrt(t_);
  double x2 = 0.0;
  for (double v : x) x2 += v * v;

  const size_t nn = rule_.nodes.size();
  std::vector<Cx> z(static_cast<size_t>(n_));
  std::function<Cx(int)> integrate = [&](int coord) -> Cx {
    Cx acc = 0.0;
    for (size_t iu = 0; iu < nn; ++iu) {
      for (size_t iv = 0; iv < nn; ++iv) {
        double u = rule_.nodes[iu], v = rule_.nodes[iv];
        z[static_cast<size_t>(coord)] = sq_t * Cx(u, v);
        Cx zb = sq_t * Cx(u, -v);
        // e^{-|z|^2/t} at this coordinate is e^{-u^2-v^2}: the weight table.
        Cx kernel = std::exp((-zb * zb + 2.0 * std::sqrt(2.0) * x[static_cast<size_t>(coord)] * zb) /
                             (2.0 * t_));
        Cx inner = (coord + 1 < n_) ? integrate(coord + 1) : [&] {
          Cx f = 0.0;
          for (int i = 0; i < basis.dimension(); ++i)
            f += fock_coeffs[static_cast<size_t>(i)] * u_alpha(basis[i], z);
          return f;
        }();
        acc += rule_.weights[iu] * rule_.weights[iv] * kernel * inner;
      }
    }
    // dmu(z) = t du dv after substitution
    return acc * t_;
  };
  Cx integral = integrate(0);
  double pref = std::pow(std::numbers::pi * t_, -1.25 * n_) * std::exp(-x2 / (2.0 * t_));
  return pref * integral;
}

double IntertwiningReport::max_residual() const {
  return std::max({residual_x, residual_d, residual_number, residual_raising});
}

namespace {

// column-wise coefficient matrices of the conjugated operators in the
// normalized Fock basis: columns indexed by beta, rows by gamma.
using CoeffMatrix = std::vector<std::vector<Cx>>;

CoeffMatrix conjugated_matrix(const SBTransform& sb, const BasisEnumeration& cols,
                              const BasisEnumeration& rows,
                              const std::function<GaussianPolynomial(const GaussianPolynomial&)>& op) {
  CoeffMatrix m(static_cast<size_t>(cols.dimension()));
  for (int b = 0; b < cols.dimension(); ++b) {
    GaussianPolynomial hb = GaussianPolynomial::hermite(cols[b], sb.parameter());
    std::vector<Cx> taylor = sb.forward_coefficients(op(hb), rows);
    // convert Taylor coefficients to u_gamma coordinates: F = sum c z^gamma
    // = sum (c / a_gamma) u_gamma
    std::vector<Cx> coords(taylor.size());
    for (int g = 0; g < rows.dimension(); ++g)
      coords[static_cast<size_t>(g)] = taylor[static_cast<size_t>(g)] /
                                       fock_constant(rows[g], sb.parameter());
    m[static_cast<size_t>(b)] = std::move(coords);
  }
  return m;
}

double max_abs_diff(const CoeffMatrix& a, const CoeffMatrix& b) {
  double r = 0.0;
  for (size_t c = 0; c < a.size(); ++c)
    for (size_t g = 0; g < a[c].size(); ++g) r = std::max(r, std::abs(a[c][g] - b[c][g]));
  return r;
}

}  // namespace

IntertwiningReport intertwining_check(int n, double t, int max_degree, int node_count) {
  SBTransform sb(n, t, node_count);
  BasisEnumeration cols(n, max_degree);
  BasisEnumeration rows(n, max_degree + 1);
  IntertwiningReport report;

  for (int j = 0; j < n; ++j) {
    auto mul_x = conjugated_matrix(sb, cols, rows, [&](const GaussianPolynomial& f) {
      return f.apply_multiply_x(j);
    });
    auto deriv = conjugated_matrix(sb, cols, rows, [&](const GaussianPolynomial& f) {
      return f.apply_derivative(j);
    });
    auto raise = conjugated_matrix(sb, cols, rows, [&](const GaussianPolynomial& f) {
      return f.apply_raising(j);
    });
    // analytic right-hand sides on the u basis:
    //   W x_j W^-1 = (z_j + t d_j)/sqrt2   : sqrt(t/2)(sqrt(b_j+1) up + sqrt(b_j) down)
    //   W d_j W^-1 = (-z_j + t d_j)/(sqrt2 t): (1/sqrt(2t))(-sqrt(b_j+1) up + sqrt(b_j) down)
    //   W A_j^*    = z_j W                 : sqrt(t) sqrt(b_j+1) up
    // The 1/t in the derivative line is forced by the ladder actions: with
    // rho_t(P_j) = -it d_x, conjugation must reproduce nu_t(P_j).
    CoeffMatrix rhs_x(mul_x.size()), rhs_d(mul_x.size()), rhs_raise(mul_x.size());
    for (int b = 0; b < cols.dimension(); ++b) {
      std::vector<Cx> ex(static_cast<size_t>(rows.dimension()), Cx(0.0));
      std::vector<Cx> ed(static_cast<size_t>(rows.dimension()), Cx(0.0));
      std::vector<Cx> er(static_cast<size_t>(rows.dimension()), Cx(0.0));
      const MultiIndex& beta = cols[b];
      int up = rows.lookup(beta.plus(MultiIndex::unit(n, j)));
      ex[static_cast<size_t>(up)] += std::sqrt(0.5 * t) * std::sqrt(beta[j] + 1.0);
      ed[static_cast<size_t>(up)] -= std::sqrt(beta[j] + 1.0) / std::sqrt(2.0 * t);
      er[static_cast<size_t>(up)] += std::sqrt(t) * std::sqrt(beta[j] + 1.0);
      if (beta[j] > 0) {
        int down = rows.lookup(beta.minus(MultiIndex::unit(n, j)));
        ex[static_cast<size_t>(down)] += std::sqrt(0.5 * t) * std::sqrt(static_cast<double>(beta[j]));
        ed[static_cast<size_t>(down)] += std::sqrt(static_cast<double>(beta[j])) / std::sqrt(2.0 * t);
      }
      rhs_x[static_cast<size_t>(b)] = std::move(ex);
      rhs_d[static_cast<size_t>(b)] = std::move(ed);
      rhs_raise[static_cast<size_t>(b)] = std::move(er);
    }
    report.residual_x = std::max(report.residual_x, max_abs_diff(mul_x, rhs_x));
    report.residual_d = std::max(report.residual_d, max_abs_diff(deriv, rhs_d));
    report.residual_raising = std::max(report.residual_raising, max_abs_diff(raise, rhs_raise));
  }

  auto number = conjugated_matrix(sb, cols, rows, [&](const GaussianPolynomial& f) {
    return f.apply_number();
  });
  CoeffMatrix rhs_n(number.size());
  for (int b = 0; b < cols.dimension(); ++b) {
    std::vector<Cx> en(static_cast<size_t>(rows.dimension()), Cx(0.0));
    int self = rows.lookup(cols[b]);
    en[static_cast<size_t>(self)] = t * (cols[b].degree() + 0.5 * n);
    rhs_n[static_cast<size_t>(b)] = std::move(en);
  }
  report.residual_number = max_abs_diff(number, rhs_n);
  return report;
}

double sb_basis_mapping_error(int n, double t, int max_degree, int node_count) {
  SBTransform sb(n, t, node_count);
  BasisEnumeration basis(n, max_degree);
  double err = 0.0;
  for (int a = 0; a < basis.dimension(); ++a) {
    std::vector<Cx> taylor =
        sb.forward_coefficients(GaussianPolynomial::hermite(basis[a], t), basis);
    for (int g = 0; g < basis.dimension(); ++g) {
      Cx expected = (g == a) ? Cx(fock_constant(basis[a], t)) : Cx(0.0);
      err = std::max(err, std::abs(taylor[static_cast<size_t>(g)] - expected));
    }
  }
  return err;
}

double sb_gram_residual(int n, double t, int max_degree, int node_count) {
  SBTransform sb(n, t, node_count);
  BasisEnumeration basis(n, max_degree);
  const int dim = basis.dimension();
  std::vector<std::vector<Cx>> taylor(static_cast<size_t>(dim));
  for (int a = 0; a < dim; ++a)
    taylor[static_cast<size_t>(a)] =
        sb.forward_coefficients(GaussianPolynomial::hermite(basis[a], t), basis);
  // <z^g, z^g>_F = t^{|g|} g!
  std::vector<double> pairing(static_cast<size_t>(dim));
  for (int g = 0; g < dim; ++g) {
    double c = fock_constant(basis[g], t);
    pairing[static_cast<size_t>(g)] = 1.0 / (c * c);
  }
  double res = 0.0;
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b) {
      Cx gram = 0.0;
      for (int g = 0; g < dim; ++g)
        gram += taylor[static_cast<size_t>(a)][static_cast<size_t>(g)] *
                std::conj(taylor[static_cast<size_t>(b)][static_cast<size_t>(g)]) *
                pairing[static_cast<size_t>(g)];
      Cx expected = (a == b) ? Cx(1.0) : Cx(0.0);
      res = std::max(res, std::abs(gram - expected));
    }
  return res;
}

}  // namespace toespec
