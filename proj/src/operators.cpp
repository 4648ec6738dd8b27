#include "toespec/operators.hpp"

#include <cmath>
#include <stdexcept>

namespace toespec {

TruncatedOperator::TruncatedOperator(std::shared_ptr<const BasisEnumeration> basis, Matrix mat,
                                     int degree_shift, std::string tag, int spinor_dim)
    : basis_(std::move(basis)),
      mat_(std::move(mat)),
      degree_shift_(degree_shift),
      spinor_dim_(spinor_dim),
      tag_(std::move(tag)) {
  if (!basis_) throw std::invalid_argument("TruncatedOperator: missing enumeration");
  const int expected = basis_->dimension() * spinor_dim_;
  if (mat_.rows() != expected || mat_.cols() != expected)
    throw std::invalid_argument("TruncatedOperator: matrix size does not match basis");
  if (degree_shift_ < 0) throw std::invalid_argument("TruncatedOperator: negative shift");
}

int TruncatedOperator::interior_degree() const {
  return std::max(0, basis_->cutoff() - degree_shift_);
}

Matrix TruncatedOperator::block_up_to_degree(int dmax) const {
  const int nb = basis_->count_up_to_degree(dmax);
  const int full = basis_->dimension();
  Matrix out(nb * spinor_dim_, nb * spinor_dim_);
  for (int sr = 0; sr < spinor_dim_; ++sr)
    for (int sc = 0; sc < spinor_dim_; ++sc)
      out.block(sr * nb, sc * nb, nb, nb) = mat_.block(sr * full, sc * full, nb, nb);
  return out;
}

TruncatedOperator TruncatedOperator::with_tag(std::string tag) const {
  return TruncatedOperator(basis_, mat_, degree_shift_, std::move(tag), spinor_dim_);
}

TruncatedOperator TruncatedOperator::with_degree_shift(int shift) const {
  return TruncatedOperator(basis_, mat_, shift, tag_, spinor_dim_);
}

EnumPtr make_enumeration(int n, int cutoff) {
  return std::make_shared<const BasisEnumeration>(n, cutoff);
}

TruncatedOperator identity_operator(const EnumPtr& basis) {
  return TruncatedOperator(basis, Matrix::Identity(basis->dimension(), basis->dimension()), 0,
                           "id");
}

TruncatedOperator diagonal_operator(const EnumPtr& basis,
                                    const std::function<double(int)>& value_at_degree,
                                    std::string tag) {
  const int dim = basis->dimension();
  Matrix m = Matrix::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) m(i, i) = value_at_degree(basis->degree(i));
  return TruncatedOperator(basis, std::move(m), 0, std::move(tag));
}

TruncatedOperator toeplitz_monomial(const MultiIndex& alpha, const EnumPtr& basis) {
  if (alpha.size() != basis->complex_dimension())
    throw std::invalid_argument("toeplitz_monomial: dimension mismatch");
  const int dim = basis->dimension();
  Matrix m = Matrix::Zero(dim, dim);
  for (int col = 0; col < dim; ++col) {
    const MultiIndex& beta = (*basis)[col];
    if (beta.degree() + alpha.degree() > basis->cutoff()) continue;  // row dropped
    int row = basis->lookup(beta.plus(alpha));
    m(row, col) = monomial_coupling(alpha, beta);
  }
  return TruncatedOperator(basis, std::move(m), alpha.degree(), "T_z^" + alpha.to_string());
}

TruncatedOperator toeplitz_derivative(const MultiIndex& alpha, const EnumPtr& basis) {
  if (alpha.size() != basis->complex_dimension())
    throw std::invalid_argument("toeplitz_derivative: dimension mismatch");
  const int dim = basis->dimension();
  Matrix m = Matrix::Zero(dim, dim);
  for (int col = 0; col < dim; ++col) {
    const MultiIndex& beta = (*basis)[col];
    if (!beta.dominates(alpha)) continue;  // null on beta < alpha
    int row = basis->lookup(beta.minus(alpha));
    m(row, col) = derivative_coupling(alpha, beta);
  }
  return TruncatedOperator(basis, std::move(m), alpha.degree(), "T_d^" + alpha.to_string());
}

double radial_eigenvalue_quadrature(const std::function<double(double)>& f,
                                    const RadialWeight& weight, int n, int k, double tol) {
  auto moment = [&](const std::function<double(double)>& h) {
    return quadrature_radial(
        [&](double t) { return std::pow(t, 2 * n + 2 * k - 1) * h(t) * weight(t); }, tol);
  };
  double num = moment(f);
  double den = moment([](double) { return 1.0; });
  return num / den;
}

TruncatedOperator toeplitz_radial(const std::function<double(double)>& f, const EnumPtr& basis,
                                  const RadialWeight& weight, double tol) {
  const int n = basis->complex_dimension();
  std::vector<double> eig(static_cast<size_t>(basis->cutoff()) + 1);
  for (int k = 0; k <= basis->cutoff(); ++k)
    eig[static_cast<size_t>(k)] = radial_eigenvalue_quadrature(f, weight, n, k, tol);
  return diagonal_operator(
      basis, [&eig](int k) { return eig[static_cast<size_t>(k)]; }, "T_radial");
}

RadialPoly::RadialPoly(std::vector<double> coefficients_in_r) : c_(std::move(coefficients_in_r)) {
  if (c_.empty()) c_.push_back(0.0);
}

RadialPoly RadialPoly::defining_function() { return RadialPoly({0.0, 1.0}); }
RadialPoly RadialPoly::rho_squared() { return RadialPoly({1.0, -1.0}); }
RadialPoly RadialPoly::constant(double c) { return RadialPoly({c}); }

double RadialPoly::operator()(double rho) const {
  const double r = 1.0 - rho * rho;
  double v = 0.0;
  for (size_t j = c_.size(); j-- > 0;) v = v * r + c_[j];
  return v;
}

RadialPoly RadialPoly::times(const RadialPoly& other) const {
  std::vector<double> c(c_.size() + other.c_.size() - 1, 0.0);
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < other.c_.size(); ++j) c[i + j] += c_[i] * other.c_[j];
  return RadialPoly(std::move(c));
}

double radial_eigenvalue_beta(const RadialPoly& f, double m, int n, int k) {
  double value = 0.0;
  double ratio = 1.0;  // prod_{i=1..j} (m+i)/(n+k+m+i)
  const auto& c = f.coefficients();
  for (size_t j = 0; j < c.size(); ++j) {
    if (j > 0) ratio *= (m + static_cast<double>(j)) / (n + k + m + static_cast<double>(j));
    value += c[j] * ratio;
  }
  return value;
}

TruncatedOperator toeplitz_radial_poly(const RadialPoly& f, const EnumPtr& basis, double m) {
  const int n = basis->complex_dimension();
  return diagonal_operator(
      basis, [&f, m, n](int k) { return radial_eigenvalue_beta(f, m, n, k); }, "T_radial_poly");
}

TruncatedOperator euler_operator(const EnumPtr& basis) {
  return diagonal_operator(
      basis, [](int k) { return static_cast<double>(k); }, "R");
}

TruncatedOperator heisenberg_rep(const HeisenbergElement& h, double t, const EnumPtr& basis) {
  if (t <= 0.0) throw std::domain_error("heisenberg_rep: t must be > 0");
  const int n = basis->complex_dimension();
  const int dim = basis->dimension();
  if ((h.kind == HeisenbergKind::Q || h.kind == HeisenbergKind::P ||
       h.kind == HeisenbergKind::Lower || h.kind == HeisenbergKind::Raise) &&
      (h.j < 0 || h.j >= n))
    throw std::invalid_argument("heisenberg_rep: generator index out of range");

  if (h.kind == HeisenbergKind::T)
    return TruncatedOperator(basis, Complex(0.0, t) * Matrix::Identity(dim, dim), 0, "tau(T)");
  if (h.kind == HeisenbergKind::Number)
    return diagonal_operator(
        basis, [t, n](int k) { return t * (k + 0.5 * n); }, "tau(N)");

  Matrix m = Matrix::Zero(dim, dim);
  const double s = std::sqrt(0.5 * t);
  for (int col = 0; col < dim; ++col) {
    const MultiIndex& a = (*basis)[col];
    const double aj = a[h.j];
    int down = aj > 0 ? basis->lookup(a.minus(MultiIndex::unit(n, h.j))) : -1;
    int up = a.degree() < basis->cutoff() ? basis->lookup(a.plus(MultiIndex::unit(n, h.j))) : -1;
    switch (h.kind) {
      case HeisenbergKind::Q:
        if (down >= 0) m(down, col) = s * std::sqrt(aj);
        if (up >= 0) m(up, col) = s * std::sqrt(aj + 1.0);
        break;
      case HeisenbergKind::P:
        if (down >= 0) m(down, col) = Complex(0.0, -1.0) * s * std::sqrt(aj);
        if (up >= 0) m(up, col) = Complex(0.0, 1.0) * s * std::sqrt(aj + 1.0);
        break;
      case HeisenbergKind::Lower:
        if (down >= 0) m(down, col) = std::sqrt(t) * std::sqrt(aj);
        break;
      case HeisenbergKind::Raise:
        if (up >= 0) m(up, col) = std::sqrt(t) * std::sqrt(aj + 1.0);
        break;
      default:
        break;
    }
  }
  const char* name = h.kind == HeisenbergKind::Q      ? "tau(Q)"
                     : h.kind == HeisenbergKind::P    ? "tau(P)"
                     : h.kind == HeisenbergKind::Lower ? "tau(a)"
                                                        : "tau(a+)";
  return TruncatedOperator(basis, std::move(m), 1, name);
}

TruncatedOperator diagonal_function(const TruncatedOperator& diag,
                                    const std::function<double(double)>& fn, std::string tag) {
  Matrix m = Matrix::Zero(diag.rows(), diag.rows());
  for (int i = 0; i < diag.rows(); ++i) {
    if (max_abs(diag.matrix().row(i)) != std::abs(diag.matrix()(i, i)) ||
        max_abs(diag.matrix().col(i)) != std::abs(diag.matrix()(i, i)))
      throw std::invalid_argument("diagonal_function: operator is not diagonal");
    m(i, i) = fn(diag.matrix()(i, i).real());
  }
  return TruncatedOperator(diag.basis_ptr(), std::move(m), 0, std::move(tag), diag.spinor_dim());
}

TruncatedOperator tau_P_via_R(int j, double t, const EnumPtr& basis) {
  const int n = basis->complex_dimension();
  TruncatedOperator r = euler_operator(basis);
  TruncatedOperator r_shift_inv_sqrt = diagonal_function(
      r, [n](double x) { return 1.0 / std::sqrt(x + n); }, "(R+n)^-1/2");
  TruncatedOperator a = multiply(toeplitz_derivative(MultiIndex::unit(n, j), basis),
                                 r_shift_inv_sqrt);
  TruncatedOperator skew = subtract(a, adjoint(a));
  return scale(Complex(0.0, -1.0) * std::sqrt(0.5 * t), skew).with_tag("tau(P) via R");
}

TruncatedOperator hardy_monomial_image(const MultiIndex& alpha, const EnumPtr& basis) {
  if (alpha.size() != basis->complex_dimension())
    throw std::invalid_argument("hardy_monomial_image: dimension mismatch");
  const int n = basis->complex_dimension();
  const int dim = basis->dimension();
  Matrix m = Matrix::Zero(dim, dim);
  for (int col = 0; col < dim; ++col) {
    const MultiIndex& beta = (*basis)[col];
    if (beta.degree() + alpha.degree() > basis->cutoff()) continue;
    int row = basis->lookup(beta.plus(alpha));
    // ratio of boundary norms: ||z^(b+a)||_S / ||z^b||_S with
    // ||z^a||_S^2 = 2 pi^n a! / (n-1+|a|)!.
    double ratio = factorial_ratio(beta.plus(alpha), beta) *
                   factorial_ratio(n - 1 + beta.degree(),
                                   n - 1 + beta.degree() + alpha.degree());
    m(row, col) = std::sqrt(ratio);
  }
  return TruncatedOperator(basis, std::move(m), alpha.degree(), "H T_z^" + alpha.to_string());
}

TruncatedOperator hardy_lambda_inverse_image(const EnumPtr& basis) {
  const int n = basis->complex_dimension();
  return diagonal_operator(
      basis, [n](int k) { return 2.0 * (n + k); }, "H T_Lambda^-1");
}

namespace {

void require_compatible(const TruncatedOperator& a, const TruncatedOperator& b) {
  const BasisEnumeration& ba = a.basis();
  const BasisEnumeration& bb = b.basis();
  if (&ba != &bb && (ba.complex_dimension() != bb.complex_dimension() ||
                     ba.cutoff() != bb.cutoff()))
    throw std::invalid_argument("operator arithmetic: enumeration mismatch");
  if (a.spinor_dim() != b.spinor_dim())
    throw std::invalid_argument("operator arithmetic: spinor dimension mismatch");
}

}  // namespace

TruncatedOperator multiply(const TruncatedOperator& a, const TruncatedOperator& b) {
  require_compatible(a, b);
  int shift = std::min(a.degree_shift() + b.degree_shift(), a.basis().cutoff());
  return TruncatedOperator(a.basis_ptr(), a.matrix() * b.matrix(), shift,
                           a.tag() + "*" + b.tag(), a.spinor_dim());
}

TruncatedOperator add(const TruncatedOperator& a, const TruncatedOperator& b) {
  require_compatible(a, b);
  return TruncatedOperator(a.basis_ptr(), a.matrix() + b.matrix(),
                           std::max(a.degree_shift(), b.degree_shift()),
                           a.tag() + "+" + b.tag(), a.spinor_dim());
}

TruncatedOperator subtract(const TruncatedOperator& a, const TruncatedOperator& b) {
  require_compatible(a, b);
  return TruncatedOperator(a.basis_ptr(), a.matrix() - b.matrix(),
                           std::max(a.degree_shift(), b.degree_shift()),
                           a.tag() + "-" + b.tag(), a.spinor_dim());
}

TruncatedOperator scale(const Complex& c, const TruncatedOperator& a) {
  return TruncatedOperator(a.basis_ptr(), c * a.matrix(), a.degree_shift(), a.tag(),
                           a.spinor_dim());
}

TruncatedOperator adjoint(const TruncatedOperator& a) {
  return TruncatedOperator(a.basis_ptr(), a.matrix().adjoint(), a.degree_shift(),
                           a.tag() + "^*", a.spinor_dim());
}

TruncatedOperator commutator(const TruncatedOperator& a, const TruncatedOperator& b) {
  require_compatible(a, b);
  int shift = std::min(a.degree_shift() + b.degree_shift(), a.basis().cutoff());
  return TruncatedOperator(a.basis_ptr(), a.matrix() * b.matrix() - b.matrix() * a.matrix(),
                           shift, "[" + a.tag() + "," + b.tag() + "]", a.spinor_dim());
}

double max_abs(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

double hermiticity_residual(const TruncatedOperator& a, bool restrict_to_interior) {
  Matrix block = restrict_to_interior ? a.interior_block() : a.matrix();
  return max_abs(block - Matrix(block.adjoint()));
}

NormResult matrix_norm(const Matrix& m) {
  NormResult res;
  if (m.rows() == 0 || m.cols() == 0) return res;
  const double frob = m.norm();
  if (frob == 0.0) return res;
  // power iteration on A^* A with a deterministic start
  Eigen::VectorXcd v(m.cols());
  for (int i = 0; i < m.cols(); ++i)
    v(i) = Complex(1.0 + 0.5 * std::sin(1.0 + i), 0.25 * std::cos(2.0 + 2.0 * i));
  v.normalize();
  double lambda = 0.0;
  const int cap = 10000;
  const double rel_tol = 1e-10;
  for (int it = 1; it <= cap; ++it) {
    Eigen::VectorXcd w = m.adjoint() * (m * v);
    double next = w.norm();  // Rayleigh quotient for unit v
    if (next == 0.0) return res;
    v = w / next;
    res.iterations = it;
    if (it > 1 && std::abs(next - lambda) <= rel_tol * next) {
      res.value = std::sqrt(next);
      return res;
    }
    lambda = next;
  }
  res.converged = false;
  res.value = std::sqrt(lambda);
  return res;
}

NormResult operator_norm(const TruncatedOperator& a, bool restrict_to_interior) {
  return matrix_norm(restrict_to_interior ? a.interior_block() : a.matrix());
}

}  // namespace toespec
