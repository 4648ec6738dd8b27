#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <memory>
#include <string>

#include "toespec/bases.hpp"
#include "toespec/multiindex.hpp"

namespace toespec {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

// Finite section of an operator over the degree <= cutoff monomial basis,
// possibly tensored with a spinor factor C^d (spinor index slow, basis index
// fast). degree_shift is the declared band bound: entries vanish when the
// row and column degrees differ by more than it. The truncation is exact
// only on degrees <= interior_degree(); every norm, commutator and spectrum
// claim is evaluated on that interior block.
class TruncatedOperator {
 public:
  TruncatedOperator(std::shared_ptr<const BasisEnumeration> basis, Matrix mat,
                    int degree_shift, std::string tag, int spinor_dim = 1);

  const BasisEnumeration& basis() const { return *basis_; }
  const std::shared_ptr<const BasisEnumeration>& basis_ptr() const { return basis_; }
  const Matrix& matrix() const { return mat_; }
  int degree_shift() const { return degree_shift_; }
  int spinor_dim() const { return spinor_dim_; }
  const std::string& tag() const { return tag_; }
  int rows() const { return static_cast<int>(mat_.rows()); }

  int interior_degree() const;
  // Sub-matrix on degrees <= dmax (each spinor block).
  Matrix block_up_to_degree(int dmax) const;
  Matrix interior_block() const { return block_up_to_degree(interior_degree()); }

  TruncatedOperator with_tag(std::string tag) const;
  TruncatedOperator with_degree_shift(int shift) const;

 private:
  std::shared_ptr<const BasisEnumeration> basis_;
  Matrix mat_;
  int degree_shift_;
  int spinor_dim_;
  std::string tag_;
};

using EnumPtr = std::shared_ptr<const BasisEnumeration>;
EnumPtr make_enumeration(int n, int cutoff);

// --- constructors on the unweighted ball basis ---------------------------

TruncatedOperator identity_operator(const EnumPtr& basis);
TruncatedOperator diagonal_operator(const EnumPtr& basis,
                                    const std::function<double(int)>& value_at_degree,
                                    std::string tag);

// T_{z^alpha}: v_beta -> monomial_coupling(alpha,beta) v_{beta+alpha}.
TruncatedOperator toeplitz_monomial(const MultiIndex& alpha, const EnumPtr& basis);
// T_{d^alpha}: v_beta -> derivative_coupling(alpha,beta) v_{beta-alpha}, zero
// on columns with beta < alpha.
TruncatedOperator toeplitz_derivative(const MultiIndex& alpha, const EnumPtr& basis);

// Diagonal radial Toeplitz operator; eigenvalue at degree k is
//   \int_0^1 t^{2n+2k-1} f w dt / \int_0^1 t^{2n+2k-1} w dt.
TruncatedOperator toeplitz_radial(const std::function<double(double)>& f, const EnumPtr& basis,
                                  const RadialWeight& weight, double tol = 1e-10);

double radial_eigenvalue_quadrature(const std::function<double(double)>& f,
                                    const RadialWeight& weight, int n, int k,
                                    double tol = 1e-10);

// Polynomial in r = 1-rho^2, f(rho) = sum_j c_j (1-rho^2)^j; closed Beta-ratio
// eigenvalues against the weight r^m.
class RadialPoly {
 public:
  explicit RadialPoly(std::vector<double> coefficients_in_r);
  static RadialPoly defining_function();   // r
  static RadialPoly rho_squared();         // |z|^2 = 1 - r
  static RadialPoly constant(double c);

  const std::vector<double>& coefficients() const { return c_; }
  double operator()(double rho) const;
  RadialPoly times(const RadialPoly& other) const;

 private:
  std::vector<double> c_;
};

// Beta-ratio eigenvalue of T_f on the weight r^m at degree k:
//   sum_j c_j prod_{i=1..j} (m+i)/(n+k+m+i).
double radial_eigenvalue_beta(const RadialPoly& f, double m, int n, int k);

TruncatedOperator toeplitz_radial_poly(const RadialPoly& f, const EnumPtr& basis, double m);

// R = sum_j T_{z_j} T_{d_j}; diagonal with R v_beta = |beta| v_beta.
TruncatedOperator euler_operator(const EnumPtr& basis);

// --- Heisenberg algebra representation ------------------------------------

enum class HeisenbergKind { Q, P, T, Lower, Raise, Number };

struct HeisenbergElement {
  HeisenbergKind kind;
  int j = 0;  // generator index for Q, P, Lower, Raise
};

TruncatedOperator heisenberg_rep(const HeisenbergElement& h, double t, const EnumPtr& basis);

// tau_t(P_j) built from -i (t/2)^{1/2} [ T_{d_j} (R+n)^{-1/2} - adj ].
TruncatedOperator tau_P_via_R(int j, double t, const EnumPtr& basis);

// Bergman-side unitary image of the boundary Toeplitz operator with symbol
// z^alpha (the basis-to-basis conjugation makes this a matrix on v_alpha).
TruncatedOperator hardy_monomial_image(const MultiIndex& alpha, const EnumPtr& basis);
// Image of the inverse boundary Poisson form: diagonal 2(n+k).
TruncatedOperator hardy_lambda_inverse_image(const EnumPtr& basis);

// --- arithmetic ------------------------------------------------------------

TruncatedOperator multiply(const TruncatedOperator& a, const TruncatedOperator& b);
TruncatedOperator add(const TruncatedOperator& a, const TruncatedOperator& b);
TruncatedOperator subtract(const TruncatedOperator& a, const TruncatedOperator& b);
TruncatedOperator scale(const Complex& c, const TruncatedOperator& a);
TruncatedOperator adjoint(const TruncatedOperator& a);
TruncatedOperator commutator(const TruncatedOperator& a, const TruncatedOperator& b);

// Hermitian functional calculus on the diagonal of an exactly diagonal
// operator (used for (R+n)^{-1/2} and friends).
TruncatedOperator diagonal_function(const TruncatedOperator& diag,
                                    const std::function<double(double)>& fn, std::string tag);

double hermiticity_residual(const TruncatedOperator& a, bool restrict_to_interior = true);
double max_abs(const Matrix& m);

struct NormResult {
  double value = 0.0;
  bool converged = true;
  int iterations = 0;
};

// Largest singular value by power iteration on A^* A, relative tolerance
// 1e-10, iteration cap 1e4. Reports the best estimate when not converged.
NormResult operator_norm(const TruncatedOperator& a, bool restrict_to_interior = true);
NormResult matrix_norm(const Matrix& m);

}  // namespace toespec
