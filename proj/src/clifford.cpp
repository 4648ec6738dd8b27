#include "toespec/clifford.hpp"

#include <cmath>
#include <stdexcept>

namespace toespec {

Matrix kronecker(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

CliffordRep gamma_matrices(int n) {
  if (n < 1) throw std::invalid_argument("gamma_matrices: n must be >= 1");
  CliffordRep rep;
  rep.n = n;
  const int m = n / 2;
  rep.dim = 1 << m;

  Matrix sx(2, 2), sy(2, 2), sz(2, 2), id = Matrix::Identity(2, 2);
  sx << 0, 1, 1, 0;
  sy << 0, Complex(0, -1), Complex(0, 1), 0;
  sz << 1, 0, 0, -1;

  auto chain = [&](int pos, const Matrix& op) {
    // sz^(pos) (x) op (x) id^(m-pos-1)
    Matrix acc = Matrix::Identity(1, 1);
    for (int q = 0; q < pos; ++q) acc = kronecker(acc, sz);
    acc = kronecker(acc, op);
    for (int q = pos + 1; q < m; ++q) acc = kronecker(acc, id);
    return acc;
  };

  for (int p = 0; p < m; ++p) {
    rep.gamma.push_back(chain(p, sx));
    rep.gamma.push_back(chain(p, sy));
  }
  if (n % 2 == 1) {
    Matrix acc = Matrix::Identity(1, 1);
    for (int q = 0; q < m; ++q) acc = kronecker(acc, sz);
    rep.gamma.push_back(acc);
  }
  rep.gamma.resize(static_cast<size_t>(n));
  return rep;
}

TruncatedOperator dirac_bergman(double t, const EnumPtr& basis) {
  if (t <= 0.0) throw std::domain_error("dirac_bergman: t must be > 0");
  const int n = basis->complex_dimension();
  const CliffordRep cl = gamma_matrices(n);
  const int dim = basis->dimension();
  Matrix m = Matrix::Zero(dim * cl.dim, dim * cl.dim);
  const double pref = 1.0 / std::sqrt(0.5 * t);
  for (int j = 0; j < n; ++j) {
    TruncatedOperator pj = heisenberg_rep({HeisenbergKind::P, j}, t, basis);
    m += pref * kronecker(cl.gamma[static_cast<size_t>(j)], pj.matrix());
  }
  return TruncatedOperator(basis, std::move(m), 1, "dirac", cl.dim);
}

}  // namespace toespec
