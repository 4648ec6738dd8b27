#pragma once

#include "toespec/operators.hpp"

namespace toespec {

// Hermitian gamma matrices representing the n-dimensional Clifford algebra
// on C^{2^[n/2]}, Jordan-Wigner chain construction. Entries are exact
// (0, +-1, +-i), so the anticommutation relations hold without roundoff.
struct CliffordRep {
  int n = 0;
  int dim = 1;  // 2^[n/2]
  std::vector<Matrix> gamma;
};

CliffordRep gamma_matrices(int n);

// D = (t/2)^{-1/2} sum_j Gamma_j (x) tau_t(P_j) on basis (x) C^dim,
// spinor index slow, basis index fast. Independent of t.
TruncatedOperator dirac_bergman(double t, const EnumPtr& basis);

Matrix kronecker(const Matrix& a, const Matrix& b);

}  // namespace toespec
