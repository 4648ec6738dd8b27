#include <cmath>

#include "doctest.h"
#include "toespec/clifford.hpp"
#include "toespec/triples.hpp"

using namespace toespec;

TEST_CASE("commutator boundedness sweep") {
  TripleSpec spec = bergman_tr_triple(1, {10, 20, 30, 40, 50, 60});
  auto reports = commutator_boundedness(spec);
  REQUIRE(reports.size() == 2);
  // radial generator commutes exactly (both diagonal)
  for (const auto& rep : reports) {
    if (rep.generator == "T_r") {
      for (const auto& row : rep.rows) CHECK(row.norm == 0.0);
      CHECK(rep.stabilizing);
    } else {
      // band-matrix oracle: [D, a] entries are (d_(beta+1) - d_beta) * coef
      // with d_beta = n+|beta|+1, so each band entry keeps its magnitude;
      // norms stabilize just below 2
      CHECK(rep.stabilizing);
      CHECK(rep.last_variation <= 0.02);
      CHECK(rep.rows.back().norm == doctest::Approx(1.9702).epsilon(1e-3));
    }
  }
  // structural band oracle at one cutoff
  {
    EnumPtr basis = make_enumeration(1, 12);
    TruncatedOperator d = diagonal_operator(basis, [](int k) { return k + 2.0; }, "T_r^-1");
    TruncatedOperator t = toeplitz_monomial(MultiIndex{1}, basis);
    TruncatedOperator a = add(t, adjoint(t));
    TruncatedOperator c = commutator(d, a);
    // bandwidth of the commutator equals the bandwidth of a
    for (int i = 0; i <= 12; ++i)
      for (int j = 0; j <= 12; ++j)
        if (std::abs(i - j) != 1) CHECK(std::abs(c.matrix()(i, j)) <= 1e-15);
    // entrywise oracle: (d_(k+1) - d_k) * coef = coef
    for (int k = 0; k + 1 <= 12; ++k)
      CHECK(std::abs(c.matrix()(k + 1, k) - t.matrix()(k + 1, k)) <= 1e-15);
  }
  CHECK_THROWS(commutator_boundedness(TripleSpec{spec.dirac, spec.generators, {10, 20, 30}}));
  CHECK_THROWS(commutator_boundedness(TripleSpec{spec.dirac, spec.generators, {10, 30, 20, 40}}));
}

TEST_CASE("regularity sweep") {
  TripleSpec spec = bergman_tr_triple(1, {10, 20, 30, 40, 50, 60});
  auto reports = regularity_check(spec, 2);
  for (const auto& rep : reports) {
    CHECK(rep.stabilizing);
    CHECK(rep.last_variation <= 0.02);
  }
  // negative control: unbounded raising generator against an order-1 D
  TripleSpec bad;
  bad.cutoff_sweep = {10, 20, 30, 40, 50, 60};
  bad.dirac = [](int cutoff) {
    return diagonal_operator(make_enumeration(1, cutoff), [](int k) { return k + 2.0; }, "D");
  };
  bad.generators.push_back({"raise", [](int cutoff) {
                              return scale(0.1, heisenberg_rep({HeisenbergKind::Raise, 0}, 1.0,
                                                               make_enumeration(1, cutoff)));
                            }});
  auto bad_rep = regularity_check(bad, 1);
  CHECK_FALSE(bad_rep.front().stabilizing);  // norms grow like sqrt(cutoff)
}

TEST_CASE("compact resolvent") {
  // D = T_r^{-1}: exact linear growth of the tail minimum
  {
    EnumPtr basis = make_enumeration(1, 40);
    TruncatedOperator d = diagonal_operator(basis, [](int k) { return k + 2.0; }, "T_r^-1");
    auto rep = compact_resolvent_check(d, {0, 5, 10, 20, 30});
    CHECK(rep.diverges);
    for (const auto& row : rep.rows) CHECK(row.tail_min == doctest::Approx(row.degree + 2.0).epsilon(1e-12));
  }
  // Dirac: compressed |D| tail minima grow (oracle-frozen at this truncation)
  {
    EnumPtr basis = make_enumeration(1, 120);
    TruncatedOperator d = dirac_bergman(1.0, basis);
    auto rep = compact_resolvent_check(d, {5, 10, 20, 40, 80});
    CHECK(rep.diverges);
    CHECK(rep.rows.front().tail_min == doctest::Approx(0.15294).epsilon(1e-3));
    CHECK(rep.rows.back().tail_min == doctest::Approx(0.57304).epsilon(1e-3));
    CHECK(rep.growth_exponent > 0.2);
  }
  // negative control: bounded D fails by construction
  {
    EnumPtr basis = make_enumeration(1, 40);
    TruncatedOperator d = diagonal_operator(basis, [](int k) { return 1.0 + 1.0 / (k + 1.0); }, "bounded");
    auto rep = compact_resolvent_check(d, {0, 10, 20, 30});
    CHECK_FALSE(rep.diverges);
  }
}

TEST_CASE("polar unitary") {
  EnumPtr basis = make_enumeration(1, 30);
  // f = 1 gives the identity
  {
    TruncatedOperator u = polar_unitary({Complex(1.0)}, basis);
    CHECK(max_abs(u.matrix() - Matrix::Identity(31, 31)) <= 1e-12);
  }
  // f = exp(z_1), Taylor to degree 12
  std::vector<Complex> taylor;
  double fact = 1.0;
  for (int k = 0; k <= 12; ++k) {
    taylor.push_back(Complex(1.0 / fact));
    fact *= k + 1.0;
  }
  TruncatedOperator u = polar_unitary(taylor, basis);
  CHECK(max_abs(Matrix(u.matrix().adjoint() * u.matrix()) - Matrix::Identity(31, 31)) <= 1e-10);
  // U is not a scalar multiple of the identity
  Complex mean_diag = u.matrix().trace() / 31.0;
  CHECK(matrix_norm(u.matrix() - mean_diag * Matrix::Identity(31, 31)).value > 0.1);
  // zero-free condition enforced
  CHECK_THROWS(polar_unitary({Complex(0.0), Complex(1.0)}, basis));
}

TEST_CASE("doubled triple") {
  EnumPtr basis = make_enumeration(1, 60);
  TruncatedOperator d = diagonal_operator(basis, [](int k) { return k + 2.0; }, "T_r^-1");
  // U = Id: eigenvalues of Dtilde come in +- pairs exactly
  {
    DoubledTriple dt = build_doubled(d, identity_operator(basis));
    Eigen::SelfAdjointEigenSolver<Matrix> es(dt.dtilde);
    const int dim = 61;
    for (int i = 0; i < dim; ++i)
      CHECK(es.eigenvalues()(i) == doctest::Approx(-es.eigenvalues()(2 * dim - 1 - i)).epsilon(1e-12));
  }
  // U from the polar decomposition of T_exp(z1)
  std::vector<Complex> taylor;
  double fact = 1.0;
  for (int k = 0; k <= 12; ++k) {
    taylor.push_back(Complex(1.0 / fact));
    fact *= k + 1.0;
  }
  TruncatedOperator u = polar_unitary(taylor, basis);
  DoubledTriple dt = build_doubled(d, u);
  DoubledReport rep = verify_doubled(dt);
  CHECK(rep.unitarity_residual <= 1e-10);
  CHECK(rep.hermiticity_residual <= 1e-12);
  CHECK(rep.square_offdiag <= 1e-10);
  CHECK(rep.block_spectra_gap <= 1e-8);
  CHECK(std::abs(rep.dimension_doubled - rep.dimension_base) <= 0.05);
  // non-unitary input rejected
  CHECK_THROWS(build_doubled(d, scale(2.0, identity_operator(basis))));
}

TEST_CASE("affine covariance of the harness") {
  // rescaling D by c > 0 scales the commutator norms by c and keeps verdicts
  TripleSpec spec = bergman_tr_triple(1, {10, 20, 30, 40});
  TripleSpec scaled = spec;
  scaled.dirac = [base = spec.dirac](int cutoff) { return scale(3.0, base(cutoff)); };
  auto a = commutator_boundedness(spec);
  auto b = commutator_boundedness(scaled);
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].stabilizing == b[i].stabilizing);
    for (size_t r = 0; r < a[i].rows.size(); ++r)
      CHECK(b[i].rows[r].norm == doctest::Approx(3.0 * a[i].rows[r].norm).epsilon(1e-9));
  }
}

TEST_CASE("hardy model images") {
  // n=1: the boundary Toeplitz operator with symbol z is the unilateral
  // shift, so its Bergman-side unitary image has unit couplings
  {
    EnumPtr basis = make_enumeration(1, 10);
    TruncatedOperator t = hardy_monomial_image(MultiIndex{1}, basis);
    for (int k = 0; k < 10; ++k)
      CHECK(t.matrix()(k + 1, k).real() == doctest::Approx(1.0).epsilon(1e-13));
    // isometry on the columns that stay inside the cutoff
    for (int k = 0; k < 10; ++k)
      CHECK(t.matrix().col(k).norm() == doctest::Approx(1.0).epsilon(1e-13));
  }
  // n=2: boundary-norm ratio oracle ||z^(1,1)||_S^2 / ||z^(0,1)||_S^2 = 1/3
  {
    EnumPtr basis = make_enumeration(2, 6);
    TruncatedOperator t = hardy_monomial_image(MultiIndex{1, 0}, basis);
    int row = basis->lookup(MultiIndex{1, 1});
    int col = basis->lookup(MultiIndex{0, 1});
    CHECK(t.matrix()(row, col).real() == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-13));
  }
  // the image of the inverse boundary projector form is diagonal 2(n+k)
  {
    EnumPtr basis = make_enumeration(2, 8);
    TruncatedOperator lam = hardy_lambda_inverse_image(basis);
    for (int i = 0; i < basis->dimension(); ++i)
      CHECK(lam.matrix()(i, i).real() == 2.0 * (2 + basis->degree(i)));
  }
}

TEST_CASE("heisenberg dirac triple sweeps") {
  TripleSpec spec = heisenberg_dirac_triple(1, 1.0, {10, 20, 30, 40, 50, 60});
  auto reports = commutator_boundedness(spec);
  CHECK(reports.front().stabilizing);
}
