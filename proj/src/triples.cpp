#include "toespec/triples.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "toespec/clifford.hpp"

namespace toespec {

namespace {

bool stabilizing_verdict(const std::vector<SweepRow>& rows, double* variation) {
  if (rows.size() < 3) return false;
  double lo = rows[rows.size() - 3].norm, hi = lo;
  for (size_t i = rows.size() - 3; i < rows.size(); ++i) {
    lo = std::min(lo, rows[i].norm);
    hi = std::max(hi, rows[i].norm);
  }
  double rel = (hi == 0.0) ? 0.0 : (hi - lo) / hi;
  if (variation) *variation = rel;
  return rel <= 0.02;
}

}  // namespace

std::vector<StabilityReport> commutator_boundedness(const TripleSpec& spec) {
  if (spec.cutoff_sweep.size() < 4)
    throw std::invalid_argument("commutator_boundedness: need >= 4 cutoffs");
  for (size_t i = 1; i < spec.cutoff_sweep.size(); ++i)
    if (spec.cutoff_sweep[i] <= spec.cutoff_sweep[i - 1])
      throw std::invalid_argument("commutator_boundedness: cutoff sweep must increase");
  std::vector<StabilityReport> reports;
  for (const auto& [label, gen] : spec.generators) {
    StabilityReport rep;
    rep.generator = label;
    for (int cutoff : spec.cutoff_sweep) {
      TruncatedOperator d = spec.dirac(cutoff);
      TruncatedOperator a = gen(cutoff);
      if (a.degree_shift() > spec.max_generator_shift)
        throw std::invalid_argument("commutator_boundedness: generator " + label +
                                    " exceeds the declared degree-shift bound");
      TruncatedOperator c = commutator(d, a);
      rep.rows.push_back({cutoff, operator_norm(c).value});
    }
    rep.stabilizing = stabilizing_verdict(rep.rows, &rep.last_variation);
    reports.push_back(std::move(rep));
  }
  return reports;
}

Matrix interior_abs(const TruncatedOperator& a) {
  Matrix block = a.interior_block();
  double herm = max_abs(block - Matrix(block.adjoint()));
  if (herm > 1e-8) throw std::invalid_argument("interior_abs: operator not Hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix> es(block);
  Matrix absb = es.eigenvectors() *
                es.eigenvalues().cwiseAbs().cast<Complex>().asDiagonal() *
                es.eigenvectors().adjoint();
  Matrix full = Matrix::Zero(a.rows(), a.rows());
  // embed interior |D| block by block (spinor slow, basis fast)
  const int nb = a.basis().count_up_to_degree(a.interior_degree());
  const int fullnb = a.basis().dimension();
  for (int sr = 0; sr < a.spinor_dim(); ++sr)
    for (int sc = 0; sc < a.spinor_dim(); ++sc)
      full.block(sr * fullnb, sc * fullnb, nb, nb) = absb.block(sr * nb, sc * nb, nb, nb);
  return full;
}

std::vector<StabilityReport> regularity_check(const TripleSpec& spec, int order) {
  if (order < 1 || order > 3) throw std::invalid_argument("regularity_check: order must be 1..3");
  std::vector<StabilityReport> reports;
  for (const auto& [label, gen] : spec.generators) {
    for (int m = 1; m <= order; ++m) {
      StabilityReport rep;
      rep.generator = label + " delta^" + std::to_string(m);
      for (int cutoff : spec.cutoff_sweep) {
        TruncatedOperator d = spec.dirac(cutoff);
        TruncatedOperator absd(d.basis_ptr(), interior_abs(d), d.degree_shift(), "|D|",
                               d.spinor_dim());
        TruncatedOperator it = gen(cutoff);
        for (int q = 0; q < m; ++q) it = commutator(absd, it);
        rep.rows.push_back({cutoff, operator_norm(it).value});
      }
      rep.stabilizing = stabilizing_verdict(rep.rows, &rep.last_variation);
      reports.push_back(std::move(rep));
    }
  }
  return reports;
}

ResolventReport compact_resolvent_check(const TruncatedOperator& dirac,
                                        const std::vector<int>& tail_degrees) {
  Matrix absd = interior_abs(dirac);
  const int nb = dirac.basis().count_up_to_degree(dirac.interior_degree());
  const int fullnb = dirac.basis().dimension();
  ResolventReport report;
  std::vector<double> xs, ys;
  for (int k : tail_degrees) {
    if (k < 0 || k > dirac.interior_degree())
      throw std::invalid_argument("compact_resolvent_check: tail degree out of range");
    const int start = dirac.basis().count_up_to_degree(k - 1);
    const int len = nb - start;
    if (len <= 0) continue;
    const int d = dirac.spinor_dim();
    Matrix tail(len * d, len * d);
    for (int sr = 0; sr < d; ++sr)
      for (int sc = 0; sc < d; ++sc)
        tail.block(sr * len, sc * len, len, len) =
            absd.block(sr * fullnb + start, sc * fullnb + start, len, len);
    Eigen::SelfAdjointEigenSolver<Matrix> es(tail);
    double tail_min = es.eigenvalues().minCoeff();
    report.rows.push_back({k, tail_min});
    if (k > 0 && tail_min > 0.0) {
      xs.push_back(std::log(static_cast<double>(k)));
      ys.push_back(std::log(tail_min));
    }
  }
  if (report.rows.size() >= 2) {
    double first = report.rows.front().tail_min;
    double last = report.rows.back().tail_min;
    report.diverges = last > 2.0 * std::max(first, 1e-12);
    if (xs.size() >= 2) report.growth_exponent = fit_line(xs, ys).slope;
  }
  return report;
}

TruncatedOperator polar_unitary(const std::vector<Complex>& taylor_z1, const EnumPtr& basis,
                                double tol) {
  if (taylor_z1.empty() || std::abs(taylor_z1[0]) == 0.0)
    throw std::invalid_argument("polar_unitary: need f(0) != 0");
  const int n = basis->complex_dimension();
  const int dim = basis->dimension();
  Matrix tf = Matrix::Zero(dim, dim);
  for (size_t k = 0; k < taylor_z1.size(); ++k) {
    if (static_cast<int>(k) > basis->cutoff()) break;
    if (std::abs(taylor_z1[k]) == 0.0) continue;
    MultiIndex power = MultiIndex::zero(n);
    for (size_t q = 0; q < k; ++q) power = power.plus(MultiIndex::unit(n, 0));
    tf += taylor_z1[k] * toeplitz_monomial(power, basis).matrix();
  }
  // polar factor on the full truncated block
  Matrix h2 = tf.adjoint() * tf;
  Eigen::SelfAdjointEigenSolver<Matrix> es(h2);
  if (es.eigenvalues().minCoeff() <= 0.0)
    throw std::invalid_argument("polar_unitary: T_f^* T_f not positive definite");
  Matrix inv_sqrt = es.eigenvectors() *
                    es.eigenvalues().cwiseSqrt().cwiseInverse().cast<Complex>().asDiagonal() *
                    es.eigenvectors().adjoint();
  Matrix u = tf * inv_sqrt;
  double residual = max_abs(Matrix(u.adjoint() * u) - Matrix::Identity(dim, dim));
  if (residual > tol)
    throw std::runtime_error("polar_unitary: unitarity residual " + std::to_string(residual));
  // effective band: entries decay factorially for entire symbols
  int shift = 0;
  const double floor_mag = 1e-13 * std::max(1.0, max_abs(u));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      if (std::abs(u(i, j)) > floor_mag)
        shift = std::max(shift, std::abs(basis->degree(i) - basis->degree(j)));
  return TruncatedOperator(basis, std::move(u), shift, "polar_unitary");
}

DoubledTriple build_doubled(const TruncatedOperator& dirac, const TruncatedOperator& unitary,
                            double unitary_tol) {
  if (dirac.spinor_dim() != 1 || unitary.spinor_dim() != 1)
    throw std::invalid_argument("build_doubled: scalar operators expected");
  const int dim = dirac.basis().dimension();
  if (unitary.basis().dimension() != dim)
    throw std::invalid_argument("build_doubled: enumeration mismatch");
  double ures = max_abs(Matrix(unitary.matrix().adjoint() * unitary.matrix()) -
                        Matrix::Identity(dim, dim));
  if (ures > unitary_tol)
    throw std::invalid_argument("build_doubled: non-unitary U, residual " + std::to_string(ures));
  Matrix ud = unitary.matrix() * dirac.matrix();
  Matrix dtilde = Matrix::Zero(2 * dim, 2 * dim);
  dtilde.block(0, dim, dim, dim) = ud;
  dtilde.block(dim, 0, dim, dim) = ud.adjoint();
  DoubledTriple dt{dirac, unitary, std::move(dtilde)};
  return dt;
}

DoubledReport verify_doubled(const DoubledTriple& dt) {
  DoubledReport rep;
  const int dim = dt.base_dirac.basis().dimension();
  rep.unitarity_residual = max_abs(
      Matrix(dt.unitary.matrix().adjoint() * dt.unitary.matrix()) - Matrix::Identity(dim, dim));
  rep.hermiticity_residual = max_abs(dt.dtilde - Matrix(dt.dtilde.adjoint()));
  Matrix sq = dt.dtilde * dt.dtilde;
  rep.square_offdiag = std::max(max_abs(sq.block(0, dim, dim, dim)),
                                max_abs(sq.block(dim, 0, dim, dim)));
  Eigen::SelfAdjointEigenSolver<Matrix> top(sq.block(0, 0, dim, dim));
  Eigen::SelfAdjointEigenSolver<Matrix> bottom(sq.block(dim, dim, dim, dim));
  rep.block_spectra_gap = (top.eigenvalues() - bottom.eigenvalues()).cwiseAbs().maxCoeff();

  // dimension estimate of the base and doubled streams at this truncation
  SpectrumStream base = spectrum_of(dt.base_dirac);
  std::vector<double> doubled_vals;
  for (std::int64_t k = 0; k < base.level_count(); ++k)
    for (std::int64_t m = 0; m < base.multiplicity(k); ++m) {
      doubled_vals.push_back(base.value(k));
      doubled_vals.push_back(base.value(k));
    }
  SpectrumStream doubled = SpectrumStream::from_values(std::move(doubled_vals));
  rep.dimension_base = spectral_dimension(base);
  rep.dimension_doubled = spectral_dimension(doubled);
  return rep;
}

TripleSpec bergman_tr_triple(int n, std::vector<int> cutoffs) {
  TripleSpec spec;
  spec.cutoff_sweep = std::move(cutoffs);
  spec.dirac = [n](int cutoff) {
    EnumPtr basis = make_enumeration(n, cutoff);
    return diagonal_operator(
        basis, [n](int k) { return static_cast<double>(n + k + 1); }, "T_r^-1");
  };
  spec.generators.push_back(
      {"T_z1 + T_z1^*", [n](int cutoff) {
         EnumPtr basis = make_enumeration(n, cutoff);
         TruncatedOperator t = toeplitz_monomial(MultiIndex::unit(n, 0), basis);
         return add(t, adjoint(t));
       }});
  spec.generators.push_back(
      {"T_r", [n](int cutoff) {
         EnumPtr basis = make_enumeration(n, cutoff);
         return toeplitz_radial_poly(RadialPoly::defining_function(), basis, 0.0);
       }});
  return spec;
}

TripleSpec hardy_model_triple(int n, std::vector<int> cutoffs) {
  TripleSpec spec;
  spec.cutoff_sweep = std::move(cutoffs);
  spec.dirac = [n](int cutoff) {
    return hardy_lambda_inverse_image(make_enumeration(n, cutoff));
  };
  spec.generators.push_back(
      {"T_z1 + T_z1^* (boundary image)", [n](int cutoff) {
         EnumPtr basis = make_enumeration(n, cutoff);
         TruncatedOperator t = hardy_monomial_image(MultiIndex::unit(n, 0), basis);
         return add(t, adjoint(t));
       }});
  return spec;
}

TripleSpec heisenberg_dirac_triple(int n, double t, std::vector<int> cutoffs) {
  TripleSpec spec;
  spec.cutoff_sweep = std::move(cutoffs);
  spec.dirac = [n, t](int cutoff) { return dirac_bergman(t, make_enumeration(n, cutoff)); };
  spec.generators.push_back(
      {"tau(a_1^+) N^-1/2 (x) Id", [n, t](int cutoff) {
         EnumPtr basis = make_enumeration(n, cutoff);
         TruncatedOperator raise = heisenberg_rep({HeisenbergKind::Raise, 0}, t, basis);
         TruncatedOperator num = heisenberg_rep({HeisenbergKind::Number, 0}, t, basis);
         TruncatedOperator nis = diagonal_function(
             num, [](double x) { return 1.0 / std::sqrt(x); }, "N^-1/2");
         TruncatedOperator a = multiply(raise, nis);
         const int d = gamma_matrices(n).dim;
         Matrix big = kronecker(Matrix::Identity(d, d), a.matrix());
         return TruncatedOperator(basis, std::move(big), a.degree_shift(), a.tag(), d);
       }});
  return spec;
}

}  // namespace toespec
