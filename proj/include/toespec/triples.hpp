#pragma once

#include <functional>
#include <string>
#include <vector>

#include "toespec/operators.hpp"
#include "toespec/spectral.hpp"

namespace toespec {

// A candidate spectral triple at finite truncation. Operators are rebuilt
// per cutoff so that norm sequences can be swept.
struct TripleSpec {
  std::function<TruncatedOperator(int)> dirac;  // cutoff -> D
  std::vector<std::pair<std::string, std::function<TruncatedOperator(int)>>> generators;
  std::vector<int> cutoff_sweep;
  int max_generator_shift = 4;  // declared band bound for every generator
};

struct SweepRow {
  int cutoff = 0;
  double norm = 0.0;
};

struct StabilityReport {
  std::string generator;
  std::vector<SweepRow> rows;
  bool stabilizing = false;
  double last_variation = 0.0;  // max relative variation over the last three rows
};

// Interior norms of [D, a] per generator per cutoff; verdict "stabilizing"
// when the last three values vary by <= 2% relative.
std::vector<StabilityReport> commutator_boundedness(const TripleSpec& spec);

// Iterated delta^m(a), delta(a) = [|D|, a], m <= order; |D| from the interior
// spectral decomposition.
std::vector<StabilityReport> regularity_check(const TripleSpec& spec, int order);

struct TailRow {
  int degree = 0;
  double tail_min = 0.0;  // smallest eigenvalue of |D| compressed to degrees >= this
};

struct ResolventReport {
  std::vector<TailRow> rows;
  bool diverges = false;
  double growth_exponent = 0.0;  // log-log slope of tail_min against degree
};

// Divergence of the singular values: the compression of |D| to the span of
// degrees >= k must have a smallest eigenvalue growing without bound in k.
ResolventReport compact_resolvent_check(const TruncatedOperator& dirac,
                                        const std::vector<int>& tail_degrees);

// |a| of a Hermitian operator through its interior spectral decomposition,
// returned as a full-size matrix padded outside the interior block.
Matrix interior_abs(const TruncatedOperator& a);

// Polar unitary U = T_f (T_f^* T_f)^{-1/2} for a zero-free holomorphic
// function of z_1 given by Taylor coefficients. Throws when the factor loses
// unitarity beyond tol.
TruncatedOperator polar_unitary(const std::vector<Complex>& taylor_z1, const EnumPtr& basis,
                                double tol = 1e-10);

struct DoubledTriple {
  TruncatedOperator base_dirac;
  TruncatedOperator unitary;
  Matrix dtilde;  // [[0, U D], [D U^*, 0]] on the interior block
};

DoubledTriple build_doubled(const TruncatedOperator& dirac, const TruncatedOperator& unitary,
                            double unitary_tol = 1e-10);

struct DoubledReport {
  double unitarity_residual = 0.0;
  double hermiticity_residual = 0.0;
  double square_offdiag = 0.0;       // off-diagonal blocks of Dtilde^2
  double block_spectra_gap = 0.0;    // max |spec(U D^2 U^*) - spec(D^2)|
  double dimension_base = 0.0;
  double dimension_doubled = 0.0;
};

DoubledReport verify_doubled(const DoubledTriple& dt);

// Convenience builders for the named desk-scale triples.
TripleSpec bergman_tr_triple(int n, std::vector<int> cutoffs);
TripleSpec hardy_model_triple(int n, std::vector<int> cutoffs);
TripleSpec heisenberg_dirac_triple(int n, double t, std::vector<int> cutoffs);

}  // namespace toespec
