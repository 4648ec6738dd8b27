// Acceptance suite: one pass/fail line per criterion, exit code equals the
// number of failed criteria. Every tolerance is pinned here.

#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "toespec/berezin.hpp"
#include "toespec/clifford.hpp"
#include "toespec/operators.hpp"
#include "toespec/segal_bargmann.hpp"
#include "toespec/spectral.hpp"
#include "toespec/symbols.hpp"
#include "toespec/triples.hpp"

using namespace toespec;

namespace {

int g_failures = 0;

void line(int criterion, bool pass, const std::string& text) {
  std::printf("[%s] criterion %2d: %s\n", pass ? "PASS" : "FAIL", criterion, text.c_str());
  if (!pass) ++g_failures;
}

void info(const std::string& text) { std::printf("       info: %s\n", text.c_str()); }

SpectrumStream tr_inv_stream(int n) {
  return SpectrumStream::analytic(
      [n](std::int64_t k) { return static_cast<double>(n + k + 1); },
      [n](std::int64_t k) { return degree_multiplicity(n, static_cast<int>(k)); });
}

char buf[512];

// 1. Exact spectrum of T_(1-|z|^2) on A^2(B^n): 1/(n+k+1) with multiplicity
//    binomial(n-1+k, n-1); analytic path to 1e-12, quadrature path to 1e-8.
void criterion_1() {
  double worst_analytic = 0.0, worst_quadrature = 0.0;
  bool mult_ok = true;
  RadialWeight flat = RadialWeight::power(0.0);
  for (int n : {1, 2, 3}) {
    for (int k = 0; k <= 40; ++k) {
      double expect = 1.0 / (n + k + 1.0);
      double analytic = radial_eigenvalue_beta(RadialPoly::defining_function(), 0.0, n, k);
      double quadrature = radial_eigenvalue_quadrature(
          [](double t) { return 1.0 - t * t; }, flat, n, k, 1e-10);
      worst_analytic = std::max(worst_analytic, std::abs(analytic - expect));
      worst_quadrature = std::max(worst_quadrature, std::abs(quadrature - expect));
      mult_ok = mult_ok && degree_multiplicity(n, k) == binomial(n - 1 + k, n - 1);
    }
  }
  bool pass = worst_analytic <= 1e-12 && worst_quadrature <= 1e-8 && mult_ok;
  std::snprintf(buf, sizeof buf,
                "T_r spectrum 1/(n+k+1), n in {1,2,3}, k <= 40  "
                "(analytic %.2e <= 1e-12, quadrature %.2e <= 1e-8, multiplicities %s)",
                worst_analytic, worst_quadrature, mult_ok ? "exact" : "WRONG");
  line(1, pass, buf);
}

// 2. CCR residual on the interior block at cutoff 20, n <= 3.
void criterion_2() {
  const double t = 1.0;
  double worst = 0.0;
  for (int n : {1, 2, 3}) {
    EnumPtr basis = make_enumeration(n, 20);
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        TruncatedOperator c = commutator(heisenberg_rep({HeisenbergKind::Q, j}, t, basis),
                                         heisenberg_rep({HeisenbergKind::P, k}, t, basis));
        if (j == k) c = subtract(c, scale(Complex(0.0, t), identity_operator(basis)));
        worst = std::max(worst, operator_norm(c).value);
      }
  }
  std::snprintf(buf, sizeof buf,
                "CCR [tau(Q_j), tau(P_k)] = it delta_jk on interior, n <= 3, cutoff 20  "
                "(max residual %.2e <= 1e-10)",
                worst);
  line(2, worst <= 1e-10, buf);
}

// 3. tau(N) diagonal t(|alpha| + n/2) to 1e-12.
void criterion_3() {
  double worst = 0.0;
  for (int n : {1, 2, 3})
    for (double t : {0.5, 1.0, 2.0}) {
      EnumPtr basis = make_enumeration(n, 12);
      TruncatedOperator num = heisenberg_rep({HeisenbergKind::Number, 0}, t, basis);
      for (int i = 0; i < basis->dimension(); ++i) {
        double expect = t * (basis->degree(i) + 0.5 * n);
        worst = std::max(worst, std::abs(num.matrix()(i, i).real() - expect));
      }
      Matrix offdiag = num.matrix();
      offdiag.diagonal().setZero();
      worst = std::max(worst, max_abs(offdiag));
    }
  std::snprintf(buf, sizeof buf, "tau(N) v = t(|alpha|+n/2) v  (max deviation %.2e <= 1e-12)",
                worst);
  line(3, worst <= 1e-12, buf);
}

// 4. Dirac operators do not depend on t.
void criterion_4() {
  double worst = 0.0;
  for (int n : {1, 2}) {
    EnumPtr basis = make_enumeration(n, 16);
    worst = std::max(worst,
                     operator_norm(subtract(dirac_bergman(1.0, basis), dirac_bergman(4.0, basis)))
                         .value);
  }
  std::snprintf(buf, sizeof buf, "Dirac t-independence ||D(1)-D(4)|| on interior  (%.2e <= 1e-10)",
                worst);
  line(4, worst <= 1e-10, buf);
}

// 5. Segal-Bargmann basis mapping W_t h_alpha = u_alpha and unitarity.
void criterion_5() {
  double map_err = 0.0, gram_err = 0.0;
  for (int n : {1, 2}) {
    map_err = std::max(map_err, sb_basis_mapping_error(n, 1.0, 6));
    gram_err = std::max(gram_err, sb_gram_residual(n, 1.0, 6));
  }
  std::snprintf(buf, sizeof buf,
                "Segal-Bargmann W h_alpha -> u_alpha, |alpha| <= 6, n <= 2  "
                "(coefficient error %.2e <= 1e-6, Gram residual %.2e <= 1e-6)",
                map_err, gram_err);
  line(5, map_err <= 1e-6 && gram_err <= 1e-6, buf);
}

// 6. Spectral dimension: Weyl slope n +- 0.05 from the analytic stream to
//    k = 1e5; Dirac norm-growth exponent 0.5 +- 0.05 over cutoffs 20..200.
void criterion_6() {
  bool pass = true;
  std::string detail;
  for (int n : {1, 2, 3}) {
    SpectrumStream s = tr_inv_stream(n);
    double hi = n + 100000 + 1.0;
    double slope = weyl_fit(s, hi / 10.0, hi, 40, 200000).exponent;
    pass = pass && std::abs(slope - n) <= 0.05;
    std::snprintf(buf, sizeof buf, "n=%d slope %.4f  ", n, slope);
    detail += buf;
  }
  std::vector<double> xs, ys;
  for (int cutoff = 20; cutoff <= 200; ++cutoff) {
    EnumPtr basis = make_enumeration(1, cutoff);
    xs.push_back(std::log(static_cast<double>(cutoff)));
    ys.push_back(std::log(operator_norm(dirac_bergman(1.0, basis)).value));
  }
  double growth = fit_line(xs, ys).slope;
  pass = pass && std::abs(growth - 0.5) <= 0.05;
  std::snprintf(buf, sizeof buf, "dirac growth %.4f", growth);
  detail += buf;
  line(6, pass, "Weyl slopes n +- 0.05 and Dirac norm growth 0.5 +- 0.05  (" + detail + ")");
}

// 7. Dixmier traces: logarithmic means at N = 1e6 against 1/n!, the
//    closed-form boundary integral, and the weighted variant.
void criterion_7() {
  SpectrumStream s1 = tr_inv_stream(1);
  SpectrumStream s2 = tr_inv_stream(2);
  double v1 = dixmier_log_average(s1, 1.0, 1000000);
  double v2 = dixmier_log_average(s2, 2.0, 1000000);
  double closed1 = dixmier_closed_form_ball(-1.0, 1.0, 1);
  double closed2 = dixmier_closed_form_ball(-2.0, 1.0, 2);
  double w1 = dixmier_log_average_weighted(
      s1, [](std::int64_t k) { return 1.0 + 1.0 / (k + 2.0); }, 1.0, 1000000);
  bool pass1 = std::abs(v1 - 1.0) <= 0.05;
  bool pass2 = std::abs(v2 - 0.5) <= 0.10 * 0.5;
  bool pass_closed = std::abs(closed1 - 1.0) <= 1e-10 && std::abs(closed2 - 0.5) <= 1e-10;
  bool pass_w = std::abs(w1 - 1.0) <= 0.05;
  std::snprintf(buf, sizeof buf,
                "Dixmier log-mean N=1e6: n=1 %.4f (within 5%% of 1) %s; n=2 %.4f (within 10%% of "
                "0.5) %s; closed form %.6f/%.6f %s; weighted %.4f %s",
                v1, pass1 ? "ok" : "FAIL", v2, pass2 ? "ok" : "FAIL", closed1, closed2,
                pass_closed ? "ok" : "FAIL", w1, pass_w ? "ok" : "FAIL");
  line(7, pass1 && pass2 && pass_closed && pass_w, buf);
  if (!pass2) {
    info("the n=2 logarithmic mean converges as 1/2 - 1.366/log N; the 10% band needs N ~ 1e12:");
    for (double bign : {1e9, 1e12}) {
      double v = dixmier_log_average(s2, 2.0, static_cast<std::int64_t>(bign));
      std::snprintf(buf, sizeof buf, "  n=2, N=%.0e -> %.4f (rel err %.1f%%)", bign, v,
                    100.0 * std::abs(v - 0.5) / 0.5);
      info(buf);
    }
  }
}

// 8. Bounded commutators and regularity for D = T_r^{-1}, a = T_z1 + T_z1^*.
void criterion_8() {
  TripleSpec spec = bergman_tr_triple(1, {10, 20, 30, 40, 50, 60});
  auto comm = commutator_boundedness(spec);
  auto reg = regularity_check(spec, 2);
  bool pass = true;
  double worst_var = 0.0;
  for (const auto& rep : comm)
    if (rep.generator.rfind("T_z1", 0) == 0) {
      pass = pass && rep.stabilizing;
      worst_var = std::max(worst_var, rep.last_variation);
    }
  for (const auto& rep : reg)
    if (rep.generator.rfind("T_z1", 0) == 0) {
      pass = pass && rep.stabilizing;
      worst_var = std::max(worst_var, rep.last_variation);
    }
  std::snprintf(buf, sizeof buf,
                "||[D,a]|| and delta^2 stabilize over cutoffs 10..60  "
                "(last-three variation %.3f%% <= 2%%)",
                100.0 * worst_var);
  line(8, pass, buf);
}

// 9. Doubled triple with U = polar(T_exp(z1)).
void criterion_9() {
  EnumPtr basis = make_enumeration(1, 60);
  TruncatedOperator d = diagonal_operator(basis, [](int k) { return k + 2.0; }, "T_r^-1");
  std::vector<Complex> taylor;
  double fact = 1.0;
  for (int k = 0; k <= 12; ++k) {
    taylor.push_back(Complex(1.0 / fact));
    fact *= k + 1.0;
  }
  TruncatedOperator u = polar_unitary(taylor, basis);
  DoubledReport rep = verify_doubled(build_doubled(d, u));
  bool pass = rep.unitarity_residual <= 1e-10 && rep.block_spectra_gap <= 1e-8 &&
              std::abs(rep.dimension_doubled - rep.dimension_base) <= 0.05;
  std::snprintf(buf, sizeof buf,
                "doubled triple: U*U residual %.2e <= 1e-10, block spectra gap %.2e <= 1e-8, "
                "dimension %.4f vs %.4f (+- 0.05)",
                rep.unitarity_residual, rep.block_spectra_gap, rep.dimension_doubled,
                rep.dimension_base);
  line(9, pass, buf);
}

// 10. Berezin tower: sup-norm law and semiclassical decay with frozen
//     regression values.
void criterion_10() {
  bool pass = true;
  // (a) quadrature against Beta-ratio for the level norms, and convergence
  double worst = 0.0;
  for (int n : {1, 2})
    for (int m : {0, 1, 2, 4, 8, 16, 32, 60}) {
      double q = radial_eigenvalue_quadrature([](double t) { return 1.0 - t * t; },
                                              RadialWeight::power(m), n, 0, 1e-10);
      double b = (m + 1.0) / (n + m + 1.0);
      worst = std::max(worst, std::abs(q - b));
    }
  pass = pass && worst <= 1e-8;
  // convergence of the level norms to sup f = 1
  std::vector<int> levels;
  for (int m = 0; m <= 256; m += 8) levels.push_back(m);
  SupNormReport sup = sup_norm_limit(RadialPoly::defining_function(), 1, levels, 16);
  bool conv = !sup.tail_limited;
  for (const auto& row : sup.rows) conv = conv && row.deviation <= 1.0 / (row.m + 1.0) + 1e-12;
  pass = pass && conv;
  // (b) expansion decay with oracle-frozen regression values
  std::vector<int> fitm = {64, 128, 256, 512, 1024};
  StarSeries ss = expansion_check(RadialPoly::defining_function(),
                                  RadialPoly::defining_function(), 1, fitm, 2048, 4);
  StarSeries s2 = expansion_check(RadialPoly::defining_function(), RadialPoly::rho_squared(), 1,
                                  fitm, 2048, 4);
  bool decay = ss.fitted_exponent >= 0.95 && s2.fitted_exponent >= 0.95;
  bool frozen = std::abs(ss.fitted_constant - 0.140033) <= 2e-3 &&
                std::abs(ss.rows.back().norm_e - 1.44440818e-04) <= 1e-9;
  pass = pass && decay && frozen;
  std::snprintf(buf, sizeof buf,
                "Berezin tower: norm law (quad vs Beta %.2e <= 1e-8, converges to 1 %s), decay "
                "exponents %.4f/%.4f >= 0.95, frozen c=%.6f E(1024)=%.6e %s",
                worst, conv ? "ok" : "FAIL", ss.fitted_exponent, s2.fitted_exponent,
                ss.fitted_constant, ss.rows.back().norm_e, frozen ? "ok" : "FAIL");
  line(10, pass, buf);
}

// 11. Symbol algebra property suite plus the order/decay cross-check.
void criterion_11() {
  SphereContext ctx{2};
  auto pts = ctx.sample_points(32);
  std::mt19937 gen(20240);
  std::uniform_real_distribution<double> ord(-3.0, 3.0);
  std::uniform_real_distribution<double> mag(0.2, 4.0);
  std::uniform_real_distribution<double> phase(0.0, 6.28318);
  int trials = 0, passed = 0;
  for (int trial = 0; trial < 500; ++trial) {
    double qa = ord(gen), qb = ord(gen);
    std::complex<double> ca = std::polar(mag(gen), phase(gen));
    std::complex<double> cb = std::polar(mag(gen), phase(gen));
    GtoSymbol a = GtoSymbol::constant(qa, ca);
    GtoSymbol b = GtoSymbol::constant(qb, cb);
    GtoSymbol p = mul(a, b);
    GtoSymbol inv = parametrix(a, ctx);
    bool ok = p.order == qa + qb && inv.order == -qa && is_elliptic(p, ctx) &&
              is_elliptic(inv, ctx);
    GtoSymbol unit = mul(a, inv);
    for (const auto& x : pts) {
      ok = ok && std::abs(p.coeff(x) - ca * cb) <= 1e-12 * std::abs(ca * cb);
      ok = ok && std::abs(unit.coeff(x) - 1.0) <= 1e-12;
    }
    ++trials;
    if (ok) ++passed;
  }
  // psi(T_r): symbol order -1 against the eigenvalue-decay slope
  GtoSymbol psi_r = psi_Tf_symbol(1, [](const SpherePoint&) {
    return std::complex<double>(SphereContext::normal_derivative_r);
  }, 0.0);
  std::vector<double> xs, ys;
  for (int k = 100; k <= 10000; k = static_cast<int>(k * 1.3)) {
    xs.push_back(std::log(static_cast<double>(k)));
    ys.push_back(std::log(1.0 / (1.0 + k + 1.0)));
  }
  double slope = fit_line(xs, ys).slope;
  bool cross = std::abs(slope - psi_r.order) <= 0.02;
  bool pass = passed == trials && cross;
  std::snprintf(buf, sizeof buf,
                "symbol algebra property suite %d/%d passed; psi(T_r) order %.1f vs eigenvalue "
                "decay slope %.4f (+- 0.02)",
                passed, trials, psi_r.order, slope);
  line(11, pass, buf);
}

}  // namespace

int main() {
  std::printf("acceptance suite\n");
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  std::printf("%d of 11 criteria failed\n", g_failures);
  return g_failures;
}
