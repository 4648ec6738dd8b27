// Batch verification CLI: every subcommand emits one machine-readable
// document {config, suites:[{name,status,columns,rows,metrics}]} as JSON or
// CSV. Floats are printed with 17 significant digits so identical configs
// produce byte-identical output. Exit code 0 iff every suite passed.

#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "toespec/berezin.hpp"
#include "toespec/clifford.hpp"
#include "toespec/operators.hpp"
#include "toespec/segal_bargmann.hpp"
#include "toespec/spectral.hpp"
#include "toespec/symbols.hpp"
#include "toespec/triples.hpp"

using namespace toespec;

namespace {

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      default: out += c;
    }
  }
  return out;
}

struct Suite {
  std::string name;
  std::string status = "pass";  // pass | fail | error
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::vector<std::pair<std::string, double>> metrics;
  std::vector<std::pair<std::string, std::string>> notes;

  void metric(const std::string& key, double value) { metrics.emplace_back(key, value); }
  void note(const std::string& key, const std::string& value) { notes.emplace_back(key, value); }
  void require(bool ok) {
    if (!ok && status == "pass") status = "fail";
  }
};

struct RunConfig {
  int n = 1;
  int cutoff = 30;
  double m_w = 0.0;
  double t = 1.0;
  std::string format = "json";
  std::string out_path;
  unsigned seed = 20240;
  std::vector<std::string> tol_overrides;  // name=value

  double tol(const std::string& name, double fallback) const {
    for (const std::string& kv : tol_overrides) {
      auto eq = kv.find('=');
      if (eq != std::string::npos && kv.substr(0, eq) == name)
        return std::stod(kv.substr(eq + 1));
    }
    return fallback;
  }

  void validate() const {
    if (n < 1) throw CLI::ValidationError("--n must be >= 1");
    if (cutoff < 2) throw CLI::ValidationError("--cutoff must be >= 2");
    if (m_w <= -1.0) throw CLI::ValidationError("--m-w must be > -1");
    if (t <= 0.0) throw CLI::ValidationError("--t must be > 0");
    if (format != "json" && format != "csv")
      throw CLI::ValidationError("--format must be json or csv");
  }
};

std::string render_json(const RunConfig& cfg, const std::vector<Suite>& suites) {
  std::ostringstream o;
  o << "{\n  \"config\": {";
  o << "\"n\": " << cfg.n << ", \"cutoff\": " << cfg.cutoff << ", \"m_w\": " << fmt17(cfg.m_w)
    << ", \"t\": " << fmt17(cfg.t) << ", \"seed\": " << cfg.seed << ", \"format\": \""
    << cfg.format << "\"},\n  \"suites\": [\n";
  for (size_t s = 0; s < suites.size(); ++s) {
    const Suite& su = suites[s];
    o << "    {\"name\": \"" << json_escape(su.name) << "\", \"status\": \"" << su.status
      << "\",\n     \"columns\": [";
    for (size_t c = 0; c < su.columns.size(); ++c)
      o << (c ? ", " : "") << '"' << json_escape(su.columns[c]) << '"';
    o << "],\n     \"rows\": [";
    for (size_t r = 0; r < su.rows.size(); ++r) {
      o << (r ? ", " : "") << "[";
      for (size_t c = 0; c < su.rows[r].size(); ++c)
        o << (c ? ", " : "") << fmt17(su.rows[r][c]);
      o << "]";
    }
    o << "],\n     \"metrics\": {";
    bool first = true;
    for (const auto& [k, v] : su.metrics) {
      o << (first ? "" : ", ") << '"' << json_escape(k) << "\": " << fmt17(v);
      first = false;
    }
    for (const auto& [k, v] : su.notes) {
      o << (first ? "" : ", ") << '"' << json_escape(k) << "\": \"" << json_escape(v) << '"';
      first = false;
    }
    o << "}}" << (s + 1 < suites.size() ? "," : "") << "\n";
  }
  o << "  ]\n}\n";
  return o.str();
}

std::string render_csv(const RunConfig& cfg, const std::vector<Suite>& suites) {
  std::ostringstream o;
  o << "# config,n=" << cfg.n << ",cutoff=" << cfg.cutoff << ",m_w=" << fmt17(cfg.m_w)
    << ",t=" << fmt17(cfg.t) << ",seed=" << cfg.seed << "\n";
  for (const Suite& su : suites) {
    o << "# suite," << su.name << ",status," << su.status;
    for (const auto& [k, v] : su.metrics) o << "," << k << "," << fmt17(v);
    o << "\n";
    o << "# columns,suite";
    for (const std::string& c : su.columns) o << "," << c;
    o << "\n";
    for (const auto& row : su.rows) {
      o << su.name;
      for (double v : row) o << "," << fmt17(v);
      o << "\n";
    }
  }
  return o.str();
}

// ---- suite builders -------------------------------------------------------

Suite spectrum_suite(const RunConfig& cfg, const std::string& op) {
  Suite su;
  su.name = "spectrum:" + op;
  su.columns = {"k", "eigenvalue", "multiplicity"};
  if (op == "t_r" || op.rfind("t_radial:", 0) == 0) {
    RadialPoly f = RadialPoly::defining_function();
    if (op.rfind("t_radial:", 0) == 0) {
      std::vector<double> coeffs;
      std::istringstream in(op.substr(9));
      std::string tok;
      while (std::getline(in, tok, ',')) coeffs.push_back(std::stod(tok));
      f = RadialPoly(coeffs);
    }
    for (int k = 0; k <= cfg.cutoff; ++k)
      su.rows.push_back({static_cast<double>(k), radial_eigenvalue_beta(f, cfg.m_w, cfg.n, k),
                         static_cast<double>(degree_multiplicity(cfg.n, k))});
  } else if (op == "euler") {
    for (int k = 0; k <= cfg.cutoff; ++k)
      su.rows.push_back({static_cast<double>(k), static_cast<double>(k),
                         static_cast<double>(degree_multiplicity(cfg.n, k))});
  } else if (op == "dirac") {
    EnumPtr basis = make_enumeration(cfg.n, cfg.cutoff);
    SpectrumStream s = spectrum_of(dirac_bergman(cfg.t, basis));
    for (std::int64_t k = 0; k < s.level_count(); ++k)
      su.rows.push_back({static_cast<double>(k), s.value(k),
                         static_cast<double>(s.multiplicity(k))});
  } else {
    throw CLI::ValidationError("unknown operator: " + op +
                               " (use t_r, t_radial:<coeffs>, dirac, euler)");
  }
  su.metric("count", static_cast<double>(su.rows.size()));
  return su;
}

Suite ccr_suite(const RunConfig& cfg) {
  Suite su;
  su.name = "ccr";
  su.columns = {"kind_a", "index_a", "kind_b", "index_b", "residual"};
  const double tol = cfg.tol("ccr", 1e-10);
  EnumPtr basis = make_enumeration(cfg.n, cfg.cutoff);
  std::vector<std::pair<HeisenbergElement, double>> gens;  // element, kind code
  for (int j = 0; j < cfg.n; ++j) gens.push_back({{HeisenbergKind::Q, j}, 0.0});
  for (int j = 0; j < cfg.n; ++j) gens.push_back({{HeisenbergKind::P, j}, 1.0});
  gens.push_back({{HeisenbergKind::T, 0}, 2.0});
  const size_t count = gens.size();
  // residuals are antisymmetric in the pair, [X,X] = 0, and tau(T) is a
  // multiple of the identity; only the remaining upper triangle needs matrices
  std::vector<std::vector<double>> residual(count, std::vector<double>(count, 0.0));
  for (size_t a = 0; a < count; ++a)
    for (size_t b = a + 1; b < count; ++b) {
      const auto& ha = gens[a].first;
      const auto& hb = gens[b].first;
      double res = 0.0;
      if (ha.kind != HeisenbergKind::T && hb.kind != HeisenbergKind::T) {
        TruncatedOperator c = commutator(heisenberg_rep(ha, cfg.t, basis),
                                         heisenberg_rep(hb, cfg.t, basis));
        // expected: [Q_j, P_k] = i t delta_jk, all other pairs vanish
        if (ha.kind == HeisenbergKind::Q && hb.kind == HeisenbergKind::P && ha.j == hb.j)
          c = subtract(c, scale(Complex(0.0, cfg.t), identity_operator(basis)));
        res = operator_norm(c).value;
      }
      residual[a][b] = res;
      residual[b][a] = res;
    }
  double worst = 0.0;
  for (size_t a = 0; a < count; ++a)
    for (size_t b = 0; b < count; ++b) {
      worst = std::max(worst, residual[a][b]);
      su.rows.push_back({gens[a].second, static_cast<double>(gens[a].first.j), gens[b].second,
                         static_cast<double>(gens[b].first.j), residual[a][b]});
    }
  su.metric("max_residual", worst);
  su.metric("tolerance", tol);
  su.require(worst <= tol);
  return su;
}

Suite sb_suite(const RunConfig& cfg) {
  Suite su;
  su.name = "sb-check";
  su.columns = {"degree", "basis_mapping_error"};
  const double tol_map = cfg.tol("sb", 1e-6);
  const double tol_tw = cfg.tol("sb-intertwine", 1e-8);
  const int max_deg = 6;
  SBTransform sb(cfg.n, cfg.t, 64);
  BasisEnumeration basis(cfg.n, max_deg);
  std::vector<double> per_degree(max_deg + 1, 0.0);
  for (int a = 0; a < basis.dimension(); ++a) {
    std::vector<Cx> taylor =
        sb.forward_coefficients(GaussianPolynomial::hermite(basis[a], cfg.t), basis);
    double err = 0.0;
    for (int g = 0; g < basis.dimension(); ++g) {
      Cx expected = (g == a) ? Cx(fock_constant(basis[a], cfg.t)) : Cx(0.0);
      err = std::max(err, std::abs(taylor[static_cast<size_t>(g)] - expected));
    }
    per_degree[static_cast<size_t>(basis[a].degree())] =
        std::max(per_degree[static_cast<size_t>(basis[a].degree())], err);
  }
  double worst = 0.0;
  for (int d = 0; d <= max_deg; ++d) {
    su.rows.push_back({static_cast<double>(d), per_degree[static_cast<size_t>(d)]});
    worst = std::max(worst, per_degree[static_cast<size_t>(d)]);
  }
  double gram = sb_gram_residual(cfg.n, cfg.t, max_deg);
  IntertwiningReport rep = intertwining_check(cfg.n, cfg.t, max_deg);
  su.metric("basis_mapping_error", worst);
  su.metric("gram_residual", gram);
  su.metric("intertwine_x", rep.residual_x);
  su.metric("intertwine_d", rep.residual_d);
  su.metric("intertwine_number", rep.residual_number);
  su.metric("intertwine_raising", rep.residual_raising);
  su.require(worst <= tol_map && gram <= tol_map && rep.max_residual() <= tol_tw);
  return su;
}

Suite weyl_suite(const RunConfig& cfg) {
  Suite su;
  su.name = "weyl";
  su.columns = {"lambda", "counting"};
  const double tol = cfg.tol("weyl", 0.05);
  const int n = cfg.n;
  SpectrumStream s = SpectrumStream::analytic(
      [n](std::int64_t k) { return static_cast<double>(n + k + 1); },
      [n](std::int64_t k) { return degree_multiplicity(n, static_cast<int>(k)); });
  double hi = n + 100000 + 1.0, lo = hi / 10.0;
  for (int i = 0; i < 40; ++i) {
    double lam = lo * std::pow(hi / lo, i / 39.0);
    su.rows.push_back({lam, static_cast<double>(counting(s, lam, 200000))});
  }
  WeylFit fit = weyl_fit(s, lo, hi, 40, 200000);
  su.metric("exponent", fit.exponent);
  su.metric("prefactor", fit.prefactor);
  su.metric("fit_residual", fit.residual);
  su.metric("expected_exponent", n);
  su.require(std::abs(fit.exponent - n) <= tol);
  return su;
}

Suite dixmier_suite(const RunConfig& cfg, std::int64_t big_n) {
  Suite su;
  su.name = "dixmier";
  su.columns = {"N", "log_average"};
  const int n = cfg.n;
  const double target = 1.0 / std::exp(log_factorial(n));
  const double tol_rel = cfg.tol("dixmier", n == 1 ? 0.05 : 0.10);
  SpectrumStream s = SpectrumStream::analytic(
      [n](std::int64_t k) { return static_cast<double>(n + k + 1); },
      [n](std::int64_t k) { return degree_multiplicity(n, static_cast<int>(k)); });
  double last = 0.0;
  std::int64_t reached = 0;
  for (std::int64_t N = 1000; N <= big_n; N *= 10) {
    last = dixmier_log_average(s, n, N);
    su.rows.push_back({static_cast<double>(N), last});
    reached = N;
  }
  if (reached != big_n && big_n >= 1000) {
    last = dixmier_log_average(s, n, big_n);
    su.rows.push_back({static_cast<double>(big_n), last});
  }
  double closed = dixmier_closed_form_ball(-static_cast<double>(n), 1.0, n);
  double weighted = dixmier_log_average_weighted(
      s, [n](std::int64_t k) { return 1.0 + 1.0 / (n + k + 1.0); }, n, big_n);
  su.metric("log_average", last);
  su.metric("closed_form", closed);
  su.metric("target", target);
  su.metric("weighted_log_average", weighted);
  su.metric("tolerance_rel", tol_rel);
  su.require(std::abs(closed - target) <= 1e-10);
  su.require(std::abs(last - target) <= tol_rel * target);
  su.require(std::abs(weighted - target) <= tol_rel * target);
  return su;
}

std::vector<int> default_sweep(int cutoff) {
  std::vector<int> sweep;
  for (int c = 10; c <= std::max(60, cutoff); c += 10) sweep.push_back(c);
  return sweep;
}

Suite triple_suite(const RunConfig& cfg, const std::string& which) {
  Suite su;
  su.name = "verify-triple:" + which;
  su.columns = {"generator", "cutoff", "commutator_norm"};
  const double var_tol = cfg.tol("commutator-var", 0.02);
  std::vector<int> sweep = default_sweep(cfg.cutoff);

  if (which == "doubled") {
    EnumPtr basis = make_enumeration(cfg.n, std::max(cfg.cutoff, 30));
    const int n = cfg.n;
    TruncatedOperator d = diagonal_operator(
        basis, [n](int k) { return n + k + 1.0; }, "T_r^-1");
    std::vector<Complex> taylor;
    double fact = 1.0;
    for (int k = 0; k <= 12; ++k) {
      taylor.push_back(Complex(1.0 / fact));
      fact *= k + 1.0;
    }
    TruncatedOperator u = polar_unitary(taylor, basis);
    DoubledReport rep = verify_doubled(build_doubled(d, u));
    su.columns = {"unitarity_residual", "block_spectra_gap", "dimension_base",
                  "dimension_doubled"};
    su.rows.push_back({rep.unitarity_residual, rep.block_spectra_gap, rep.dimension_base,
                       rep.dimension_doubled});
    su.metric("hermiticity_residual", rep.hermiticity_residual);
    su.metric("square_offdiag", rep.square_offdiag);
    su.require(rep.unitarity_residual <= 1e-10 && rep.block_spectra_gap <= 1e-8 &&
               std::abs(rep.dimension_doubled - rep.dimension_base) <= 0.05);
    return su;
  }

  TripleSpec spec;
  if (which == "bergman-tr") {
    spec = bergman_tr_triple(cfg.n, sweep);
  } else if (which == "hardy-model") {
    spec = hardy_model_triple(cfg.n, sweep);
  } else if (which == "heisenberg-dirac") {
    spec = heisenberg_dirac_triple(cfg.n, cfg.t, sweep);
  } else {
    throw CLI::ValidationError("unknown triple: " + which +
                               " (use hardy-model, bergman-tr, doubled, heisenberg-dirac)");
  }
  auto comm = commutator_boundedness(spec);
  auto reg = regularity_check(spec, 2);
  bool all_ok = true;
  double worst_var = 0.0;
  for (size_t g = 0; g < comm.size(); ++g) {
    for (const auto& row : comm[g].rows)
      su.rows.push_back({static_cast<double>(g), static_cast<double>(row.cutoff), row.norm});
    su.note("generator_" + std::to_string(g), comm[g].generator);
    all_ok = all_ok && comm[g].last_variation <= var_tol;
    worst_var = std::max(worst_var, comm[g].last_variation);
  }
  for (size_t g = 0; g < reg.size(); ++g) {
    for (const auto& row : reg[g].rows)
      su.rows.push_back({static_cast<double>(comm.size() + g), static_cast<double>(row.cutoff),
                         row.norm});
    su.note("generator_" + std::to_string(comm.size() + g), reg[g].generator);
    all_ok = all_ok && reg[g].last_variation <= var_tol;
    worst_var = std::max(worst_var, reg[g].last_variation);
  }
  // compact resolvent on the largest cutoff
  TruncatedOperator d = spec.dirac(sweep.back());
  std::vector<int> tails;
  for (int k = 0; k <= d.interior_degree() * 2 / 3; k += std::max(1, d.interior_degree() / 6))
    tails.push_back(k);
  ResolventReport res = compact_resolvent_check(d, tails);
  su.metric("last_three_variation", worst_var);
  su.metric("resolvent_growth_exponent", res.growth_exponent);
  su.metric("resolvent_diverges", res.diverges ? 1.0 : 0.0);
  su.require(all_ok && res.diverges);
  return su;
}

Suite berezin_supnorm_suite(const RunConfig& cfg) {
  Suite su;
  su.name = "berezin-supnorm";
  su.columns = {"m", "norm", "deviation"};
  std::vector<int> levels;
  for (int m = 0; m <= 256; m += 8) levels.push_back(m);
  SupNormReport rep = sup_norm_limit(RadialPoly::defining_function(), cfg.n, levels, 16);
  bool ok = !rep.tail_limited;
  for (const auto& row : rep.rows) {
    su.rows.push_back({static_cast<double>(row.m), row.norm, row.deviation});
    ok = ok && row.deviation <= static_cast<double>(cfg.n) / (row.m + 1.0) + 1e-12;
  }
  su.metric("sup_f", rep.sup_f);
  su.metric("fitted_rate", rep.fitted_rate);
  su.require(ok);
  return su;
}

Suite berezin_expansion_suite(const RunConfig& cfg) {
  Suite su;
  su.name = "berezin-expansion";
  su.columns = {"m", "remainder_norm"};
  const double tol_exp = cfg.tol("berezin-exponent", 0.95);
  std::vector<int> levels = {64, 128, 256, 512, 1024};
  StarSeries ss = expansion_check(RadialPoly::defining_function(),
                                  RadialPoly::defining_function(), cfg.n, levels, 2048, 8);
  for (const auto& row : ss.rows)
    su.rows.push_back({static_cast<double>(row.m), row.norm_e});
  su.metric("fitted_exponent", ss.fitted_exponent);
  su.metric("fitted_constant", ss.fitted_constant);
  for (size_t k = 0; k < ss.c1_estimates.size(); ++k)
    su.metric("c1_degree_" + std::to_string(k), ss.c1_estimates[k]);
  su.require(ss.fitted_exponent >= tol_exp);
  return su;
}

Suite symbols_suite(const RunConfig& cfg) {
  Suite su;
  su.name = "symbols";
  su.columns = {"trials", "passed"};
  SphereContext ctx{cfg.n};
  auto pts = ctx.sample_points(32, cfg.seed);
  std::mt19937 gen(cfg.seed);
  std::uniform_real_distribution<double> ord(-3.0, 3.0);
  std::uniform_real_distribution<double> mag(0.2, 4.0);
  std::uniform_real_distribution<double> phase(0.0, 6.28318);
  int trials = 500, passed = 0;
  for (int trial = 0; trial < trials; ++trial) {
    double qa = ord(gen), qb = ord(gen);
    std::complex<double> ca = std::polar(mag(gen), phase(gen));
    std::complex<double> cb = std::polar(mag(gen), phase(gen));
    GtoSymbol a = GtoSymbol::constant(qa, ca);
    GtoSymbol b = GtoSymbol::constant(qb, cb);
    GtoSymbol p = mul(a, b);
    GtoSymbol inv = parametrix(a, ctx);
    GtoSymbol unit = mul(a, inv);
    bool ok = p.order == qa + qb && inv.order == -qa && is_elliptic(p, ctx) &&
              is_elliptic(inv, ctx);
    for (const auto& x : pts) {
      ok = ok && std::abs(p.coeff(x) - ca * cb) <= 1e-12 * std::abs(ca * cb);
      ok = ok && std::abs(unit.coeff(x) - 1.0) <= 1e-12;
    }
    if (ok) ++passed;
  }
  su.rows.push_back({static_cast<double>(trials), static_cast<double>(passed)});
  GtoSymbol lam = lambda_symbol(RadialWeight::power(cfg.m_w));
  su.metric("lambda_order", lam.order);
  su.metric("lambda_coeff", lam.coeff(pts[0]).real());
  GtoSymbol dsym = dirac_component_symbol(0, cfg.t);
  su.metric("dirac_component_order", dsym.order);
  GtoSymbol psi_r = psi_Tf_symbol(1, [](const SpherePoint&) {
    return std::complex<double>(SphereContext::normal_derivative_r);
  }, cfg.m_w);
  su.metric("psi_r_order", psi_r.order);
  su.metric("psi_r_coeff_abs", std::abs(psi_r.coeff(pts[0])));
  su.metric("normal_derivative_order", weighted_normal_derivative_symbol().order);
  su.metric("normal_derivative_coeff", weighted_normal_derivative_symbol().coeff(pts[0]).real());
  // eigenvalue-decay cross-check of the psi(T_r) order
  std::vector<double> xs, ys;
  for (int k = 100; k <= 10000; k = static_cast<int>(k * 1.3)) {
    xs.push_back(std::log(static_cast<double>(k)));
    ys.push_back(std::log((cfg.m_w + 1.0) /
                          std::exp(std::lgamma(cfg.n + k + cfg.m_w + 2.0) -
                                   std::lgamma(cfg.n + k + cfg.m_w + 1.0))));
  }
  double slope = fit_line(xs, ys).slope;
  su.metric("eigenvalue_decay_slope", slope);
  su.require(passed == trials && std::abs(slope - psi_r.order) <= 0.02);
  return su;
}

int emit(const RunConfig& cfg, const std::vector<Suite>& suites) {
  std::string text = cfg.format == "json" ? render_json(cfg, suites) : render_csv(cfg, suites);
  if (cfg.out_path.empty()) {
    std::fputs(text.c_str(), stdout);
  } else {
    std::filesystem::path p(cfg.out_path);
    if (p.is_relative()) {
      const char* dir = std::getenv("TOESPEC_OUT_DIR");
      if (dir && *dir) p = std::filesystem::path(dir) / p;
    }
    std::ofstream out(p);
    if (!out) {
      std::fprintf(stderr, "cannot open output path %s\n", p.string().c_str());
      return 2;
    }
    out << text;
  }
  for (const Suite& su : suites)
    if (su.status != "pass") return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-truncation laboratory for Toeplitz operators on the unit ball"};
  app.set_config("--config", "", "flat key=value config file mirroring the flags");
  RunConfig cfg;
  app.add_option("--n", cfg.n, "complex dimension")->capture_default_str();
  app.add_option("--cutoff", cfg.cutoff, "max total degree of the truncation")
      ->capture_default_str();
  app.add_option("--m-w", cfg.m_w, "radial weight exponent")->capture_default_str();
  app.add_option("--t", cfg.t, "representation parameter")->capture_default_str();
  app.add_option("--format", cfg.format, "output format: json or csv")->capture_default_str();
  app.add_option("--out", cfg.out_path,
                 "output path (relative paths resolve under TOESPEC_OUT_DIR); stdout if empty");
  app.add_option("--seed", cfg.seed, "seed for randomized property sampling")
      ->capture_default_str();
  app.add_option("--tol", cfg.tol_overrides, "tolerance override name=value (repeatable)");

  std::string op = "t_r";
  std::string triple = "bergman-tr";
  double big_n = 1e6;

  CLI::App* sc_spectrum = app.add_subcommand("spectrum", "eigenvalue table of a named operator");
  sc_spectrum->add_option("--op", op, "t_r | t_radial:<c0,c1,...> | dirac | euler")
      ->capture_default_str();
  CLI::App* sc_ccr = app.add_subcommand("ccr", "commutation-relation residual matrix");
  CLI::App* sc_sb = app.add_subcommand("sb-check", "Segal-Bargmann mapping and unitarity");
  CLI::App* sc_weyl = app.add_subcommand("weyl", "counting-function samples and fitted slope");
  CLI::App* sc_dix = app.add_subcommand("dixmier", "logarithmic means against the closed form");
  sc_dix->add_option("--N", big_n, "largest partial-sum length")->capture_default_str();
  CLI::App* sc_triple = app.add_subcommand("verify-triple", "spectral-triple harness");
  sc_triple->add_option("--triple", triple, "hardy-model | bergman-tr | doubled | heisenberg-dirac")
      ->capture_default_str();
  CLI::App* sc_ber = app.add_subcommand("berezin", "weighted tower sup-norm and expansion decay");
  CLI::App* sc_sym = app.add_subcommand("symbols", "symbol-algebra property run and formulas");
  for (CLI::App* sc : {sc_spectrum, sc_ccr, sc_sb, sc_weyl, sc_dix, sc_triple, sc_ber, sc_sym})
    sc->fallthrough();
  app.require_subcommand(1);

  CLI11_PARSE(app, argc, argv);

  std::vector<Suite> suites;
  try {
    cfg.validate();
    if (sc_spectrum->parsed()) suites.push_back(spectrum_suite(cfg, op));
    if (sc_ccr->parsed()) suites.push_back(ccr_suite(cfg));
    if (sc_sb->parsed()) suites.push_back(sb_suite(cfg));
    if (sc_weyl->parsed()) suites.push_back(weyl_suite(cfg));
    if (sc_dix->parsed())
      suites.push_back(dixmier_suite(cfg, static_cast<std::int64_t>(big_n)));
    if (sc_triple->parsed()) suites.push_back(triple_suite(cfg, triple));
    if (sc_ber->parsed()) {
      suites.push_back(berezin_supnorm_suite(cfg));
      suites.push_back(berezin_expansion_suite(cfg));
    }
    if (sc_sym->parsed()) suites.push_back(symbols_suite(cfg));
  } catch (const CLI::ValidationError& e) {
    std::fprintf(stderr, "invalid config: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    // numerical failure: emit what we have with an error status
    Suite err;
    err.name = suites.empty() ? "run" : suites.back().name + ":continuation";
    err.status = "error";
    err.note("message", e.what());
    suites.push_back(std::move(err));
    emit(cfg, suites);
    return 3;
  }
  return emit(cfg, suites);
}
