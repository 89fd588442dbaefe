#pragma once

// Command implementations behind the command-line front end: configuration
// parsing and validation, and one report builder per subcommand. Kept apart
// from main() so tests can drive commands in-process.

#include <complex>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "howe/clifford.hpp"
#include "howe/contravariant.hpp"
#include "howe/harmonics.hpp"
#include "howe/numeric.hpp"
#include "howe/relations.hpp"
#include "howe/report.hpp"

namespace howe {

// Configuration problems exit with code 2; check failures with code 1.
class ConfigError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr long kDegreeCap = 24;

struct RunConfig {
  std::string command;  // verify | spectrum | spinor | gram
  long m = 3;
  std::string tau = "triv";
  std::string c;       // sets both reflection classes; empty = unset
  std::string c_even;  // per-class override, defaults to --c (or 0)
  std::string c_odd;
  std::string epsilon = "0";
  long max_degree = 10;
  std::string suite = "all";  // verify only: sl2 | u11 | u21 | scasimir | all
  std::string output = "json";
  std::string out_path;  // empty = stdout
};

namespace detail_cli {

inline Rational parse_rational(const std::string& flag, const std::string& text) {
  try {
    return Rational(text);
  } catch (const std::exception&) {
    throw ConfigError(flag + ": '" + text + "' is not a rational (use p or p/q)");
  }
}

inline Irrep parse_tau(const std::string& text, long m) {
  Irrep tau;
  if (text == "triv") tau = Irrep::triv();
  else if (text == "sign") tau = Irrep::sign();
  else if (text == "chi0") tau = Irrep::chi0();
  else if (text == "chi1") tau = Irrep::chi1();
  else if (text.rfind("rho:", 0) == 0) {
    try {
      tau = Irrep::rho(std::stol(text.substr(4)));
    } catch (const std::exception&) {
      throw ConfigError("--tau: '" + text + "' has no valid index after rho:");
    }
  } else {
    throw ConfigError("--tau: unknown type '" + text +
                      "' (use triv, sign, chi0, chi1, or rho:u)");
  }
  try {
    tau.validate(m);
  } catch (const std::exception& e) {
    throw ConfigError(std::string("--tau: ") + e.what());
  }
  return tau;
}

inline std::string tau_label(const Irrep& tau) {
  switch (tau.kind) {
    case Irrep::Kind::Triv: return "triv";
    case Irrep::Kind::Sign: return "sign";
    case Irrep::Kind::Chi0: return "chi0";
    case Irrep::Kind::Chi1: return "chi1";
    default: return "rho:" + std::to_string(tau.u);
  }
}

struct Resolved {
  long m = 3;
  Irrep tau;
  ParamValues params;
  Rational eps;
  long max_degree = 10;
};

inline Resolved resolve(const RunConfig& cfg) {
  if (cfg.m < 3) throw ConfigError("m must be >= 3");
  if (cfg.max_degree < 0 || cfg.max_degree > kDegreeCap)
    throw ConfigError("--max-degree must be between 0 and " + std::to_string(kDegreeCap));
  if (cfg.output != "json" && cfg.output != "csv")
    throw ConfigError("--output: unknown format '" + cfg.output + "' (use json or csv)");
  if (!cfg.c.empty() && (!cfg.c_even.empty() || !cfg.c_odd.empty()))
    throw ConfigError("--c cannot be combined with --c-even/--c-odd");

  Resolved r;
  r.m = cfg.m;
  r.tau = parse_tau(cfg.tau, cfg.m);
  r.eps = parse_rational("--epsilon", cfg.epsilon);
  r.max_degree = cfg.max_degree;

  Rational ce(0), co(0);
  if (!cfg.c.empty()) ce = co = parse_rational("--c", cfg.c);
  if (!cfg.c_even.empty()) ce = parse_rational("--c-even", cfg.c_even);
  if (!cfg.c_odd.empty()) co = parse_rational("--c-odd", cfg.c_odd);
  try {
    r.params = ParamValues(cfg.m, ce, co);
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }
  return r;
}

inline KeyValues config_echo(const RunConfig& cfg, const Resolved& r) {
  KeyValues kv;
  kv.emplace_back("command", cfg.command);
  kv.emplace_back("version", kVersion);
  kv.emplace_back("m", std::to_string(r.m));
  kv.emplace_back("tau", tau_label(r.tau));
  kv.emplace_back("c_even", r.params.c_even.str());
  kv.emplace_back("c_odd", r.params.c_odd.str());
  kv.emplace_back("epsilon", r.eps.str());
  kv.emplace_back("max_degree", std::to_string(r.max_degree));
  if (cfg.command == "verify") kv.emplace_back("suite", cfg.suite);
  return kv;
}

// The anchor of a relation check is the algebraic statement itself: the
// part of its id after the suite prefix.
inline void append_checks(Report& rep, const std::vector<RelationCheck>& checks) {
  for (const RelationCheck& rc : checks) {
    std::size_t slash = rc.id.find('/');
    std::string anchor = slash == std::string::npos ? rc.id : rc.id.substr(slash + 1);
    ReportEntry& e = rep.add(rc.id, anchor);
    e.status = rc.pass ? EntryStatus::Pass : EntryStatus::Fail;
    e.note = rc.detail;
    e.first_fail_degree = rc.first_fail_degree;
  }
}

inline std::string rational_list(const std::vector<Rational>& xs) {
  std::vector<std::string> parts;
  parts.reserve(xs.size());
  for (const Rational& x : xs) parts.push_back(x.str());
  return join(parts);
}

inline std::string double_list(const std::vector<double>& xs) {
  std::vector<std::string> parts;
  parts.reserve(xs.size());
  for (double x : xs) parts.push_back(format_double(x));
  return join(parts);
}

inline std::string complex_str(const std::complex<double>& z) {
  std::string s = format_double(z.real());
  if (z.imag() >= 0) s += "+";
  return s + format_double(z.imag()) + "i";
}

inline std::string complex_list(const std::vector<std::complex<double>>& xs) {
  std::vector<std::string> parts;
  parts.reserve(xs.size());
  for (const auto& z : xs) parts.push_back(complex_str(z));
  return join(parts);
}

}  // namespace detail_cli

// verify: run the selected exact relation suites, one entry per identity.
inline Report run_verify(const RunConfig& cfg, const detail_cli::Resolved& r) {
  const std::string& s = cfg.suite;
  if (s != "sl2" && s != "u11" && s != "u21" && s != "scasimir" && s != "all")
    throw ConfigError("--suite: unknown suite '" + s +
                      "' (use sl2, u11, u21, scasimir, or all)");
  ModuleContext ctx(r.m, r.tau, r.params, r.max_degree);
  Report rep;
  rep.config = detail_cli::config_echo(cfg, r);
  if (s == "sl2" || s == "all") detail_cli::append_checks(rep, verify_sl2_relations(ctx));
  if (s == "u11" || s == "all") detail_cli::append_checks(rep, verify_u11_relations(ctx, r.eps));
  if (s == "all") detail_cli::append_checks(rep, verify_harmonic_invariants(ctx, r.eps));
  if (s == "u21" || s == "all") detail_cli::append_checks(rep, verify_superalgebra(ctx));
  if (s == "scasimir" || s == "all") detail_cli::append_checks(rep, verify_scasimir(ctx));
  return rep;
}

// spectrum: per-degree table of the deformed angular operator on harmonics
// (weights, exact squared eigenvalues, float eigenvalues, dimensions), plus
// an eigenvector residual check per degree.
inline Report run_spectrum(const RunConfig& cfg, const detail_cli::Resolved& r) {
  ModuleContext ctx(r.m, r.tau, r.params, r.max_degree);
  Report rep;
  rep.config = detail_cli::config_echo(cfg, r);

  ScalarDecompositionReport sdr = scalar_decomposition_report(ctx, r.eps);
  for (const ScalarDecompRow& row : sdr.rows) {
    ReportEntry& e = rep.add("spectrum/k=" + std::to_string(row.k),
                             "charpoly(Z0+eps*sigma|H_k) = prod(t^2-lambda^2)");
    if (row.generic_dimension) {
      e.status = EntryStatus::Pass;  // spectrum() throws on exact mismatch
    } else {
      e.status = EntryStatus::Skipped;
      e.note = "harmonic dimension differs from the generic count; exact identity not asserted";
    }
    e.put("dim_module", std::to_string(row.dim_module));
    e.put("dim_harmonic", std::to_string(row.dim_harmonic));
    e.put("h_weight", row.h_weight.str());
    e.put("sigma", detail_cli::rational_list(row.sigma_entries));
    e.put("lambda_squared", detail_cli::rational_list(row.lambda_squared));
    e.put("real_spectrum", bool_str(row.real_spectrum));
    if (row.real_spectrum)
      e.put("lambda_float", detail_cli::double_list(row.lambda_float));
    else
      e.put("lambda_complex", detail_cli::complex_list(row.lambda_complex));
    e.put("distinct_eigenvalues", std::to_string(row.distinct_eigenvalues));
    e.put("generic_eigenvalue_count", std::to_string(row.generic_eigenvalue_count));
    e.put("fewer_distinct", bool_str(row.fewer_distinct));
    e.put("telescoping_ok", bool_str(row.telescoping_ok));
  }

  for (long k = 0; k <= r.max_degree; ++k) {
    ReportEntry& e = rep.add("spectrum/eigenvectors/k=" + std::to_string(k),
                             "(Z0+eps*sigma)h = lambda h on closed-form eigenvectors");
    try {
      EigenvectorResult ev = eigenvectors(ctx, k, r.eps);
      Eigen::MatrixXcd A = to_complex_matrix(z0eps_block(ctx, r.eps, k));
      long formula = 0;
      double worst = 0.0;
      for (const HarmonicEigenvector& hv : ev.vectors) {
        if (hv.from_formula) ++formula;
        double scale = (A * hv.coords).norm() + std::abs(hv.lambda) * hv.coords.norm() + 1.0;
        double res = (A * hv.coords - hv.lambda * hv.coords).norm() / scale;
        if (res > worst) worst = res;
      }
      e.status = worst <= 1e-9 ? EntryStatus::Pass : EntryStatus::Fail;
      if (e.status == EntryStatus::Fail) e.first_fail_degree = k;
      e.put("count", std::to_string(ev.vectors.size()));
      e.put("from_formula", std::to_string(formula));
      e.put("fallback_used", bool_str(ev.used_fallback));
      e.put("max_residual", format_double(worst));
    } catch (const ResonanceError& re) {
      e.status = EntryStatus::Skipped;
      e.note = re.what();
    }
  }
  return rep;
}

// spinor: per-cell dimension/weight table, angular eigencell bookkeeping,
// landing checks, and deterministic randomized decomposition round-trips.
inline Report run_spinor(const RunConfig& cfg, const detail_cli::Resolved& r) {
  ModuleContext ctx(r.m, r.tau, r.params, r.max_degree);
  Report rep;
  rep.config = detail_cli::config_echo(cfg, r);

  SpinorDecompositionReport sdr = spinor_decomposition_report(ctx);
  for (const SpinorCell& cell : sdr.cells) {
    ReportEntry& e =
        rep.add("spinor/cell/k=" + std::to_string(cell.k) + ",l=" + std::to_string(cell.l),
                "(H,Z1,Z2) weights and rank-nullity of the monogenic cell");
    bool ok = cell.rank_nullity_ok && cell.atypical_ok;
    e.status = ok ? EntryStatus::Pass : EntryStatus::Fail;
    if (!ok) e.first_fail_degree = cell.k;
    e.put("dim_slice", std::to_string(cell.dim_slice));
    e.put("dim_monogenic", std::to_string(cell.dim_monogenic));
    e.put("rank_lowering", std::to_string(cell.rank_lowering));
    e.put("weight_h", cell.weight_h.str());
    e.put("weight_z1", cell.weight_z1.str());
    e.put("weight_z2", cell.weight_z2.str());
    e.put("closed_form", !cell.closed_form_checked ? "skipped-resonant"
                         : cell.closed_form_matched ? "matched"
                                                    : "count-differs");
  }

  for (const AngularCellRow& row : sdr.angular_rows) {
    ReportEntry& e = rep.add("spinor/angular/k=" + std::to_string(row.k) +
                                 ",l=" + std::to_string(row.l) + ",nu=" + row.nu.str(),
                             "eigencell = same + raised + raised-bar + doubly-raised");
    if (!row.generic) {
      e.status = EntryStatus::Skipped;
      e.note = "nongeneric dimensions; row recorded, not asserted";
    } else {
      e.status = row.ok ? EntryStatus::Pass : EntryStatus::Fail;
      if (!row.ok) e.first_fail_degree = row.k;
    }
    e.put("dim_eigencell", std::to_string(row.dim_eigencell));
    e.put("dim_same", std::to_string(row.dim_same));
    e.put("dim_raised", std::to_string(row.dim_raised));
    e.put("dim_raised_bar", std::to_string(row.dim_raised_bar));
    e.put("dim_double", std::to_string(row.dim_double));
  }

  detail_cli::append_checks(rep, {sdr.landing_fminus, sdr.landing_fbarminus});

  // Round-trips: sample eigencell elements with a fixed seed, decompose,
  // and rely on the decomposition's exact internal reconstruction and
  // orthogonality checks. Degenerate denominators are skips, not failures.
  SuperGenerators gen = build_super_generators(ctx);
  std::mt19937 rng(20260815u);
  std::uniform_int_distribution<int> small(-3, 3);
  const Rational nc = ctx.coupling_trace();
  for (long k = 0; k <= r.max_degree; ++k) {
    ReportEntry& e = rep.add("spinor/roundtrip/k=" + std::to_string(k),
                             "four components reconstruct the input, pairwise orthogonal");
    HarmonicSpace hs = harmonic_basis(ctx, k);
    const Rational a = Rational(k) - nc;
    long attempts = 0, verified = 0, rejected = 0;
    std::string degenerate_note;
    for (int l = 0; l < 2; ++l) {
      const Rational eps_l(l == 0 ? -1 : 1);
      CycMatrix R = restricted_z0_matrix(ctx, hs, eps_l);
      std::vector<Rational> nus = {a};
      if (!(a == -a)) nus.push_back(-a);
      for (const Rational& nu : nus) {
        CycMatrix ker = (R - CycMatrix::scalar(R.rows(), Cyclotomic(nu))).kernel();
        if (ker.cols() == 0) continue;
        CycMatrix coords = hs.coordinates * ker;
        for (int trial = 0; trial < 2; ++trial) {
          CycMatrix mix(ker.cols(), 1);
          for (std::size_t i = 0; i < ker.cols(); ++i)
            mix.at(i, 0) = Cyclotomic(Rational(small(rng))) +
                           Cyclotomic::i() * Cyclotomic(Rational(small(rng)));
          CycMatrix vec = coords * mix;
          if (vec.is_zero()) continue;
          SpinorElement h = SpinorElement::pure(l, from_vector(ctx, vec, k));
          ++attempts;
          try {
            mong_decompose(ctx, gen, h);  // throws if any post-check fails
            ++verified;
          } catch (const DegenerateScalarError& de) {
            if (degenerate_note.empty()) degenerate_note = de.what();
          } catch (const std::invalid_argument&) {
            ++rejected;
          }
        }
      }
    }
    if (!degenerate_note.empty()) {
      e.status = EntryStatus::Skipped;
      e.note = degenerate_note;
    } else {
      e.status = EntryStatus::Pass;
    }
    e.put("attempts", std::to_string(attempts));
    e.put("verified", std::to_string(verified));
    e.put("rejected_noneigen", std::to_string(rejected));
  }

  ReportEntry& flags = rep.add("spinor/flags", "aggregate cell and eigencell bookkeeping");
  flags.status = (sdr.all_cells_ok && sdr.all_angular_ok) ? EntryStatus::Pass : EntryStatus::Fail;
  flags.put("all_cells_ok", bool_str(sdr.all_cells_ok));
  flags.put("all_angular_ok", bool_str(sdr.all_angular_ok));
  flags.put("any_nongeneric", bool_str(sdr.any_nongeneric));
  return rep;
}

// gram: per-degree minimal float eigenvalue of the contravariant Gram
// matrix. A measurement table: indefiniteness is reported, never an error.
inline Report run_gram(const RunConfig& cfg, const detail_cli::Resolved& r) {
  ModuleContext ctx(r.m, r.tau, r.params, r.max_degree);
  Report rep;
  rep.config = detail_cli::config_echo(cfg, r);
  long first_bad = -1;
  for (long k = 0; k <= r.max_degree; ++k) {
    ReportEntry& e = rep.add("gram/k=" + std::to_string(k),
                             "minimal eigenvalue of the contravariant Gram matrix");
    double lo = hermitian_min_eigenvalue(to_complex_matrix(contravariant_gram(ctx, k)));
    bool pos = lo > 1e-8;
    if (!pos && first_bad < 0) first_bad = k;
    e.put("dim", std::to_string(ctx.dim(k)));
    e.put("min_eigenvalue", format_double(lo));
    e.put("positive_definite", bool_str(pos));
  }
  ReportEntry& s = rep.add("gram/first-nonpositive-degree",
                           "lowest degree whose Gram matrix fails positivity");
  s.put("value", first_bad < 0 ? "none" : std::to_string(first_bad));
  return rep;
}

inline Report run_command(const RunConfig& cfg) {
  detail_cli::Resolved r = detail_cli::resolve(cfg);
  if (cfg.command == "verify") return run_verify(cfg, r);
  if (cfg.command == "spectrum") return run_spectrum(cfg, r);
  if (cfg.command == "spinor") return run_spinor(cfg, r);
  if (cfg.command == "gram") return run_gram(cfg, r);
  throw ConfigError("unknown command '" + cfg.command + "'");
}

inline std::string render(const Report& rep, const std::string& output) {
  return output == "csv" ? to_csv(rep) : to_json(rep);
}

}  // namespace howe
