// Acceptance gate: ten criteria, one pass/fail line each, exit 1 on any
// failure. Every criterion sweeps the full parameter grid
//   m in {3, 4, 5, 6, 8}, every irreducible tau,
//   couplings 0, 1/10, 1/3, and the split pair (1/5, 1/7) for even m,
// and checks exact identities at zero tolerance unless a float tolerance is
// part of the claim itself. Frozen expectations mark the two grid points
// whose coupling trace is a positive integer; everything the tower does
// there (dimension jumps, resonances, failed telescoping) must be detected
// and reported, never silently absorbed.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "howe/clifford.hpp"
#include "howe/contravariant.hpp"
#include "howe/harmonics.hpp"
#include "howe/numeric.hpp"
#include "howe/relations.hpp"

using namespace howe;

namespace {

using Clock = std::chrono::steady_clock;

struct GridPoint {
  long m;
  Irrep tau;
  ParamValues params;
  std::string label;
};

std::vector<GridPoint> build_grid() {
  std::vector<GridPoint> out;
  for (long m : {3L, 4L, 5L, 6L, 8L}) {
    std::vector<ParamValues> ps{ParamValues(m, Rational(0)), ParamValues(m, Rational(1, 10)),
                                ParamValues(m, Rational(1, 3))};
    if (m % 2 == 0) ps.emplace_back(m, Rational(1, 5), Rational(1, 7));
    for (const ParamValues& p : ps) {
      for (const Irrep& tau : all_irreps(m)) {
        std::string label = "m=" + std::to_string(m) + " " + tau.str() + " c=(" +
                            p.c_even.str() + "," + p.c_odd.str() + ")";
        out.push_back({m, tau, p, label});
      }
    }
  }
  return out;
}

const std::vector<GridPoint>& full_grid() {
  static const std::vector<GridPoint> grid = build_grid();
  return grid;
}

// The two grid points with a positive integer coupling trace: m=3 (trace 1)
// and m=6 (trace 2), both on the trivial type at c = 1/3.
bool integer_trace_point(const GridPoint& gp) {
  return gp.tau.kind == Irrep::Kind::Triv && gp.params.c_even == Rational(1, 3) &&
         gp.params.c_odd == Rational(1, 3) && (gp.m == 3 || gp.m == 6);
}

// Degrees k <= 10 where a Pochhammer denominator of the projection vanishes:
// trace 1 resonates at k = 2, trace 2 at k = 3 and 4. Identical to the set
// of degrees whose harmonic dimension jumps, on this grid.
std::set<long> expected_resonant(const GridPoint& gp) {
  if (!integer_trace_point(gp)) return {};
  if (gp.m == 3) return {2};
  return {3, 4};
}

struct CriterionResult {
  long checks = 0;
  long failed = 0;
  std::vector<std::string> examples;
  std::string stats;

  void require(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    ++failed;
    if (examples.size() < 3) examples.push_back(what);
  }
};

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), pattern, v);
  return buf;
}

// --------------------------------------------------------------------------
// 1. Scalar commutation relations: the Weyl pairings, the sl(2) triple with
//    its adjoint action on multiplication operators, and the deformed
//    angular operator's bracket table, exact through degree 10.
// --------------------------------------------------------------------------
CriterionResult criterion_relations() {
  CriterionResult r;
  const std::vector<Rational> eps_list{Rational(1, 2), Rational(-1)};
  for (const GridPoint& gp : full_grid()) {
    ModuleContext ctx(gp.m, gp.tau, gp.params, 10);
    for (const RelationCheck& rc : verify_sl2_relations(ctx))
      r.require(rc.pass, gp.label + " " + rc.id + " (" + rc.detail + ")");
    for (const Rational& eps : eps_list)
      for (const RelationCheck& rc : verify_u11_relations(ctx, eps))
        r.require(rc.pass, gp.label + " eps=" + eps.str() + " " + rc.id);
  }
  r.stats = "exact, degrees <= 10, " + std::to_string(full_grid().size()) + " grid points";
  return r;
}

// --------------------------------------------------------------------------
// 2. Rotation-weight scalars: the direct sum over reflections agrees with
//    the geometric-series closed form for every n in [0, 2m), and the
//    group-algebra image in each irrep matches the character/weight table.
// --------------------------------------------------------------------------
CriterionResult criterion_sigma() {
  CriterionResult r;
  for (const GridPoint& gp : full_grid()) {
    const ParamValues& p = gp.params;
    for (long n = 0; n < 2 * gp.m; ++n) {
      SigmaScalar s = sigma_scalar(p, n);
      r.require(s.agree, gp.label + " sigma_" + std::to_string(n) + " direct sum vs closed form");
      CycMatrix img = sigma_on_irrep(p, gp.tau, n);
      if (gp.tau.dim() == 1) {
        r.require(img.at(0, 0) == Cyclotomic(character_of_sigma(p, gp.tau, n)),
                  gp.label + " tau(sigma(" + std::to_string(n) + "))");
      } else {
        bool ok = img.at(0, 0).is_zero() && img.at(1, 1).is_zero() &&
                  img.at(1, 0) == Cyclotomic(sigma_value(p, n + gp.tau.u)) &&
                  img.at(0, 1) == Cyclotomic(sigma_value(p, n - gp.tau.u));
        r.require(ok, gp.label + " rho(sigma(" + std::to_string(n) + ")) weight table");
      }
    }
  }
  r.stats = "exact, n in [0, 2m)";
  return r;
}

// Match two eigenvalue multisets greedily within tol; records the worst gap.
bool match_multiset(const std::vector<std::complex<double>>& actual,
                    const std::vector<std::complex<double>>& expected, double tol,
                    double& worst) {
  if (actual.size() != expected.size()) return false;
  std::vector<bool> used(expected.size(), false);
  for (const std::complex<double>& a : actual) {
    double best = 1e300;
    std::size_t bi = expected.size();
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (used[i]) continue;
      double d = std::abs(a - expected[i]);
      if (d < best) {
        best = d;
        bi = i;
      }
    }
    if (bi == expected.size() || best > tol) return false;
    used[bi] = true;
    worst = std::max(worst, best);
  }
  return true;
}

// --------------------------------------------------------------------------
// 3. Angular spectrum: char(Z0 + eps sigma | harmonics_k) equals the product
//    of t^2 - [(k - N_c)^2 - (1 - eps^2) sigma_k^2] exactly (asserted inside
//    spectrum() whenever the dimension is generic), and the independently
//    computed float eigenvalues match the signed square roots within 1e-10.
//    Spot value: m=3, triv, c=1/10, k=3, eps=0 gives lambda^2 = 36/5.
// --------------------------------------------------------------------------
CriterionResult criterion_spectrum() {
  CriterionResult r;
  const std::vector<Rational> eps_list{Rational(0), Rational(1), Rational(-1), Rational(1, 2),
                                       Rational(-1, 2)};
  double worst = 0.0;
  for (const GridPoint& gp : full_grid()) {
    ModuleContext ctx(gp.m, gp.tau, gp.params, 10);
    const std::set<long> degen = expected_resonant(gp);
    std::set<long> seen;
    for (long k = 0; k <= 10; ++k) {
      for (const Rational& eps : eps_list) {
        SpectralDatum sd = spectrum(ctx, k, eps);
        if (!sd.generic_dimension) {
          seen.insert(k);
          r.require(degen.count(k) == 1,
                    gp.label + " unexpected dimension jump at k=" + std::to_string(k));
          continue;
        }
        r.require(sd.exact_identity_checked,
                  gp.label + " exact identity skipped at k=" + std::to_string(k));
        std::vector<std::complex<double>> expect;
        if (k == 0) {
          if (gp.tau.kind == Irrep::Kind::Rho)
            expect = {{0.0, 0.0}, {0.0, 0.0}};
          else
            expect = {{(eps * ctx.coupling_trace()).to_double(), 0.0}};
        } else {
          for (const Rational& l2 : sd.lambda_squared) {
            std::complex<double> root = std::sqrt(std::complex<double>(l2.to_double(), 0.0));
            expect.push_back(root);
            expect.push_back(-root);
          }
        }
        r.require(match_multiset(sd.lambda_complex, expect, 1e-10, worst),
                  gp.label + " float eigenvalues vs signed roots at k=" + std::to_string(k) +
                      " eps=" + eps.str());
      }
    }
    r.require(seen == degen, gp.label + " set of non-generic degrees differs from the frozen set");
  }
  {
    ModuleContext ctx(3, Irrep::triv(), ParamValues(3, Rational(1, 10)), 4);
    SpectralDatum sd = spectrum(ctx, 3, Rational(0));
    r.require(sd.lambda_squared == std::vector<Rational>{Rational(36, 5)},
              "spot value m=3 triv c=1/10 k=3 eps=0: lambda^2 = 36/5");
  }
  r.stats = "eps in {0, +-1, +-1/2}, k <= 10, worst float gap " + fmt("%.1e", worst);
  return r;
}

// --------------------------------------------------------------------------
// 4. Kernel duality at the boundary deformations: at eps = -1 the plus
//    branch of each closed-form eigenvector pair is annihilated by the
//    holomorphic Dunkl operator, at eps = +1 the minus branch by the
//    antiholomorphic one; relative float residual <= 1e-9, k <= 8.
// --------------------------------------------------------------------------
CriterionResult criterion_duality() {
  CriterionResult r;
  long formula_vectors = 0;
  long fallback_vectors = 0;
  long resonant_degrees = 0;
  for (const GridPoint& gp : full_grid()) {
    ModuleContext ctx(gp.m, gp.tau, gp.params, 8);
    const std::set<long> resonant = expected_resonant(gp);
    for (int side = 0; side < 2; ++side) {
      const Rational eps(side == 0 ? -1 : 1);
      for (long k = 1; k <= 8; ++k) {
        if (is_resonant(ctx, k)) {
          r.require(resonant.count(k) == 1,
                    gp.label + " unexpected resonance at k=" + std::to_string(k));
          ++resonant_degrees;
          continue;
        }
        EigenvectorResult res = eigenvectors(ctx, k, eps);
        Eigen::MatrixXcd low =
            to_complex_matrix(dunkl_block(ctx, side == 0 ? Var::Z : Var::Zbar, k));
        for (std::size_t i = 0; i < res.vectors.size(); ++i) {
          const HarmonicEigenvector& ev = res.vectors[i];
          const bool plus_branch = (i % 2 == 0);
          if ((side == 0) != plus_branch) continue;
          if (!ev.from_formula) {
            // Both formulas may collapse where the angular weight vanishes;
            // only the integer-trace points are allowed to do that.
            r.require(integer_trace_point(gp),
                      gp.label + " unexpected numerical fallback at k=" + std::to_string(k));
            ++fallback_vectors;
            continue;
          }
          double rel = (low * ev.coords).norm() / ev.coords.norm();
          r.require(rel <= 1e-9, gp.label + " residual " + fmt("%.2e", rel) +
                                     " at k=" + std::to_string(k) + " eps=" + eps.str());
          ++formula_vectors;
        }
      }
    }
  }
  r.stats = std::to_string(formula_vectors) + " closed-form vectors, " +
            std::to_string(fallback_vectors) + " fallback, " + std::to_string(resonant_degrees) +
            " resonant degrees skipped";
  return r;
}

// --------------------------------------------------------------------------
// 5. Harmonic projection: lowering annihilates every projected monomial,
//    the projection is idempotent and fixes harmonics, exactly, at every
//    non-resonant degree k <= 10; resonant degrees are detected, refused by
//    the projector, and listed in the check details.
// --------------------------------------------------------------------------
CriterionResult criterion_projection() {
  CriterionResult r;
  long resonant_found = 0;
  for (const GridPoint& gp : full_grid()) {
    ModuleContext ctx(gp.m, gp.tau, gp.params, 10);
    std::set<long> found;
    for (long k = 0; k <= 10; ++k)
      if (is_resonant(ctx, k)) found.insert(k);
    r.require(found == expected_resonant(gp),
              gp.label + " resonant set differs from the frozen expectation");
    for (long k : found) {
      ++resonant_found;
      bool refused = false;
      try {
        proj_matrix(ctx, k);
      } catch (const ResonanceError&) {
        refused = true;
      }
      r.require(refused,
                gp.label + " projection at resonant k=" + std::to_string(k) + " must throw");
    }
    for (const RelationCheck& rc : verify_harmonic_invariants(ctx, Rational(0))) {
      r.require(rc.pass, gp.label + " " + rc.id + " (" + rc.detail + ")");
      if (!found.empty() && rc.id.rfind("harm/", 0) == 0 && rc.id != "harm/Z0eps.E+=E+.Z0eps")
        r.require(rc.detail.find("skipped resonant degrees") != std::string::npos,
                  gp.label + " " + rc.id + " must report the skipped degrees");
    }
  }
  r.stats = "exact, k <= 10, " + std::to_string(resonant_found) +
            " resonant degrees detected and refused";
  return r;
}

// --------------------------------------------------------------------------
// 6. Superalgebra suite: the full graded bracket table of the odd pair and
//    its even closure, centrality of the angular difference, its Clifford
//    expression, the odd-side Casimir square root, the spo(2|1) triple, and
//    invariance under the double-cover twist, exact through degree 8.
// --------------------------------------------------------------------------
CriterionResult criterion_superalgebra() {
  CriterionResult r;
  for (const GridPoint& gp : full_grid()) {
    ModuleContext ctx(gp.m, gp.tau, gp.params, 8);
    for (const RelationCheck& rc : verify_superalgebra(ctx))
      r.require(rc.pass, gp.label + " " + rc.id + " (" + rc.detail + ")");
    for (const RelationCheck& rc : verify_scasimir(ctx))
      r.require(rc.pass, gp.label + " " + rc.id + " (" + rc.detail + ")");
  }
  r.stats = "exact, degrees <= 8";
  return r;
}

// --------------------------------------------------------------------------
// 7. Monogenic weights: every exact kernel basis vector of the (k, l) cell
//    is a joint eigenvector with H = k + 1 - N_c, Z1 = (-1)^l (k - N_c),
//    Z2 = (-1)^(l+1) / 2, all exact, k <= 8. Away from the integer-trace
//    points the cell has dimension dim(tau) and the projected closed-form
//    representatives span it.
// --------------------------------------------------------------------------
CriterionResult criterion_monogenic_weights() {
  CriterionResult r;
  long vectors = 0;
  for (const GridPoint& gp : full_grid()) {
    ModuleContext ctx(gp.m, gp.tau, gp.params, 8);
    SuperGenerators g = build_super_generators(ctx);
    const Rational nc = ctx.coupling_trace();
    for (long k = 0; k <= 8; ++k) {
      for (int l = 0; l < 2; ++l) {
        MonogenicSpace ms = monogenics(ctx, k, l);
        const std::string at = " at k=" + std::to_string(k) + " l=" + std::to_string(l);
        const Rational wh = Rational(k + 1) - nc;
        const Rational wz1 = (l == 0) ? Rational(k) - nc : nc - Rational(k);
        const Rational wz2 = (l == 0) ? Rational(-1, 2) : Rational(1, 2);
        for (const SpinorElement& v : ms.basis) {
          r.require(g.H.apply(ctx, v) == Cyclotomic(wh) * v, gp.label + " H weight" + at);
          r.require(g.Z1.apply(ctx, v) == Cyclotomic(wz1) * v, gp.label + " Z1 weight" + at);
          r.require(g.Z2.apply(ctx, v) == Cyclotomic(wz2) * v, gp.label + " Z2 weight" + at);
          ++vectors;
        }
        if (!integer_trace_point(gp)) {
          r.require(ms.dim() == ctx.dim_tau(), gp.label + " generic cell dimension" + at);
          r.require(ms.closed_form_checked && ms.closed_form_matched,
                    gp.label + " closed-form span" + at);
        }
      }
    }
  }
  r.stats = "exact, " + std::to_string(vectors) + " kernel vectors, k <= 8";
  return r;
}

SpinorElement random_eigencell_element(const ModuleContext& ctx, const HarmonicSpace& hs, int l,
                                       const Rational& nu, std::mt19937& rng) {
  const Rational eps(l == 0 ? -1 : 1);
  CycMatrix restricted = restricted_z0_matrix(ctx, hs, eps);
  CycMatrix ker = (restricted - CycMatrix::scalar(restricted.rows(), Cyclotomic(nu))).kernel();
  if (ker.cols() == 0) return SpinorElement();
  CycMatrix coords = hs.coordinates * ker;
  std::uniform_int_distribution<int> small(-3, 3);
  for (int attempt = 0; attempt < 16; ++attempt) {
    CycMatrix mix(ker.cols(), 1);
    for (std::size_t i = 0; i < ker.cols(); ++i)
      mix.at(i, 0) =
          Cyclotomic(Rational(small(rng))) + Cyclotomic::i() * Cyclotomic(Rational(small(rng)));
    CycMatrix vec = coords * mix;
    if (!vec.is_zero()) return SpinorElement::pure(l, from_vector(ctx, vec, hs.k));
  }
  return SpinorElement();
}

// --------------------------------------------------------------------------
// 8. Decomposition round-trip: at least 20 randomized angular eigenvectors
//    per grid point split into the four monogenic layers, reassemble to the
//    input exactly, and the layers are pairwise orthogonal under the spinor
//    pairing, exactly.
// --------------------------------------------------------------------------
CriterionResult criterion_roundtrip() {
  CriterionResult r;
  long total = 0;
  const std::vector<GridPoint>& grid = full_grid();
  for (std::size_t gi = 0; gi < grid.size(); ++gi) {
    const GridPoint& gp = grid[gi];
    ModuleContext ctx(gp.m, gp.tau, gp.params, 7);
    SuperGenerators g = build_super_generators(ctx);
    std::mt19937 rng(20260815u + static_cast<unsigned>(gi));
    long verified = 0;
    for (long k = 1; k <= 6 && verified < 24; ++k) {
      HarmonicSpace hs = harmonic_basis(ctx, k);
      const Rational a = Rational(k) - ctx.coupling_trace();
      std::vector<Rational> nus{a};
      if (!a.is_zero()) nus.push_back(-a);
      for (int l = 0; l < 2 && verified < 24; ++l) {
        for (const Rational& nu : nus) {
          if (verified >= 24) break;
          for (int trial = 0; trial < 2 && verified < 24; ++trial) {
            SpinorElement h = random_eigencell_element(ctx, hs, l, nu, rng);
            if (h.is_zero()) continue;
            const std::string at =
                " at k=" + std::to_string(k) + " l=" + std::to_string(l) + " nu=" + nu.str();
            MongComponents mc = mong_decompose(ctx, g, h);
            SpinorElement parts[4] = {
                mc.M0, g.Fp.apply(ctx, mc.M1), g.Fbp.apply(ctx, mc.M2),
                Cyclotomic(mc.lambda1) * g.Fp.apply(ctx, g.Fbp.apply(ctx, mc.M3)) -
                    Cyclotomic(mc.lambda2) * g.Fbp.apply(ctx, g.Fp.apply(ctx, mc.M3))};
            r.require(parts[0] + parts[1] + parts[2] + parts[3] == h,
                      gp.label + " reconstruction" + at);
            for (int i = 0; i < 4; ++i)
              for (int j = i + 1; j < 4; ++j)
                r.require(spinor_form(ctx, parts[i], parts[j]).is_zero(),
                          gp.label + " layers " + std::to_string(i) + "," + std::to_string(j) +
                              " not orthogonal" + at);
            ++verified;
          }
        }
      }
    }
    r.require(verified >= 20,
              gp.label + " only " + std::to_string(verified) + " round-trips verified");
    total += verified;
  }
  r.stats = std::to_string(total) + " round-trips, >= 20 per grid point, exact";
  return r;
}

// --------------------------------------------------------------------------
// 9. Gram positivity: for the small couplings (0 and 1/10) every
//    contravariant Gram matrix through degree 8 is positive definite, float
//    minimum eigenvalue > 1e-8.
// --------------------------------------------------------------------------
CriterionResult criterion_gram() {
  CriterionResult r;
  double smallest = 1e300;
  long matrices = 0;
  for (const GridPoint& gp : full_grid()) {
    const ParamValues& p = gp.params;
    const bool small = (p.c_even.is_zero() && p.c_odd.is_zero()) ||
                       (p.c_even == Rational(1, 10) && p.c_odd == Rational(1, 10));
    if (!small) continue;
    ModuleContext ctx(gp.m, gp.tau, gp.params, 8);
    for (long k = 0; k <= 8; ++k) {
      double lo = hermitian_min_eigenvalue(to_complex_matrix(contravariant_gram(ctx, k)));
      r.require(lo > 1e-8, gp.label + " min eigenvalue " + fmt("%.3e", lo) + " at k=" +
                               std::to_string(k));
      smallest = std::min(smallest, lo);
      ++matrices;
    }
  }
  r.stats = std::to_string(matrices) + " matrices, k <= 8, smallest eigenvalue " +
            fmt("%.3g", smallest);
  return r;
}

// --------------------------------------------------------------------------
// 10. Dimension bookkeeping: away from the integer-trace points the
//     harmonic tower has the generic dimensions (dim tau at k = 0, twice
//     that for k >= 1) and the raising-string telescoping reproduces every
//     module dimension; at the integer-trace points both failures are
//     flagged. On the spinor side, kernel dimension plus row rank of each
//     lowering block equals the slice dimension, k <= 8.
// --------------------------------------------------------------------------
CriterionResult criterion_dimensions() {
  CriterionResult r;
  for (const GridPoint& gp : full_grid()) {
    ModuleContext ctx(gp.m, gp.tau, gp.params, 10);
    ScalarDecompositionReport rep = scalar_decomposition_report(ctx, Rational(0));
    if (!integer_trace_point(gp)) {
      r.require(!rep.any_nongeneric, gp.label + " unexpected non-generic harmonic dimension");
      r.require(rep.all_telescoping, gp.label + " telescoping failed");
      for (const ScalarDecompRow& row : rep.rows) {
        long want = row.k == 0 ? ctx.dim_tau() : 2 * ctx.dim_tau();
        r.require(row.dim_harmonic == want,
                  gp.label + " dim harmonics at k=" + std::to_string(row.k));
      }
    } else {
      r.require(rep.any_nongeneric, gp.label + " dimension jump must be flagged");
      r.require(!rep.all_telescoping,
                gp.label + " telescoping must fail where the tower overlaps");
    }
    for (long k = 0; k <= 8; ++k) {
      for (int l = 0; l < 2; ++l) {
        CycMatrix low = dunkl_block(ctx, l == 0 ? Var::Z : Var::Zbar, k);
        long nullity = static_cast<long>(low.kernel().cols());
        long rowrank = static_cast<long>(low.rows()) -
                       static_cast<long>(low.transpose().kernel().cols());
        r.require(nullity + rowrank == ctx.dim(k),
                  gp.label + " rank-nullity at k=" + std::to_string(k) + " l=" +
                      std::to_string(l));
      }
    }
  }
  r.stats = "k <= 10 scalar, k <= 8 spinor";
  return r;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<CriterionResult()> run;
  };
  const std::vector<Criterion> criteria = {
      {"commutation relations", criterion_relations},
      {"rotation-weight scalars", criterion_sigma},
      {"angular spectrum", criterion_spectrum},
      {"kernel duality", criterion_duality},
      {"harmonic projection", criterion_projection},
      {"superalgebra suite", criterion_superalgebra},
      {"monogenic weights", criterion_monogenic_weights},
      {"decomposition round-trip", criterion_roundtrip},
      {"gram positivity", criterion_gram},
      {"dimension bookkeeping", criterion_dimensions},
  };

  int passed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto t0 = Clock::now();
    CriterionResult res;
    try {
      res = criteria[i].run();
    } catch (const std::exception& e) {
      res.require(false, std::string("unexpected exception: ") + e.what());
    }
    double dt = std::chrono::duration<double>(Clock::now() - t0).count();
    if (res.failed == 0) {
      std::printf("criterion %2zu (%s): PASS  %ld checks, %s (%.1fs)\n", i + 1, criteria[i].name,
                  res.checks, res.stats.c_str(), dt);
      ++passed;
    } else {
      std::printf("criterion %2zu (%s): FAIL  %ld of %ld checks failed; first: %s (%.1fs)\n",
                  i + 1, criteria[i].name, res.failed, res.checks, res.examples.front().c_str(),
                  dt);
    }
    std::fflush(stdout);
  }
  std::printf("acceptance: %d/%zu criteria passed\n", passed, criteria.size());
  return passed == static_cast<int>(criteria.size()) ? 0 : 1;
}
