#pragma once

#include <cmath>
#include <complex>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "howe/numeric.hpp"
#include "howe/relations.hpp"

namespace howe {

// Thrown when the projection onto harmonics hits a vanishing Pochhammer
// denominator (N_c - k + 1)_j; carries the data identifying the factor.
class ResonanceError : public std::domain_error {
 public:
  ResonanceError(const Rational& coupling, long degree, long offset)
      : std::domain_error("resonant parameter: Pochhammer factor N_c - k + 1 + t = " +
                          (coupling + Rational(1 + offset - degree)).str() + " vanishes for N_c = " +
                          coupling.str() + ", k = " + std::to_string(degree) + ", t = " +
                          std::to_string(offset) + "; (N_c - k + 1)_j = 0 for every j > t"),
        coupling_(coupling),
        degree_(degree),
        offset_(offset) {}

  const Rational& coupling() const { return coupling_; }
  long degree() const { return degree_; }
  long offset() const { return offset_; }

 private:
  Rational coupling_;
  long degree_;
  long offset_;
};

// Matrix of a single degree block of a graded map: fn must send degree k to
// degree k + shift.  Degrees below zero give a zero-dimensional codomain.
template <typename Fn>
inline CycMatrix degree_block(const ModuleContext& ctx, long k, long shift, Fn&& fn) {
  if (k < 0 || k > ctx.max_degree()) throw std::out_of_range("degree_block: degree outside [0, max_degree]");
  if (k + shift > ctx.max_degree()) throw std::out_of_range("degree_block: image degree exceeds max_degree");
  CycMatrix block(static_cast<std::size_t>(ctx.dim(k + shift)), static_cast<std::size_t>(ctx.dim(k)));
  for (long idx = 0; idx < ctx.dim(k); ++idx) {
    ModuleElement image = fn(ctx.basis_monomial(k, idx));
    for (const auto& [mo, coeff] : image.terms())
      block.at(static_cast<std::size_t>(ctx.basis_index(mo)), static_cast<std::size_t>(idx)) = coeff;
  }
  return block;
}

inline CycMatrix eplus_block(const ModuleContext& ctx, long k) {
  return degree_block(ctx, k, 2, [&ctx](const Monomial& mo) {
    return relops::Eplus(ctx, ModuleElement::monomial(mo, Cyclotomic(1)));
  });
}

inline CycMatrix eminus_block(const ModuleContext& ctx, long k) {
  return degree_block(ctx, k, -2, [&ctx](const Monomial& mo) {
    return relops::Eminus(ctx, ModuleElement::monomial(mo, Cyclotomic(1)));
  });
}

inline CycMatrix z0eps_block(const ModuleContext& ctx, const Rational& eps, long k) {
  return degree_block(ctx, k, 0, [&ctx, &eps](const Monomial& mo) {
    return relops::Z0eps(ctx, eps, ModuleElement::monomial(mo, Cyclotomic(1)));
  });
}

inline CycMatrix dunkl_block(const ModuleContext& ctx, Var v, long k) {
  return degree_block(ctx, k, -1, [&ctx, v](const Monomial& mo) {
    return dunkl_apply(ctx, v, ModuleElement::monomial(mo, Cyclotomic(1)));
  });
}

// Exact kernel of the lowering operator in one degree.  Columns of
// coordinates are the basis vectors, in the coordinate order of dim(k).
struct HarmonicSpace {
  long k = 0;
  CycMatrix coordinates;
  std::vector<ModuleElement> basis;

  long dim() const { return static_cast<long>(coordinates.cols()); }
};

inline long generic_harmonic_dim(const ModuleContext& ctx, long k) {
  return k == 0 ? ctx.dim_tau() : 2 * ctx.dim_tau();
}

inline HarmonicSpace harmonic_basis(const ModuleContext& ctx, long k) {
  HarmonicSpace hs;
  hs.k = k;
  hs.coordinates = eminus_block(ctx, k).kernel();
  hs.basis.reserve(hs.coordinates.cols());
  for (std::size_t j = 0; j < hs.coordinates.cols(); ++j)
    hs.basis.push_back(from_vector(ctx, hs.coordinates.column(j), k));
  return hs;
}

// The projection onto harmonics in degree k is only defined away from the
// zeros of the Pochhammer denominators (N_c - k + 1)_j, j <= floor(k/2).
inline void require_nonresonant(const ModuleContext& ctx, long k) {
  const Rational base = ctx.coupling_trace() - Rational(k) + Rational(1);
  for (long t = 0; t < k / 2; ++t)
    if ((base + Rational(t)).is_zero()) throw ResonanceError(ctx.coupling_trace(), k, t);
}

inline bool is_resonant(const ModuleContext& ctx, long k) {
  const Rational base = ctx.coupling_trace() - Rational(k) + Rational(1);
  for (long t = 0; t < k / 2; ++t)
    if ((base + Rational(t)).is_zero()) return true;
  return false;
}

// Projection of a homogeneous element onto the harmonic component of its own
// degree, along the image of the raising operator:
//   Proj p = sum_j (-1)^j / (j! (N_c - k + 1)_j) E+^j E-^j p.
inline ModuleElement proj_k(const ModuleContext& ctx, const ModuleElement& p) {
  if (p.is_zero()) return p;
  const long k = p.max_degree_present();
  if (!p.is_homogeneous(k)) throw std::invalid_argument("proj_k: element must be homogeneous");
  require_nonresonant(ctx, k);

  ModuleElement result = p;
  ModuleElement lowered = p;
  Rational coeff(1);
  for (long j = 1; j <= k / 2; ++j) {
    lowered = relops::Eminus(ctx, lowered);
    if (lowered.is_zero()) break;
    coeff = coeff / Rational(-j) / (ctx.coupling_trace() - Rational(k) + Rational(j));
    ModuleElement raised = lowered;
    for (long s = 0; s < j; ++s) raised = relops::Eplus(ctx, raised);
    result = result + Cyclotomic(coeff) * raised;
  }
  return result;
}

inline CycMatrix proj_matrix(const ModuleContext& ctx, long k) {
  require_nonresonant(ctx, k);
  return degree_block(ctx, k, 0, [&ctx](const Monomial& mo) {
    return proj_k(ctx, ModuleElement::monomial(mo, Cyclotomic(1)));
  });
}

namespace detail_harm {

// Representatives spanning the harmonic quotient in degree k, listed as
// (z-type, zbar-type) pairs per spectral weight: for one-dimensional tau the
// single pair (z^k ox v, zbar^k ox v); for rho^(u) the pair coupled by
// sigma_{k+u} is (z^k ox v0, zbar^k ox v1) and the pair coupled by
// sigma_{k-u} is (z^k ox v1, zbar^k ox v0).
struct WeightBlock {
  Rational sigma;
  Monomial z_rep;
  Monomial zbar_rep;
};

inline std::vector<WeightBlock> weight_blocks(const ModuleContext& ctx, long k) {
  const ParamValues& p = ctx.params();
  const Irrep& tau = ctx.tau();
  if (tau.kind == Irrep::Kind::Rho)
    return {{sigma_value(p, k + tau.u), Monomial{k, 0, 0}, Monomial{0, k, 1}},
            {sigma_value(p, k - tau.u), Monomial{k, 0, 1}, Monomial{0, k, 0}}};
  return {{character_of_sigma(p, tau, k), Monomial{k, 0, 0}, Monomial{0, k, 0}}};
}

inline std::vector<Rational> poly_mul_rat(const std::vector<Rational>& x, const std::vector<Rational>& y) {
  std::vector<Rational> r(x.size() + y.size() - 1, Rational(0));
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) r[i + j] += x[i] * y[j];
  return r;
}

// Whether sigma_n is nonzero as a function of the coupling parameters: for
// odd m only multiples of m survive, for even m the residues 0 and m/2.
inline bool sigma_structurally_nonzero(long m, long n) {
  long r = ((n % m) + m) % m;
  return (m % 2 == 1) ? r == 0 : r % (m / 2) == 0;
}

// Number of distinct eigenvalues of the angular action in degree k for
// parameters in general position: at eps^2 = 1 everything collapses to the
// pair +-(k - N_c); otherwise each structurally distinct lambda^2 symbol
// contributes a +- pair.
inline long generic_distinct_count(const ModuleContext& ctx, long k, const Rational& eps) {
  if (k == 0) return 1;
  if ((Rational(1) - eps * eps).is_zero()) return 2;
  if (ctx.tau().kind != Irrep::Kind::Rho) return 2;
  bool split = sigma_structurally_nonzero(ctx.m(), k + ctx.tau().u) ||
               sigma_structurally_nonzero(ctx.m(), k - ctx.tau().u);
  return split ? 4 : 2;
}

}  // namespace detail_harm

// Closed form for the action induced on the degree-k harmonic quotient,
// block diagonal over the weight blocks with a = k - N_c:
//   [ -a          -(1-eps) sigma ]
//   [ (1+eps) sigma          a  ]
inline CycMatrix expected_z0_matrix(const ModuleContext& ctx, long k, const Rational& eps) {
  if (k < 1) throw std::invalid_argument("expected_z0_matrix: degree must be >= 1");
  const Rational a = Rational(k) - ctx.coupling_trace();
  auto blocks = detail_harm::weight_blocks(ctx, k);
  CycMatrix m(2 * blocks.size(), 2 * blocks.size());
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const Rational& s = blocks[b].sigma;
    m.at(2 * b, 2 * b) = Cyclotomic(-a);
    m.at(2 * b, 2 * b + 1) = Cyclotomic(-(Rational(1) - eps) * s);
    m.at(2 * b + 1, 2 * b) = Cyclotomic((Rational(1) + eps) * s);
    m.at(2 * b + 1, 2 * b + 1) = Cyclotomic(a);
  }
  return m;
}

// Matrix of the deformed angular operator on the degree-k harmonic quotient,
// computed from scratch on the projected representatives and reduced against
// them, then checked against the closed form entry by entry.
inline CycMatrix z0_mod_Eplus_matrix(const ModuleContext& ctx, long k, const Rational& eps) {
  if (k < 1) throw std::invalid_argument("z0_mod_Eplus_matrix: degree must be >= 1");
  if (k > ctx.max_degree()) throw std::out_of_range("z0_mod_Eplus_matrix: degree exceeds max_degree");
  auto blocks = detail_harm::weight_blocks(ctx, k);
  std::vector<ModuleElement> reps;
  for (const auto& b : blocks) {
    reps.push_back(proj_k(ctx, ModuleElement::monomial(b.z_rep, Cyclotomic(1))));
    reps.push_back(proj_k(ctx, ModuleElement::monomial(b.zbar_rep, Cyclotomic(1))));
  }
  CycMatrix B(static_cast<std::size_t>(ctx.dim(k)), reps.size());
  CycMatrix T(static_cast<std::size_t>(ctx.dim(k)), reps.size());
  for (std::size_t j = 0; j < reps.size(); ++j) {
    CycMatrix bc = to_vector(ctx, reps[j], k);
    CycMatrix tc = to_vector(ctx, relops::Z0eps(ctx, eps, reps[j]), k);
    for (std::size_t i = 0; i < B.rows(); ++i) {
      B.at(i, j) = bc.at(i, 0);
      T.at(i, j) = tc.at(i, 0);
    }
  }
  auto X = CycMatrix::solve(B, T);
  if (!X) throw std::runtime_error("z0_mod_Eplus_matrix: representatives do not span the harmonic quotient");
  if (*X != expected_z0_matrix(ctx, k, eps))
    throw std::logic_error("z0_mod_Eplus_matrix: computed action deviates from the closed form");
  return *X;
}

// Exact and floating-point spectral data of the deformed angular operator
// restricted to the degree-k harmonics.  Away from small couplings lambda^2
// can go negative, in which case the eigenvalues leave the real axis and
// only lambda_complex is populated.
struct SpectralDatum {
  long k = 0;
  Rational epsilon;
  long dim_harmonic = 0;
  bool generic_dimension = true;
  bool exact_identity_checked = false;
  bool degenerate_radical = false;
  bool real_spectrum = true;
  std::vector<Rational> sigma_entries;
  std::vector<Rational> lambda_squared;  // (k - N_c)^2 - (1 - eps^2) sigma^2 per entry, k >= 1
  std::vector<double> lambda_float;      // ascending; empty when the spectrum is not real
  std::vector<std::complex<double>> lambda_complex;  // sorted by (re, im)
};

// Matrix of the deformed angular operator restricted to the harmonic space,
// in the coordinates of the given kernel basis.
inline CycMatrix restricted_z0_matrix(const ModuleContext& ctx, const HarmonicSpace& hs, const Rational& eps) {
  CycMatrix T(static_cast<std::size_t>(ctx.dim(hs.k)), hs.coordinates.cols());
  for (std::size_t j = 0; j < hs.coordinates.cols(); ++j) {
    CycMatrix tc = to_vector(ctx, relops::Z0eps(ctx, eps, hs.basis[j]), hs.k);
    for (std::size_t i = 0; i < T.rows(); ++i) T.at(i, j) = tc.at(i, 0);
  }
  auto X = CycMatrix::solve(hs.coordinates, T);
  if (!X) throw std::logic_error("restricted_z0_matrix: angular operator does not preserve the kernel");
  return *X;
}

inline SpectralDatum spectrum(const ModuleContext& ctx, long k, const Rational& eps) {
  if (k < 0 || k > ctx.max_degree()) throw std::out_of_range("spectrum: degree outside [0, max_degree]");
  SpectralDatum out;
  out.k = k;
  out.epsilon = eps;
  out.sigma_entries = sigma_weights(ctx.params(), ctx.tau(), k);

  HarmonicSpace hs = harmonic_basis(ctx, k);
  out.dim_harmonic = hs.dim();
  out.generic_dimension = (out.dim_harmonic == generic_harmonic_dim(ctx, k));

  const Rational a = Rational(k) - ctx.coupling_trace();
  const Rational one_minus_eps2 = Rational(1) - eps * eps;
  if (k >= 1) {
    for (const Rational& s : out.sigma_entries) {
      Rational l2 = a * a - one_minus_eps2 * s * s;
      out.lambda_squared.push_back(l2);
      if (l2.is_zero()) out.degenerate_radical = true;
      if (l2.to_double() < 0.0) out.real_spectrum = false;
    }
  }

  CycMatrix R = restricted_z0_matrix(ctx, hs, eps);
  if (out.generic_dimension) {
    // Expected characteristic polynomial, ascending coefficients: for k = 0
    // the operator is eps tau(sigma(0)); otherwise the product over weight
    // blocks of t^2 - lambda^2.
    std::vector<Rational> expected{Rational(1)};
    if (k == 0) {
      if (ctx.tau().kind == Irrep::Kind::Rho) {
        expected = {Rational(0), Rational(0), Rational(1)};
      } else {
        expected = {-(eps * ctx.coupling_trace()), Rational(1)};
      }
    } else {
      for (const Rational& l2 : out.lambda_squared)
        expected = detail_harm::poly_mul_rat(expected, {-l2, Rational(0), Rational(1)});
    }
    std::vector<Cyclotomic> cp = R.charpoly();
    if (cp.size() != expected.size())
      throw std::logic_error("spectrum: characteristic polynomial has unexpected degree");
    for (std::size_t i = 0; i < cp.size(); ++i)
      if (cp[i] != Cyclotomic(expected[i]))
        throw std::logic_error("spectrum: exact characteristic polynomial deviates from the closed form");
    out.exact_identity_checked = true;
  }

  out.lambda_complex = complex_eigenvalues(to_complex_matrix(R));
  std::sort(out.lambda_complex.begin(), out.lambda_complex.end(),
            [](const std::complex<double>& x, const std::complex<double>& y) {
              return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
            });
  if (out.real_spectrum && out.generic_dimension) {
    for (const auto& v : out.lambda_complex) {
      if (std::abs(v.imag()) > 1e-9)
        throw std::logic_error("spectrum: non-real eigenvalue where the closed form predicts a real one");
      out.lambda_float.push_back(v.real());
    }
    std::sort(out.lambda_float.begin(), out.lambda_float.end());
  } else if (out.real_spectrum) {
    // Dimension jumped; report whatever real eigenvalues are present.
    for (const auto& v : out.lambda_complex)
      if (std::abs(v.imag()) <= 1e-9) out.lambda_float.push_back(v.real());
    std::sort(out.lambda_float.begin(), out.lambda_float.end());
  }
  return out;
}

// One eigenvector of the deformed angular operator on degree-k harmonics,
// as floating-point coordinates in the full degree-k monomial basis.  The
// eigenvalue is complex in general; it is real on the small-coupling range.
struct HarmonicEigenvector {
  std::complex<double> lambda;
  Rational sigma;
  Eigen::VectorXcd coords;
  bool from_formula = true;
};

struct EigenvectorResult {
  std::vector<HarmonicEigenvector> vectors;
  bool used_fallback = false;
};

// Closed-form eigenvectors per weight block,
//   h+ = Proj[ (a + lambda+) zbar-rep - sigma (1 - eps) z-rep ],
//   h- = Proj[ (a + lambda+) z-rep    - sigma (1 + eps) zbar-rep ],
// with lambda+ = sqrt(a^2 - (1 - eps^2) sigma^2) and the signed convention
// lambda+ = a when eps^2 = 1.  Blocks where both formulas collapse to zero
// or to parallel vectors fall back to numerical null spaces of the
// restricted matrix and are flagged.
inline EigenvectorResult eigenvectors(const ModuleContext& ctx, long k, const Rational& eps) {
  if (k < 0 || k > ctx.max_degree()) throw std::out_of_range("eigenvectors: degree outside [0, max_degree]");
  EigenvectorResult out;

  if (k == 0) {
    const bool onedim = ctx.tau().kind != Irrep::Kind::Rho;
    double lam = onedim ? (eps * ctx.coupling_trace()).to_double() : 0.0;
    for (long v = 0; v < ctx.dim_tau(); ++v) {
      HarmonicEigenvector ev;
      ev.lambda = lam;
      ev.sigma = onedim ? character_of_sigma(ctx.params(), ctx.tau(), 0) : Rational(0);
      ev.coords = Eigen::VectorXcd::Zero(ctx.dim_tau());
      ev.coords(v) = 1.0;
      out.vectors.push_back(std::move(ev));
    }
    return out;
  }

  require_nonresonant(ctx, k);
  const Rational a = Rational(k) - ctx.coupling_trace();
  const Rational one_minus_eps2 = Rational(1) - eps * eps;
  const Eigen::MatrixXcd P = to_complex_matrix(proj_matrix(ctx, k));
  auto blocks = detail_harm::weight_blocks(ctx, k);

  HarmonicSpace hs = harmonic_basis(ctx, k);
  Eigen::MatrixXcd Bf = to_complex_matrix(hs.coordinates);
  Eigen::MatrixXcd Rf;  // computed lazily, only when a block degenerates
  bool have_R = false;
  // key: lambda rounded to 1e-9 componentwise
  std::map<std::pair<long long, long long>, long> used_per_eigenvalue;

  for (const auto& blk : blocks) {
    Rational l2 = a * a - one_minus_eps2 * blk.sigma * blk.sigma;
    std::complex<double> lam_plus;
    if (one_minus_eps2.is_zero()) {
      lam_plus = a.to_double();
    } else {
      lam_plus = std::sqrt(std::complex<double>(l2.to_double(), 0.0));
    }

    Eigen::VectorXcd ez = Eigen::VectorXcd::Zero(ctx.dim(k));
    Eigen::VectorXcd ezb = Eigen::VectorXcd::Zero(ctx.dim(k));
    ez(ctx.basis_index(blk.z_rep)) = 1.0;
    ezb(ctx.basis_index(blk.zbar_rep)) = 1.0;

    double af = a.to_double();
    double sf = blk.sigma.to_double();
    double em = (Rational(1) - eps).to_double();
    double ep = (Rational(1) + eps).to_double();
    std::complex<double> head = af + lam_plus;
    Eigen::VectorXcd hplus = P * (head * ezb - std::complex<double>(sf * em) * ez);
    Eigen::VectorXcd hminus = P * (head * ez - std::complex<double>(sf * ep) * ezb);

    double scale = std::abs(af) + std::abs(sf) + std::abs(lam_plus) + 1.0;
    bool degenerate = hplus.norm() <= 1e-12 * scale || hminus.norm() <= 1e-12 * scale;
    if (!degenerate && std::abs(lam_plus) <= 1e-12 &&
        std::abs(hplus.dot(hminus)) >= (1.0 - 1e-8) * hplus.norm() * hminus.norm())
      degenerate = true;

    if (!degenerate) {
      out.vectors.push_back({lam_plus, blk.sigma, hplus, true});
      out.vectors.push_back({-lam_plus, blk.sigma, hminus, true});
      continue;
    }

    out.used_fallback = true;
    if (!have_R) {
      Rf = to_complex_matrix(restricted_z0_matrix(ctx, hs, eps));
      have_R = true;
    }
    const std::complex<double> lams[2] = {lam_plus, -lam_plus};
    for (const std::complex<double>& lam : lams) {
      Eigen::MatrixXcd ns = null_space_float(
          Rf - lam * Eigen::MatrixXcd::Identity(Rf.rows(), Rf.cols()));
      if (ns.cols() == 0)
        throw std::runtime_error("eigenvectors: numerical null space is empty at a predicted eigenvalue");
      auto key = std::make_pair(std::llround(lam.real() * 1e9), std::llround(lam.imag() * 1e9));
      long pick = used_per_eigenvalue[key]++ % static_cast<long>(ns.cols());
      out.vectors.push_back({lam, blk.sigma, Bf * ns.col(pick), false});
    }
  }
  return out;
}

// Degree-by-degree summary of the harmonic decomposition of the standard
// module: dimensions, spectral data, and the telescoping dimension check
//   dim M_k = sum of dim H_{k'} over k' <= k with k' = k (mod 2).
struct ScalarDecompRow {
  long k = 0;
  long dim_module = 0;
  long dim_harmonic = 0;
  bool generic_dimension = true;
  bool real_spectrum = true;
  Rational h_weight;  // k + 1 - N_c
  std::vector<Rational> sigma_entries;
  std::vector<Rational> lambda_squared;
  std::vector<double> lambda_float;
  std::vector<std::complex<double>> lambda_complex;
  long distinct_eigenvalues = 0;
  long generic_eigenvalue_count = 0;
  bool fewer_distinct = false;
  bool telescoping_ok = true;
};

struct ScalarDecompositionReport {
  Rational epsilon;
  long max_degree = 0;
  std::vector<ScalarDecompRow> rows;
  bool all_telescoping = true;
  bool any_nongeneric = false;
};

inline ScalarDecompositionReport scalar_decomposition_report(const ModuleContext& ctx, const Rational& eps) {
  ScalarDecompositionReport rep;
  rep.epsilon = eps;
  rep.max_degree = ctx.max_degree();
  std::vector<long> harmonic_dims(static_cast<std::size_t>(ctx.max_degree()) + 1, 0);

  for (long k = 0; k <= ctx.max_degree(); ++k) {
    SpectralDatum sd = spectrum(ctx, k, eps);
    ScalarDecompRow row;
    row.k = k;
    row.dim_module = ctx.dim(k);
    row.dim_harmonic = sd.dim_harmonic;
    row.generic_dimension = sd.generic_dimension;
    row.h_weight = Rational(k + 1) - ctx.coupling_trace();
    row.sigma_entries = sd.sigma_entries;
    row.lambda_squared = sd.lambda_squared;
    row.lambda_float = sd.lambda_float;
    row.lambda_complex = sd.lambda_complex;
    row.real_spectrum = sd.real_spectrum;
    harmonic_dims[static_cast<std::size_t>(k)] = sd.dim_harmonic;

    long clusters = 0;
    for (std::size_t i = 0; i < row.lambda_complex.size(); ++i)
      if (i == 0 || std::abs(row.lambda_complex[i] - row.lambda_complex[i - 1]) > 1e-8) ++clusters;
    row.distinct_eigenvalues = clusters;
    row.generic_eigenvalue_count = detail_harm::generic_distinct_count(ctx, k, eps);
    row.fewer_distinct = clusters < row.generic_eigenvalue_count;

    long telescoped = 0;
    for (long kp = k % 2; kp <= k; kp += 2) telescoped += harmonic_dims[static_cast<std::size_t>(kp)];
    row.telescoping_ok = (telescoped == row.dim_module);

    rep.all_telescoping = rep.all_telescoping && row.telescoping_ok;
    rep.any_nongeneric = rep.any_nongeneric || !row.generic_dimension;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

// Structural identities of the projection and the induced angular action,
// checked exactly degree by degree; resonant degrees are reported as skipped.
inline std::vector<RelationCheck> verify_harmonic_invariants(const ModuleContext& ctx, const Rational& eps) {
  std::vector<RelationCheck> out;
  const long D = ctx.max_degree();

  RelationCheck annihilate{"harm/E-.Proj=0", true, -1, "degrees 0.." + std::to_string(D)};
  RelationCheck idempotent{"harm/Proj.Proj=Proj", true, -1, "degrees 0.." + std::to_string(D)};
  RelationCheck fixes{"harm/Proj-fixes-harmonics", true, -1, "degrees 0.." + std::to_string(D)};
  std::vector<long> skipped;

  for (long k = 0; k <= D; ++k) {
    if (is_resonant(ctx, k)) {
      skipped.push_back(k);
      continue;
    }
    for (long idx = 0; idx < ctx.dim(k); ++idx) {
      ModuleElement p = ModuleElement::monomial(ctx.basis_monomial(k, idx), Cyclotomic(1));
      ModuleElement pp = proj_k(ctx, p);
      if (annihilate.pass && !relops::Eminus(ctx, pp).is_zero()) {
        annihilate.pass = false;
        annihilate.first_fail_degree = k;
      }
      if (idempotent.pass && proj_k(ctx, pp) != pp) {
        idempotent.pass = false;
        idempotent.first_fail_degree = k;
      }
    }
    HarmonicSpace hs = harmonic_basis(ctx, k);
    for (const ModuleElement& h : hs.basis) {
      if (fixes.pass && proj_k(ctx, h) != h) {
        fixes.pass = false;
        fixes.first_fail_degree = k;
      }
    }
  }
  if (!skipped.empty()) {
    std::string note = "; skipped resonant degrees:";
    for (long k : skipped) note += " " + std::to_string(k);
    annihilate.detail += note;
    idempotent.detail += note;
    fixes.detail += note;
  }
  out.push_back(std::move(annihilate));
  out.push_back(std::move(idempotent));
  out.push_back(std::move(fixes));

  out.push_back(check_identity(
      ctx, "harm/Z0eps.E+=E+.Z0eps", D - 2,
      [&](const ModuleElement& p) { return relops::Z0eps(ctx, eps, relops::Eplus(ctx, p)); },
      [&](const ModuleElement& p) { return relops::Eplus(ctx, relops::Z0eps(ctx, eps, p)); }));
  return out;
}

}  // namespace howe
