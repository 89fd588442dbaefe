#pragma once

#include <map>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "howe/dihedral.hpp"
#include "howe/matrix.hpp"

namespace howe {

// Monomial z^a zbar^b tensor the v-th basis vector of V(tau).
struct Monomial {
  long a = 0;
  long b = 0;
  long v = 0;

  long degree() const { return a + b; }
  friend bool operator<(const Monomial& x, const Monomial& y) {
    return std::tie(x.a, x.b, x.v) < std::tie(y.a, y.b, y.v);
  }
  friend bool operator==(const Monomial& x, const Monomial& y) {
    return x.a == y.a && x.b == y.b && x.v == y.v;
  }
};

// Immutable setup for a standard module M_c(tau) over I2(m): group size,
// lowest-weight irrep, coupling, degree truncation, and the tables every
// operation keeps reusing (irrep images of sigma(n) and of the reflections).
class ModuleContext {
 public:
  ModuleContext(long m, const Irrep& tau, const ParamValues& params, long max_degree)
      : m_(m), tau_(tau), params_(params), max_degree_(max_degree), order_(field_order(m)) {
    if (m < 3) throw std::invalid_argument("m must be >= 3");
    if (params.m != m) throw std::invalid_argument("ModuleContext: params built for a different m");
    if (max_degree < 0 || max_degree > 24)
      throw std::invalid_argument("max_degree must lie in [0, 24]");
    tau.validate(m);
    for (long n = 0; n < m; ++n) sigma_tau_.push_back(sigma_on_irrep(params_, tau_, n));
    for (long j = 0; j < m; ++j)
      refl_tau_.push_back(irrep_matrix(tau_, DihedralElement::reflection(m, j)));
  }

  long m() const { return m_; }
  const Irrep& tau() const { return tau_; }
  const ParamValues& params() const { return params_; }
  long max_degree() const { return max_degree_; }
  long order() const { return order_; }
  long dim_tau() const { return tau_.dim(); }

  Rational coupling_trace() const { return howe::coupling_trace(params_, tau_); }

  // tau(sigma(n)) with n taken mod m.
  const CycMatrix& sigma_tau(long n) const { return sigma_tau_[((n % m_) + m_) % m_]; }
  const CycMatrix& refl_tau(long j) const { return refl_tau_[((j % m_) + m_) % m_]; }

  // Dimension of the degree-k slice; zero spaces below degree 0.
  long dim(long k) const { return k < 0 ? 0 : (k + 1) * dim_tau(); }

  // Basis index of z^a zbar^b v_i inside degree k = a + b: the exponent pair
  // runs (k,0), (k-1,1), ..., (0,k) with the irrep index fastest.
  long basis_index(const Monomial& mo) const { return (mo.degree() - mo.a) * dim_tau() + mo.v; }
  Monomial basis_monomial(long k, long idx) const {
    long pos = idx / dim_tau();
    return Monomial{k - pos, pos, idx % dim_tau()};
  }

 private:
  long m_;
  Irrep tau_;
  ParamValues params_;
  long max_degree_;
  long order_;
  std::vector<CycMatrix> sigma_tau_;
  std::vector<CycMatrix> refl_tau_;
};

// Finite C-linear combination of monomials; the zero element has no terms.
class ModuleElement {
 public:
  ModuleElement() = default;

  static ModuleElement monomial(const Monomial& mo, const Cyclotomic& c = Cyclotomic(1)) {
    ModuleElement e;
    e.add_term(mo, c);
    return e;
  }

  const std::map<Monomial, Cyclotomic>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Monomial& mo, const Cyclotomic& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(mo);
    if (it == terms_.end()) {
      terms_.emplace(mo, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  Cyclotomic coefficient(const Monomial& mo) const {
    auto it = terms_.find(mo);
    return it == terms_.end() ? Cyclotomic(0) : it->second;
  }

  long max_degree_present() const {
    long d = 0;
    for (const auto& [mo, c] : terms_) d = std::max(d, mo.degree());
    return d;
  }

  bool is_homogeneous(long k) const {
    for (const auto& [mo, c] : terms_)
      if (mo.degree() != k) return false;
    return true;
  }

  friend ModuleElement operator+(const ModuleElement& x, const ModuleElement& y) {
    ModuleElement r(x);
    for (const auto& [mo, c] : y.terms_) r.add_term(mo, c);
    return r;
  }
  friend ModuleElement operator-(const ModuleElement& x, const ModuleElement& y) {
    ModuleElement r(x);
    for (const auto& [mo, c] : y.terms_) r.add_term(mo, -c);
    return r;
  }
  friend ModuleElement operator*(const Cyclotomic& c, const ModuleElement& x) {
    ModuleElement r;
    for (const auto& [mo, v] : x.terms_) r.add_term(mo, c * v);
    return r;
  }

  friend bool operator==(const ModuleElement& x, const ModuleElement& y) {
    return x.terms_ == y.terms_;
  }
  friend bool operator!=(const ModuleElement& x, const ModuleElement& y) { return !(x == y); }

 private:
  std::map<Monomial, Cyclotomic> terms_;
};

enum class Var { Z, Zbar };

// Multiplication by z or zbar; errors past the truncation degree.
inline ModuleElement multiply_by(const ModuleContext& ctx, Var var, const ModuleElement& e) {
  ModuleElement r;
  for (const auto& [mo, c] : e.terms()) {
    if (mo.degree() + 1 > ctx.max_degree())
      throw std::domain_error("multiply_by: degree overflow beyond max_degree");
    Monomial n = mo;
    (var == Var::Z ? n.a : n.b) += 1;
    r.add_term(n, c);
  }
  return r;
}

// Action of sigma(n): z^a zbar^b v  ->  z^b zbar^a (tau(sigma(n + a - b)) v).
inline ModuleElement sigma_act(const ModuleContext& ctx, long n, const ModuleElement& e) {
  ModuleElement r;
  for (const auto& [mo, c] : e.terms()) {
    const CycMatrix& mat = ctx.sigma_tau(n + mo.a - mo.b);
    for (long w = 0; w < ctx.dim_tau(); ++w) {
      const Cyclotomic& entry = mat.at(static_cast<std::size_t>(w), static_cast<std::size_t>(mo.v));
      if (entry.is_zero()) continue;
      r.add_term(Monomial{mo.b, mo.a, w}, c * entry);
    }
  }
  return r;
}

// Group action: s_j (z^a zbar^b v) = omega^{j(a-b)} z^b zbar^a (tau(s_j) v),
// rotations act diagonally with weight omega^{k(a-b)}.
inline ModuleElement group_act(const ModuleContext& ctx, const DihedralElement& g,
                               const ModuleElement& e) {
  if (g.m() != ctx.m()) throw std::invalid_argument("group_act: mixed groups");
  ModuleElement r;
  const CycMatrix mat = irrep_matrix(ctx.tau(), g);
  for (const auto& [mo, c] : e.terms()) {
    Cyclotomic w = omega_pow(ctx.m(), g.index() * (mo.a - mo.b));
    Monomial base = g.is_reflection() ? Monomial{mo.b, mo.a, 0} : Monomial{mo.a, mo.b, 0};
    for (long v = 0; v < ctx.dim_tau(); ++v) {
      const Cyclotomic& entry = mat.at(static_cast<std::size_t>(v), static_cast<std::size_t>(mo.v));
      if (entry.is_zero()) continue;
      Monomial n = base;
      n.v = v;
      r.add_term(n, c * w * entry);
    }
  }
  return r;
}

// Which variable the Dunkl recursion peels first; both factorizations of a
// monomial must give the same value (tested), Zbar-first exists for that test.
enum class PeelOrder { ZFirst, ZbarFirst };

// Dunkl action of the lowering vectors. With zeta dual to z and zetabar dual
// to zbar, both kill 1 tensor v and satisfy
//   zeta(z p)    = z zeta(p)    + (1 - sigma(0)) p
//   zeta(zbar p) = zbar zeta(p) + sigma(-1) p
//   zetabar(z p)    = z zetabar(p)    + sigma(1) p
//   zetabar(zbar p) = zbar zetabar(p) + (1 - sigma(0)) p
inline ModuleElement dunkl_apply(const ModuleContext& ctx, Var var, const ModuleElement& e,
                                 PeelOrder order = PeelOrder::ZFirst) {
  ModuleElement r;
  for (const auto& [mo, c] : e.terms()) {
    // Peel one variable at a time: each step emits the commutator term on the
    // remainder with the already-peeled prefix multiplied back on, and the
    // base case contributes nothing since both operators kill degree zero.
    long a = mo.a, b = mo.b;
    long za = 0, zb = 0;  // how many z / zbar already peeled (multiply back)
    while (a > 0 || b > 0) {
      bool peel_z = (order == PeelOrder::ZFirst) ? (a > 0) : !(b > 0);
      ModuleElement rest = ModuleElement::monomial(
          Monomial{peel_z ? a - 1 : a, peel_z ? b : b - 1, mo.v}, c);
      ModuleElement bracket;
      if (var == Var::Z) {
        bracket = peel_z ? rest - sigma_act(ctx, 0, rest) : sigma_act(ctx, -1, rest);
      } else {
        bracket = peel_z ? sigma_act(ctx, 1, rest) : rest - sigma_act(ctx, 0, rest);
      }
      // Multiply the peeled prefix back on.
      for (const auto& [bm, bc] : bracket.terms())
        r.add_term(Monomial{bm.a + za, bm.b + zb, bm.v}, bc);
      if (peel_z) {
        --a;
        ++za;
      } else {
        --b;
        ++zb;
      }
    }
  }
  return r;
}

// Conjugate-linear involution: swaps z with zbar (and the two rho basis
// vectors), conjugates coefficients, fixes the group.
inline ModuleElement theta(const ModuleContext& ctx, const ModuleElement& e) {
  ModuleElement r;
  for (const auto& [mo, c] : e.terms()) {
    long v = ctx.dim_tau() == 2 ? 1 - mo.v : mo.v;
    r.add_term(Monomial{mo.b, mo.a, v}, c.conjugate());
  }
  return r;
}

// Coordinate column of a degree-k homogeneous element.
inline CycMatrix to_vector(const ModuleContext& ctx, const ModuleElement& e, long k) {
  CycMatrix col(static_cast<std::size_t>(ctx.dim(k)), 1);
  for (const auto& [mo, c] : e.terms()) {
    if (mo.degree() != k) throw std::invalid_argument("to_vector: element not homogeneous of degree k");
    col.at(static_cast<std::size_t>(ctx.basis_index(mo)), 0) = c;
  }
  return col;
}

inline ModuleElement from_vector(const ModuleContext& ctx, const CycMatrix& col, long k) {
  if (col.rows() != static_cast<std::size_t>(ctx.dim(k)) || col.cols() != 1)
    throw std::invalid_argument("from_vector: wrong shape");
  ModuleElement e;
  for (long i = 0; i < ctx.dim(k); ++i)
    e.add_term(ctx.basis_monomial(k, i), col.at(static_cast<std::size_t>(i), 0));
  return e;
}

}  // namespace howe
