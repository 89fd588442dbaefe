#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>

#include "howe/standard_module.hpp"

namespace howe {

// Degree-homogeneous linear operator on a truncated standard module. A block
// maps the degree-k slice to degree k + shift. Blocks exist for every source
// degree up to domain_hi; targets below degree 0 are the zero space, so those
// blocks are synthesized with zero rows rather than stored. Compositions
// shrink domain_hi because the truncation cuts off whatever a factor would
// need from above max_degree.
class GradedOperator {
 public:
  GradedOperator(long shift, long max_degree, long dim_tau, long domain_hi)
      : shift_(shift), max_degree_(max_degree), dim_tau_(dim_tau), domain_hi_(domain_hi) {}

  long shift() const { return shift_; }
  long max_degree() const { return max_degree_; }
  long dim_tau() const { return dim_tau_; }
  long domain_hi() const { return domain_hi_; }
  long dim(long k) const { return k < 0 ? 0 : (k + 1) * dim_tau_; }

  void set_block(long k, CycMatrix m) { blocks_[k] = std::move(m); }

  CycMatrix block(long k) const {
    if (k > domain_hi_) throw std::out_of_range("GradedOperator: degree beyond operator domain");
    if (k < 0) return CycMatrix(static_cast<std::size_t>(dim(k + shift_)), 0);
    if (k + shift_ < 0) return CycMatrix(0, static_cast<std::size_t>(dim(k)));
    return blocks_.at(k);
  }

  bool is_zero() const {
    for (const auto& [k, b] : blocks_)
      if (!b.is_zero()) return false;
    return true;
  }

  friend GradedOperator operator+(const GradedOperator& x, const GradedOperator& y) {
    x.require_compatible(y, "operator+");
    if (x.shift_ != y.shift_) throw std::invalid_argument("GradedOperator: adding different shifts");
    GradedOperator r(x.shift_, x.max_degree_, x.dim_tau_, std::min(x.domain_hi_, y.domain_hi_));
    for (long k = std::max<long>(0, -x.shift_); k <= r.domain_hi_; ++k)
      r.set_block(k, x.block(k) + y.block(k));
    return r;
  }
  friend GradedOperator operator-(const GradedOperator& x, const GradedOperator& y) {
    return x + (Cyclotomic(-1) * y);
  }
  friend GradedOperator operator-(const GradedOperator& x) { return Cyclotomic(-1) * x; }
  friend GradedOperator operator*(const Cyclotomic& c, const GradedOperator& x) {
    GradedOperator r(x.shift_, x.max_degree_, x.dim_tau_, x.domain_hi_);
    for (const auto& [k, b] : x.blocks_) r.set_block(k, c * b);
    return r;
  }

  // Composition x after y.
  friend GradedOperator operator*(const GradedOperator& x, const GradedOperator& y) {
    x.require_compatible(y, "operator*");
    long shift = x.shift_ + y.shift_;
    long hi = std::min(y.domain_hi_, x.domain_hi_ - y.shift_);
    GradedOperator r(shift, x.max_degree_, x.dim_tau_, hi);
    for (long k = std::max<long>(0, -shift); k <= hi; ++k) r.set_block(k, x.block(k + y.shift_) * y.block(k));
    return r;
  }

  friend GradedOperator commutator(const GradedOperator& x, const GradedOperator& y) {
    return x * y - y * x;
  }

  // Equality of all blocks over the common domain.
  friend bool operator==(const GradedOperator& x, const GradedOperator& y) {
    return !first_mismatch_degree(x, y).has_value();
  }
  friend bool operator!=(const GradedOperator& x, const GradedOperator& y) { return !(x == y); }

  // Lowest source degree (if any) where the operators differ; operators of
  // different shift differ everywhere their blocks are nonzero, reported as
  // the lowest degree carrying a nonzero block.
  friend std::optional<long> first_mismatch_degree(const GradedOperator& x,
                                                   const GradedOperator& y) {
    x.require_compatible(y, "first_mismatch_degree");
    if (x.shift_ != y.shift_) {
      for (long k = 0; k <= std::min(x.domain_hi_, y.domain_hi_); ++k)
        if (!x.block(k).is_zero() || !y.block(k).is_zero()) return k;
      return std::nullopt;
    }
    long hi = std::min(x.domain_hi_, y.domain_hi_);
    for (long k = 0; k <= hi; ++k)
      if (!(x.block(k) == y.block(k))) return k;
    return std::nullopt;
  }

 private:
  void require_compatible(const GradedOperator& o, const char* who) const {
    if (max_degree_ != o.max_degree_ || dim_tau_ != o.dim_tau_)
      throw std::invalid_argument(std::string(who) + ": operators built over different modules");
  }

  long shift_;
  long max_degree_;
  long dim_tau_;
  long domain_hi_;
  std::map<long, CycMatrix> blocks_;
};

// Materialize an operator from its action on elements. The callback must send
// homogeneous degree-k input to homogeneous degree-(k+shift) output for every
// k with both degrees in [0, max_degree].
template <typename Fn>
GradedOperator op_from_action(const ModuleContext& ctx, long shift, Fn&& fn) {
  long hi = std::min(ctx.max_degree(), ctx.max_degree() - shift);
  GradedOperator op(shift, ctx.max_degree(), ctx.dim_tau(), hi);
  for (long k = std::max<long>(0, -shift); k <= hi; ++k) {
    CycMatrix blk(static_cast<std::size_t>(ctx.dim(k + shift)), static_cast<std::size_t>(ctx.dim(k)));
    for (long idx = 0; idx < ctx.dim(k); ++idx) {
      ModuleElement image = fn(ModuleElement::monomial(ctx.basis_monomial(k, idx)));
      CycMatrix col = to_vector(ctx, image, k + shift);
      for (std::size_t r = 0; r < col.rows(); ++r)
        blk.at(r, static_cast<std::size_t>(idx)) = col.at(r, 0);
    }
    op.set_block(k, blk);
  }
  return op;
}

inline ModuleElement apply_op(const ModuleContext& ctx, const GradedOperator& op,
                              const ModuleElement& e) {
  std::map<long, ModuleElement> by_degree;
  for (const auto& [mo, c] : e.terms()) {
    ModuleElement& part = by_degree[mo.degree()];
    part.add_term(mo, c);
  }
  ModuleElement out;
  for (const auto& [k, part] : by_degree) {
    if (k > op.domain_hi()) throw std::out_of_range("apply_op: element degree beyond operator domain");
    if (k + op.shift() < 0) continue;
    out = out + from_vector(ctx, op.block(k) * to_vector(ctx, part, k), k + op.shift());
  }
  return out;
}

inline GradedOperator op_identity(const ModuleContext& ctx) {
  return op_from_action(ctx, 0, [](const ModuleElement& p) { return p; });
}

inline GradedOperator op_scalar(const ModuleContext& ctx, const Cyclotomic& c) {
  return op_from_action(ctx, 0, [&](const ModuleElement& p) { return c * p; });
}

inline GradedOperator op_mult(const ModuleContext& ctx, Var var) {
  return op_from_action(ctx, 1, [&](const ModuleElement& p) { return multiply_by(ctx, var, p); });
}

inline GradedOperator op_dunkl(const ModuleContext& ctx, Var var) {
  return op_from_action(ctx, -1, [&](const ModuleElement& p) { return dunkl_apply(ctx, var, p); });
}

inline GradedOperator op_group(const ModuleContext& ctx, const DihedralElement& g) {
  return op_from_action(ctx, 0, [&](const ModuleElement& p) { return group_act(ctx, g, p); });
}

inline GradedOperator op_sigma(const ModuleContext& ctx, long n) {
  return op_from_action(ctx, 0, [&](const ModuleElement& p) { return sigma_act(ctx, n, p); });
}

// E+ = (1/2) z zbar, raising by two.
inline GradedOperator op_Eplus(const ModuleContext& ctx) {
  return op_from_action(ctx, 2, [&](const ModuleElement& p) {
    return Cyclotomic(Rational(1, 2)) * multiply_by(ctx, Var::Z, multiply_by(ctx, Var::Zbar, p));
  });
}

// E- = -2 zeta zetabar, lowering by two.
inline GradedOperator op_Eminus(const ModuleContext& ctx) {
  return op_from_action(ctx, -2, [&](const ModuleElement& p) {
    return Cyclotomic(-2) * dunkl_apply(ctx, Var::Z, dunkl_apply(ctx, Var::Zbar, p));
  });
}

// H = z zeta + zbar zetabar + 1 - sigma(0); acts on degree k by k + 1 - N_c.
inline GradedOperator op_H(const ModuleContext& ctx) {
  return op_from_action(ctx, 0, [&](const ModuleElement& p) {
    return multiply_by(ctx, Var::Z, dunkl_apply(ctx, Var::Z, p)) +
           multiply_by(ctx, Var::Zbar, dunkl_apply(ctx, Var::Zbar, p)) + p - sigma_act(ctx, 0, p);
  });
}

// Z0 = zbar zetabar - z zeta.
inline GradedOperator op_Z0(const ModuleContext& ctx) {
  return op_from_action(ctx, 0, [&](const ModuleElement& p) {
    return multiply_by(ctx, Var::Zbar, dunkl_apply(ctx, Var::Zbar, p)) -
           multiply_by(ctx, Var::Z, dunkl_apply(ctx, Var::Z, p));
  });
}

// Z0eps = Z0 + eps sigma(0), the deformed centralizer generator.
inline GradedOperator op_Z0eps(const ModuleContext& ctx, const Rational& eps) {
  return op_Z0(ctx) + Cyclotomic(eps) * op_sigma(ctx, 0);
}

inline GradedOperator op_X(const ModuleContext& ctx) {
  return Cyclotomic::i() * op_Z0(ctx);
}

// Real-coordinate generators: z = x + i y, xi = zeta + zetabar, eta = i (zeta - zetabar).
inline GradedOperator op_mult_x(const ModuleContext& ctx) {
  return Cyclotomic(Rational(1, 2)) * (op_mult(ctx, Var::Z) + op_mult(ctx, Var::Zbar));
}
inline GradedOperator op_mult_y(const ModuleContext& ctx) {
  return Cyclotomic(Rational(-1, 2)) * Cyclotomic::i() *
         (op_mult(ctx, Var::Z) - op_mult(ctx, Var::Zbar));
}
inline GradedOperator op_dunkl_xi(const ModuleContext& ctx) {
  return op_dunkl(ctx, Var::Z) + op_dunkl(ctx, Var::Zbar);
}
inline GradedOperator op_dunkl_eta(const ModuleContext& ctx) {
  return Cyclotomic::i() * (op_dunkl(ctx, Var::Z) - op_dunkl(ctx, Var::Zbar));
}

}  // namespace howe
