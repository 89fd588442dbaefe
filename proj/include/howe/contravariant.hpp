#pragma once

#include <map>
#include <stdexcept>
#include <utility>

#include "howe/standard_module.hpp"

namespace howe {

namespace detail_form {

// (2 zeta)^a (2 zetabar)^b q, memoized along the chain of exponent pairs so a
// whole Gram column reuses the shared lowering prefixes.
inline const ModuleElement& dunkl_power(const ModuleContext& ctx,
                                        std::map<std::pair<long, long>, ModuleElement>& memo,
                                        long a, long b) {
  auto key = std::make_pair(a, b);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  ModuleElement r;
  if (a > 0) {
    r = Cyclotomic(2) * dunkl_apply(ctx, Var::Z, dunkl_power(ctx, memo, a - 1, b));
  } else {
    r = Cyclotomic(2) * dunkl_apply(ctx, Var::Zbar, dunkl_power(ctx, memo, a, b - 1));
  }
  return memo.emplace(std::move(key), std::move(r)).first->second;
}

}  // namespace detail_form

// Sesquilinear pairing on the module: linear in p, conjugate-linear in q,
// normalized so the degree-0 slice 1 x V carries the inner product making the
// chosen irrep basis orthonormal, and extended by the adjunctions z* = 2 zeta,
// zbar* = 2 zetabar. Distinct degrees pair to zero.
inline Cyclotomic contravariant_form(const ModuleContext& ctx, const ModuleElement& p,
                                     const ModuleElement& q) {
  std::map<std::pair<long, long>, ModuleElement> memo;
  memo.emplace(std::make_pair(0L, 0L), q);
  Cyclotomic total(0);
  for (const auto& [mo, c] : p.terms()) {
    const ModuleElement& lowered = detail_form::dunkl_power(ctx, memo, mo.a, mo.b);
    total += c * lowered.coefficient(Monomial{0, 0, mo.v}).conjugate();
  }
  return total;
}

// Gram matrix of the degree-k monomial basis under the pairing.
inline CycMatrix contravariant_gram(const ModuleContext& ctx, long k) {
  if (k < 0 || k > ctx.max_degree())
    throw std::invalid_argument("contravariant_gram: degree outside [0, max_degree]");
  const long n = ctx.dim(k);
  CycMatrix gram(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (long col = 0; col < n; ++col) {
    std::map<std::pair<long, long>, ModuleElement> memo;
    memo.emplace(std::make_pair(0L, 0L),
                 ModuleElement::monomial(ctx.basis_monomial(k, col)));
    for (long row = 0; row < n; ++row) {
      Monomial mo = ctx.basis_monomial(k, row);
      const ModuleElement& lowered = detail_form::dunkl_power(ctx, memo, mo.a, mo.b);
      gram.at(static_cast<std::size_t>(row), static_cast<std::size_t>(col)) =
          lowered.coefficient(Monomial{0, 0, mo.v}).conjugate();
    }
  }
  return gram;
}

}  // namespace howe
