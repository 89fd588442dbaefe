#pragma once

#include <functional>
#include <string>
#include <vector>

#include "howe/standard_module.hpp"

namespace howe {

// Outcome of one operator identity checked degree by degree on the module
// basis. A failing check records the lowest degree where the two sides
// disagree; detail carries the range that was actually covered.
struct RelationCheck {
  std::string id;
  bool pass = true;
  long first_fail_degree = -1;
  std::string detail;
};

using ElementFn = std::function<ModuleElement(const ModuleElement&)>;

// Exact identity lhs(e) = rhs(e) over every basis monomial of degree 0..hi.
inline RelationCheck check_identity(const ModuleContext& ctx, std::string id, long hi,
                                    const ElementFn& lhs, const ElementFn& rhs) {
  RelationCheck rc;
  rc.id = std::move(id);
  if (hi < 0) {
    rc.pass = true;
    rc.detail = "vacuous: truncation leaves no degrees to check";
    return rc;
  }
  for (long k = 0; k <= hi && rc.pass; ++k) {
    for (long idx = 0; idx < ctx.dim(k); ++idx) {
      ModuleElement e = ModuleElement::monomial(ctx.basis_monomial(k, idx));
      if (!(lhs(e) == rhs(e))) {
        rc.pass = false;
        rc.first_fail_degree = k;
        break;
      }
    }
  }
  rc.detail = "degrees 0.." + std::to_string(hi);
  return rc;
}

namespace relops {

inline ElementFn mult(const ModuleContext& ctx, Var v) {
  return [&ctx, v](const ModuleElement& p) { return multiply_by(ctx, v, p); };
}
inline ElementFn mult_pow(const ModuleContext& ctx, Var v, long t) {
  return [&ctx, v, t](const ModuleElement& p) {
    ModuleElement r = p;
    for (long s = 0; s < t; ++s) r = multiply_by(ctx, v, r);
    return r;
  };
}
inline ElementFn dunkl(const ModuleContext& ctx, Var v) {
  return [&ctx, v](const ModuleElement& p) { return dunkl_apply(ctx, v, p); };
}
inline ElementFn sigma(const ModuleContext& ctx, long n) {
  return [&ctx, n](const ModuleElement& p) { return sigma_act(ctx, n, p); };
}

inline ModuleElement Eplus(const ModuleContext& ctx, const ModuleElement& p) {
  return Cyclotomic(Rational(1, 2)) * multiply_by(ctx, Var::Z, multiply_by(ctx, Var::Zbar, p));
}
inline ModuleElement Eminus(const ModuleContext& ctx, const ModuleElement& p) {
  return Cyclotomic(-2) * dunkl_apply(ctx, Var::Z, dunkl_apply(ctx, Var::Zbar, p));
}
inline ModuleElement Hop(const ModuleContext& ctx, const ModuleElement& p) {
  return multiply_by(ctx, Var::Z, dunkl_apply(ctx, Var::Z, p)) +
         multiply_by(ctx, Var::Zbar, dunkl_apply(ctx, Var::Zbar, p)) + p - sigma_act(ctx, 0, p);
}
inline ModuleElement Z0(const ModuleContext& ctx, const ModuleElement& p) {
  return multiply_by(ctx, Var::Zbar, dunkl_apply(ctx, Var::Zbar, p)) -
         multiply_by(ctx, Var::Z, dunkl_apply(ctx, Var::Z, p));
}
inline ModuleElement Z0eps(const ModuleContext& ctx, const Rational& eps, const ModuleElement& p) {
  return Z0(ctx, p) + Cyclotomic(eps) * sigma_act(ctx, 0, p);
}

}  // namespace relops

// Core commutation rules of the deformed Weyl pairs, the raising/lowering
// triple (E+, E-, H), its adjoint action on degree-one generators, scalarity
// of H per degree, and full group invariance of E+, E-, H.
inline std::vector<RelationCheck> verify_sl2_relations(const ModuleContext& ctx) {
  using namespace relops;
  std::vector<RelationCheck> out;
  const long D = ctx.max_degree();
  auto ep = [&ctx](const ModuleElement& p) { return Eplus(ctx, p); };
  auto em = [&ctx](const ModuleElement& p) { return Eminus(ctx, p); };
  auto h = [&ctx](const ModuleElement& p) { return Hop(ctx, p); };
  auto z = mult(ctx, Var::Z), zb = mult(ctx, Var::Zbar);
  auto dz = dunkl(ctx, Var::Z), dzb = dunkl(ctx, Var::Zbar);
  auto s0 = sigma(ctx, 0);

  out.push_back(check_identity(
      ctx, "weyl/[z,zbar]=0", D - 2,
      [&](const ModuleElement& p) { return z(zb(p)) - zb(z(p)); },
      [&](const ModuleElement&) { return ModuleElement(); }));
  out.push_back(check_identity(
      ctx, "weyl/[zeta,z]=1-sigma(0)", D - 1,
      [&](const ModuleElement& p) { return dz(z(p)) - z(dz(p)); },
      [&](const ModuleElement& p) { return p - s0(p); }));
  out.push_back(check_identity(
      ctx, "weyl/[zeta,zbar]=sigma(-1)", D - 1,
      [&](const ModuleElement& p) { return dz(zb(p)) - zb(dz(p)); },
      [&](const ModuleElement& p) { return sigma_act(ctx, -1, p); }));
  out.push_back(check_identity(
      ctx, "weyl/[zetabar,z]=sigma(1)", D - 1,
      [&](const ModuleElement& p) { return dzb(z(p)) - z(dzb(p)); },
      [&](const ModuleElement& p) { return sigma_act(ctx, 1, p); }));
  out.push_back(check_identity(
      ctx, "weyl/[zetabar,zbar]=1-sigma(0)", D - 1,
      [&](const ModuleElement& p) { return dzb(zb(p)) - zb(dzb(p)); },
      [&](const ModuleElement& p) { return p - s0(p); }));
  out.push_back(check_identity(
      ctx, "weyl/[zeta,zetabar]=0", D,
      [&](const ModuleElement& p) { return dz(dzb(p)) - dzb(dz(p)); },
      [&](const ModuleElement&) { return ModuleElement(); }));

  out.push_back(check_identity(
      ctx, "sl2/[H,E+]=2E+", D - 2,
      [&](const ModuleElement& p) { return h(ep(p)) - ep(h(p)); },
      [&](const ModuleElement& p) { return Cyclotomic(2) * ep(p); }));
  out.push_back(check_identity(
      ctx, "sl2/[H,E-]=-2E-", D,
      [&](const ModuleElement& p) { return h(em(p)) - em(h(p)); },
      [&](const ModuleElement& p) { return Cyclotomic(-2) * em(p); }));
  out.push_back(check_identity(
      ctx, "sl2/[E+,E-]=H", D - 2,
      [&](const ModuleElement& p) { return ep(em(p)) - em(ep(p)); }, h));

  const Cyclotomic nc(ctx.coupling_trace());
  out.push_back(check_identity(
      ctx, "sl2/H=(k+1-Nc)id", D, h,
      [&](const ModuleElement& p) {
        long k = p.terms().begin()->first.degree();
        return (Cyclotomic(k + 1) - nc) * p;
      }));

  out.push_back(check_identity(
      ctx, "sl2/[E+,2zeta]=-zbar", D - 2,
      [&](const ModuleElement& p) { return Cyclotomic(2) * (ep(dz(p)) - dz(ep(p))); },
      [&](const ModuleElement& p) { return Cyclotomic(-1) * zb(p); }));
  out.push_back(check_identity(
      ctx, "sl2/[E+,2zetabar]=-z", D - 2,
      [&](const ModuleElement& p) { return Cyclotomic(2) * (ep(dzb(p)) - dzb(ep(p))); },
      [&](const ModuleElement& p) { return Cyclotomic(-1) * z(p); }));
  out.push_back(check_identity(
      ctx, "sl2/[E-,z]=-2zetabar", D - 1,
      [&](const ModuleElement& p) { return em(z(p)) - z(em(p)); },
      [&](const ModuleElement& p) { return Cyclotomic(-2) * dzb(p); }));
  out.push_back(check_identity(
      ctx, "sl2/[E-,zbar]=-2zeta", D - 1,
      [&](const ModuleElement& p) { return em(zb(p)) - zb(em(p)); },
      [&](const ModuleElement& p) { return Cyclotomic(-2) * dz(p); }));
  out.push_back(check_identity(
      ctx, "sl2/[H,z]=z", D - 1,
      [&](const ModuleElement& p) { return h(z(p)) - z(h(p)); }, z));
  out.push_back(check_identity(
      ctx, "sl2/[H,zbar]=zbar", D - 1,
      [&](const ModuleElement& p) { return h(zb(p)) - zb(h(p)); }, zb));
  out.push_back(check_identity(
      ctx, "sl2/[H,zeta]=-zeta", D,
      [&](const ModuleElement& p) { return h(dz(p)) - dz(h(p)); },
      [&](const ModuleElement& p) { return Cyclotomic(-1) * dz(p); }));
  out.push_back(check_identity(
      ctx, "sl2/[H,zetabar]=-zetabar", D,
      [&](const ModuleElement& p) { return h(dzb(p)) - dzb(h(p)); },
      [&](const ModuleElement& p) { return Cyclotomic(-1) * dzb(p); }));

  const auto elements = all_elements(ctx.m());
  struct Named {
    const char* id;
    ElementFn fn;
    long hi;
  };
  std::vector<Named> invariant = {
      {"sl2/G-equivariance-E+", ep, D - 2},
      {"sl2/G-equivariance-E-", em, D},
      {"sl2/G-equivariance-H", h, D}};
  for (const auto& named : invariant) {
    RelationCheck rc;
    rc.id = named.id;
    for (const auto& g : elements) {
      RelationCheck piece = check_identity(
          ctx, rc.id, named.hi,
          [&](const ModuleElement& p) { return group_act(ctx, g, named.fn(p)); },
          [&](const ModuleElement& p) { return named.fn(group_act(ctx, g, p)); });
      if (!piece.pass) {
        rc.pass = false;
        rc.first_fail_degree = piece.first_fail_degree;
        rc.detail = "fails for " + g.str();
        break;
      }
    }
    if (rc.pass) rc.detail = "all " + std::to_string(elements.size()) + " group elements, degrees 0.." + std::to_string(named.hi);
    out.push_back(rc);
  }
  return out;
}

// The deformed centralizer generator: centrality against the raising and
// lowering triple, its adjoint action on powers of z and zbar, rotation
// invariance, oddness under reflections, and the conjugation involution.
inline std::vector<RelationCheck> verify_u11_relations(const ModuleContext& ctx,
                                                       const Rational& eps) {
  using namespace relops;
  std::vector<RelationCheck> out;
  const long D = ctx.max_degree();
  auto ep = [&ctx](const ModuleElement& p) { return Eplus(ctx, p); };
  auto em = [&ctx](const ModuleElement& p) { return Eminus(ctx, p); };
  auto h = [&ctx](const ModuleElement& p) { return Hop(ctx, p); };
  auto z0 = [&ctx](const ModuleElement& p) { return Z0(ctx, p); };
  auto z0e = [&ctx, &eps](const ModuleElement& p) { return Z0eps(ctx, eps, p); };

  out.push_back(check_identity(
      ctx, "u11/[Z0eps,E+]=0", D - 2,
      [&](const ModuleElement& p) { return z0e(ep(p)) - ep(z0e(p)); },
      [&](const ModuleElement&) { return ModuleElement(); }));
  out.push_back(check_identity(
      ctx, "u11/[Z0eps,E-]=0", D,
      [&](const ModuleElement& p) { return z0e(em(p)) - em(z0e(p)); },
      [&](const ModuleElement&) { return ModuleElement(); }));
  out.push_back(check_identity(
      ctx, "u11/[Z0eps,H]=0", D,
      [&](const ModuleElement& p) { return z0e(h(p)) - h(z0e(p)); },
      [&](const ModuleElement&) { return ModuleElement(); }));

  for (long n = 1; n <= D; ++n) {
    auto zn = mult_pow(ctx, Var::Z, n);
    auto zbn = mult_pow(ctx, Var::Zbar, n);
    out.push_back(check_identity(
        ctx, "u11/adZ0-z^" + std::to_string(n), D - n,
        [&](const ModuleElement& p) { return z0(zn(p)) - zn(z0(p)); },
        [&](const ModuleElement& p) {
          ModuleElement r = zn(Cyclotomic(-n) * p + sigma_act(ctx, 0, p)) +
                            zbn(sigma_act(ctx, n, p));
          for (long j = 1; j <= n - 1; ++j) {
            ModuleElement t = sigma_act(ctx, j, p);
            t = mult_pow(ctx, Var::Z, n - j)(t);
            t = mult_pow(ctx, Var::Zbar, j)(t);
            r = r + Cyclotomic(2) * t;
          }
          return r;
        }));
    out.push_back(check_identity(
        ctx, "u11/adZ0-zbar^" + std::to_string(n), D - n,
        [&](const ModuleElement& p) { return z0(zbn(p)) - zbn(z0(p)); },
        [&](const ModuleElement& p) {
          ModuleElement r = zbn(Cyclotomic(n) * p - sigma_act(ctx, 0, p)) -
                            zn(sigma_act(ctx, -n, p));
          for (long j = 1; j <= n - 1; ++j) {
            ModuleElement t = sigma_act(ctx, -j, p);
            t = mult_pow(ctx, Var::Zbar, n - j)(t);
            t = mult_pow(ctx, Var::Z, j)(t);
            r = r - Cyclotomic(2) * t;
          }
          return r;
        }));
  }

  {
    RelationCheck rc;
    rc.id = "u11/Z0-rotation-invariant";
    for (long k = 0; k < ctx.m() && rc.pass; ++k) {
      DihedralElement g = DihedralElement::rotation(ctx.m(), k);
      RelationCheck piece = check_identity(
          ctx, rc.id, D,
          [&](const ModuleElement& p) { return group_act(ctx, g, z0(p)); },
          [&](const ModuleElement& p) { return z0(group_act(ctx, g, p)); });
      if (!piece.pass) {
        rc.pass = false;
        rc.first_fail_degree = piece.first_fail_degree;
        rc.detail = "fails for " + g.str();
      }
    }
    if (rc.pass) rc.detail = "all rotations, degrees 0.." + std::to_string(D);
    out.push_back(rc);
  }
  {
    RelationCheck rc;
    rc.id = "u11/Z0eps-rotation-invariant";
    for (long k = 0; k < ctx.m() && rc.pass; ++k) {
      DihedralElement g = DihedralElement::rotation(ctx.m(), k);
      RelationCheck piece = check_identity(
          ctx, rc.id, D,
          [&](const ModuleElement& p) { return group_act(ctx, g, z0e(p)); },
          [&](const ModuleElement& p) { return z0e(group_act(ctx, g, p)); });
      if (!piece.pass) {
        rc.pass = false;
        rc.first_fail_degree = piece.first_fail_degree;
        rc.detail = "fails for " + g.str();
      }
    }
    if (rc.pass) rc.detail = "all rotations, degrees 0.." + std::to_string(D);
    out.push_back(rc);
  }
  {
    RelationCheck rc;
    rc.id = "u11/Z0-reflection-odd";
    for (const auto& s : all_reflections(ctx.m())) {
      RelationCheck piece = check_identity(
          ctx, rc.id, D,
          [&](const ModuleElement& p) { return group_act(ctx, s, z0(p)); },
          [&](const ModuleElement& p) { return Cyclotomic(-1) * z0(group_act(ctx, s, p)); });
      if (!piece.pass) {
        rc.pass = false;
        rc.first_fail_degree = piece.first_fail_degree;
        rc.detail = "fails for " + s.str();
        break;
      }
    }
    if (rc.pass) rc.detail = "all reflections, degrees 0.." + std::to_string(D);
    out.push_back(rc);
  }
  {
    // Reflections must genuinely fail to commute whenever Z0 is nonzero;
    // with s Z0 = -Z0 s the commutator is 2 Z0 s, vanishing only with Z0.
    RelationCheck rc;
    rc.id = "u11/Z0-reflection-noncommuting";
    bool z0_nonzero = false;
    bool witness = false;
    for (long k = 0; k <= D && !witness; ++k) {
      for (long idx = 0; idx < ctx.dim(k) && !witness; ++idx) {
        ModuleElement e = ModuleElement::monomial(ctx.basis_monomial(k, idx));
        if (!z0(e).is_zero()) z0_nonzero = true;
        for (const auto& s : all_reflections(ctx.m())) {
          ModuleElement comm = z0(group_act(ctx, s, e)) - group_act(ctx, s, z0(e));
          if (!comm.is_zero()) {
            witness = true;
            rc.detail = "witness at degree " + std::to_string(k);
            break;
          }
        }
      }
    }
    if (!z0_nonzero) {
      rc.detail = "vacuous: Z0 vanishes on every materialized degree";
    } else if (!witness) {
      rc.pass = false;
      rc.detail = "Z0 nonzero yet commutes with every reflection";
    }
    out.push_back(rc);
  }

  {
    const Cyclotomic ihalf = Cyclotomic(Rational(1, 2)) * Cyclotomic::i();
    auto xm = [&](const ModuleElement& p) {
      return Cyclotomic(Rational(1, 2)) *
             (multiply_by(ctx, Var::Z, p) + multiply_by(ctx, Var::Zbar, p));
    };
    auto ym = [&](const ModuleElement& p) {
      return Cyclotomic(-1) * ihalf *
             (multiply_by(ctx, Var::Z, p) - multiply_by(ctx, Var::Zbar, p));
    };
    auto xi = [&](const ModuleElement& p) {
      return dunkl_apply(ctx, Var::Z, p) + dunkl_apply(ctx, Var::Zbar, p);
    };
    auto eta = [&](const ModuleElement& p) {
      return Cyclotomic::i() * (dunkl_apply(ctx, Var::Z, p) - dunkl_apply(ctx, Var::Zbar, p));
    };
    out.push_back(check_identity(
        ctx, "u11/x.eta-y.xi=-i*Z0", D,
        [&](const ModuleElement& p) { return xm(eta(p)) - ym(xi(p)); },
        [&](const ModuleElement& p) { return Cyclotomic(-1) * Cyclotomic::i() * z0(p); }));
  }

  out.push_back(check_identity(
      ctx, "u11/theta.Z0.theta=-Z0", D,
      [&](const ModuleElement& p) { return theta(ctx, z0(theta(ctx, p))); },
      [&](const ModuleElement& p) { return Cyclotomic(-1) * z0(p); }));
  out.push_back(check_identity(
      ctx, "u11/theta.zeta.theta=zetabar", D,
      [&](const ModuleElement& p) { return theta(ctx, dunkl_apply(ctx, Var::Z, theta(ctx, p))); },
      [&](const ModuleElement& p) { return dunkl_apply(ctx, Var::Zbar, p); }));
  out.push_back(check_identity(
      ctx, "u11/theta.z.theta=zbar", D - 1,
      [&](const ModuleElement& p) { return theta(ctx, multiply_by(ctx, Var::Z, theta(ctx, p))); },
      [&](const ModuleElement& p) { return multiply_by(ctx, Var::Zbar, p); }));

  return out;
}

}  // namespace howe
