#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "howe/cyclotomic.hpp"
#include "howe/matrix.hpp"
#include "howe/params.hpp"

namespace howe {

// Scalars for I2(m) live in Q(zeta_L) with L = lcm(4, 2m): the field holds
// i, the m-th roots (rotation weights) and the 2m-th roots (Clifford layer).
inline long field_order(long m) { return std::lcm<long>(4, 2 * m); }

// omega^k with omega = e^{2 pi i / m}, inside Q(zeta_L).
inline Cyclotomic omega_pow(long m, long k) { return Cyclotomic::embedded_root(m, k); }

// Element of I2(m). Rotations rot(k) act on coordinates by z -> omega^k z,
// zbar -> omega^{-k} zbar; reflections ref(j) by z -> omega^j zbar. Indices
// are stored mod m (ref(0) is the reflection s_m fixing the x-axis). With the
// conjugation action g.z := g z g^{-1}, products compose as
//   ref(j) ref(k) = rot(k - j),  ref(j) rot(k) = ref(j + k),
//   rot(k) ref(j) = ref(j - k).
class DihedralElement {
 public:
  static DihedralElement rotation(long m, long k) { return DihedralElement(m, false, k); }
  static DihedralElement reflection(long m, long j) { return DihedralElement(m, true, j); }
  static DihedralElement identity_element(long m) { return rotation(m, 0); }

  long m() const { return m_; }
  bool is_reflection() const { return refl_; }
  long index() const { return idx_; }

  DihedralElement inverse() const {
    return refl_ ? *this : rotation(m_, -idx_);
  }

  friend DihedralElement operator*(const DihedralElement& g, const DihedralElement& h) {
    if (g.m_ != h.m_) throw std::invalid_argument("DihedralElement: mixed groups");
    long m = g.m_;
    if (!g.refl_ && !h.refl_) return rotation(m, g.idx_ + h.idx_);
    if (g.refl_ && !h.refl_) return reflection(m, g.idx_ + h.idx_);
    if (!g.refl_ && h.refl_) return reflection(m, h.idx_ - g.idx_);
    return rotation(m, h.idx_ - g.idx_);
  }

  friend bool operator==(const DihedralElement& a, const DihedralElement& b) {
    return a.m_ == b.m_ && a.refl_ == b.refl_ && a.idx_ == b.idx_;
  }
  friend bool operator!=(const DihedralElement& a, const DihedralElement& b) { return !(a == b); }
  friend bool operator<(const DihedralElement& a, const DihedralElement& b) {
    if (a.refl_ != b.refl_) return a.refl_ < b.refl_;
    return a.idx_ < b.idx_;
  }

  // Matrix on the ordered coordinate basis (z, zbar).
  CycMatrix action_on_zzbar() const {
    CycMatrix a(2, 2);
    if (!refl_) {
      a.at(0, 0) = omega_pow(m_, idx_);
      a.at(1, 1) = omega_pow(m_, -idx_);
    } else {
      a.at(0, 1) = omega_pow(m_, -idx_);
      a.at(1, 0) = omega_pow(m_, idx_);
    }
    return a;
  }

  std::string str() const {
    if (!refl_) return idx_ == 0 ? "e" : "r^" + std::to_string(idx_);
    return "s" + std::to_string(idx_ == 0 ? m_ : idx_);
  }

 private:
  DihedralElement(long m, bool refl, long idx) : m_(m), refl_(refl) {
    if (m < 3) throw std::invalid_argument("m must be >= 3");
    idx_ = ((idx % m) + m) % m;
  }

  long m_;
  bool refl_;
  long idx_;
};

inline std::vector<DihedralElement> all_elements(long m) {
  std::vector<DihedralElement> out;
  out.reserve(2 * static_cast<std::size_t>(m));
  for (long k = 0; k < m; ++k) out.push_back(DihedralElement::rotation(m, k));
  for (long j = 0; j < m; ++j) out.push_back(DihedralElement::reflection(m, j));
  return out;
}

inline std::vector<DihedralElement> all_reflections(long m) {
  std::vector<DihedralElement> out;
  for (long j = 1; j <= m; ++j) out.push_back(DihedralElement::reflection(m, j));
  return out;
}

// Irreducible representations of I2(m): triv, sign, the two further
// characters chi_0, chi_1 for even m, and the two-dimensional rho^(u),
// u = 1..q-1 with m = 2q or m = 2q-1, realized on the ordered basis
// (z, zbar) by rho_u(ref(j)) z = omega^{ju} zbar.
struct Irrep {
  enum class Kind { Triv, Sign, Chi0, Chi1, Rho };

  Kind kind = Kind::Triv;
  long u = 0;  // only for Rho

  static Irrep triv() { return {Kind::Triv, 0}; }
  static Irrep sign() { return {Kind::Sign, 0}; }
  static Irrep chi0() { return {Kind::Chi0, 0}; }
  static Irrep chi1() { return {Kind::Chi1, 0}; }
  static Irrep rho(long u) { return {Kind::Rho, u}; }

  long dim() const { return kind == Kind::Rho ? 2 : 1; }

  void validate(long m) const {
    long q = (m % 2 == 0) ? m / 2 : (m + 1) / 2;
    switch (kind) {
      case Kind::Chi0:
      case Kind::Chi1:
        if (m % 2 != 0) throw std::invalid_argument("chi characters require even m");
        break;
      case Kind::Rho:
        if (u < 1 || u > q - 1) throw std::invalid_argument("rho index u out of range 1..q-1");
        break;
      default:
        break;
    }
  }

  std::string str() const {
    switch (kind) {
      case Kind::Triv: return "triv";
      case Kind::Sign: return "sign";
      case Kind::Chi0: return "chi0";
      case Kind::Chi1: return "chi1";
      case Kind::Rho: return "rho:" + std::to_string(u);
    }
    return "?";
  }

  friend bool operator==(const Irrep& a, const Irrep& b) { return a.kind == b.kind && a.u == b.u; }
};

inline std::vector<Irrep> all_irreps(long m) {
  std::vector<Irrep> out{Irrep::triv(), Irrep::sign()};
  if (m % 2 == 0) {
    out.push_back(Irrep::chi0());
    out.push_back(Irrep::chi1());
  }
  long q = (m % 2 == 0) ? m / 2 : (m + 1) / 2;
  for (long u = 1; u <= q - 1; ++u) out.push_back(Irrep::rho(u));
  return out;
}

inline CycMatrix irrep_matrix(const Irrep& tau, const DihedralElement& g) {
  long m = g.m();
  tau.validate(m);
  auto one_by_one = [](const Rational& v) {
    CycMatrix a(1, 1);
    a.at(0, 0) = Cyclotomic(v);
    return a;
  };
  switch (tau.kind) {
    case Irrep::Kind::Triv:
      return one_by_one(Rational(1));
    case Irrep::Kind::Sign:
      return one_by_one(Rational(g.is_reflection() ? -1 : 1));
    case Irrep::Kind::Chi0:
    case Irrep::Kind::Chi1: {
      long ubar = tau.kind == Irrep::Kind::Chi0 ? 0 : 1;
      if (g.is_reflection()) {
        bool flip = ((g.index() % 2) + 2) % 2 == ubar;
        return one_by_one(Rational(flip ? -1 : 1));
      }
      return one_by_one(Rational(g.index() % 2 == 0 ? 1 : -1));
    }
    case Irrep::Kind::Rho: {
      CycMatrix a(2, 2);
      long ju = g.index() * tau.u;
      if (g.is_reflection()) {
        a.at(0, 1) = omega_pow(m, -ju);
        a.at(1, 0) = omega_pow(m, ju);
      } else {
        a.at(0, 0) = omega_pow(m, ju);
        a.at(1, 1) = omega_pow(m, -ju);
      }
      return a;
    }
  }
  throw std::logic_error("irrep_matrix: unreachable");
}

// Formal sum of group elements with Cyclotomic coefficients.
class GroupAlgebraElement {
 public:
  explicit GroupAlgebraElement(long m) : m_(m) {}

  long m() const { return m_; }
  const std::map<DihedralElement, Cyclotomic>& terms() const { return terms_; }

  void add_term(const DihedralElement& g, const Cyclotomic& c) {
    if (g.m() != m_) throw std::invalid_argument("GroupAlgebraElement: mixed groups");
    auto it = terms_.find(g);
    if (it == terms_.end()) {
      if (!c.is_zero()) terms_.emplace(g, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  friend GroupAlgebraElement operator+(const GroupAlgebraElement& x, const GroupAlgebraElement& y) {
    GroupAlgebraElement r(x);
    for (const auto& [g, c] : y.terms_) r.add_term(g, c);
    return r;
  }

  friend GroupAlgebraElement operator*(const Cyclotomic& c, const GroupAlgebraElement& x) {
    GroupAlgebraElement r(x.m_);
    for (const auto& [g, v] : x.terms_) r.add_term(g, c * v);
    return r;
  }

  friend GroupAlgebraElement operator*(const GroupAlgebraElement& x, const GroupAlgebraElement& y) {
    if (x.m_ != y.m_) throw std::invalid_argument("GroupAlgebraElement: mixed groups");
    GroupAlgebraElement r(x.m_);
    for (const auto& [g, cg] : x.terms_)
      for (const auto& [h, ch] : y.terms_) r.add_term(g * h, cg * ch);
    return r;
  }

  friend bool operator==(const GroupAlgebraElement& x, const GroupAlgebraElement& y) {
    return x.m_ == y.m_ && x.terms_ == y.terms_;
  }

  // Image under an irrep, sum of coefficient * irrep_matrix(g).
  CycMatrix image(const Irrep& tau) const {
    CycMatrix acc(static_cast<std::size_t>(tau.dim()), static_cast<std::size_t>(tau.dim()));
    for (const auto& [g, c] : terms_) acc = acc + c * irrep_matrix(tau, g);
    return acc;
  }

 private:
  long m_;
  std::map<DihedralElement, Cyclotomic> terms_;
};

// sigma(n) = sum_j c_j omega^{jn} s_j, the group-algebra side of the deformed
// rotation weight attached to the coupling.
inline GroupAlgebraElement sigma_element(const ParamValues& p, long n) {
  GroupAlgebraElement out(p.m);
  for (long j = 1; j <= p.m; ++j)
    out.add_term(DihedralElement::reflection(p.m, j), Cyclotomic(p.c(j)) * omega_pow(p.m, j * n));
  return out;
}

// sigma_{n, parity} = sum over reflections of fixed index parity. Defined for
// even m, where the parity classes are the conjugacy classes.
inline Cyclotomic sigma_scalar_parity(const ParamValues& p, long n, long ubar) {
  if (p.m % 2 != 0) throw std::invalid_argument("sigma_scalar_parity: parity classes need even m");
  Cyclotomic acc(Rational(0), field_order(p.m));
  for (long j = 1; j <= p.m; ++j) {
    if (((j % 2) + 2) % 2 != ubar) continue;
    acc += Cyclotomic(p.c(j)) * omega_pow(p.m, j * n);
  }
  return acc;
}

// Closed form of the parity piece: geometric sums collapse to
// sigma_{n,0} = q c_even [q | n], sigma_{n,1} = q c_odd omega^n [q | n],
// with omega^n = +-1 whenever q | n (m = 2q).
inline Rational sigma_parity_closed(const ParamValues& p, long n, long ubar) {
  if (p.m % 2 != 0) throw std::invalid_argument("sigma_parity_closed: parity classes need even m");
  long q = p.m / 2;
  long r = ((n % p.m) + p.m) % p.m;
  if (r % q != 0) return Rational(0);
  if (ubar == 0) return Rational(q) * p.c_even;
  return (r == 0 ? Rational(q) : Rational(-q)) * p.c_odd;
}

struct SigmaScalar {
  Cyclotomic direct;   // sum over reflections, computed in Q(zeta_L)
  Rational closed;     // closed form: supported only on n = 0 mod m (odd m)
  bool agree = false;  // or n = 0, q mod m (m = 2q); exact comparison
};

// sigma_n = sum_j c_j omega^{jn}, by direct summation and by the closed form,
// compared exactly.
inline SigmaScalar sigma_scalar(const ParamValues& p, long n) {
  SigmaScalar out;
  Cyclotomic acc(Rational(0), field_order(p.m));
  for (long j = 1; j <= p.m; ++j) acc += Cyclotomic(p.c(j)) * omega_pow(p.m, j * n);
  out.direct = acc;

  long r = ((n % p.m) + p.m) % p.m;
  if (p.m % 2 != 0) {
    out.closed = (r == 0) ? Rational(p.m) * p.c_even : Rational(0);
  } else {
    long q = p.m / 2;
    if (r == 0)
      out.closed = Rational(q) * (p.c_even + p.c_odd);
    else if (r == q)
      out.closed = Rational(q) * (p.c_even - p.c_odd);
    else
      out.closed = Rational(0);
  }
  out.agree = (out.direct == Cyclotomic(out.closed));
  return out;
}

// Exact rational value of sigma_n (they are all rational; see sigma_scalar).
inline Rational sigma_value(const ParamValues& p, long n) {
  SigmaScalar s = sigma_scalar(p, n);
  if (!s.agree) throw std::logic_error("sigma_value: direct and closed forms disagree");
  return s.closed;
}

// Character value tau(sigma(n)) for one-dimensional tau; rational by the
// parity decomposition of sigma_n.
inline Rational character_of_sigma(const ParamValues& p, const Irrep& tau, long n) {
  tau.validate(p.m);
  auto as_rat = [](const Cyclotomic& z) {
    auto r = z.as_rational();
    if (!r) throw std::logic_error("character_of_sigma: non-rational value");
    return *r;
  };
  switch (tau.kind) {
    case Irrep::Kind::Triv:
      return sigma_value(p, n);
    case Irrep::Kind::Sign:
      return -sigma_value(p, n);
    case Irrep::Kind::Chi0:
      return as_rat(-sigma_scalar_parity(p, n, 0) + sigma_scalar_parity(p, n, 1));
    case Irrep::Kind::Chi1:
      return as_rat(sigma_scalar_parity(p, n, 0) - sigma_scalar_parity(p, n, 1));
    default:
      throw std::invalid_argument("character_of_sigma: tau must be one-dimensional");
  }
}

// N_c(tau) = tau(sigma(0)) as a scalar; zero for two-dimensional tau, where
// sigma(0) acts off-diagonally with vanishing weights sigma_{+-u}.
inline Rational coupling_trace(const ParamValues& p, const Irrep& tau) {
  tau.validate(p.m);
  if (tau.kind == Irrep::Kind::Rho) return Rational(0);
  return character_of_sigma(p, tau, 0);
}

// The spectral weight set sigma(tau)_k: a singleton for one-dimensional tau,
// the ordered pair (sigma_{k+u}, sigma_{k-u}) for rho^(u).
inline std::vector<Rational> sigma_weights(const ParamValues& p, const Irrep& tau, long k) {
  tau.validate(p.m);
  if (tau.kind == Irrep::Kind::Rho)
    return {sigma_value(p, k + tau.u), sigma_value(p, k - tau.u)};
  return {character_of_sigma(p, tau, k)};
}

// Matrix of sigma(n) in the irrep tau (dual route to the closed forms above).
inline CycMatrix sigma_on_irrep(const ParamValues& p, const Irrep& tau, long n) {
  tau.validate(p.m);
  return sigma_element(p, n).image(tau);
}

}  // namespace howe
