#pragma once

#include <algorithm>
#include <complex>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "howe/rational.hpp"

namespace howe {

namespace detail {

using Poly = std::vector<Rational>;  // dense, index = power

inline void poly_trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  poly_trim(r);
  return r;
}

// Division with remainder by a monic divisor; exact over Q.
inline std::pair<Poly, Poly> poly_divmod_monic(Poly num, const Poly& den) {
  if (den.empty() || !den.back().is_one())
    throw std::logic_error("poly_divmod_monic: divisor not monic");
  poly_trim(num);
  if (num.size() < den.size()) return {Poly{}, num};
  Poly quot(num.size() - den.size() + 1, Rational(0));
  for (std::size_t ip1 = num.size(); ip1 >= den.size(); --ip1) {
    std::size_t i = ip1 - 1;  // leading term being eliminated
    Rational c = num[i];
    if (c.is_zero()) continue;
    std::size_t shift = i - (den.size() - 1);
    quot[shift] = c;
    for (std::size_t j = 0; j < den.size(); ++j) num[shift + j] -= c * den[j];
  }
  poly_trim(num);
  poly_trim(quot);
  return {quot, num};
}

// Phi_n, computed as (x^n - 1) / prod_{d | n, d < n} Phi_d and cached.
inline const Poly& cyclotomic_polynomial(long n) {
  static std::map<long, Poly> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  Poly num(static_cast<std::size_t>(n) + 1, Rational(0));
  num[0] = Rational(-1);
  num[static_cast<std::size_t>(n)] = Rational(1);
  for (long d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    auto [q, r] = poly_divmod_monic(num, cyclotomic_polynomial(d));
    if (!r.empty()) throw std::logic_error("cyclotomic_polynomial: inexact division");
    num = std::move(q);
  }
  return cache.emplace(n, std::move(num)).first->second;
}

inline long euler_phi_from_table(long n) {
  return static_cast<long>(cyclotomic_polynomial(n).size()) - 1;
}

}  // namespace detail

// Element of the cyclotomic field Q(zeta_L), zeta_L = e^{2 pi i / L}, stored on
// the power basis 1, zeta, ..., zeta^{phi(L)-1} and always reduced mod Phi_L.
// Orders are kept multiples of 4 so that i = zeta_L^{L/4} is available; values
// of different orders coerce into the lcm before arithmetic.
class Cyclotomic {
 public:
  Cyclotomic() : Cyclotomic(Rational(0), 4) {}
  Cyclotomic(const Rational& r) : Cyclotomic(r, 4) {}  // NOLINT: implicit by design
  Cyclotomic(long n) : Cyclotomic(Rational(n), 4) {}   // NOLINT
  Cyclotomic(int n) : Cyclotomic(Rational(n), 4) {}    // NOLINT

  Cyclotomic(const Rational& r, long order) : order_(check_order(order)) {
    coeff_.assign(static_cast<std::size_t>(phi()), Rational(0));
    coeff_[0] = r;
  }

  // zeta_L^k; requires L a positive multiple of 4.
  static Cyclotomic root_of_unity(long L, long k) {
    Cyclotomic z(Rational(0), L);
    long e = ((k % L) + L) % L;
    detail::Poly p(static_cast<std::size_t>(e) + 1, Rational(0));
    p[static_cast<std::size_t>(e)] = Rational(1);
    z.assign_reduced(std::move(p));
    return z;
  }

  // e^{2 pi i k / n} for arbitrary n >= 1, represented inside Q(zeta_lcm(4,n)).
  static Cyclotomic embedded_root(long n, long k) {
    if (n <= 0) throw std::invalid_argument("embedded_root: n must be positive");
    long L = std::lcm<long>(4, n);
    return root_of_unity(L, k * (L / n));
  }

  static Cyclotomic i(long order = 4) { return root_of_unity(order, order / 4); }

  long order() const { return order_; }
  long phi() const { return detail::euler_phi_from_table(order_); }
  const std::vector<Rational>& coefficients() const { return coeff_; }

  bool is_zero() const {
    return std::all_of(coeff_.begin(), coeff_.end(), [](const Rational& c) { return c.is_zero(); });
  }

  // Rational value if the element lies in Q, i.e. all non-constant
  // coordinates vanish.
  std::optional<Rational> as_rational() const {
    for (std::size_t i = 1; i < coeff_.size(); ++i)
      if (!coeff_[i].is_zero()) return std::nullopt;
    return coeff_[0];
  }

  // Image under zeta |-> zeta^k; requires gcd(k, order) = 1.
  Cyclotomic galois(long k) const {
    long e = ((k % order_) + order_) % order_;
    if (std::gcd(e, order_) != 1)
      throw std::invalid_argument("galois: exponent not coprime to the order");
    detail::Poly p(static_cast<std::size_t>(order_), Rational(0));
    for (std::size_t i = 0; i < coeff_.size(); ++i) {
      if (coeff_[i].is_zero()) continue;
      p[static_cast<std::size_t>((static_cast<long>(i) * e) % order_)] += coeff_[i];
    }
    Cyclotomic r(Rational(0), order_);
    r.assign_reduced(std::move(p));
    return r;
  }

  // Complex conjugation, zeta |-> zeta^{-1}.
  Cyclotomic conjugate() const { return galois(order_ - 1); }

  bool is_real() const { return *this == conjugate(); }

  Cyclotomic embed_to(long new_order) const {
    check_order(new_order);
    if (new_order == order_) return *this;
    if (new_order % order_ != 0)
      throw std::invalid_argument("embed_to: target order not a multiple of the current order");
    long stride = new_order / order_;
    detail::Poly p(static_cast<std::size_t>((phi() - 1) * stride) + 1, Rational(0));
    for (std::size_t i = 0; i < coeff_.size(); ++i)
      p[i * static_cast<std::size_t>(stride)] = coeff_[i];
    Cyclotomic r(Rational(0), new_order);
    r.assign_reduced(std::move(p));
    return r;
  }

  Cyclotomic operator-() const {
    Cyclotomic r(*this);
    for (auto& c : r.coeff_) c = -c;
    return r;
  }

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    auto [x, y] = coerced(a, b);
    for (std::size_t i = 0; i < x.coeff_.size(); ++i) x.coeff_[i] += y.coeff_[i];
    return x;
  }
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
    auto [x, y] = coerced(a, b);
    for (std::size_t i = 0; i < x.coeff_.size(); ++i) x.coeff_[i] -= y.coeff_[i];
    return x;
  }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    auto [x, y] = coerced(a, b);
    detail::Poly p = detail::poly_mul(x.coeff_, y.coeff_);
    Cyclotomic r(Rational(0), x.order_);
    r.assign_reduced(std::move(p));
    return r;
  }
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) {
    return a * b.inverse();
  }

  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
  Cyclotomic& operator/=(const Cyclotomic& o) { return *this = *this / o; }

  // Cheap scalar path, used heavily by the module layer.
  Cyclotomic scaled(const Rational& r) const {
    Cyclotomic x(*this);
    for (auto& c : x.coeff_) c *= r;
    return x;
  }

  Cyclotomic inverse() const {
    if (is_zero()) throw std::domain_error("Cyclotomic: division by zero");
    // Extended Euclid in Q[x] against Phi_L; Phi_L is irreducible, so the gcd
    // is a nonzero constant and t satisfies t * this = gcd (mod Phi_L).
    detail::Poly r0 = detail::cyclotomic_polynomial(order_);
    detail::Poly r1 = coeff_;
    detail::poly_trim(r1);
    detail::Poly t0{}, t1{Rational(1)};
    while (r1.size() > 1) {
      detail::Poly lead_inv_r1 = r1;
      Rational lc = r1.back();
      for (auto& c : lead_inv_r1) c /= lc;
      auto [q, rem] = detail::poly_divmod_monic(r0, lead_inv_r1);
      for (auto& c : q) c /= lc;  // quotient against the un-normalized r1
      detail::Poly qt1 = detail::poly_mul(q, t1);
      detail::Poly nt(std::max(t0.size(), qt1.size()), Rational(0));
      for (std::size_t i = 0; i < t0.size(); ++i) nt[i] += t0[i];
      for (std::size_t i = 0; i < qt1.size(); ++i) nt[i] -= qt1[i];
      detail::poly_trim(nt);
      r0 = std::move(r1);
      r1 = std::move(rem);
      t0 = std::move(t1);
      t1 = std::move(nt);
    }
    if (r1.empty()) throw std::logic_error("Cyclotomic: gcd degenerated, input not reduced?");
    Rational g = r1[0];
    for (auto& c : t1) c /= g;
    Cyclotomic inv(Rational(0), order_);
    inv.assign_reduced(std::move(t1));
    return inv;
  }

  Cyclotomic pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclotomic r(Rational(1), order_), base(*this);
    while (e > 0) {
      if (e & 1) r *= base;
      base *= base;
      e >>= 1;
    }
    return r;
  }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    auto [x, y] = coerced(a, b);
    return x.coeff_ == y.coeff_;
  }
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  std::complex<double> to_complex() const {
    std::complex<long double> acc(0.0L, 0.0L);
    const long double tau = 6.28318530717958647692528676655900577L;
    for (std::size_t i = 0; i < coeff_.size(); ++i) {
      if (coeff_[i].is_zero()) continue;
      long double arg = tau * static_cast<long double>(i) / static_cast<long double>(order_);
      long double c = static_cast<long double>(coeff_[i].to_double());
      acc += std::complex<long double>(c * std::cos(arg), c * std::sin(arg));
    }
    return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
  }

  // Deterministic exact rendering, e.g. "3/10" or "1/2*zeta12^2 + -1*zeta12^3".
  std::string str() const {
    std::string out;
    for (std::size_t i = 0; i < coeff_.size(); ++i) {
      if (coeff_[i].is_zero()) continue;
      if (!out.empty()) out += " + ";
      out += coeff_[i].str();
      if (i > 0) out += "*zeta" + std::to_string(order_) + "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
  }

 private:
  static long check_order(long order) {
    if (order <= 0 || order % 4 != 0)
      throw std::invalid_argument("Cyclotomic: order must be a positive multiple of 4");
    return order;
  }

  // Takes an arbitrary-degree polynomial in zeta, folds exponents mod L, and
  // stores the remainder mod Phi_L.
  void assign_reduced(detail::Poly p) {
    if (static_cast<long>(p.size()) > order_) {
      detail::Poly folded(static_cast<std::size_t>(order_), Rational(0));
      for (std::size_t i = 0; i < p.size(); ++i)
        folded[i % static_cast<std::size_t>(order_)] += p[i];
      p = std::move(folded);
    }
    auto [q, r] = detail::poly_divmod_monic(std::move(p), detail::cyclotomic_polynomial(order_));
    (void)q;
    coeff_.assign(static_cast<std::size_t>(phi()), Rational(0));
    for (std::size_t i = 0; i < r.size(); ++i) coeff_[i] = r[i];
  }

  static std::pair<Cyclotomic, Cyclotomic> coerced(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order_ == b.order_) return {a, b};
    long L = std::lcm(a.order_, b.order_);
    return {a.embed_to(L), b.embed_to(L)};
  }

  long order_;
  std::vector<Rational> coeff_;
};

inline Cyclotomic operator*(const Rational& r, const Cyclotomic& z) { return z.scaled(r); }
inline Cyclotomic operator*(const Cyclotomic& z, const Rational& r) { return z.scaled(r); }

}  // namespace howe
