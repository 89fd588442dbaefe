#pragma once

#include <stdexcept>

#include "howe/rational.hpp"

namespace howe {

// Reflection coupling for the dihedral group I2(m). The coupling is a class
// function: for even m the reflections split into two conjugacy classes
// (even / odd index) with independent values; for odd m there is a single
// class and both values must agree.
struct ParamValues {
  long m = 3;
  Rational c_even;
  Rational c_odd;

  ParamValues() = default;

  ParamValues(long m_, const Rational& c) : m(m_), c_even(c), c_odd(c) { validate(); }

  ParamValues(long m_, const Rational& ce, const Rational& co) : m(m_), c_even(ce), c_odd(co) {
    if (m % 2 != 0 && !(ce == co))
      throw std::invalid_argument("ParamValues: odd m has a single reflection class, c_even must equal c_odd");
    validate();
  }

  // Coupling on the reflection s_j; index parity is taken mod 2.
  const Rational& c(long j) const {
    long p = ((j % 2) + 2) % 2;
    return p == 0 ? c_even : c_odd;
  }

  bool is_zero() const { return c_even.is_zero() && c_odd.is_zero(); }

 private:
  void validate() const {
    if (m < 3) throw std::invalid_argument("m must be >= 3");
  }
};

}  // namespace howe
