#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace wkl {

using Int = boost::multiprecision::cpp_int;

/// Exponent of v, where v^2 = q.  A power q^g is stored with v-exponent 2g,
/// so half-integral q-exponents are exact integers here.
using HalfExp = std::int32_t;

/// Sparse Laurent polynomial in v = q^{1/2} with integer coefficients.
///
/// Terms are kept sorted by ascending exponent and never store a zero
/// coefficient; the empty term list is the zero polynomial.
class LaurentPoly {
 public:
  using Term = std::pair<HalfExp, Int>;

  LaurentPoly() = default;

  static LaurentPoly mono(HalfExp v_exp, Int coeff);
  static LaurentPoly constant(Int c) { return mono(0, std::move(c)); }
  static LaurentPoly q_power(int gamma) { return mono(2 * gamma, 1); }
  static LaurentPoly v_power(HalfExp e) { return mono(e, 1); }
  static const LaurentPoly& zero();
  static const LaurentPoly& one();

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;

  /// Largest exponent with nonzero coefficient; nullopt encodes deg(0) = -inf.
  std::optional<HalfExp> deg() const;
  /// Smallest exponent with nonzero coefficient; nullopt for the zero polynomial.
  std::optional<HalfExp> low() const;

  Int coeff(HalfExp v_exp) const;
  Int coeff_q(int gamma) const { return coeff(2 * gamma); }

  /// Image under the involution sending v^e to v^{-e}.
  LaurentPoly bar() const;
  /// Multiplication by v^delta.
  LaurentPoly shifted(HalfExp delta) const;
  /// Keeps exactly the terms with exponent strictly greater than zeta.
  LaurentPoly trunc_upper(HalfExp zeta) const;
  /// Keeps exactly the terms with exponent strictly less than zeta.
  LaurentPoly trunc_lower(HalfExp zeta) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& g);
  LaurentPoly& operator-=(const LaurentPoly& g);
  friend LaurentPoly operator+(const LaurentPoly& f, const LaurentPoly& g);
  friend LaurentPoly operator-(const LaurentPoly& f, const LaurentPoly& g);
  friend LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g);

  bool operator==(const LaurentPoly&) const = default;

  const std::vector<Term>& terms() const { return terms_; }

  /// Canonical text form, terms in increasing exponent order:
  /// "1 - 2*q + q^2", "q^-1 - 1", "q^(1/2)", "0".
  std::string str() const;

 private:
  std::vector<Term> terms_;
};

}  // namespace wkl
