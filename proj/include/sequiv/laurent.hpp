#pragma once

#include <map>
#include <optional>
#include <string>

#include "sequiv/bigint.hpp"

namespace sequiv {

// Element of Z[t, t^-1] in sparse exponent -> coefficient form.
//
// Canonical form: no zero coefficient is ever stored, so the zero polynomial
// has an empty term map and equality is plain map equality.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(int c) : LaurentPoly(Int(c)) {}
  LaurentPoly(Int c);

  static LaurentPoly monomial(Int coeff, int exp);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;

  // Lowest / highest exponent carrying a nonzero coefficient; the value must
  // be nonzero.
  int min_exp() const;
  int max_exp() const;

  Int coeff(int exp) const;
  const std::map<int, Int>& terms() const { return terms_; }

  // Adds c * t^exp, keeping the canonical form.
  void add_term(int exp, const Int& c);

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  // Multiplication by the unit t^k.
  LaurentPoly shifted(int k) const;

  // Evaluation at t = 1 and t = -1. Negative exponents are fine since
  // (+-1)^-1 = +-1.
  Int at_one() const;
  Int at_minus_one() const;

  bool operator==(const LaurentPoly&) const = default;

 private:
  std::map<int, Int> terms_;
};

// The ring involution induced by t -> t^-1.
LaurentPoly involute(const LaurentPoly& p);

// Exact division in Z[t, t^-1]: the quotient q with f = q * g when one
// exists (all quotient coefficients integral), otherwise nullopt. g must be
// nonzero.
std::optional<LaurentPoly> divide_exact(const LaurentPoly& f, const LaurentPoly& g);

struct UnitNormalized {
  LaurentPoly poly;  // the input times `unit`
  LaurentPoly unit;  // +-t^k
};

// Scales a nonzero polynomial by a ring unit so that its lowest exponent is
// 0 and its lowest coefficient is positive. Rejects zero.
UnitNormalized normalize_unit(const LaurentPoly& p);

// Fixed text form used by every report: ascending exponents, " + " and
// " − " separators, powers as "t^k" with "t^0" elided and "t^1" as "t".
// Examples: "1 − t + t^2", "t^-1 + t", "0".
std::string to_string(const LaurentPoly& p);

// Parses the to_string format. An ASCII '-' is accepted anywhere the printer
// emits the U+2212 minus sign. Throws ParseError with a 1-based column.
LaurentPoly parse_poly(const std::string& text);

}  // namespace sequiv
