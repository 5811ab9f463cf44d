#pragma once

#include <string>

#include "sequiv/laurent.hpp"

namespace sequiv {

// Element of Q(t) as a reduced fraction of Laurent polynomials.
//
// Canonical form, established eagerly at construction:
//   - den is nonzero, has lowest exponent 0 and a positive constant
//     coefficient;
//   - after clearing t-powers the numerator and denominator share no factor
//     (neither integer content nor a polynomial factor over Q).
// With that, two RatFun values represent the same element of Q(t) iff they
// are structurally equal.
class RatFun {
 public:
  RatFun() : num_(), den_(1) {}
  RatFun(int c) : num_(c), den_(1) {}
  RatFun(LaurentPoly num) : num_(std::move(num)), den_(1) {}
  RatFun(const LaurentPoly& num, const LaurentPoly& den);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }

  // True iff the value lies in Z[t, t^-1] (reduced denominator is 1).
  bool is_laurent() const { return den_.is_one(); }
  const LaurentPoly& as_laurent() const;

  RatFun operator-() const;
  RatFun& operator+=(const RatFun& rhs);
  RatFun& operator-=(const RatFun& rhs);
  RatFun& operator*=(const RatFun& rhs);

  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b);
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  friend RatFun operator/(const RatFun& a, const RatFun& b);  // b nonzero

  bool operator==(const RatFun&) const = default;

 private:
  struct raw_tag {};
  RatFun(LaurentPoly num, LaurentPoly den, raw_tag) : num_(std::move(num)), den_(std::move(den)) {}

  LaurentPoly num_;
  LaurentPoly den_;
};

// The involution t -> t^-1 extended to Q(t); the result is renormalized.
RatFun involute(const RatFun& r);

// "(num)/(den)" with den == 1 rendered as a bare polynomial and a negative
// lowest numerator coefficient factored out front, e.g.
// "−(1 − 2t + t^2)/(1 − t + t^2)".
std::string to_string(const RatFun& r);

// Element of Q(Λ)/Λ: an arbitrary representative of the coset
// rep + Λ. Cosets of Z[t,t^-1] inside Q(t) have no convenient canonical
// form, so equality goes through class_eq instead of normalizing.
class TorsionClass {
 public:
  TorsionClass() = default;
  explicit TorsionClass(RatFun rep) : rep_(std::move(rep)) {}

  const RatFun& rep() const { return rep_; }
  bool is_zero_class() const;

  bool operator==(const TorsionClass& other) const { return class_eq(*this, other); }

  // Representative-independent equality: a - b, as one reduced fraction
  // f/g, must divide exactly in Z[t, t^-1].
  friend bool class_eq(const TorsionClass& a, const TorsionClass& b);

 private:
  RatFun rep_;
};

std::string to_string(const TorsionClass& c);

}  // namespace sequiv
