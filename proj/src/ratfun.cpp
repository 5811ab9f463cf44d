#include "sequiv/ratfun.hpp"

#include <stdexcept>

#include "dense_ops.hpp"
#include "sequiv/errors.hpp"

namespace sequiv {

RatFun::RatFun(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num.is_zero()) {
    num_ = LaurentPoly();
    den_ = LaurentPoly(1);
    return;
  }
  int sn = 0;
  int sd = 0;
  auto n0 = detail::to_dense(num, sn);
  auto d0 = detail::to_dense(den, sd);
  const auto g = detail::gcd_z(n0, d0);
  if (!(g.size() == 1 && g[0] == 1)) {
    n0 = *detail::divide_exact_z(n0, g);
    d0 = *detail::divide_exact_z(d0, g);
  }
  if (d0[0] < 0) {
    for (Int& c : n0) c = -c;
    for (Int& c : d0) c = -c;
  }
  num_ = detail::from_dense(n0, sn - sd);
  den_ = detail::from_dense(d0, 0);
}

const LaurentPoly& RatFun::as_laurent() const {
  if (!is_laurent()) throw std::domain_error("rational function is not a Laurent polynomial");
  return num_;
}

RatFun RatFun::operator-() const { return RatFun(-num_, den_, raw_tag{}); }

RatFun operator+(const RatFun& a, const RatFun& b) {
  return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) {
  return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator*(const RatFun& a, const RatFun& b) {
  return RatFun(a.num_ * b.num_, a.den_ * b.den_);
}

RatFun operator/(const RatFun& a, const RatFun& b) {
  if (b.is_zero()) throw std::domain_error("division by zero rational function");
  return RatFun(a.num_ * b.den_, a.den_ * b.num_);
}

RatFun& RatFun::operator+=(const RatFun& rhs) { return *this = *this + rhs; }
RatFun& RatFun::operator-=(const RatFun& rhs) { return *this = *this - rhs; }
RatFun& RatFun::operator*=(const RatFun& rhs) { return *this = *this * rhs; }

RatFun involute(const RatFun& r) {
  return RatFun(involute(r.num()), involute(r.den()));
}

std::string to_string(const RatFun& r) {
  if (r.is_laurent()) return to_string(r.num());
  const LaurentPoly& n = r.num();
  const bool neg = n.coeff(n.min_exp()) < 0;
  std::string out;
  if (neg) out += "−";
  out += "(";
  out += to_string(neg ? -n : n);
  out += ")/(";
  out += to_string(r.den());
  out += ")";
  return out;
}

bool TorsionClass::is_zero_class() const {
  return class_eq(*this, TorsionClass());
}

bool class_eq(const TorsionClass& a, const TorsionClass& b) {
  const RatFun d = a.rep() - b.rep();
  if (d.is_zero()) return true;
  return divide_exact(d.num(), d.den()).has_value();
}

std::string to_string(const TorsionClass& c) { return to_string(c.rep()); }

}  // namespace sequiv
