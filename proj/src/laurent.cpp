#include "sequiv/laurent.hpp"

#include <cctype>
#include <stdexcept>

#include "dense_ops.hpp"
#include "sequiv/errors.hpp"

namespace sequiv {

LaurentPoly::LaurentPoly(Int c) {
  if (c != 0) terms_.emplace(0, std::move(c));
}

LaurentPoly LaurentPoly::monomial(Int coeff, int exp) {
  LaurentPoly p;
  if (coeff != 0) p.terms_.emplace(exp, std::move(coeff));
  return p;
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

int LaurentPoly::min_exp() const {
  if (is_zero()) throw std::logic_error("min_exp of the zero polynomial");
  return terms_.begin()->first;
}

int LaurentPoly::max_exp() const {
  if (is_zero()) throw std::logic_error("max_exp of the zero polynomial");
  return terms_.rbegin()->first;
}

Int LaurentPoly::coeff(int exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Int(0) : it->second;
}

void LaurentPoly::add_term(int exp, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(exp, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r = a;
  r += b;
  return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r = a;
  r -= b;
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
  return r;
}

Int LaurentPoly::at_one() const {
  Int s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

Int LaurentPoly::at_minus_one() const {
  Int s = 0;
  for (const auto& [e, c] : terms_) s += (e % 2 != 0) ? Int(-c) : c;
  return s;
}

LaurentPoly involute(const LaurentPoly& p) {
  LaurentPoly r;
  for (const auto& [e, c] : p.terms()) r.add_term(-e, c);
  return r;
}

std::optional<LaurentPoly> divide_exact(const LaurentPoly& f, const LaurentPoly& g) {
  if (g.is_zero()) throw std::domain_error("division by zero polynomial");
  if (f.is_zero()) return LaurentPoly();
  int sf = 0;
  int sg = 0;
  const auto df = detail::to_dense(f, sf);
  const auto dg = detail::to_dense(g, sg);
  auto q = detail::divide_exact_z(df, dg);
  if (!q) return std::nullopt;
  return detail::from_dense(*q, sf - sg);
}

UnitNormalized normalize_unit(const LaurentPoly& p) {
  if (p.is_zero()) throw std::domain_error("cannot unit-normalize the zero polynomial");
  const int m = p.min_exp();
  const bool flip = p.coeff(m) < 0;
  LaurentPoly unit = LaurentPoly::monomial(flip ? -1 : 1, -m);
  return {p * unit, unit};
}

namespace {

constexpr const char* kMinusSign = "−";

std::string term_body(const Int& abs_coeff, int exp) {
  std::string s;
  if (exp == 0) return abs_coeff.str();
  if (abs_coeff != 1) s += abs_coeff.str();
  s += 't';
  if (exp != 1) {
    s += '^';
    s += std::to_string(exp);
  }
  return s;
}

}  // namespace

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool neg = c < 0;
    if (first) {
      if (neg) out += kMinusSign;
      first = false;
    } else {
      out += neg ? std::string(" ") + kMinusSign + " " : std::string(" + ");
    }
    out += term_body(abs_int(c), e);
  }
  return out;
}

namespace {

struct PolyScanner {
  const std::string& s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
  }

  bool at_end() {
    skip_ws();
    return i >= s.size();
  }

  // '-' or the UTF-8 minus sign U+2212.
  bool take_minus() {
    skip_ws();
    if (i < s.size() && s[i] == '-') {
      ++i;
      return true;
    }
    if (i < s.size() && s.compare(i, 3, "\xe2\x88\x92") == 0) {
      i += 3;
      return true;
    }
    return false;
  }

  bool take_plus() {
    skip_ws();
    if (i < s.size() && s[i] == '+') {
      ++i;
      return true;
    }
    return false;
  }

  std::optional<Int> take_integer() {
    skip_ws();
    std::size_t j = i;
    std::string digits;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) digits += s[j++];
    if (digits.empty()) return std::nullopt;
    i = j;
    return Int(digits);
  }

  int column() const { return static_cast<int>(i) + 1; }

  [[noreturn]] void fail(const std::string& what) {
    throw ParseError("polynomial syntax error at column " + std::to_string(column()) + ": " + what,
                     0, column());
  }
};

}  // namespace

LaurentPoly parse_poly(const std::string& text) {
  PolyScanner sc{text};
  LaurentPoly acc;
  bool first = true;
  while (true) {
    if (sc.at_end()) {
      if (first) sc.fail("empty polynomial");
      break;
    }
    bool neg = false;
    if (first) {
      neg = sc.take_minus();
    } else {
      if (sc.take_plus()) {
        neg = false;
      } else if (sc.take_minus()) {
        neg = true;
      } else {
        sc.fail("expected '+' or '-' between terms");
      }
    }
    sc.skip_ws();
    auto coeff = sc.take_integer();
    Int c = coeff.value_or(Int(1));
    int exp = 0;
    sc.skip_ws();
    if (sc.i < sc.s.size() && sc.s[sc.i] == 't') {
      ++sc.i;
      exp = 1;
      if (sc.i < sc.s.size() && sc.s[sc.i] == '^') {
        ++sc.i;
        bool eneg = sc.take_minus();
        auto e = sc.take_integer();
        if (!e) sc.fail("expected exponent after '^'");
        if (*e > 1000000) sc.fail("exponent out of range");
        exp = static_cast<int>(*e);
        if (eneg) exp = -exp;
      }
    } else if (!coeff) {
      sc.fail("expected a coefficient or 't'");
    }
    if (neg) c = -c;
    acc.add_term(exp, c);
    first = false;
  }
  return acc;
}

}  // namespace sequiv
