#include "dense_ops.hpp"

#include <stdexcept>

#include "sequiv/errors.hpp"

namespace sequiv::detail {

Dense to_dense(const LaurentPoly& p, int& shift) {
  if (p.is_zero()) {
    shift = 0;
    return {};
  }
  shift = p.min_exp();
  Dense d(static_cast<std::size_t>(p.max_exp() - shift) + 1);
  for (const auto& [e, c] : p.terms()) d[static_cast<std::size_t>(e - shift)] = c;
  return d;
}

LaurentPoly from_dense(const Dense& d, int shift) {
  LaurentPoly p;
  for (std::size_t i = 0; i < d.size(); ++i) p.add_term(static_cast<int>(i) + shift, d[i]);
  return p;
}

void trim(Dense& d) {
  while (!d.empty() && d.back() == 0) d.pop_back();
}

bool dense_is_zero(const Dense& d) { return d.empty(); }

int degree(const Dense& d) { return static_cast<int>(d.size()) - 1; }

Dense mul(const Dense& a, const Dense& b) {
  if (a.empty() || b.empty()) return {};
  Dense r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

Dense scale(const Dense& a, const Int& c) {
  if (c == 0) return {};
  Dense r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
  return r;
}

Int content(const Dense& d) {
  Int g = 0;
  for (const Int& c : d) {
    g = gcd_int(g, c);
    if (g == 1) break;
  }
  return g;
}

Dense divide_by_int(const Dense& d, const Int& c) {
  Dense r(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] % c != 0) throw InternalCheckError("non-exact integer content division");
    r[i] = d[i] / c;
  }
  return r;
}

std::optional<Dense> divide_exact_z(const Dense& a, const Dense& b) {
  if (b.empty()) throw std::domain_error("division by zero polynomial");
  if (a.empty()) return Dense{};
  const int db = degree(b);
  const int da = degree(a);
  if (da < db) return std::nullopt;
  const Rat lb{b.back()};
  std::vector<Rat> rem(a.begin(), a.end());
  std::vector<Rat> q(static_cast<std::size_t>(da - db) + 1);
  for (int k = da - db; k >= 0; --k) {
    Rat c = rem[static_cast<std::size_t>(k + db)] / lb;
    q[static_cast<std::size_t>(k)] = c;
    if (c != 0) {
      for (int j = 0; j <= db; ++j)
        rem[static_cast<std::size_t>(k + j)] -= c * Rat(b[static_cast<std::size_t>(j)]);
    }
  }
  for (int j = 0; j < db; ++j)
    if (rem[static_cast<std::size_t>(j)] != 0) return std::nullopt;
  Dense qi(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (denominator(q[i]) != 1) return std::nullopt;
    qi[i] = numerator(q[i]);
  }
  trim(qi);
  return qi;
}

namespace {

// Pseudo-remainder: some lc(b)^m * a reduced mod b, computed entirely over
// Z. Only used inside the primitive PRS, where scalar factors wash out.
Dense prem(Dense a, const Dense& b) {
  const int db = degree(b);
  const Int lb = b.back();
  trim(a);
  while (!a.empty() && degree(a) >= db) {
    const Int la = a.back();
    const std::size_t shift = static_cast<std::size_t>(degree(a) - db);
    a = scale(a, lb);
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= la * b[j];
    trim(a);
  }
  return a;
}

Dense positive_leading(Dense d) {
  if (!d.empty() && d.back() < 0)
    for (Int& c : d) c = -c;
  return d;
}

}  // namespace

Dense gcd_z(Dense a, Dense b) {
  trim(a);
  trim(b);
  if (a.empty()) return positive_leading(std::move(b));
  if (b.empty()) return positive_leading(std::move(a));
  const Int ca = content(a);
  const Int cb = content(b);
  a = divide_by_int(a, ca);
  b = divide_by_int(b, cb);
  while (!b.empty()) {
    Dense r = prem(a, b);
    const Int cr = content(r);
    if (cr != 0) r = divide_by_int(r, cr);
    a = std::move(b);
    b = std::move(r);
  }
  return positive_leading(scale(a, gcd_int(ca, cb)));
}

}  // namespace sequiv::detail
