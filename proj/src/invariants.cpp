#include "sequiv/invariants.hpp"

namespace sequiv {

PolyMat presentation_matrix(const SeifertMatrix& a) {
  const std::size_t k = a.size();
  PolyMat m(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      LaurentPoly e;
      e.add_term(1, a.entries().at(i, j));
      e.add_term(0, -a.entries().at(j, i));
      m.at(i, j) = std::move(e);
    }
  return m;
}

LaurentPoly alexander_poly(const SeifertMatrix& a) {
  const LaurentPoly d = det(presentation_matrix(a));
  // d(1) = det(A - A^t) = 1, so d is never zero for a Seifert-type matrix.
  return normalize_unit(d).poly;
}

Int det_at_minus_one(const SeifertMatrix& a) {
  return abs_int(alexander_poly(a).at_minus_one());
}

long signature_symmetric(const IntMat& s) {
  if (!s.square()) throw DimensionError("signature of non-square matrix");
  const std::size_t n = s.rows();
  std::vector<std::vector<Rat>> w(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) w[i][j] = Rat(s.at(i, j));
  long pos = 0;
  long neg = 0;
  std::size_t lo = 0;
  const auto swap_rc = [&](std::size_t x, std::size_t y) {
    for (std::size_t j = 0; j < n; ++j) std::swap(w[x][j], w[y][j]);
    for (std::size_t i = 0; i < n; ++i) std::swap(w[i][x], w[i][y]);
  };
  while (lo < n) {
    if (w[lo][lo] == 0) {
      std::size_t d = lo + 1;
      while (d < n && w[d][d] == 0) ++d;
      if (d < n) {
        swap_rc(lo, d);
      } else {
        std::size_t j = lo + 1;
        while (j < n && w[lo][j] == 0) ++j;
        if (j == n) {
          // Row lo vanishes: a zero eigenvalue, no signature contribution.
          ++lo;
          continue;
        }
        // All remaining diagonal entries are zero: pivot a 2x2 hyperbolic
        // block [[0, a], [a, 0]], which contributes +1 and -1.
        if (j != lo + 1) swap_rc(j, lo + 1);
        const Rat a = w[lo][lo + 1];
        ++pos;
        ++neg;
        for (std::size_t u = lo + 2; u < n; ++u)
          for (std::size_t v = lo + 2; v < n; ++v)
            w[u][v] -= (w[u][lo] * w[lo + 1][v] + w[u][lo + 1] * w[lo][v]) / a;
        lo += 2;
        continue;
      }
    }
    const Rat piv = w[lo][lo];
    if (piv > 0)
      ++pos;
    else
      ++neg;
    for (std::size_t u = lo + 1; u < n; ++u)
      for (std::size_t v = lo + 1; v < n; ++v) w[u][v] -= w[u][lo] * w[lo][v] / piv;
    ++lo;
  }
  return pos - neg;
}

long signature(const SeifertMatrix& a) {
  return signature_symmetric(a.entries() + a.entries().transposed());
}

InvariantReport invariant_report(const SeifertMatrix& a) {
  InvariantReport r;
  r.alexander = alexander_poly(a);
  r.det_at_minus_one = r.alexander.at_minus_one();
  if (r.det_at_minus_one < 0) r.det_at_minus_one = -r.det_at_minus_one;
  r.signature = signature(a);
  r.alexander_at_one = det(presentation_matrix(a)).at_one();
  return r;
}

std::vector<InvariantDiff> invariant_diffs(const SeifertMatrix& a, const SeifertMatrix& b) {
  const InvariantReport ra = invariant_report(a);
  const InvariantReport rb = invariant_report(b);
  std::vector<InvariantDiff> out;
  if (ra.alexander != rb.alexander)
    out.push_back({"alexander", to_string(ra.alexander), to_string(rb.alexander)});
  if (ra.det_at_minus_one != rb.det_at_minus_one)
    out.push_back({"determinant", ra.det_at_minus_one.str(), rb.det_at_minus_one.str()});
  if (ra.signature != rb.signature)
    out.push_back({"signature", std::to_string(ra.signature), std::to_string(rb.signature)});
  return out;
}

}  // namespace sequiv
