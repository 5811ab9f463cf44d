#include "sequiv/matrix.hpp"

namespace sequiv {

PolyMat to_poly(const IntMat& m) {
  PolyMat r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = LaurentPoly(m.at(i, j));
  return r;
}

RatMat to_rat(const PolyMat& m) {
  RatMat r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = RatFun(m.at(i, j));
  return r;
}

RatMat to_rat(const IntMat& m) { return to_rat(to_poly(m)); }

PolyMat adjugate(const PolyMat& m) {
  const std::size_t n = m.rows();
  PolyMat adj(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      PolyMat minor(n - 1, n - 1);
      std::size_t rr = 0;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == i) continue;
        std::size_t cc = 0;
        for (std::size_t c = 0; c < n; ++c) {
          if (c == j) continue;
          minor.at(rr, cc++) = m.at(r, c);
        }
        ++rr;
      }
      LaurentPoly cof = det_cofactor(minor);
      adj.at(j, i) = ((i + j) % 2 == 0) ? cof : -cof;
    }
  return adj;
}

RatMat inverse_adjugate(const PolyMat& m) {
  if (!m.square()) throw DimensionError("inverse of non-square matrix");
  const LaurentPoly d = det(m);
  if (d.is_zero()) throw SingularMatrixError("matrix is singular over Q(t)");
  const PolyMat adj = adjugate(m);
  const std::size_t n = m.rows();
  RatMat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = RatFun(adj.at(i, j), d);
  return inv;
}

// One-step fraction-free Gauss-Jordan on [M | I]. After step k every row
// i != k has a zero in column k; all divisions by the previous pivot are
// exact. At the end the left block is diagonal and row i of the right block
// divided by left(i, i) is row i of the inverse.
RatMat inverse_elimination(const PolyMat& m) {
  if (!m.square()) throw DimensionError("inverse of non-square matrix");
  const std::size_t n = m.rows();
  Mat<LaurentPoly> w(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) w.at(i, j) = m.at(i, j);
    w.at(i, n + i) = LaurentPoly(1);
  }
  LaurentPoly prev(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && w.at(pivot, k).is_zero()) ++pivot;
    if (pivot == n) throw SingularMatrixError("matrix is singular over Q(t)");
    if (pivot != k)
      for (std::size_t j = 0; j < 2 * n; ++j) std::swap(w.at(pivot, j), w.at(k, j));
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      for (std::size_t j = 0; j < 2 * n; ++j) {
        if (j == k) continue;
        w.at(i, j) = exact_div(w.at(k, k) * w.at(i, j) - w.at(i, k) * w.at(k, j), prev);
      }
      w.at(i, k) = LaurentPoly();
    }
    prev = w.at(k, k);
  }
  RatMat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = RatFun(w.at(i, n + j), w.at(i, i));
  return inv;
}

bool is_identity(const RatMat& m) {
  if (!m.square()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m.at(i, j) != RatFun(i == j ? 1 : 0)) return false;
  return true;
}

RatMat inverse(const PolyMat& m) {
  RatMat inv = m.rows() <= 6 ? inverse_adjugate(m) : inverse_elimination(m);
  if (!is_identity(to_rat(m) * inv))
    throw InternalCheckError("inverse verification M * M^-1 = I failed");
  return inv;
}

IntMat unimodular_inverse(const IntMat& p) {
  if (!p.square()) throw DimensionError("inverse of non-square matrix");
  const Int d = det(p);
  if (d != 1 && d != -1) throw std::domain_error("matrix is not unimodular: det = " + d.str());
  const std::size_t n = p.rows();
  // Integer adjugate; dividing by det just flips signs when det = -1.
  IntMat adj(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      IntMat minor(n - 1, n - 1);
      std::size_t rr = 0;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == i) continue;
        std::size_t cc = 0;
        for (std::size_t c = 0; c < n; ++c) {
          if (c == j) continue;
          minor.at(rr, cc++) = p.at(r, c);
        }
        ++rr;
      }
      Int cof = det(minor);
      if ((i + j) % 2 != 0) cof = -cof;
      adj.at(j, i) = d == 1 ? cof : Int(-cof);
    }
  return adj;
}

}  // namespace sequiv
