#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "sequiv/errors.hpp"
#include "sequiv/laurent.hpp"
#include "sequiv/ratfun.hpp"

namespace sequiv {

// Minimal dense matrix over an exact ring.
template <class T>
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Mat transposed() const {
    Mat m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
  }

  bool operator==(const Mat&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMat = Mat<Int>;
using PolyMat = Mat<LaurentPoly>;
using RatMat = Mat<RatFun>;

template <class T>
Mat<T> operator*(const Mat<T>& a, const Mat<T>& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product dimension mismatch");
  Mat<T> r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T& aik = a.at(i, k);
      if (aik == T{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) r.at(i, j) += aik * b.at(k, j);
    }
  return r;
}

template <class T>
Mat<T> operator-(const Mat<T>& a, const Mat<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("matrix difference dimension mismatch");
  Mat<T> r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j) - b.at(i, j);
  return r;
}

template <class T>
Mat<T> operator+(const Mat<T>& a, const Mat<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("matrix sum dimension mismatch");
  Mat<T> r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j) + b.at(i, j);
  return r;
}

PolyMat to_poly(const IntMat& m);
RatMat to_rat(const PolyMat& m);
RatMat to_rat(const IntMat& m);

// Exact divisions used by the fraction-free eliminations; divisibility is
// guaranteed by the Bareiss identities, so failure means a bug.
inline Int exact_div(const Int& a, const Int& b) {
  if (b == 0 || a % b != 0) throw InternalCheckError("non-exact division in elimination");
  return a / b;
}
inline LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
  auto q = divide_exact(a, b);
  if (!q) throw InternalCheckError("non-exact division in elimination");
  return *q;
}

// Determinant by cofactor expansion along the first row. Empty matrix -> 1.
template <class T>
T det_cofactor(const Mat<T>& m) {
  if (!m.square()) throw DimensionError("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return T(1);
  if (n == 1) return m.at(0, 0);
  T acc{};
  for (std::size_t j = 0; j < n; ++j) {
    if (m.at(0, j) == T{}) continue;
    Mat<T> minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor.at(i - 1, cc++) = m.at(i, c);
      }
    }
    T term = m.at(0, j) * det_cofactor(minor);
    if (j % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

// Fraction-free (Bareiss) determinant; every division is exact in the ring.
template <class T>
T det_bareiss(Mat<T> m) {
  if (!m.square()) throw DimensionError("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return T(1);
  T prev = T(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m.at(pivot, k) == T{}) ++pivot;
    if (pivot == n) return T{};
    if (pivot != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(k, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m.at(i, j) = exact_div(m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j), prev);
    prev = m.at(k, k);
  }
  T d = m.at(n - 1, n - 1);
  return negate ? T{} - d : d;
}

// Production determinant: cofactor expansion for small sizes, fraction-free
// elimination above. The two routes are checked against each other in the
// test suite.
template <class T>
T det(const Mat<T>& m) {
  return m.rows() <= 4 ? det_cofactor(m) : det_bareiss(m);
}

// Adjugate (transposed cofactor matrix); adj(M) * M = det(M) * I.
PolyMat adjugate(const PolyMat& m);

// Exact inverse over Q(t). Throws SingularMatrixError on det = 0; the
// result is verified against M * M^-1 = I before returning. Uses the
// adjugate for sizes <= 6 and fraction-free Gauss-Jordan elimination above;
// both paths agree on shared sizes (tested).
RatMat inverse(const PolyMat& m);
RatMat inverse_adjugate(const PolyMat& m);
RatMat inverse_elimination(const PolyMat& m);

// Exact integer inverse of a det = +-1 matrix.
IntMat unimodular_inverse(const IntMat& p);

bool is_identity(const RatMat& m);

}  // namespace sequiv
