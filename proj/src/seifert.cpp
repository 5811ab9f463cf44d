#include "sequiv/seifert.hpp"

#include <algorithm>

namespace sequiv {

SeifertMatrix SeifertMatrix::validate(IntMat a) {
  if (!a.square()) throw DimensionError("Seifert matrix must be square");
  const Int d = det(a - a.transposed());
  if (d != 1) throw NotSeifertTypeError(d);
  return SeifertMatrix(std::move(a));
}

SeifertMatrix enlarge(const SeifertMatrix& a, int kind, const std::vector<Int>& v) {
  const std::size_t k = a.size();
  if (kind != 1 && kind != 2) throw std::invalid_argument("enlargement kind must be 1 or 2");
  if (v.size() != k) throw DimensionError("enlargement vector length must equal matrix size");
  IntMat b(k + 2, k + 2);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) b.at(i, j) = a.entries().at(i, j);
  if (kind == 1) {
    for (std::size_t j = 0; j < k; ++j) b.at(k, j) = v[j];
    b.at(k + 1, k) = 1;
  } else {
    for (std::size_t i = 0; i < k; ++i) b.at(i, k) = v[i];
    b.at(k, k + 1) = 1;
  }
  return SeifertMatrix::validate(std::move(b));
}

std::vector<std::size_t> site_permutation(std::size_t k, std::size_t p, std::size_t q) {
  std::vector<std::size_t> sigma;
  sigma.reserve(k);
  for (std::size_t i = 0; i < k; ++i)
    if (i != p && i != q) sigma.push_back(i);
  sigma.push_back(p);
  sigma.push_back(q);
  return sigma;
}

IntMat permutation_matrix(const std::vector<std::size_t>& sigma) {
  IntMat m(sigma.size(), sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) m.at(i, sigma[i]) = 1;
  return m;
}

namespace {

bool matches_site(const IntMat& m, std::size_t p, std::size_t q, int kind) {
  const std::size_t k = m.rows();
  const auto sigma = site_permutation(k, p, q);
  const auto e = [&](std::size_t i, std::size_t j) -> const Int& {
    return m.at(sigma[i], sigma[j]);
  };
  const std::size_t r = k - 2;
  if (kind == 1) {
    // [ R   0 0 ]
    // [ v^t 0 0 ]
    // [ 0   1 0 ]
    for (std::size_t i = 0; i < r; ++i)
      if (e(i, r) != 0 || e(i, r + 1) != 0) return false;
    if (e(r, r) != 0 || e(r, r + 1) != 0) return false;
    for (std::size_t j = 0; j < r; ++j)
      if (e(r + 1, j) != 0) return false;
    return e(r + 1, r) == 1 && e(r + 1, r + 1) == 0;
  }
  // [ R v 0 ]
  // [ 0 0 1 ]
  // [ 0 0 0 ]
  for (std::size_t i = 0; i < r; ++i)
    if (e(i, r + 1) != 0) return false;
  for (std::size_t j = 0; j < r; ++j)
    if (e(r, j) != 0) return false;
  if (e(r, r) != 0 || e(r, r + 1) != 1) return false;
  for (std::size_t j = 0; j < k; ++j)
    if (e(r + 1, j) != 0) return false;
  return true;
}

}  // namespace

std::vector<ReduceMove> find_reductions(const SeifertMatrix& a) {
  std::vector<ReduceMove> out;
  const std::size_t k = a.size();
  if (k < 2) return out;
  for (std::size_t p = 0; p < k; ++p)
    for (std::size_t q = 0; q < k; ++q) {
      if (p == q) continue;
      for (int kind = 1; kind <= 2; ++kind)
        if (matches_site(a.entries(), p, q, kind))
          out.push_back(ReduceMove{kind, p, q});
    }
  return out;
}

SeifertMatrix reduce(const SeifertMatrix& a, const ReduceMove& site) {
  const std::size_t k = a.size();
  if (k < 2 || site.p >= k || site.q >= k || site.p == site.q ||
      (site.kind != 1 && site.kind != 2) ||
      !matches_site(a.entries(), site.p, site.q, site.kind))
    throw InvalidReductionSite("matrix does not match the enlargement pattern at the given site");
  const auto sigma = site_permutation(k, site.p, site.q);
  IntMat r(k - 2, k - 2);
  for (std::size_t i = 0; i + 2 < k; ++i)
    for (std::size_t j = 0; j + 2 < k; ++j) r.at(i, j) = a.entries().at(sigma[i], sigma[j]);
  return SeifertMatrix::validate(std::move(r));
}

SeifertMatrix congruate(const SeifertMatrix& a, const IntMat& p) {
  if (!p.square() || p.rows() != a.size())
    throw DimensionError("congruence matrix size mismatch");
  const Int d = det(p);
  if (d != 1 && d != -1)
    throw std::domain_error("congruence matrix is not unimodular: det = " + d.str());
  return SeifertMatrix::validate(p * a.entries() * p.transposed());
}

SeifertMatrix apply_move(const SeifertMatrix& a, const Move& m) {
  return std::visit(
      [&](const auto& mv) -> SeifertMatrix {
        using M = std::decay_t<decltype(mv)>;
        if constexpr (std::is_same_v<M, EnlargeMove>) {
          return enlarge(a, mv.kind, mv.v);
        } else if constexpr (std::is_same_v<M, ReduceMove>) {
          return reduce(a, mv);
        } else {
          return congruate(a, mv.p);
        }
      },
      m);
}

SeifertMatrix apply_chain(const MoveChain& c) {
  SeifertMatrix cur = c.start;
  for (std::size_t i = 0; i < c.moves.size(); ++i) {
    try {
      cur = apply_move(cur, c.moves[i]);
    } catch (const std::exception& e) {
      throw ChainReplayError(i, e.what());
    }
  }
  return cur;
}

SeifertMatrix random_seifert(std::size_t genus, long coeff_bound, std::uint64_t seed) {
  Rng rng(seed);
  const std::size_t k = 2 * genus;
  IntMat a(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      const Int val = coeff_bound > 0 ? Int(rng.uniform(-coeff_bound, coeff_bound)) : Int(0);
      a.at(i, j) = val;
      a.at(j, i) = val;
    }
  for (std::size_t g = 0; g < genus; ++g) a.at(2 * g, 2 * g + 1) += 1;
  return SeifertMatrix::validate(std::move(a));
}

IntMat random_unimodular(std::size_t n, int max_ops, long coeff_bound, Rng& rng) {
  IntMat p = IntMat::identity(n);
  if (n == 0 || max_ops <= 0) return p;
  const int ops = static_cast<int>(rng.uniform(1, max_ops));
  for (int o = 0; o < ops; ++o) {
    const bool transvect = n >= 2 && rng.index(4) < 3;
    if (transvect) {
      const std::size_t i = rng.index(n);
      std::size_t j = rng.index(n - 1);
      if (j >= i) ++j;
      long c = rng.uniform(1, coeff_bound);
      if (rng.index(2) == 1) c = -c;
      for (std::size_t col = 0; col < n; ++col) p.at(i, col) += Int(c) * p.at(j, col);
    } else {
      const std::size_t i = rng.index(n);
      for (std::size_t col = 0; col < n; ++col) p.at(i, col) = -p.at(i, col);
    }
  }
  return p;
}

}  // namespace sequiv
