#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "sequiv/matrix.hpp"
#include "sequiv/rng.hpp"

namespace sequiv {

// Square integer matrix A with det(A - A^t) = 1, validated at construction.
// The condition forces even size (an odd skew-symmetric integer matrix has
// determinant 0), so size() = 2 * genus(). The 0x0 matrix is a first-class
// value and models the unknot.
class SeifertMatrix {
 public:
  // The empty matrix (the unknot).
  SeifertMatrix() : a_(0, 0) {}

  // Throws NotSeifertTypeError (carrying the determinant) or DimensionError.
  static SeifertMatrix validate(IntMat a);

  static SeifertMatrix unknot() { return SeifertMatrix(); }

  const IntMat& entries() const { return a_; }
  std::size_t size() const { return a_.rows(); }
  std::size_t genus() const { return a_.rows() / 2; }

  bool operator==(const SeifertMatrix&) const = default;

 private:
  explicit SeifertMatrix(IntMat a) : a_(std::move(a)) {}
  IntMat a_;
};

struct EnlargeMove {
  int kind = 1;  // 1 or 2
  std::vector<Int> v;
  bool operator==(const EnlargeMove&) const = default;
};

// Reduction site: simultaneously permuting rows/columns so that p lands in
// slot k-2 and q in slot k-1 (all others keeping their order) must expose
// the exact enlargement block of the given kind. The permutation is
// determined by (p, q) and is itself a unimodular congruence.
struct ReduceMove {
  int kind = 1;
  std::size_t p = 0;
  std::size_t q = 0;
  bool operator==(const ReduceMove&) const = default;
};

struct CongruenceMove {
  IntMat p;  // det +-1
  bool operator==(const CongruenceMove&) const = default;
};

using Move = std::variant<EnlargeMove, ReduceMove, CongruenceMove>;

struct MoveChain {
  SeifertMatrix start;
  std::vector<Move> moves;
  bool operator==(const MoveChain&) const = default;
};

// The two elementary enlargements: kind 1 appends rows/columns giving
//   [ A   0 0 ]            [ A   v 0 ]
//   [ v^t 0 0 ]   kind 2:  [ 0   0 1 ]
//   [ 0   1 0 ]            [ 0   0 0 ]
// Both are again of Seifert type. |v| must equal size(A).
SeifertMatrix enlarge(const SeifertMatrix& a, int kind, const std::vector<Int>& v);

// Every way A matches an enlargement pattern up to simultaneous row/column
// permutation, in deterministic (p, q, kind) order.
std::vector<ReduceMove> find_reductions(const SeifertMatrix& a);

// Inverse of enlarge at the recorded site. Throws InvalidReductionSite when
// the pattern does not match.
SeifertMatrix reduce(const SeifertMatrix& a, const ReduceMove& site);

// P * A * P^t for unimodular P.
SeifertMatrix congruate(const SeifertMatrix& a, const IntMat& p);

SeifertMatrix apply_move(const SeifertMatrix& a, const Move& m);

// Replays the whole chain; failures carry the index of the offending move.
SeifertMatrix apply_chain(const MoveChain& c);

// sigma with B[i][j] = A[sigma[i]][sigma[j]] carrying p -> k-2, q -> k-1.
std::vector<std::size_t> site_permutation(std::size_t k, std::size_t p, std::size_t q);

// Permutation matrix P with (P A P^t)[i][j] = A[sigma[i]][sigma[j]].
IntMat permutation_matrix(const std::vector<std::size_t>& sigma);

// 2g x 2g matrix S + T with S random symmetric (entries in [-bound, bound])
// and T the strictly upper part of the standard skew form
// diag([[0,1],[-1,0]], ...); then A - A^t is exactly the standard skew form,
// so the result is of Seifert type by construction. Deterministic per seed.
SeifertMatrix random_seifert(std::size_t genus, long coeff_bound, std::uint64_t seed);

// Product of at most max_ops elementary row operations (transvections with
// coefficient in [-coeff_bound, coeff_bound] and sign flips); det = +-1 by
// construction.
IntMat random_unimodular(std::size_t n, int max_ops, long coeff_bound, Rng& rng);

}  // namespace sequiv
