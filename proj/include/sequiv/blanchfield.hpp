#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sequiv/invariants.hpp"
#include "sequiv/seifert.hpp"

namespace sequiv {

// The Blanchfield form of a Seifert matrix A: the Alexander-module
// presentation At - A^t over Z[t,t^-1] together with the pairing matrix
// (t-1)(At - A^t)^-1 over Q(t). The pairing of module elements v, w is the
// class of involute(v)^t * pairing * w in Q(Λ)/Λ.
//
// Construction verifies, exactly:
//   - pairing * presentation = (t-1) * I in Q(t);
//   - hermitian mod Λ: pairing[j][i] == involute(pairing[i][j]) as
//     torsion classes, for all i, j.
class BlanchfieldForm {
 public:
  explicit BlanchfieldForm(const SeifertMatrix& a);

  std::size_t size() const { return presentation_.rows(); }
  const PolyMat& presentation() const { return presentation_; }
  const RatMat& pairing() const { return pairing_; }

  // presentation^-1 = pairing / (t-1); kept for relation-membership tests.
  const RatMat& presentation_inverse() const { return presentation_inverse_; }

 private:
  PolyMat presentation_;
  RatMat pairing_;
  RatMat presentation_inverse_;
};

// Convenience alias matching the construction-from-matrix reading.
inline BlanchfieldForm build_form(const SeifertMatrix& a) { return BlanchfieldForm(a); }

// The class of involute(v)^t * pairing * w. Vector lengths must equal the
// form size.
TorsionClass evaluate(const BlanchfieldForm& f, const std::vector<LaurentPoly>& v,
                      const std::vector<LaurentPoly>& w);

// evaluate(f, w, v) == involute(evaluate(f, v, w)) as classes, over all
// standard basis pairs.
bool hermitian_check(const BlanchfieldForm& f);

// Generator map between Alexander modules: column j is the image of source
// generator j, written in target generators over Z[t,t^-1].
struct Isometry {
  PolyMat forward;                  // tgt_size x src_size
  std::optional<PolyMat> inverse;   // src_size x tgt_size, when recorded
};

// involute(F)^t * pairing_tgt * F, the pairing pulled back along F.
RatMat transported_pairing(const BlanchfieldForm& tgt, const PolyMat& forward);

// Pairing respected on all basis pairs, mod Λ / exactly in Q(t).
bool isometry_respects(const BlanchfieldForm& src, const BlanchfieldForm& tgt,
                       const PolyMat& forward);
bool isometry_respects_exact(const BlanchfieldForm& src, const BlanchfieldForm& tgt,
                             const PolyMat& forward);

// Isometry x -> P^-1 x from the form of P A P^t to the form of A. Holds as
// an exact identity in Q(t); verified at construction (failure would be an
// arithmetic bug, hence InternalCheckError).
Isometry congruence_isometry(const SeifertMatrix& a, const IntMat& p);

// Isometry from the form of enlarge(A, kind, v) to the form of A. On
// generators: e_i -> e_i (i < k), e_k -> 0, and e_{k+1} -> t^-1 * v (kind 1)
// or t * v (kind 2). These maps are read off the relation columns of the
// enlarged presentation and re-verified mod Λ at construction.
Isometry enlargement_isometry(const SeifertMatrix& a, int kind, const std::vector<Int>& v);

// Composite isometry from the form of apply_chain(c) to the form of
// c.start, built move by move (reductions reuse the enlargement map in the
// inverse direction) and verified end to end mod Λ.
Isometry chain_isometry(const MoveChain& c);

struct IsometryBounds {
  long coeff = 2;                       // |entry coefficient| bound
  int deg = 1;                          // |entry degree| bound
  std::uint64_t candidates = 1000000;   // total candidate maps examined
};

struct IsometricWitness {
  std::optional<Isometry> map;
  std::optional<MoveChain> chain;
};

// Outcome of a pairing comparison. Unknown is a value, not an error: the
// bounded search proving nothing is an accepted result.
struct Verdict {
  enum class Kind { Isometric, DistinctInvariant, Unknown };

  Kind kind = Kind::Unknown;
  IsometricWitness witness;           // Isometric
  InvariantDiff separating;           // DistinctInvariant
  std::uint64_t candidates_tried = 0; // Unknown

  static Verdict isometric_map(Isometry iso);
  static Verdict isometric_chain(MoveChain chain);
  static Verdict distinct(InvariantDiff diff);
  static Verdict unknown(std::uint64_t tried);
};

// Invariant filter first (DistinctInvariant on any mismatch), then a
// deterministic bounded search over generator maps with monomial entries
// c * t^d, |c| <= bounds.coeff, |d| <= bounds.deg. A successful map must
// carry relations into relations, respect pairings mod Λ on basis
// pairs, and come with an explicit two-sided inverse mod the presentations
// (the invertibility certificate). Lexicographically first hit wins.
Verdict isometry_search(const SeifertMatrix& a, const SeifertMatrix& b,
                        const IsometryBounds& bounds = {});

// Re-runs all checks carried by an Isometric verdict from scratch.
bool verify_verdict(const SeifertMatrix& a, const SeifertMatrix& b, const Verdict& v);

}  // namespace sequiv
