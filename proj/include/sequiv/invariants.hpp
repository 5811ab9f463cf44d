#pragma once

#include <string>
#include <vector>

#include "sequiv/seifert.hpp"

namespace sequiv {

// Cheap S-equivalence invariants of the presentation matrix At - A^t, used
// as fast filters before any pairing comparison. Equality of all of them
// never *asserts* S-equivalence.
struct InvariantReport {
  LaurentPoly alexander;  // unit-normalized: lowest exponent 0, positive constant term
  Int det_at_minus_one;   // |alexander(-1)|
  long signature = 0;     // signature of A + A^t
  Int alexander_at_one;   // det(At - A^t) at t = 1, i.e. det(A - A^t); always 1 here
  bool operator==(const InvariantReport&) const = default;
};

// At - A^t over Z[t, t^-1].
PolyMat presentation_matrix(const SeifertMatrix& a);

// Order of the module presented by At - A^t: det(At - A^t) unit-normalized.
// The 0x0 matrix gives 1.
LaurentPoly alexander_poly(const SeifertMatrix& a);

Int det_at_minus_one(const SeifertMatrix& a);

// Signature of the symmetric matrix A + A^t, computed exactly by congruence
// diagonalization over Q (1x1 pivots with a 2x2 hyperbolic-block repair when
// the whole diagonal vanishes). No eigenvalue numerics anywhere.
long signature(const SeifertMatrix& a);

// Exposed for direct testing on arbitrary symmetric integer matrices.
long signature_symmetric(const IntMat& s);

InvariantReport invariant_report(const SeifertMatrix& a);

struct InvariantDiff {
  std::string invariant;
  std::string left;
  std::string right;
  bool operator==(const InvariantDiff&) const = default;
};

// Differences between the two reports in fixed order (alexander,
// determinant, signature); empty when all filters agree.
std::vector<InvariantDiff> invariant_diffs(const SeifertMatrix& a, const SeifertMatrix& b);

}  // namespace sequiv
