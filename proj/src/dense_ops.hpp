#pragma once

// Dense ordinary-polynomial helpers shared by the Laurent and rational
// function code. A Dense value d represents sum d[i] * t^i; invariant:
// d.back() != 0 for nonzero polynomials, the zero polynomial is the empty
// vector.

#include <optional>
#include <vector>

#include "sequiv/bigint.hpp"
#include "sequiv/laurent.hpp"

namespace sequiv::detail {

using Dense = std::vector<Int>;

// p = t^shift * result, with result[0] != 0 for nonzero p.
Dense to_dense(const LaurentPoly& p, int& shift);
LaurentPoly from_dense(const Dense& d, int shift);

void trim(Dense& d);
bool dense_is_zero(const Dense& d);
int degree(const Dense& d);  // -1 for the zero polynomial

Dense mul(const Dense& a, const Dense& b);
Dense scale(const Dense& a, const Int& c);

Int content(const Dense& d);  // gcd of coefficients, >= 0; 0 for zero
Dense divide_by_int(const Dense& d, const Int& c);  // must be exact

// Exact division over Z via rational long division; nullopt when the
// remainder is nonzero or the quotient is not integral. b must be nonzero.
std::optional<Dense> divide_exact_z(const Dense& a, const Dense& b);

// gcd in Z[t] including the integer content, normalized to a positive
// leading coefficient. gcd_z(a, 0) = +-a, gcd_z(0, 0) = 0.
Dense gcd_z(Dense a, Dense b);

}  // namespace sequiv::detail
