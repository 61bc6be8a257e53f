#pragma once

#include <vector>

#include "ssekit/matrix.hpp"
#include "ssekit/poly.hpp"

namespace ssekit {

// det(tI - A), monic of degree n. Dense inputs go through the
// Faddeev-LeVerrier recurrence; large rank-deficient inputs are first
// compressed to an r x r product with the same nonzero spectrum.
RatPoly charpoly(const RatMatrix& a);

// charpoly with every factor of t removed; encodes the nonzero spectrum.
RatPoly nonzero_charpoly(const RatMatrix& a);

// Exact rank over the rationals (fraction-free Bareiss elimination after
// clearing row denominators).
size_t rank(const RatMatrix& a);

// Exact determinant, Bareiss elimination.
Rat det(const RatMatrix& a);

// True iff the digraph with an edge i -> j whenever a(i,j) > 0 is strongly
// connected. Requires a nonnegative square matrix.
bool is_irreducible(const RatMatrix& a);

// True iff some power a^r is entrywise positive; decided by boolean repeated
// squaring up to the Wielandt bound n^2 - 2n + 2.
bool is_primitive(const RatMatrix& a);

// Invariant factors of tI - A: the diagonal of the Smith normal form over
// Q[t], monic, in divisibility order, constants included. Their product is
// charpoly(a).
std::vector<RatPoly> invariant_factors(const RatMatrix& a);

// Similarity over Q (equivalently over R) via invariant factor comparison.
bool similar_over_rationals(const RatMatrix& a, const RatMatrix& b);

// a^k, like RatMatrix::pow but routing large rank-deficient bases through
// a rank factorization a = F G, so a^k = F (G F)^(k-1) G costs only small
// powers plus one sandwich product.
RatMatrix matrix_power(const RatMatrix& a, unsigned long k);

// Gauss-Jordan inverse; throws domain_error on singular input.
RatMatrix inverse(const RatMatrix& a);

// Unique solution of a x = b; throws domain_error if a is singular.
RatVector solve(const RatMatrix& a, const RatVector& b);

struct Rref {
    RatMatrix reduced;
    std::vector<size_t> pivot_cols;
};

Rref rref(const RatMatrix& a);

} // namespace ssekit
