#pragma once

#include "ssekit/matrix.hpp"
#include "ssekit/poly.hpp"

namespace ssekit {

// (1/4) [[3+t, 1-t], [1+t, 3-t]]: positive stochastic for t in [0,1),
// reducible at t = 1, constant trace and determinant.
RatMatrix pt_matrix(const Rat& t);

// (1/(n+2)) [[1, n, 1], [n, 1, 1], [n, 1, 1]] for n >= 1.
RatMatrix an_matrix(unsigned long n);

// Closed form t(t - 1)(t + (n-1)/(n+2)) for the characteristic polynomial
// of an_matrix(n).
RatPoly an_charpoly(unsigned long n);

struct CirculantForm {
    Rat b, c; // b + c = 1
};

// A 3x3 doubly stochastic matrix with zero trace is forced into the cyclic
// form [[0,b,c],[c,0,b],[b,c,0]] with b + c = 1; extracts (b, c) or throws
// structural_error describing the first failed requirement.
CirculantForm extract_zero_trace_circulant(const RatMatrix& m);

// [[0,b,1-b],[1-b,0,b],[b,1-b,0]] for b in [0,1].
RatMatrix circulant_matrix(const Rat& b);

// b^3 + (1-b)^3, the determinant of the circulant above.
Rat circulant_cubic(const Rat& b);

struct CirculantScan {
    Rat minimum;
    Rat argmin;
    unsigned long max_den;
    unsigned long points;
};

// Exact minimum of circulant_cubic over every rational b in [0,1] with
// denominator at most max_den.
CirculantScan circulant_grid_min(unsigned long max_den);

} // namespace ssekit
