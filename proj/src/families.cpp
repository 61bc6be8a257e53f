#include "ssekit/families.hpp"

#include <numeric>

#include "ssekit/stochastic.hpp"

namespace ssekit {

RatMatrix pt_matrix(const Rat& t) {
    const Rat quarter(1, 4);
    return RatMatrix{{(Rat(3) + t) * quarter, (Rat(1) - t) * quarter},
                     {(Rat(1) + t) * quarter, (Rat(3) - t) * quarter}};
}

RatMatrix an_matrix(unsigned long n) {
    if (n == 0)
        throw domain_error("an_matrix: n must be at least 1");
    const Rat d(1, static_cast<long long>(n + 2));
    const Rat nn(static_cast<long long>(n));
    return RatMatrix{{d, nn * d, d}, {nn * d, d, d}, {nn * d, d, d}};
}

RatPoly an_charpoly(unsigned long n) {
    if (n == 0)
        throw domain_error("an_charpoly: n must be at least 1");
    Rat third(static_cast<long long>(n) - 1, static_cast<long long>(n + 2));
    return RatPoly{Rat(0), Rat(1)} * RatPoly::linear_root(Rat(1)) *
           RatPoly::linear_root(-third);
}

CirculantForm extract_zero_trace_circulant(const RatMatrix& m) {
    if (m.rows() != 3 || m.cols() != 3)
        throw structural_error("circulant check: matrix is not 3x3");
    StochasticProfile profile = classify(m);
    if (!profile.doubly_stochastic)
        throw structural_error("circulant check: matrix is not doubly stochastic");
    if (!m.trace().is_zero())
        throw structural_error("circulant check: trace is not zero, got " +
                               m.trace().to_string());
    // Nonnegative with zero trace forces every diagonal entry to zero, and
    // double stochasticity then forces the cyclic pattern.
    Rat b = m(0, 1);
    Rat c = m(0, 2);
    RatMatrix expected{{Rat(0), b, c}, {c, Rat(0), b}, {b, c, Rat(0)}};
    if (m != expected)
        throw structural_error("circulant check: matrix is not of the cyclic (b, c) form");
    if (b + c != Rat(1))
        throw structural_error("circulant check: b + c != 1");
    return {std::move(b), std::move(c)};
}

RatMatrix circulant_matrix(const Rat& b) {
    if (b.is_negative() || b > Rat(1))
        throw domain_error("circulant_matrix: b must lie in [0,1]");
    Rat c = Rat(1) - b;
    return RatMatrix{{Rat(0), b, c}, {c, Rat(0), b}, {b, c, Rat(0)}};
}

Rat circulant_cubic(const Rat& b) {
    Rat c = Rat(1) - b;
    return b * b * b + c * c * c;
}

CirculantScan circulant_grid_min(unsigned long max_den) {
    if (max_den == 0)
        throw domain_error("circulant_grid_min: denominator bound must be positive");
    CirculantScan out;
    out.max_den = max_den;
    out.points = 0;
    out.argmin = Rat(0);
    out.minimum = circulant_cubic(Rat(0));
    for (unsigned long q = 1; q <= max_den; ++q)
        for (unsigned long p = 0; p <= q; ++p) {
            if (std::gcd(p, q) != 1)
                continue;
            ++out.points;
            Rat b(static_cast<long long>(p), static_cast<long long>(q));
            Rat value = circulant_cubic(b);
            if (value < out.minimum) {
                out.minimum = value;
                out.argmin = b;
            }
        }
    return out;
}

} // namespace ssekit
