#pragma once

#include <utility>
#include <vector>

#include "ssekit/rat.hpp"

namespace ssekit {

// Univariate polynomial over Rat, coefficients stored lowest degree first
// with no stray zero leading coefficient. The zero polynomial has an empty
// coefficient vector and degree 0 by convention.
class RatPoly {
public:
    RatPoly() = default;
    RatPoly(std::initializer_list<Rat> low_first)
        : coeffs_(low_first) { trim(); }

    static RatPoly from_coeffs(std::vector<Rat> low_first) {
        RatPoly p;
        p.coeffs_ = std::move(low_first);
        p.trim();
        return p;
    }
    static RatPoly constant(const Rat& c) { return RatPoly{c}; }
    // c * t^k
    static RatPoly monomial(const Rat& c, size_t k);
    // t - c
    static RatPoly linear_root(const Rat& c) { return RatPoly{-c, Rat(1)}; }

    bool is_zero() const { return coeffs_.empty(); }
    size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    Rat coeff(size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rat(0); }
    Rat leading() const { return coeffs_.empty() ? Rat(0) : coeffs_.back(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back().is_one(); }

    RatPoly operator+(const RatPoly& o) const;
    RatPoly operator-(const RatPoly& o) const;
    RatPoly operator*(const RatPoly& o) const;
    RatPoly operator*(const Rat& s) const;
    RatPoly operator-() const;

    RatPoly& operator+=(const RatPoly& o) { return *this = *this + o; }
    RatPoly& operator-=(const RatPoly& o) { return *this = *this - o; }
    RatPoly& operator*=(const RatPoly& o) { return *this = *this * o; }

    bool operator==(const RatPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const RatPoly& o) const { return !(*this == o); }

    // Euclidean division; divisor must be nonzero.
    std::pair<RatPoly, RatPoly> divmod(const RatPoly& divisor) const;

    Rat eval(const Rat& x) const;

    RatPoly monic() const;
    // this * t^k
    RatPoly shift_up(size_t k) const;
    // Largest v with t^v dividing this, and this / t^v. Zero gives (0, 0).
    std::pair<size_t, RatPoly> strip_t_factors() const;

    std::string to_string(const char* var = "t") const;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero())
            coeffs_.pop_back();
    }

    std::vector<Rat> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const RatPoly& p);

} // namespace ssekit
