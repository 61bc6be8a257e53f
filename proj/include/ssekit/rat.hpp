#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <numeric>
#include <string>
#include <string_view>

#include "ssekit/errors.hpp"

namespace ssekit {

/*
 * Exact rational scalar.
 *
 * Stored in lowest terms with positive denominator, always. Values whose
 * numerator and denominator fit in 64 bits live inline; anything larger is
 * promoted to a GMP rational on the heap. Promotion and demotion are
 * transparent, so equality can compare representations directly.
 *
 * Inline arithmetic runs through __int128 intermediates: with |num|, den
 * bounded by 2^63 - 1, every cross product and two-term sum fits, so the
 * fast path needs no overflow branches before the final fits-check.
 */
class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(long long n) : num_(n), den_(1) {}
    Rat(int n) : num_(n), den_(1) {}

    Rat(long long n, long long d) : num_(0), den_(1) {
        if (d == 0)
            throw domain_error("Rat: zero denominator");
        assign_reduced(static_cast<__int128>(n), static_cast<__int128>(d));
    }

    explicit Rat(const mpq_class& q) { assign_big(q); }

    Rat(const Rat& o) : num_(o.num_), den_(o.den_) {
        if (o.big_)
            big_ = std::make_unique<mpq_class>(*o.big_);
    }
    Rat(Rat&&) noexcept = default;
    Rat& operator=(const Rat& o) {
        if (this != &o) {
            num_ = o.num_;
            den_ = o.den_;
            big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
        }
        return *this;
    }
    Rat& operator=(Rat&&) noexcept = default;

    // Strict "p" or "p/q" with an optional leading minus; anything else throws.
    static Rat from_string(std::string_view text);

    bool is_zero() const { return big_ ? sgn(*big_) == 0 : num_ == 0; }
    bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
    bool is_integer() const {
        return big_ ? big_->get_den() == 1 : den_ == 1;
    }
    bool is_positive() const { return sign() > 0; }
    bool is_negative() const { return sign() < 0; }
    int sign() const {
        if (big_)
            return sgn(*big_);
        return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0);
    }

    mpz_class numerator() const {
        if (big_)
            return big_->get_num();
        return mpz_class(static_cast<long>(num_));
    }
    mpz_class denominator() const {
        if (big_)
            return big_->get_den();
        return mpz_class(static_cast<long>(den_));
    }
    mpq_class to_mpq() const {
        if (big_)
            return *big_;
        mpq_class q(static_cast<long>(num_), 1L);
        q /= mpq_class(static_cast<long>(den_), 1L);
        return q;
    }

    Rat operator-() const {
        if (big_)
            return Rat(mpq_class(-*big_));
        Rat r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    Rat operator+(const Rat& o) const {
        if (!big_ && !o.big_) {
            __int128 n = i128(num_) * o.den_ + i128(o.num_) * den_;
            __int128 d = i128(den_) * o.den_;
            return make_reduced(n, d);
        }
        return Rat(mpq_class(to_mpq() + o.to_mpq()));
    }
    Rat operator-(const Rat& o) const {
        if (!big_ && !o.big_) {
            __int128 n = i128(num_) * o.den_ - i128(o.num_) * den_;
            __int128 d = i128(den_) * o.den_;
            return make_reduced(n, d);
        }
        return Rat(mpq_class(to_mpq() - o.to_mpq()));
    }
    Rat operator*(const Rat& o) const {
        if (!big_ && !o.big_) {
            __int128 n = i128(num_) * o.num_;
            __int128 d = i128(den_) * o.den_;
            return make_reduced(n, d);
        }
        return Rat(mpq_class(to_mpq() * o.to_mpq()));
    }
    Rat operator/(const Rat& o) const {
        if (o.is_zero())
            throw domain_error("Rat: division by zero");
        if (!big_ && !o.big_) {
            __int128 n = i128(num_) * o.den_;
            __int128 d = i128(den_) * o.num_;
            return make_reduced(n, d);
        }
        return Rat(mpq_class(to_mpq() / o.to_mpq()));
    }

    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    Rat reciprocal() const {
        if (is_zero())
            throw domain_error("Rat: reciprocal of zero");
        if (!big_)
            return make_reduced(i128(den_), i128(num_));
        return Rat(mpq_class(1 / *big_));
    }

    bool operator==(const Rat& o) const {
        if (!big_ && !o.big_)
            return num_ == o.num_ && den_ == o.den_;
        if (big_ && o.big_)
            return *big_ == *o.big_;
        return false; // canonical: big never holds a value that fits inline
    }
    bool operator!=(const Rat& o) const { return !(*this == o); }

    std::strong_ordering operator<=>(const Rat& o) const {
        if (!big_ && !o.big_) {
            __int128 lhs = i128(num_) * o.den_;
            __int128 rhs = i128(o.num_) * den_;
            return lhs < rhs ? std::strong_ordering::less
                 : lhs > rhs ? std::strong_ordering::greater
                             : std::strong_ordering::equal;
        }
        int c = cmp(to_mpq(), o.to_mpq());
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    std::string to_string() const;

    friend Rat abs(const Rat& r) { return r.is_negative() ? -r : r; }

private:
    static __int128 i128(long long v) { return static_cast<__int128>(v); }

    static __int128 gcd128(__int128 a, __int128 b) {
        if (a < 0)
            a = -a;
        if (b < 0)
            b = -b;
        while (b != 0) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    static constexpr long long kMaxInline = 0x7fffffffffffffffLL - 1;

    static Rat make_reduced(__int128 n, __int128 d) {
        Rat r;
        r.assign_reduced(n, d);
        return r;
    }

    // Reduce n/d (d != 0) and store inline if it fits, promoting otherwise.
    void assign_reduced(__int128 n, __int128 d) {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        if (n == 0) {
            num_ = 0;
            den_ = 1;
            big_.reset();
            return;
        }
        __int128 g = gcd128(n, d);
        n /= g;
        d /= g;
        __int128 lim = static_cast<__int128>(kMaxInline);
        if (n >= -lim && n <= lim && d <= lim) {
            num_ = static_cast<long long>(n);
            den_ = static_cast<long long>(d);
            big_.reset();
        } else {
            assign_big(mpq_from_i128(n, d));
        }
    }

    static mpq_class mpq_from_i128(__int128 n, __int128 d);

    // Store a canonical-form mpq, demoting to the inline pair when possible.
    void assign_big(const mpq_class& q);

    long long num_;
    long long den_;
    std::unique_ptr<mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

} // namespace ssekit
