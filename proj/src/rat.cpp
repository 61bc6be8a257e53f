#include "ssekit/rat.hpp"

#include <cctype>
#include <ostream>

namespace ssekit {

mpq_class Rat::mpq_from_i128(__int128 n, __int128 d) {
    auto to_mpz = [](__int128 v) {
        bool neg = v < 0;
        unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v)
                                  : static_cast<unsigned __int128>(v);
        mpz_class hi(static_cast<unsigned long>(u >> 64));
        mpz_class lo(static_cast<unsigned long>(u & 0xffffffffffffffffULL));
        mpz_class z = (hi << 64) + lo;
        return neg ? mpz_class(-z) : z;
    };
    mpq_class q(to_mpz(n));
    q /= mpq_class(to_mpz(d));
    return q;
}

void Rat::assign_big(const mpq_class& q) {
    mpq_class canon(q);
    canon.canonicalize();
    const mpz_class& n = canon.get_num();
    const mpz_class& d = canon.get_den();
    if (n.fits_slong_p() && d.fits_slong_p()) {
        long ln = n.get_si();
        long ld = d.get_si();
        if (ln >= -kMaxInline && ln <= kMaxInline && ld <= kMaxInline) {
            num_ = ln;
            den_ = ld;
            big_.reset();
            return;
        }
    }
    num_ = 0;
    den_ = 1;
    big_ = std::make_unique<mpq_class>(std::move(canon));
}

Rat Rat::from_string(std::string_view text) {
    auto bad = [&] {
        return parse_error("not a rational literal: '" + std::string(text) + "'");
    };
    size_t pos = 0;
    auto scan_int = [&](bool allow_sign) -> std::string {
        std::string out;
        if (allow_sign && pos < text.size() && text[pos] == '-') {
            out += '-';
            ++pos;
        }
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            out += text[pos++];
        if (pos == start)
            throw bad();
        return out;
    };
    std::string num = scan_int(true);
    std::string den = "1";
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        den = scan_int(false);
    }
    if (pos != text.size())
        throw bad();

    mpz_class dz(den);
    if (dz == 0)
        throw parse_error("zero denominator in literal: '" + std::string(text) + "'");
    mpq_class q(mpz_class(num));
    q /= mpq_class(dz);
    Rat r;
    r.assign_big(q);
    return r;
}

std::string Rat::to_string() const {
    if (big_) {
        std::string s = big_->get_num().get_str();
        if (big_->get_den() != 1)
            s += "/" + big_->get_den().get_str();
        return s;
    }
    std::string s = std::to_string(num_);
    if (den_ != 1)
        s += "/" + std::to_string(den_);
    return s;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) {
    return os << r.to_string();
}

} // namespace ssekit
