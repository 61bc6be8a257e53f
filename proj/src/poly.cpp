#include "ssekit/poly.hpp"

#include <ostream>
#include <sstream>

namespace ssekit {

RatPoly RatPoly::monomial(const Rat& c, size_t k) {
    if (c.is_zero())
        return RatPoly();
    std::vector<Rat> cs(k + 1);
    cs[k] = c;
    return from_coeffs(std::move(cs));
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
    std::vector<Rat> cs(std::max(coeffs_.size(), o.coeffs_.size()));
    for (size_t i = 0; i < cs.size(); ++i)
        cs[i] = coeff(i) + o.coeff(i);
    return from_coeffs(std::move(cs));
}

RatPoly RatPoly::operator-(const RatPoly& o) const {
    std::vector<Rat> cs(std::max(coeffs_.size(), o.coeffs_.size()));
    for (size_t i = 0; i < cs.size(); ++i)
        cs[i] = coeff(i) - o.coeff(i);
    return from_coeffs(std::move(cs));
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
    if (is_zero() || o.is_zero())
        return RatPoly();
    std::vector<Rat> cs(coeffs_.size() + o.coeffs_.size() - 1);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero())
            continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            cs[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return from_coeffs(std::move(cs));
}

RatPoly RatPoly::operator*(const Rat& s) const {
    std::vector<Rat> cs(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i)
        cs[i] = coeffs_[i] * s;
    return from_coeffs(std::move(cs));
}

RatPoly RatPoly::operator-() const {
    std::vector<Rat> cs(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i)
        cs[i] = -coeffs_[i];
    return from_coeffs(std::move(cs));
}

std::pair<RatPoly, RatPoly> RatPoly::divmod(const RatPoly& divisor) const {
    if (divisor.is_zero())
        throw domain_error("RatPoly: division by zero polynomial");
    RatPoly rem = *this;
    std::vector<Rat> quot;
    if (!rem.is_zero() && rem.degree() >= divisor.degree())
        quot.resize(rem.degree() - divisor.degree() + 1);
    const Rat lead_inv = divisor.leading().reciprocal();
    while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
        size_t shift = rem.degree() - divisor.degree();
        Rat factor = rem.leading() * lead_inv;
        quot[shift] = factor;
        rem -= divisor.shift_up(shift) * factor;
    }
    return {from_coeffs(std::move(quot)), rem};
}

Rat RatPoly::eval(const Rat& x) const {
    Rat acc;
    for (size_t i = coeffs_.size(); i-- > 0;)
        acc = acc * x + coeffs_[i];
    return acc;
}

RatPoly RatPoly::monic() const {
    if (is_zero())
        return RatPoly();
    return *this * leading().reciprocal();
}

RatPoly RatPoly::shift_up(size_t k) const {
    if (is_zero())
        return RatPoly();
    std::vector<Rat> cs(coeffs_.size() + k);
    for (size_t i = 0; i < coeffs_.size(); ++i)
        cs[i + k] = coeffs_[i];
    return from_coeffs(std::move(cs));
}

std::pair<size_t, RatPoly> RatPoly::strip_t_factors() const {
    if (is_zero())
        return {0, RatPoly()};
    size_t v = 0;
    while (v < coeffs_.size() && coeffs_[v].is_zero())
        ++v;
    std::vector<Rat> cs(coeffs_.begin() + v, coeffs_.end());
    return {v, from_coeffs(std::move(cs))};
}

std::string RatPoly::to_string(const char* var) const {
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        const Rat& c = coeffs_[i];
        if (c.is_zero())
            continue;
        Rat mag = abs(c);
        if (first) {
            if (c.is_negative())
                os << "-";
            first = false;
        } else {
            os << (c.is_negative() ? " - " : " + ");
        }
        if (i == 0 || !mag.is_one())
            os << mag.to_string();
        if (i > 0) {
            if (!mag.is_one())
                os << "*";
            os << var;
            if (i > 1)
                os << "^" << i;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const RatPoly& p) {
    return os << p.to_string();
}

} // namespace ssekit
