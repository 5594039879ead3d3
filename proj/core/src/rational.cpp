#include "frobsieve/rational.hpp"

#include <utility>

namespace frobsieve {

i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) a = std::exchange(b, a % b);
    return a;
}

Rational::Rational(i128 num, i128 den) : num_(num), den_(den) {
    if (den_ == 0) throw DomainError("Rational: zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    const i128 g = gcd128(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

std::string Rational::str() const {
    return den_ == 1 ? to_string(num_) : to_string(num_) + "/" + to_string(den_);
}

Rational& Rational::operator+=(const Rational& r) {
    const i128 g = gcd128(den_, r.den_);
    *this = Rational(num_ * (r.den_ / g) + r.num_ * (den_ / g), den_ / g * r.den_);
    return *this;
}

Rational& Rational::operator-=(const Rational& r) { return *this += Rational(-r.num_, r.den_); }

Rational& Rational::operator*=(const Rational& r) {
    const i128 g1 = gcd128(num_, r.den_), g2 = gcd128(r.num_, den_);
    *this = Rational((num_ / g1) * (r.num_ / g2), (den_ / g2) * (r.den_ / g1));
    return *this;
}

std::strong_ordering operator<=>(const Rational& l, const Rational& r) {
    const i128 a = l.num_ * r.den_, b = r.num_ * l.den_;
    return a < b ? std::strong_ordering::less : (a > b ? std::strong_ordering::greater : std::strong_ordering::equal);
}

}  // namespace frobsieve
