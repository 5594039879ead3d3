#pragma once

#include <compare>
#include <string>

#include "frobsieve/arith.hpp"

namespace frobsieve {

/// Exact fraction over 128-bit integers, always reduced with a positive
/// denominator.
class Rational {
public:
    Rational() = default;
    Rational(i128 num, i128 den = 1);

    i128 num() const noexcept { return num_; }
    i128 den() const noexcept { return den_; }

    double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
    std::string str() const;

    Rational& operator+=(const Rational& r);
    Rational& operator-=(const Rational& r);
    Rational& operator*=(const Rational& r);

    friend Rational operator+(Rational l, const Rational& r) { return l += r; }
    friend Rational operator-(Rational l, const Rational& r) { return l -= r; }
    friend Rational operator*(Rational l, const Rational& r) { return l *= r; }
    friend Rational abs(const Rational& r) { return {r.num_ < 0 ? -r.num_ : r.num_, r.den_}; }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& l, const Rational& r);

private:
    i128 num_ = 0;
    i128 den_ = 1;
};

i128 gcd128(i128 a, i128 b);

}  // namespace frobsieve
