#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace vval {

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n); // NOLINT(google-explicit-constructor)
    Rational(std::int64_t numerator, std::int64_t denominator);

    /// Accepts exactly the canonical forms "n" and "a/b" (b > 1, reduced,
    /// no leading zeros or '+'); throws ValidationError otherwise.
    static Rational parse(std::string_view text);

    [[nodiscard]] std::string str() const;
    [[nodiscard]] int sign() const { return sgn(value_); }
    [[nodiscard]] bool is_zero() const { return sign() == 0; }
    [[nodiscard]] double to_double() const { return value_.get_d(); }

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    /// Throws std::domain_error on a zero divisor.
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a);

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        return cmp(a.value_, b.value_) <=> 0;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    explicit Rational(mpq_class v) : value_(std::move(v)) {}

    mpq_class value_;
};

} // namespace vval
