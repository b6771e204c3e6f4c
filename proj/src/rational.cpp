#include "vval/rational.hpp"

#include <ostream>
#include <stdexcept>

#include "vval/errors.hpp"

namespace vval {

namespace {

mpz_class to_mpz(std::int64_t v)
{
    // mpz_class has no portable int64_t constructor.
    mpz_class z;
    const bool neg = v < 0;
    auto mag = neg ? static_cast<std::uint64_t>(-(v + 1)) + 1 : static_cast<std::uint64_t>(v);
    mpz_import(z.get_mpz_t(), 1, 1, sizeof(mag), 0, 0, &mag);
    if (neg) {
        z = -z;
    }
    return z;
}

bool is_canonical_integer(std::string_view s, bool allow_sign)
{
    if (allow_sign && !s.empty() && s.front() == '-') {
        s.remove_prefix(1);
        if (s == "0") {
            return false;
        }
    }
    if (s.empty() || (s.size() > 1 && s.front() == '0')) {
        return false;
    }
    for (char c : s) {
        if (c < '0' || c > '9') {
            return false;
        }
    }
    return true;
}

[[noreturn]] void reject(std::string_view text)
{
    throw ValidationError(ValidationError::Kind::NonCanonicalRational,
                          "'" + std::string(text) + "' is not a canonical rational (expected \"n\" or reduced \"a/b\")");
}

} // namespace

Rational::Rational(std::int64_t n) : value_(to_mpz(n)) {}

Rational::Rational(std::int64_t numerator, std::int64_t denominator)
{
    if (denominator == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    value_ = mpq_class(to_mpz(numerator), to_mpz(denominator));
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    const auto slash = text.find('/');
    const auto num = text.substr(0, slash);
    if (!is_canonical_integer(num, true)) {
        reject(text);
    }
    if (slash == std::string_view::npos) {
        return Rational(mpq_class{mpz_class{std::string(num)}});
    }
    const auto den = text.substr(slash + 1);
    if (!is_canonical_integer(den, false) || den == "0" || den == "1" || num == "0") {
        reject(text);
    }
    const mpz_class n{std::string(num)};
    const mpz_class d{std::string(den)};
    mpq_class q{n, d};
    q.canonicalize();
    if (q.get_den() != d) {
        reject(text);
    }
    return Rational(std::move(q));
}

std::string Rational::str() const
{
    return value_.get_str();
}

Rational& Rational::operator+=(const Rational& o)
{
    value_ += o.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o)
{
    value_ -= o.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o)
{
    value_ *= o.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero()) {
        throw std::domain_error("rational division by zero");
    }
    value_ /= o.value_;
    return *this;
}

Rational operator-(const Rational& a)
{
    return Rational(mpq_class(-a.value_));
}

std::ostream& operator<<(std::ostream& os, const Rational& r)
{
    return os << r.str();
}

} // namespace vval
