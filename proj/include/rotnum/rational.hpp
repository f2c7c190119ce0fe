#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace rotnum {

/// Arbitrary-precision fraction, always held in lowest terms with a positive
/// denominator (zero is 0/1).
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n);  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t num, std::int64_t den);
    explicit Rational(mpq_class value);
    Rational(const mpz_class& num, const mpz_class& den);

    /// Accepts "p/q", "-p/q" or a plain integer.
    static Rational parse(std::string_view text);

    const mpq_class& value() const noexcept { return q_; }
    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    /// Largest integer <= *this.
    mpz_class floor() const;
    /// Smallest integer >= *this.
    mpz_class ceil() const;
    /// *this - floor(*this), in [0, 1).
    Rational frac() const;

    /// Narrowing accessors; throw InvalidArgument when the value does not fit.
    std::int64_t to_int64() const;
    std::int64_t numerator_int64() const;
    std::int64_t denominator_int64() const;

    /// "p/q", or "p" for integers.
    std::string str() const;

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { return Rational(mpq_class(-q_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class q_{0};
};

Rational abs(const Rational& r);

std::int64_t to_int64(const mpz_class& z);

}  // namespace rotnum

template <>
struct std::hash<rotnum::Rational> {
    std::size_t operator()(const rotnum::Rational& r) const noexcept;
};
