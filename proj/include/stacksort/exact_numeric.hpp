#pragma once

// Exact integer and rational scalars.
//
// BigInt is GMP's mpz_class. BigRational wraps mpq_class so that every value
// is kept in canonical form (positive denominator, coprime parts) and so the
// rest of the library never touches GMP expression templates directly.

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <type_traits>

#include <gmpxx.h>

namespace stacksort {

using BigInt = mpz_class;

class BigRational {
public:
    BigRational() = default;
    template <std::integral I>
    BigRational(I value)  // NOLINT(google-explicit-constructor)
        : v_(static_cast<std::conditional_t<std::is_signed_v<I>, long, unsigned long>>(value)) {}
    BigRational(const BigInt& value) : v_(value) {}  // NOLINT(google-explicit-constructor)

    /// Builds num/den reduced to lowest terms; throws std::domain_error if den == 0.
    BigRational(const BigInt& num, const BigInt& den);

    /// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed text.
    static BigRational parse(std::string_view text);

    BigInt numerator() const { return v_.get_num(); }
    BigInt denominator() const { return v_.get_den(); }

    bool is_integer() const { return v_.get_den() == 1; }
    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }

    /// Integer value; throws std::domain_error unless is_integer().
    BigInt to_integer() const;

    /// "p" for integers, "p/q" otherwise.
    std::string to_string() const;

    /// Lossy, for display only.
    double to_double() const { return v_.get_d(); }

    BigRational& operator+=(const BigRational& o) { v_ += o.v_; return *this; }
    BigRational& operator-=(const BigRational& o) { v_ -= o.v_; return *this; }
    BigRational& operator*=(const BigRational& o) { v_ *= o.v_; return *this; }
    BigRational& operator/=(const BigRational& o);

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
    BigRational operator-() const;

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const BigRational& q);

BigRational abs(const BigRational& q);

/// n! exactly.
BigInt factorial(unsigned long n);

/// Generalized binomial a(a-1)...(a-k+1)/k! for any rational a.
BigRational binomial(const BigRational& a, unsigned long k);

/// Ordinary binomial for integer top (negative n allowed); 0 when k < 0.
BigInt binomial(long n, long k);

/// Rising factorial a(a+1)...(a+n-1); (a)_0 = 1.
BigRational pochhammer(const BigRational& a, unsigned long n);

BigInt catalan(unsigned long n);

}  // namespace stacksort
