#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "stacksort/exact_numeric.hpp"

namespace stacksort {

/// Univariate polynomial with exact rational coefficients, ascending degree.
/// Always trimmed: the leading coefficient is nonzero unless the polynomial is zero.
class RationalPoly {
public:
    RationalPoly() = default;
    explicit RationalPoly(std::vector<BigRational> coeffs);
    RationalPoly(std::initializer_list<BigRational> coeffs)
        : RationalPoly(std::vector<BigRational>(coeffs)) {}

    static RationalPoly constant(const BigRational& c) { return RationalPoly({c}); }
    static RationalPoly monomial(const BigRational& c, std::size_t degree);
    /// x - root
    static RationalPoly linear_factor(const BigRational& root);
    static RationalPoly from_integers(const std::vector<BigInt>& coeffs);

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<BigRational>& coeffs() const { return coeffs_; }
    /// Coefficient of x^i; zero beyond the degree.
    BigRational coeff(std::size_t i) const;
    const BigRational& leading() const;

    BigRational evaluate(const BigRational& x) const;
    /// Sign of p(x) without forming the rational value when possible.
    int sign_at(const BigRational& x) const;

    RationalPoly derivative() const;
    /// f(a*x + b)
    RationalPoly compose_linear(const BigRational& a, const BigRational& b) const;
    /// f(g(x))
    RationalPoly compose(const RationalPoly& g) const;
    /// x^d f(1/x); throws std::invalid_argument if d < degree().
    RationalPoly reverse(int declared_degree) const;
    RationalPoly pow(unsigned e) const;

    /// Smallest power of x with a nonzero coefficient (0 for the zero polynomial).
    std::size_t lowest_degree() const;

    /// Monic associate (zero stays zero).
    RationalPoly monic() const;
    /// Scales to integer coefficients with gcd 1, keeping the sign of every coefficient.
    std::vector<BigInt> primitive_integer_coeffs() const;
    RationalPoly primitive() const { return from_integers(primitive_integer_coeffs()); }

    RationalPoly& operator+=(const RationalPoly& o);
    RationalPoly& operator-=(const RationalPoly& o);
    RationalPoly& operator*=(const RationalPoly& o);
    RationalPoly& operator*=(const BigRational& c);

    friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
    friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }
    friend RationalPoly operator*(RationalPoly a, const RationalPoly& b) { return a *= b; }
    friend RationalPoly operator*(RationalPoly a, const BigRational& c) { return a *= c; }
    friend RationalPoly operator*(const BigRational& c, RationalPoly a) { return a *= c; }
    RationalPoly operator-() const;

    friend bool operator==(const RationalPoly&, const RationalPoly&) = default;

    std::string to_string(char var = 'x') const;

private:
    void trim();
    std::vector<BigRational> coeffs_;
};

/// Quotient and remainder; throws std::domain_error on a zero divisor.
std::pair<RationalPoly, RationalPoly> divide(const RationalPoly& num, const RationalPoly& den);

/// Monic gcd (zero if both are zero).
RationalPoly gcd(const RationalPoly& a, const RationalPoly& b);

/// p / gcd(p, p'), monic.
RationalPoly squarefree_part(const RationalPoly& p);

/// Yun's decomposition: p = c * prod_i factors[i]^(i+1), each factor squarefree and monic.
std::vector<RationalPoly> squarefree_decomposition(const RationalPoly& p);

/// (x + 1)^n
RationalPoly one_plus_x_pow(unsigned n);

}  // namespace stacksort
