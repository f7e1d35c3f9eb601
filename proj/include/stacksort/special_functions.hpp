#pragma once

// Terminating 2F1 series and Jacobi polynomials with rational parameters.

#include "stacksort/exact_numeric.hpp"
#include "stacksort/polynomial.hpp"

namespace stacksort {

/// 2F1(a, b; c; z) with a a nonpositive integer, so the series stops at degree -a.
struct HypergeometricSpec {
    BigRational a;
    BigRational b;
    BigRational c;

    /// Number of terms minus one; throws std::invalid_argument unless a is in {0, -1, -2, ...}
    /// and (c)_k != 0 for every k <= -a.
    unsigned long terminating_degree() const;
};

/// sum_{k=0}^{-a} (a)_k (b)_k z^k / ((c)_k k!)
RationalPoly hypergeometric_poly(const HypergeometricSpec& spec);

struct JacobiParams {
    BigRational alpha;
    BigRational beta;
    unsigned n = 0;

    /// Throws std::invalid_argument if (1 + alpha)_k vanishes for some k <= n.
    void validate() const;
};

/// P_n^(alpha, beta)(x) = ((1+alpha)_n / n!) 2F1(-n, 1+alpha+beta+n; 1+alpha; (1-x)/2).
RationalPoly jacobi_poly(const JacobiParams& p);

/// The same polynomial from the second representation,
/// ((1+alpha)_n / n!) ((x+1)/2)^n 2F1(-n, -beta-n; 1+alpha; (x-1)/(x+1)),
/// expanded term by term as sum_k t_k (x-1)^k (x+1)^(n-k) / 2^n.
RationalPoly jacobi_poly_second_form(const JacobiParams& p);

/// Coefficientwise agreement of the two Jacobi representations.
bool verify_eq2_consistency(const JacobiParams& p);

/// (1/(n+1)) (1-x)^n P_n^(1,1)((1+x)/(1-x)), cleared to a polynomial.
RationalPoly narayana_from_jacobi(unsigned n);

/// narayana_from_jacobi(n) equals the closed-form W_{n+1,1}(x) coefficientwise.
bool verify_narayana_jacobi(unsigned n);

}  // namespace stacksort
