#include "stacksort/special_functions.hpp"

#include <stdexcept>

#include "stacksort/descent_counting.hpp"

namespace stacksort {

unsigned long HypergeometricSpec::terminating_degree() const {
    if (!a.is_integer() || a.sign() > 0)
        throw std::invalid_argument("2F1 numerator parameter a = " + a.to_string() +
                                    " is not a nonpositive integer");
    const unsigned long m = (-a).to_integer().get_ui();
    for (unsigned long k = 0; k < m; ++k)
        if ((c + BigRational(k)).is_zero())
            throw std::invalid_argument("2F1 denominator (c)_k vanishes for c = " + c.to_string());
    return m;
}

RationalPoly hypergeometric_poly(const HypergeometricSpec& spec) {
    const unsigned long m = spec.terminating_degree();
    std::vector<BigRational> coeffs;
    coeffs.reserve(m + 1);
    BigRational term = 1;
    for (unsigned long k = 0; k <= m; ++k) {
        coeffs.push_back(term);
        // term_{k+1} / term_k = (a+k)(b+k) / ((c+k)(k+1))
        term *= (spec.a + BigRational(k)) * (spec.b + BigRational(k)) /
                ((spec.c + BigRational(k)) * BigRational(k + 1));
        if (term.is_zero()) break;
    }
    return RationalPoly(std::move(coeffs));
}

void JacobiParams::validate() const {
    for (unsigned k = 0; k < n; ++k)
        if ((alpha + BigRational(1 + k)).is_zero())
            throw std::invalid_argument("Jacobi alpha = " + alpha.to_string() +
                                        " makes (1+alpha)_k vanish");
}

namespace {

BigRational jacobi_prefactor(const JacobiParams& p) {
    return pochhammer(p.alpha + BigRational(1), p.n) / BigRational(factorial(p.n));
}

}  // namespace

RationalPoly jacobi_poly(const JacobiParams& p) {
    p.validate();
    const long n = p.n;
    const HypergeometricSpec spec{BigRational(-n), BigRational(1) + p.alpha + p.beta + BigRational(n),
                                  BigRational(1) + p.alpha};
    const BigRational half(BigInt(1), BigInt(2));
    return hypergeometric_poly(spec).compose_linear(-half, half) * jacobi_prefactor(p);
}

RationalPoly jacobi_poly_second_form(const JacobiParams& p) {
    p.validate();
    const long n = p.n;
    const HypergeometricSpec spec{BigRational(-n), -p.beta - BigRational(n), BigRational(1) + p.alpha};
    const RationalPoly series = hypergeometric_poly(spec);
    const RationalPoly x_minus_1({-1, 1});
    const RationalPoly x_plus_1({1, 1});
    RationalPoly acc;
    for (std::size_t k = 0; k < series.coeffs().size(); ++k) {
        const auto kk = static_cast<unsigned>(k);
        acc += series.coeffs()[k] * (x_minus_1.pow(kk) * x_plus_1.pow(p.n - kk));
    }
    const BigRational two_pow_n = BigRational(BigInt(BigInt(1) << p.n));
    return acc * (jacobi_prefactor(p) / two_pow_n);
}

bool verify_eq2_consistency(const JacobiParams& p) {
    return jacobi_poly(p) == jacobi_poly_second_form(p);
}

RationalPoly narayana_from_jacobi(unsigned n) {
    const RationalPoly jac = jacobi_poly({1, 1, n});
    const RationalPoly one_plus_x({1, 1});
    const RationalPoly one_minus_x({1, -1});
    RationalPoly acc;
    for (std::size_t j = 0; j < jac.coeffs().size(); ++j) {
        const auto jj = static_cast<unsigned>(j);
        acc += jac.coeffs()[j] * (one_plus_x.pow(jj) * one_minus_x.pow(n - jj));
    }
    return acc * (BigRational(1) / BigRational(n + 1));
}

bool verify_narayana_jacobi(unsigned n) {
    return narayana_from_jacobi(n) == descent_polynomial(n + 1, 1, CountMethod::closed_form);
}

}  // namespace stacksort
