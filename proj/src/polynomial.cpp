#include "stacksort/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace stacksort {

RationalPoly::RationalPoly(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

RationalPoly RationalPoly::monomial(const BigRational& c, std::size_t degree) {
    std::vector<BigRational> v(degree + 1);
    v[degree] = c;
    return RationalPoly(std::move(v));
}

RationalPoly RationalPoly::linear_factor(const BigRational& root) { return RationalPoly({-root, 1}); }

RationalPoly RationalPoly::from_integers(const std::vector<BigInt>& coeffs) {
    std::vector<BigRational> v;
    v.reserve(coeffs.size());
    for (const auto& c : coeffs) v.emplace_back(c);
    return RationalPoly(std::move(v));
}

void RationalPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

BigRational RationalPoly::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : BigRational{};
}

const BigRational& RationalPoly::leading() const {
    if (is_zero()) throw std::domain_error("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

BigRational RationalPoly::evaluate(const BigRational& x) const {
    BigRational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

int RationalPoly::sign_at(const BigRational& x) const {
    if (is_zero()) return 0;
    // x = u/v with v > 0: v^d p(x) = sum a_i u^i v^(d-i) has the sign of p(x).
    const auto ints = primitive_integer_coeffs();
    const BigInt u = x.numerator();
    const BigInt v = x.denominator();
    BigInt acc = 0;
    BigInt vpow = 1;
    for (auto it = ints.rbegin(); it != ints.rend(); ++it) {
        acc = acc * u + *it * vpow;
        vpow *= v;
    }
    return sgn(acc);
}

RationalPoly RationalPoly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<BigRational> v(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * BigRational(i);
    return RationalPoly(std::move(v));
}

RationalPoly RationalPoly::compose(const RationalPoly& g) const {
    RationalPoly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= g;
        acc += constant(*it);
    }
    return acc;
}

RationalPoly RationalPoly::compose_linear(const BigRational& a, const BigRational& b) const {
    return compose(RationalPoly({b, a}));
}

RationalPoly RationalPoly::reverse(int declared_degree) const {
    if (declared_degree < degree())
        throw std::invalid_argument("reverse: declared degree " + std::to_string(declared_degree) +
                                    " below actual degree " + std::to_string(degree()));
    if (is_zero()) return {};
    std::vector<BigRational> v(static_cast<std::size_t>(declared_degree) + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        v[static_cast<std::size_t>(declared_degree) - i] = coeffs_[i];
    return RationalPoly(std::move(v));
}

RationalPoly RationalPoly::pow(unsigned e) const {
    RationalPoly result = constant(1);
    RationalPoly base = *this;
    while (e) {
        if (e & 1u) result *= base;
        e >>= 1u;
        if (e) base *= base;
    }
    return result;
}

std::size_t RationalPoly::lowest_degree() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero()) return i;
    return 0;
}

RationalPoly RationalPoly::monic() const {
    if (is_zero()) return {};
    return *this * (BigRational(1) / leading());
}

std::vector<BigInt> RationalPoly::primitive_integer_coeffs() const {
    BigInt den_lcm = 1;
    for (const auto& c : coeffs_) den_lcm = lcm(den_lcm, c.denominator());
    std::vector<BigInt> ints;
    ints.reserve(coeffs_.size());
    BigInt content = 0;
    for (const auto& c : coeffs_) {
        BigInt v = c.numerator() * (den_lcm / c.denominator());
        content = gcd(content, v);
        ints.push_back(std::move(v));
    }
    if (content > 1)
        for (auto& v : ints) v /= content;
    return ints;
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

RationalPoly& RationalPoly::operator*=(const RationalPoly& o) {
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<BigRational> v(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    coeffs_ = std::move(v);
    trim();
    return *this;
}

RationalPoly& RationalPoly::operator*=(const BigRational& c) {
    for (auto& a : coeffs_) a *= c;
    trim();
    return *this;
}

RationalPoly RationalPoly::operator-() const { return *this * BigRational(-1); }

std::string RationalPoly::to_string(char var) const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const auto& c = coeffs_[i];
        if (c.is_zero()) continue;
        std::string term;
        const bool unit = (c == BigRational(1) || c == BigRational(-1)) && i > 0;
        if (out.empty())
            term = c.sign() < 0 ? "-" : "";
        else
            term = c.sign() < 0 ? " - " : " + ";
        if (!unit) term += abs(c).to_string();
        if (i > 0) {
            if (!unit) term += '*';
            term += var;
            if (i > 1) term += '^' + std::to_string(i);
        }
        out += term;
    }
    return out;
}

std::pair<RationalPoly, RationalPoly> divide(const RationalPoly& num, const RationalPoly& den) {
    if (den.is_zero()) throw std::domain_error("polynomial division by zero");
    if (num.degree() < den.degree()) return {RationalPoly{}, num};
    std::vector<BigRational> rem = num.coeffs();
    const auto dd = static_cast<std::size_t>(den.degree());
    std::vector<BigRational> quot(rem.size() - dd);
    const BigRational inv_lead = BigRational(1) / den.leading();
    for (std::size_t i = quot.size(); i-- > 0;) {
        const BigRational q = rem[i + dd] * inv_lead;
        if (q.is_zero()) continue;
        quot[i] = q;
        for (std::size_t j = 0; j <= dd; ++j) rem[i + j] -= q * den.coeffs()[j];
    }
    rem.resize(dd);
    return {RationalPoly(std::move(quot)), RationalPoly(std::move(rem))};
}

RationalPoly gcd(const RationalPoly& a, const RationalPoly& b) {
    RationalPoly x = a.primitive();
    RationalPoly y = b.primitive();
    while (!y.is_zero()) {
        RationalPoly r = divide(x, y).second.primitive();
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

RationalPoly squarefree_part(const RationalPoly& p) {
    if (p.degree() <= 0) return p.monic();
    return divide(p, gcd(p, p.derivative())).first.monic();
}

std::vector<RationalPoly> squarefree_decomposition(const RationalPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree decomposition of zero");
    std::vector<RationalPoly> factors;
    if (p.degree() == 0) return factors;
    const RationalPoly dp = p.derivative();
    RationalPoly a = gcd(p, dp);
    RationalPoly b = divide(p, a).first;
    RationalPoly c = divide(dp, a).first;
    RationalPoly d = c - b.derivative();
    while (b.degree() > 0) {
        RationalPoly g = gcd(b, d);
        factors.push_back(g.monic());
        b = divide(b, g).first;
        c = divide(d, g).first;
        d = c - b.derivative();
    }
    // Trailing constant factors carry no roots.
    while (!factors.empty() && factors.back().degree() == 0) factors.pop_back();
    return factors;
}

RationalPoly one_plus_x_pow(unsigned n) {
    std::vector<BigRational> v;
    v.reserve(n + 1);
    for (unsigned k = 0; k <= n; ++k) v.emplace_back(binomial(static_cast<long>(n), k));
    return RationalPoly(std::move(v));
}

}  // namespace stacksort
