#include "stacksort/exact_numeric.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace stacksort {

namespace {

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

BigInt parse_integer(std::string_view s) {
    if (!is_integer_literal(s))
        throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
    if (s.front() == '+') s.remove_prefix(1);
    return BigInt(std::string(s), 10);
}

}  // namespace

BigRational::BigRational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

BigRational BigRational::parse(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return BigRational(parse_integer(text));
    const BigInt den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return BigRational(parse_integer(text.substr(0, slash)), den);
}

BigInt BigRational::to_integer() const {
    if (!is_integer()) throw std::domain_error("not an integer: " + to_string());
    return v_.get_num();
}

std::string BigRational::to_string() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

BigRational& BigRational::operator/=(const BigRational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    v_ /= o.v_;
    return *this;
}

BigRational BigRational::operator-() const {
    BigRational r;
    r.v_ = -v_;
    return r;
}

std::ostream& operator<<(std::ostream& os, const BigRational& q) { return os << q.to_string(); }

BigRational abs(const BigRational& q) { return q.sign() < 0 ? -q : q; }

BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigRational binomial(const BigRational& a, unsigned long k) {
    BigRational falling = 1;
    for (unsigned long i = 0; i < k; ++i) falling *= a - BigRational(i);
    return falling / BigRational(factorial(k));
}

BigInt binomial(long n, long k) {
    if (k < 0) return 0;
    BigInt r;
    mpz_bin_ui(r.get_mpz_t(), BigInt(n).get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

BigRational pochhammer(const BigRational& a, unsigned long n) {
    BigRational r = 1;
    for (unsigned long i = 0; i < n; ++i) r *= a + BigRational(i);
    return r;
}

BigInt catalan(unsigned long n) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), 2 * n, n);
    return r / (n + 1);
}

}  // namespace stacksort
