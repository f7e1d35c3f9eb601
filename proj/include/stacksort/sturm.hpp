#pragma once

// Exact real-root certification by Sturm sequences.

#include <optional>
#include <vector>

#include "stacksort/polynomial.hpp"

namespace stacksort {

/// A rational, or one of the two infinities.
class ExtendedRational {
public:
    ExtendedRational(const BigRational& v) : kind_(Kind::finite), value_(v) {}  // NOLINT
    ExtendedRational(long v) : ExtendedRational(BigRational(v)) {}              // NOLINT
    static ExtendedRational neg_infinity() { return ExtendedRational(Kind::neg_inf); }
    static ExtendedRational pos_infinity() { return ExtendedRational(Kind::pos_inf); }

    bool is_finite() const { return kind_ == Kind::finite; }
    bool is_neg_infinity() const { return kind_ == Kind::neg_inf; }
    bool is_pos_infinity() const { return kind_ == Kind::pos_inf; }
    /// Throws std::domain_error for an infinity.
    const BigRational& value() const;

    friend bool operator<(const ExtendedRational& a, const ExtendedRational& b);

private:
    enum class Kind { neg_inf, finite, pos_inf };
    explicit ExtendedRational(Kind k) : kind_(k) {}
    Kind kind_;
    BigRational value_;
};

/// Open interval (lo, hi); as an isolating interval its endpoints are not roots.
struct RationalInterval {
    BigRational lo;
    BigRational hi;
    bool overlaps(const RationalInterval& o) const { return lo < o.hi && o.lo < hi; }
    friend bool operator==(const RationalInterval&, const RationalInterval&) = default;
};

struct RootCertificate {
    int degree = 0;
    /// Real roots counted with multiplicity.
    int real_root_count = 0;
    int distinct_real_roots = 0;
    bool is_real_rooted = false;
    bool is_squarefree = false;
    /// Sign location, with multiplicity.
    int negative_roots = 0;
    int zero_root_multiplicity = 0;
    int positive_roots = 0;
    /// One interval per real root, in increasing order; present iff the polynomial is squarefree.
    std::optional<std::vector<RationalInterval>> isolating_intervals;

    friend bool operator==(const RootCertificate&, const RootCertificate&) = default;
};

/// Primitive signed remainder sequence p, p', -prem(...), ... ; each member has
/// integer coefficients with gcd 1 and the sign of the true Sturm member.
/// Throws std::invalid_argument for the zero polynomial.
std::vector<RationalPoly> sturm_chain(const RationalPoly& p);

/// Sturm chain with cached integer coefficients, reusable across many queries.
class SturmSequence {
public:
    explicit SturmSequence(const RationalPoly& p);

    const std::vector<RationalPoly>& chain() const { return chain_; }

    /// Sign variations of the chain at a point (zeros skipped).
    int variations_at(const ExtendedRational& x) const;

    /// Distinct real roots of the squarefree polynomial in (lo, hi].
    int count_in(const ExtendedRational& lo, const ExtendedRational& hi) const;

    int sign_at(const BigRational& x) const;

private:
    std::vector<RationalPoly> chain_;
    std::vector<std::vector<BigInt>> ints_;
};

struct RootCount {
    int count = 0;
    bool lo_is_root = false;
    bool hi_is_root = false;
};

/// Number of distinct real roots of p in (lo, hi]. The squarefree part of p is used,
/// so multiple roots count once. Endpoint roots are flagged in the result.
/// Throws std::invalid_argument for the zero polynomial or lo >= hi.
RootCount count_real_roots_in(const RationalPoly& p, const ExtendedRational& lo,
                              const ExtendedRational& hi);

/// Distinct real roots in the closed interval [lo, hi] (finite endpoints).
int count_real_roots_closed(const RationalPoly& p, const BigRational& lo, const BigRational& hi);

/// Positive rational B with every real root of p strictly inside (-B, B).
BigRational root_bound(const RationalPoly& p);

/// Disjoint isolating intervals for all real roots of a squarefree p, increasing.
/// Throws std::invalid_argument if p is not squarefree or is zero.
std::vector<RationalInterval> isolate_roots(const RationalPoly& p);

/// Halves an isolating interval of a simple root, keeping the root inside.
RationalInterval refine(const SturmSequence& s, const RationalInterval& iv);

RootCertificate certify(const RationalPoly& p);

/// True iff every root has the same sign; zero roots are sign-neutral.
/// Throws std::invalid_argument for a certificate that is not real-rooted.
bool roots_same_sign(const RootCertificate& cert);

/// Strict interlacing: deg q = deg p + 1, and the roots alternate
/// q_1 < p_1 < q_2 < ... < p_{m} < q_{m+1}. Throws std::invalid_argument when the
/// degrees do not match or either polynomial is not squarefree and real-rooted.
bool strictly_interlaces(const RationalPoly& p, const RationalPoly& q);

}  // namespace stacksort
