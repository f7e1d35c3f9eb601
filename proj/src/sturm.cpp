#include "stacksort/sturm.hpp"

#include <algorithm>
#include <stdexcept>

namespace stacksort {

namespace {

using IntPoly = std::vector<BigInt>;

int degree_of(const IntPoly& p) { return static_cast<int>(p.size()) - 1; }

void trim(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

void make_primitive(IntPoly& p) {
    BigInt content = 0;
    for (const auto& c : p) content = gcd(content, c);
    if (content > 1)
        for (auto& c : p) c /= content;
}

// Returns lc(b)^e * rem(a, b) together with the sign of lc(b)^e.
std::pair<IntPoly, int> signed_pseudo_remainder(IntPoly a, const IntPoly& b) {
    const int db = degree_of(b);
    const BigInt& lb = b.back();
    int sign = 1;
    while (!a.empty() && degree_of(a) >= db) {
        const BigInt la = a.back();
        const auto shift = static_cast<std::size_t>(degree_of(a) - db);
        for (auto& c : a) c *= lb;
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= la * b[j];
        if (sgn(lb) < 0) sign = -sign;
        trim(a);
    }
    return {std::move(a), sign};
}

int sign_at_integer(const IntPoly& p, const BigRational& x) {
    const BigInt u = x.numerator();
    const BigInt v = x.denominator();
    BigInt acc = 0;
    BigInt vpow = 1;
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        acc = acc * u + *it * vpow;
        vpow *= v;
    }
    return sgn(acc);
}

int sign_at_infinity(const IntPoly& p, bool negative) {
    if (p.empty()) return 0;
    const int s = sgn(p.back());
    return (negative && degree_of(p) % 2 == 1) ? -s : s;
}

std::vector<IntPoly> build_chain(const RationalPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("Sturm chain of the zero polynomial");
    std::vector<IntPoly> chain;
    chain.push_back(p.primitive_integer_coeffs());
    IntPoly dp = p.derivative().primitive_integer_coeffs();
    if (dp.empty()) return chain;
    chain.push_back(std::move(dp));
    while (true) {
        const IntPoly& a = chain[chain.size() - 2];
        const IntPoly& b = chain.back();
        if (degree_of(b) == 0) break;
        auto [r, s] = signed_pseudo_remainder(a, b);
        if (r.empty()) break;
        // Next member is -rem(a, b) = -s * r up to a positive factor.
        if (s > 0)
            for (auto& c : r) c = -c;
        make_primitive(r);
        chain.push_back(std::move(r));
    }
    return chain;
}

BigRational midpoint(const BigRational& a, const BigRational& b) { return (a + b) / BigRational(2); }

// A split point strictly inside (lo, hi) that is not a root.
BigRational non_root_split(const SturmSequence& s, const BigRational& lo, const BigRational& hi) {
    const BigRational width = hi - lo;
    for (long m = 2;; ++m) {
        for (long k = 1; k < m; ++k) {
            BigRational x = lo + width * BigRational(BigInt(k), BigInt(m));
            if (s.sign_at(x) != 0) return x;
        }
    }
}

}  // namespace

const BigRational& ExtendedRational::value() const {
    if (!is_finite()) throw std::domain_error("value() of an infinite endpoint");
    return value_;
}

bool operator<(const ExtendedRational& a, const ExtendedRational& b) {
    if (a.kind_ != b.kind_) return a.kind_ < b.kind_;
    return a.is_finite() && a.value_ < b.value_;
}

std::vector<RationalPoly> sturm_chain(const RationalPoly& p) {
    std::vector<RationalPoly> out;
    for (const auto& ip : build_chain(p)) out.push_back(RationalPoly::from_integers(ip));
    return out;
}

SturmSequence::SturmSequence(const RationalPoly& p) : ints_(build_chain(p)) {
    for (const auto& ip : ints_) chain_.push_back(RationalPoly::from_integers(ip));
}

int SturmSequence::variations_at(const ExtendedRational& x) const {
    int variations = 0;
    int last = 0;
    for (const auto& ip : ints_) {
        const int s = x.is_finite() ? sign_at_integer(ip, x.value())
                                    : sign_at_infinity(ip, x.is_neg_infinity());
        if (s == 0) continue;
        if (last != 0 && s != last) ++variations;
        last = s;
    }
    return variations;
}

int SturmSequence::count_in(const ExtendedRational& lo, const ExtendedRational& hi) const {
    return variations_at(lo) - variations_at(hi);
}

int SturmSequence::sign_at(const BigRational& x) const { return sign_at_integer(ints_.front(), x); }

RootCount count_real_roots_in(const RationalPoly& p, const ExtendedRational& lo,
                              const ExtendedRational& hi) {
    if (p.is_zero()) throw std::invalid_argument("root count of the zero polynomial");
    if (!(lo < hi)) throw std::invalid_argument("root count needs lo < hi");
    const SturmSequence s(squarefree_part(p));
    RootCount rc;
    rc.count = s.count_in(lo, hi);
    rc.lo_is_root = lo.is_finite() && s.sign_at(lo.value()) == 0;
    rc.hi_is_root = hi.is_finite() && s.sign_at(hi.value()) == 0;
    return rc;
}

int count_real_roots_closed(const RationalPoly& p, const BigRational& lo, const BigRational& hi) {
    if (lo == hi) return p.sign_at(lo) == 0 ? 1 : 0;
    const auto rc = count_real_roots_in(p, lo, hi);
    return rc.count + (rc.lo_is_root ? 1 : 0);
}

BigRational root_bound(const RationalPoly& p) {
    if (p.degree() <= 0) return 1;
    BigRational m = 0;
    const BigRational& lead = p.leading();
    for (int i = 0; i < p.degree(); ++i) m = std::max(m, abs(p.coeffs()[static_cast<std::size_t>(i)] / lead));
    return m + BigRational(1);
}

RationalInterval refine(const SturmSequence& s, const RationalInterval& iv) {
    const BigRational mid = midpoint(iv.lo, iv.hi);
    const int sm = s.sign_at(mid);
    if (sm == 0) {
        const BigRational quarter = (iv.hi - iv.lo) / BigRational(4);
        return {mid - quarter, mid + quarter};
    }
    if (s.sign_at(iv.lo) != sm) return {iv.lo, mid};
    return {mid, iv.hi};
}

std::vector<RationalInterval> isolate_roots(const RationalPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("isolate_roots of the zero polynomial");
    if (gcd(p, p.derivative()).degree() > 0)
        throw std::invalid_argument("isolate_roots needs a squarefree polynomial");
    std::vector<RationalInterval> out;
    if (p.degree() == 0) return out;
    const SturmSequence s(p);
    const BigRational bound = root_bound(p);

    struct Pending {
        RationalInterval iv;
        int count;
    };
    std::vector<Pending> work{{{-bound, bound}, s.count_in(-bound, bound)}};
    while (!work.empty()) {
        Pending cur = std::move(work.back());
        work.pop_back();
        if (cur.count == 0) continue;
        if (cur.count == 1) {
            out.push_back(cur.iv);
            continue;
        }
        const BigRational split = non_root_split(s, cur.iv.lo, cur.iv.hi);
        const int left = s.count_in(cur.iv.lo, split);
        work.push_back({{split, cur.iv.hi}, cur.count - left});
        work.push_back({{cur.iv.lo, split}, left});
    }
    // Intervals of nonzero roots are kept off 0 so their endpoints show the root's sign.
    if (s.sign_at(0) != 0)
        for (auto& iv : out)
            while (iv.lo <= BigRational(0) && BigRational(0) <= iv.hi) iv = refine(s, iv);
    std::sort(out.begin(), out.end(),
              [](const RationalInterval& a, const RationalInterval& b) { return a.lo < b.lo; });
    return out;
}

RootCertificate certify(const RationalPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("certify of the zero polynomial");
    RootCertificate cert;
    cert.degree = p.degree();
    const auto factors = squarefree_decomposition(p);
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const auto& f = factors[i];
        if (f.degree() <= 0) continue;
        const int mult = static_cast<int>(i) + 1;
        const SturmSequence s(f);
        const int distinct = s.count_in(ExtendedRational::neg_infinity(), ExtendedRational::pos_infinity());
        const int zero = f.sign_at(0) == 0 ? 1 : 0;
        const int nonpositive = s.count_in(ExtendedRational::neg_infinity(), 0);
        const int positive = s.count_in(0, ExtendedRational::pos_infinity());
        cert.distinct_real_roots += distinct;
        cert.real_root_count += mult * distinct;
        cert.zero_root_multiplicity += mult * zero;
        cert.negative_roots += mult * (nonpositive - zero);
        cert.positive_roots += mult * positive;
    }
    cert.is_squarefree = factors.size() <= 1;
    cert.is_real_rooted = cert.real_root_count == cert.degree;
    if (cert.is_squarefree) cert.isolating_intervals = isolate_roots(p);
    return cert;
}

bool roots_same_sign(const RootCertificate& cert) {
    if (!cert.is_real_rooted)
        throw std::invalid_argument("roots_same_sign needs a real-rooted certificate");
    return cert.negative_roots == 0 || cert.positive_roots == 0;
}

bool strictly_interlaces(const RationalPoly& p, const RationalPoly& q) {
    if (p.is_zero() || q.is_zero() || q.degree() != p.degree() + 1)
        throw std::invalid_argument("strictly_interlaces needs deg q = deg p + 1");
    const auto cp = certify(p);
    const auto cq = certify(q);
    if (!cp.is_squarefree || !cq.is_squarefree || !cp.is_real_rooted || !cq.is_real_rooted)
        throw std::invalid_argument("strictly_interlaces needs squarefree real-rooted inputs");
    if (gcd(p, q).degree() > 0) return false;

    auto ip = *cp.isolating_intervals;
    auto iq = *cq.isolating_intervals;
    const SturmSequence sp(p);
    const SturmSequence sq(q);
    // No common roots, so refinement eventually separates every pair.
    bool overlapping = true;
    while (overlapping) {
        overlapping = false;
        for (auto& a : ip)
            for (auto& b : iq)
                if (a.overlaps(b)) {
                    a = refine(sp, a);
                    b = refine(sq, b);
                    overlapping = true;
                }
    }
    // Intervals within a family are disjoint and sorted; merge and check q p q p ... q.
    std::size_t i = 0;
    std::size_t j = 0;
    bool expect_q = true;
    while (i < ip.size() || j < iq.size()) {
        const bool take_q = i == ip.size() || (j < iq.size() && iq[j].lo < ip[i].lo);
        if (take_q != expect_q) return false;
        take_q ? ++j : ++i;
        expect_q = !expect_q;
    }
    return !expect_q;
}

}  // namespace stacksort
