#include <doctest.h>

#include "stacksort/descent_counting.hpp"
#include "stacksort/special_functions.hpp"
#include "stacksort/transforms.hpp"
#include "test_support.hpp"

using namespace stacksort;
using stacksort::testing::distinct_rationals;
using stacksort::testing::from_roots;
using stacksort::testing::ints;
using stacksort::testing::random_rational;
using stacksort::testing::uniform;

namespace {

BigRational rat(const char* s) { return BigRational::parse(s); }

MultiplierSequence alternating(unsigned order) {
    std::vector<BigRational> g;
    for (unsigned k = 0; k <= order; ++k) g.emplace_back(k % 2 ? -1 : 1);
    return MultiplierSequence(g);
}

RationalPoly random_poly(unsigned max_degree) {
    std::vector<BigRational> c;
    const auto d = uniform(0, max_degree);
    for (long i = 0; i <= d; ++i) c.push_back(random_rational(20, 6));
    return RationalPoly(c);
}

}  // namespace

TEST_CASE("apply_sequence") {
    const auto f = ints({3, -1, 4, 1});
    CHECK(apply_sequence(MultiplierSequence::ones(5), f) == f);
    CHECK(apply_sequence(alternating(3), ints({1, 1}).pow(3)) == ints({1, -1}).pow(3));
    // C(-3,k) = 1, -3, 6 against C(2,k) = 1, 2, 1
    CHECK(apply_sequence(lemma2_sequence(2, 1), one_plus_x_pow(2)) == ints({1, -6, 6}));
    CHECK(apply_sequence(MultiplierSequence({1, 1, 0}), ints({1, 1, 1})) == ints({1, 1}));
    CHECK_THROWS_AS(apply_sequence(MultiplierSequence::ones(2), f), std::invalid_argument);
    CHECK_THROWS_AS(MultiplierSequence({}), std::invalid_argument);
}

TEST_CASE("apply_sequence is linear") {
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<BigRational> g;
        for (int k = 0; k <= 8; ++k) g.push_back(random_rational());
        const MultiplierSequence seq(g);
        const auto f = random_poly(8);
        const auto h = random_poly(8);
        const auto c = random_rational();
        REQUIRE(apply_sequence(seq, f + h) == apply_sequence(seq, f) + apply_sequence(seq, h));
        REQUIRE(apply_sequence(seq, f * c) == apply_sequence(seq, f) * c);
    }
}

TEST_CASE("is_n_sequence") {
    for (unsigned n = 1; n <= 6; ++n) CHECK(is_n_sequence(MultiplierSequence::ones(n), n).is_n_sequence);
    const auto gap = is_n_sequence(MultiplierSequence({1, 0, 1}), 2);
    CHECK_FALSE(gap.is_n_sequence);
    CHECK(gap.image == ints({1, 0, 1}));
    CHECK(is_n_sequence(alternating(3), 3).is_n_sequence);
    // opposite-sign zeros: Gamma[(x+1)^2] = 1 - x^2
    CHECK_FALSE(is_n_sequence(MultiplierSequence({1, 0, -1}), 2).is_n_sequence);
    CHECK_THROWS_AS(is_n_sequence(MultiplierSequence::ones(2), 3), std::invalid_argument);
}

TEST_CASE("lemma2_sequence") {
    for (unsigned n = 1; n <= 5; ++n) CHECK(lemma2_sequence(n, rat("5/3"))[0] == BigRational(1));
    CHECK(lemma2_sequence(2, 0).gamma() == std::vector<BigRational>{1, -2, 3});
    CHECK(lemma2_sequence(2, 1).gamma() == std::vector<BigRational>{1, -3, 6});
    CHECK_THROWS_AS(lemma2_sequence(2, -1), std::invalid_argument);
}

TEST_CASE("lemma2 sequences are n-sequences with zeros in [0, 1]") {
    const std::vector<BigRational> rs{0, rat("1/2"), 1, 2, rat("7/3")};
    for (unsigned n = 1; n <= 15; ++n)
        for (const auto& r : rs) {
            const auto v = is_n_sequence(lemma2_sequence(n, r), n);
            REQUIRE(v.is_n_sequence);
            REQUIRE(count_real_roots_closed(v.image, 0, 1) == static_cast<int>(n));
        }
}

TEST_CASE("lemma2 sequences preserve real-rootedness") {
    const std::vector<BigRational> rs{0, rat("1/2"), 1, rat("7/3")};
    for (int trial = 0; trial < 200; ++trial) {
        const auto n = static_cast<unsigned>(uniform(1, 12));
        const auto d = static_cast<std::size_t>(uniform(1, n));
        const auto f = from_roots(distinct_rationals(d));
        const auto& r = rs[static_cast<std::size_t>(trial) % rs.size()];
        REQUIRE(certify(apply_sequence(lemma2_sequence(n, r), f)).is_real_rooted);
    }
}

TEST_CASE("verify_lemma2_identity") {
    const auto one = verify_lemma2_identity(1, 1);
    CHECK(one.holds);
    CHECK(one.sides[0] == ints({1, -2}));
    CHECK(verify_lemma2_identity(3, rat("1/2")).holds);
    CHECK(verify_lemma2_identity(2, 2).holds);
    CHECK_THROWS_AS(verify_lemma2_identity(2, 0), std::invalid_argument);
}

TEST_CASE("verify_post_lemma_identity") {
    const auto one = verify_post_lemma_identity(1);
    CHECK(one.holds);
    CHECK(one.sides[0] == ints({1, 1}));
    CHECK(verify_post_lemma_identity(2).holds);
    CHECK(verify_post_lemma_identity(10).holds);
}

TEST_CASE("stride_extract") {
    const auto f = RationalPoly::monomial(1, 1) * one_plus_x_pow(4);
    CHECK(stride_extract(f, 1, 0) == f);
    CHECK(stride_extract(f, 2, 0) == ints({0, 4, 4}));
    CHECK(stride_extract(f, 2, 1) == ints({1, 6, 1}));
    CHECK_THROWS_AS(stride_extract(f, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(stride_extract(f, 2, 2), std::invalid_argument);
}

TEST_CASE("odd_binomial_poly") {
    CHECK(odd_binomial_poly(1) == ints({2}));
    CHECK(odd_binomial_poly(2) == ints({4, 4}));
    CHECK(odd_binomial_poly(3) == ints({6, 20, 6}));
    for (unsigned n = 1; n <= 20; ++n) {
        CHECK(certify(odd_binomial_poly(n)).is_real_rooted);
        CHECK(odd_binomial_poly(n) == stride_extract(one_plus_x_pow(2 * n), 2, 1));
    }
}

TEST_CASE("stride extraction keeps nonpositive real roots real") {
    for (int trial = 0; trial < 200; ++trial) {
        const auto d = static_cast<std::size_t>(uniform(1, 20));
        auto roots = distinct_rationals(d, 40, 8);
        for (auto& r : roots) r = -abs(r);
        const auto f = from_roots(roots);
        const auto stride = static_cast<unsigned>(uniform(1, 3));
        const auto offset = static_cast<unsigned>(uniform(0, stride - 1));
        const auto g = stride_extract(f, stride, offset);
        if (g.is_zero()) continue;
        REQUIRE(certify(g).is_real_rooted);
    }
}

TEST_CASE("reversal preserves real-rootedness when f(0) != 0") {
    for (int trial = 0; trial < 200; ++trial) {
        const auto f = random_poly(9);
        if (f.is_zero() || f.coeff(0).is_zero()) continue;
        REQUIRE(certify(f).is_real_rooted == certify(f.reverse(f.degree())).is_real_rooted);
    }
}

TEST_CASE("theorem2_pipeline") {
    const auto r3 = theorem2_pipeline(3);
    CHECK(r3.ok());
    CHECK(r3.final_poly == ints({1, 4, 1}));
    for (const auto& s : r3.stages) {
        CHECK(s.passed);
        REQUIRE(s.certificate);
        CHECK(s.certificate->is_real_rooted);
    }
    CHECK(theorem2_pipeline(4).final_poly == ints({1, 10, 10, 1}));
    const auto r1 = theorem2_pipeline(1);
    CHECK(r1.ok());
    CHECK(r1.final_poly == ints({1}));
    CHECK(r1.final_poly.degree() == 0);
    for (unsigned n = 1; n <= 8; ++n)
        CHECK(theorem2_pipeline(n).final_poly == descent_polynomial(n, 2, CountMethod::brute_force));
    CHECK_THROWS_AS(theorem2_pipeline(0), std::invalid_argument);
}
