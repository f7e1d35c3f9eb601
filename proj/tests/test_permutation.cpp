#include <doctest.h>

#include <cstdlib>
#include <set>

#include "stacksort/permutation.hpp"
#include "test_support.hpp"

using namespace stacksort;
using stacksort::testing::stack_machine_sort;

TEST_CASE("Word rejects repeated letters") {
    CHECK_THROWS_AS(Word({1, 2, 1}), std::invalid_argument);
    CHECK_NOTHROW(Word({0, 7, 3}));
    CHECK(Word::parse("3, 1 4 2") == Word({3, 1, 4, 2}));
    CHECK(Word::parse("").empty());
    CHECK_THROWS_AS(Word::parse("1 a"), std::invalid_argument);
    CHECK_THROWS_AS(Permutation(std::vector<Letter>{1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation(std::vector<Letter>{0, 1}), std::invalid_argument);
}

TEST_CASE("stack_sort follows the recursion") {
    CHECK(stack_sort(Word{}).empty());
    CHECK(stack_sort(Word({2, 3, 1})) == Word({2, 1, 3}));
    CHECK(stack_sort(Word({3, 1, 4, 2})) == Word({1, 3, 2, 4}));
    CHECK(stack_sort(Word({10, 0, 5})) == Word({0, 5, 10}));
}

TEST_CASE("stack_sort agrees with a stack machine on S_n, n <= 7") {
    for (unsigned n = 1; n <= 7; ++n) {
        PermutationEnumerator it(n);
        while (auto p = it.next()) {
            const auto got = stack_sort(*p);
            const auto expect = stack_machine_sort(p->letters());
            REQUIRE(std::equal(got.letters().begin(), got.letters().end(), expect.begin(), expect.end()));
            // rearrangement of the input with the maximum last
            REQUIRE(got.letters().back() == n);
            if (is_increasing(got.letters())) REQUIRE(stack_sort(got) == got);
        }
    }
}

TEST_CASE("descent_count") {
    CHECK(descent_count(Permutation::identity(6)) == 0);
    CHECK(descent_count(Permutation(std::vector<Letter>{5, 4, 3, 2, 1})) == 4);
    CHECK(descent_count(Permutation(std::vector<Letter>{1, 3, 2, 4})) == 1);
}

TEST_CASE("t-stack sortability") {
    const Permutation p(std::vector<Letter>{2, 3, 1});
    CHECK_FALSE(is_t_stack_sortable(p, 1));
    CHECK(is_t_stack_sortable(p, 2));
    for (unsigned n = 1; n <= 8; ++n) {
        PermutationEnumerator it(n);
        while (auto q = it.next()) {
            const unsigned t = std::max(1u, n - 1);
            REQUIRE(is_t_stack_sortable(*q, t));
            // monotone in t
            const unsigned depth = sorting_depth(q->letters());
            for (unsigned s = 1; s <= t; ++s) REQUIRE(is_t_stack_sortable(*q, s) == (s >= depth));
        }
    }
}

TEST_CASE("enumeration") {
    PermutationEnumerator one(1);
    auto p = one.next();
    REQUIRE(p);
    CHECK(p->is_identity());
    CHECK_FALSE(one.next());

    std::set<std::vector<Letter>> seen;
    PermutationEnumerator three(3);
    while (auto q = three.next()) seen.insert({q->letters().begin(), q->letters().end()});
    CHECK(seen.size() == 6);

    int total = 0;
    int sortable = 0;
    PermutationEnumerator four(4);
    while (auto q = four.next()) {
        ++total;
        sortable += is_t_stack_sortable(*q, 1);
    }
    CHECK(total == 24);
    CHECK(sortable == 14);

    // partitions by first letter cover S_5 exactly once
    std::set<std::vector<Letter>> parts;
    for (Letter f = 1; f <= 5; ++f) {
        PermutationEnumerator it(5, f);
        while (auto q = it.next()) {
            REQUIRE(q->letters().front() == f);
            REQUIRE(parts.insert({q->letters().begin(), q->letters().end()}).second);
        }
    }
    CHECK(parts.size() == 120);
}

TEST_CASE("enumeration limit") {
    CHECK_THROWS_AS(PermutationEnumerator(13), EnumerationLimitError);
    CHECK_THROWS_AS(PermutationEnumerator(5, EnumerationLimit{4}), EnumerationLimitError);
    CHECK_NOTHROW(PermutationEnumerator(12));
    CHECK_THROWS_AS(PermutationEnumerator(0), std::invalid_argument);

    ::setenv("STACKSORT_MAX_N", "7", 1);
    CHECK(EnumerationLimit::from_environment().max_n == 7);
    ::setenv("STACKSORT_MAX_N", "junk", 1);
    CHECK(EnumerationLimit::from_environment().max_n == EnumerationLimit::default_max_n);
    ::unsetenv("STACKSORT_MAX_N");
}
