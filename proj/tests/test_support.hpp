#pragma once

// Test-only helpers: seeded generators and independent oracles.

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "stacksort/exact_numeric.hpp"
#include "stacksort/permutation.hpp"
#include "stacksort/polynomial.hpp"

namespace stacksort::testing {

inline std::mt19937_64& rng() {
    static std::mt19937_64 engine(0x5eed5eedULL);
    return engine;
}

inline long uniform(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng());
}

/// p/q with |p| <= max_num, 1 <= q <= max_den.
inline BigRational random_rational(long max_num = 50, long max_den = 12) {
    return BigRational(BigInt(uniform(-max_num, max_num)), BigInt(uniform(1, max_den)));
}

inline std::vector<BigRational> distinct_rationals(std::size_t count, long max_num = 50,
                                                   long max_den = 12) {
    std::set<BigRational> seen;
    while (seen.size() < count) seen.insert(random_rational(max_num, max_den));
    std::vector<BigRational> out(seen.begin(), seen.end());
    std::shuffle(out.begin(), out.end(), rng());
    return out;
}

inline RationalPoly from_roots(const std::vector<BigRational>& roots, const BigRational& lead = 1) {
    RationalPoly p = RationalPoly::constant(lead);
    for (const auto& r : roots) p *= RationalPoly::linear_factor(r);
    return p;
}

/// Classical single-stack pass: pop while the top is smaller than the next input,
/// push the input, and flush the stack at the end.
inline std::vector<Letter> stack_machine_sort(std::span<const Letter> in) {
    std::vector<Letter> stack;
    std::vector<Letter> out;
    for (Letter x : in) {
        while (!stack.empty() && stack.back() < x) {
            out.push_back(stack.back());
            stack.pop_back();
        }
        stack.push_back(x);
    }
    while (!stack.empty()) {
        out.push_back(stack.back());
        stack.pop_back();
    }
    return out;
}

/// W_t(n, k) counted with the stack machine and std::next_permutation.
inline std::vector<long> oracle_table(unsigned n, unsigned t) {
    std::vector<Letter> p(n);
    for (unsigned i = 0; i < n; ++i) p[i] = i + 1;
    std::vector<long> counts(n, 0);
    do {
        std::vector<Letter> q = p;
        for (unsigned pass = 0; pass < t; ++pass) q = stack_machine_sort(q);
        if (std::is_sorted(q.begin(), q.end())) {
            unsigned d = 0;
            for (unsigned i = 0; i + 1 < n; ++i) d += p[i] > p[i + 1];
            ++counts[d];
        }
    } while (std::next_permutation(p.begin(), p.end()));
    return counts;
}

inline RationalPoly ints(std::initializer_list<long> coeffs) {
    std::vector<BigRational> v;
    for (long c : coeffs) v.emplace_back(c);
    return RationalPoly(std::move(v));
}

}  // namespace stacksort::testing
