// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <string>

#include "stacksort/descent_counting.hpp"
#include "stacksort/special_functions.hpp"
#include "stacksort/sturm.hpp"
#include "stacksort/transforms.hpp"
#include "test_support.hpp"

using namespace stacksort;
using stacksort::testing::distinct_rationals;
using stacksort::testing::from_roots;
using stacksort::testing::uniform;

namespace {

// Returns an empty string on success, otherwise the first failure.
using Criterion = std::function<std::string()>;

std::string at(std::string what, unsigned n, long k = -1) {
    what += " n=" + std::to_string(n);
    if (k >= 0) what += " k=" + std::to_string(k);
    return what;
}

std::string brute_vs_closed(unsigned t, BigInt (*closed)(unsigned, long)) {
    for (unsigned n = 1; n <= 9; ++n) {
        const auto table = table_brute_force(n, t);
        for (unsigned k = 0; k < n; ++k)
            if (table.counts[k] != closed(n, k)) return at("mismatch", n, k);
    }
    return {};
}

std::string criterion_1() { return brute_vs_closed(1, w1_closed); }

std::string criterion_2() {
    if (auto e = brute_vs_closed(2, w2_closed); !e.empty()) return e;
    const auto three = table_brute_force(3, 2).counts;
    const auto four = table_brute_force(4, 2);
    if (three != std::vector<BigInt>{1, 4, 1}) return "row n=3 is not [1,4,1]";
    if (four.counts != std::vector<BigInt>{1, 10, 10, 1} || four.total() != 22) return "row n=4 is not [1,10,10,1]";
    return {};
}

std::string criterion_3() {
    for (unsigned n = 1; n <= 50; ++n)
        for (long k = 0; k < static_cast<long>(n); ++k)
            if (w2_closed_binomial(n, k) != w2_closed(n, k)) return at("mismatch", n, k);
    return {};
}

std::string criterion_4() {
    for (unsigned n = 1; n <= 40; ++n) {
        const auto c1 = certify(descent_polynomial(n, 1, CountMethod::closed_form));
        if (!c1.is_real_rooted || c1.real_root_count != c1.degree) return at("W_{n,1} not real-rooted", n);
        if (!c1.is_squarefree) return at("W_{n,1} not squarefree", n);
        const auto c2 = certify(descent_polynomial(n, 2, CountMethod::closed_form));
        if (!c2.is_real_rooted || c2.real_root_count != c2.degree) return at("W_{n,2} not real-rooted", n);
    }
    return {};
}

std::string criterion_5() {
    for (unsigned n = 1; n <= 20; ++n)
        if (!strictly_interlaces(descent_polynomial(n, 1, CountMethod::closed_form),
                                 descent_polynomial(n + 1, 1, CountMethod::closed_form)))
            return at("no strict interlacing", n);
    return {};
}

std::string criterion_6() {
    const std::vector<BigRational> rs{BigRational(1, 2), 1, 2, BigRational(7, 3)};
    for (unsigned n = 1; n <= 15; ++n) {
        for (const auto& r : rs)
            if (!verify_lemma2_identity(n, r).holds) return at("identity fails r=" + r.to_string(), n);
        for (const auto& r : {BigRational(0), rs[0], rs[1], rs[2], rs[3]}) {
            const auto image = apply_sequence(lemma2_sequence(n, r), one_plus_x_pow(n));
            if (!certify(image).is_real_rooted || count_real_roots_closed(image, 0, 1) != static_cast<int>(n))
                return at("zeros outside [0,1] r=" + r.to_string(), n);
        }
    }
    return {};
}

std::string criterion_7() {
    for (unsigned n = 1; n <= 20; ++n)
        if (!verify_post_lemma_identity(n).holds) return at("identity fails", n);
    return {};
}

std::string criterion_8() {
    std::mt19937_64 gen(20261015);
    // alpha, beta = -1 + p/q with p >= 1, so both exceed -1
    auto above_minus_one = [&] {
        const long q = std::uniform_int_distribution<long>(1, 9)(gen);
        const long p = std::uniform_int_distribution<long>(1, 6 * q)(gen);
        return BigRational(BigInt(p), BigInt(q)) - BigRational(1);
    };
    for (int point = 0; point < 10; ++point) {
        const auto alpha = above_minus_one();
        const auto beta = above_minus_one();
        const std::string where = " alpha=" + alpha.to_string() + " beta=" + beta.to_string();
        for (unsigned n = 0; n <= 12; ++n) {
            const JacobiParams params{alpha, beta, n};
            if (!verify_eq2_consistency(params)) return at("Eq.1 != Eq.2" + where, n);
            if (n == 0) continue;
            const auto p = jacobi_poly(params);
            const auto cert = certify(p);
            if (!cert.is_real_rooted || !cert.is_squarefree) return at("roots not simple and real" + where, n);
            if (count_real_roots_in(p, BigRational(-1), BigRational(1)).count != static_cast<int>(n) ||
                p.evaluate(1).is_zero())
                return at("roots not inside (-1,1)" + where, n);
        }
    }
    return {};
}

std::string criterion_9() {
    for (unsigned n = 0; n <= 20; ++n)
        if (!verify_narayana_jacobi(n)) return at("identity fails", n);
    return {};
}

std::string criterion_10() {
    for (unsigned n = 1; n <= 25; ++n) {
        const auto report = theorem2_pipeline(n);
        if (!report.ok()) return at("stage " + report.failed_stage + " failed", n);
        for (const auto& s : report.stages)
            if (!s.certificate || !s.certificate->is_real_rooted) return at("stage " + s.name + " uncertified", n);
        if (report.final_poly != descent_polynomial(n, 2, CountMethod::closed_form)) return at("final mismatch", n);
    }
    return {};
}

std::string criterion_11() {
    const std::vector<BigRational> rs{0, 1, BigRational(7, 3)};
    for (int trial = 0; trial < 500; ++trial) {
        const auto f = from_roots(distinct_rationals(static_cast<std::size_t>(uniform(1, 12))));
        const auto& r = rs[static_cast<std::size_t>(trial) % rs.size()];
        if (!certify(apply_sequence(lemma2_sequence(12, r), f)).is_real_rooted)
            return "lemma2_sequence output not real-rooted: " + f.to_string();
    }
    for (int trial = 0; trial < 500; ++trial) {
        auto roots = distinct_rationals(static_cast<std::size_t>(uniform(1, 12)), 40, 8);
        for (auto& x : roots) x = -abs(x);
        const auto f = from_roots(roots);
        const auto g = stride_extract(f, 2, 1);
        if (g.is_zero() || !certify(g).is_real_rooted) return "stride output not real-rooted: " + f.to_string();
    }
    return {};
}

std::string criterion_12() {
    EnumerationOptions opts;
    opts.jobs = 0;
    for (unsigned n = 1; n <= 8; ++n)
        for (const auto& table : tables_all_t(n, opts))
            if (!certify(to_polynomial(table)).is_real_rooted)
                return at("counterexample t=" + std::to_string(table.t), n);
    return {};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, Criterion>> criteria{
        {"t=1 brute force equals Narayana numbers, n <= 9", criterion_1},
        {"t=2 brute force equals the W2 formula, n <= 9; rows [1,4,1], [1,10,10,1]", criterion_2},
        {"binomial and factorial W2 forms agree, 0 <= k < n <= 50", criterion_3},
        {"W_{n,1}, W_{n,2} real-rooted and W_{n,1} squarefree, n <= 40", criterion_4},
        {"W_{n,1} strictly interlaces W_{n+1,1}, n <= 20", criterion_5},
        {"Gamma[(x+1)^n] = 2F1 = Jacobi, zeros in [0,1], n <= 15", criterion_6},
        {"reciprocal binomial identity, n <= 20", criterion_7},
        {"Jacobi expansions agree, simple roots in (-1,1), n <= 12, 10 random (alpha, beta)", criterion_8},
        {"Narayana polynomial from Jacobi, n <= 20", criterion_9},
        {"W_{n,2} real-rootedness pipeline, n <= 25", criterion_10},
        {"multiplier sampling: lemma2_sequence(12, r) and stride extraction, 500 each", criterion_11},
        {"conjecture scan, all t, n <= 8", criterion_12},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        std::string error;
        try {
            error = criteria[i].second();
        } catch (const std::exception& e) {
            error = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s criterion %2zu: %s (%.2fs)%s%s\n", error.empty() ? "PASS" : "FAIL", i + 1, criteria[i].first,
                    secs, error.empty() ? "" : " -- ", error.c_str());
        std::fflush(stdout);
        failures += !error.empty();
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
