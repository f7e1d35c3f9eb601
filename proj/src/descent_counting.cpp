#include "stacksort/descent_counting.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <thread>

namespace stacksort {

namespace {

// histogram[d][k]: permutations needing exactly d passes (d <= max_t) with k descents;
// row max_t + 1 collects everything deeper.
using Histogram = std::vector<std::vector<std::uint64_t>>;

Histogram depth_histogram(unsigned n, unsigned max_t, const EnumerationOptions& opts) {
    if (n == 0) throw std::invalid_argument("n must be positive");
    opts.limit.check(n);
    const Histogram empty(max_t + 2, std::vector<std::uint64_t>(n, 0));

    auto run_partition = [&](Letter first, Histogram& h) {
        PermutationEnumerator it(n, first, opts.limit);
        std::vector<Letter> a(n), b(n);
        for (auto cur = it.current(); cur; it.advance(), cur = it.current()) {
            std::copy(cur->begin(), cur->end(), a.begin());
            unsigned depth = 0;
            while (depth <= max_t && !is_increasing(a)) {
                stack_sort_into(a, b);
                a.swap(b);
                ++depth;
            }
            ++h[std::min(depth, max_t + 1)][descent_count(*cur)];
        }
    };

    unsigned jobs = opts.jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : opts.jobs;
    jobs = std::min(jobs, n);
    std::vector<Histogram> partial(jobs, empty);
    std::atomic<unsigned> next_first{1};
    auto worker = [&](unsigned id) {
        for (unsigned f = next_first++; f <= n; f = next_first++) run_partition(f, partial[id]);
    };
    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned id = 0; id < jobs; ++id) pool.emplace_back(worker, id);
    }

    Histogram total = empty;
    for (const auto& h : partial)
        for (std::size_t d = 0; d < h.size(); ++d)
            for (std::size_t k = 0; k < n; ++k) total[d][k] += h[d][k];
    return total;
}

DescentTable table_from_histogram(const Histogram& h, unsigned n, unsigned t) {
    DescentTable table{n, t, std::vector<BigInt>(n, 0), CountMethod::brute_force};
    const auto rows = std::min<std::size_t>(t + 1, h.size() - 1);
    for (std::size_t k = 0; k < n; ++k) {
        std::uint64_t c = 0;
        for (std::size_t d = 0; d < rows; ++d) c += h[d][k];
        table.counts[k] = static_cast<unsigned long>(c);
    }
    return table;
}

void check_k(unsigned n, long k) {
    if (n == 0 || k < 0 || k >= static_cast<long>(n))
        throw std::out_of_range("need 0 <= k < n (n = " + std::to_string(n) +
                                ", k = " + std::to_string(k) + ")");
}

BigRational fact(long m) { return BigRational(factorial(static_cast<unsigned long>(m))); }

}  // namespace

std::string to_string(CountMethod m) {
    return m == CountMethod::brute_force ? "brute_force" : "closed_form";
}

BigInt DescentTable::total() const {
    BigInt s = 0;
    for (const auto& c : counts) s += c;
    return s;
}

bool DescentTable::is_symmetric() const {
    return std::equal(counts.begin(), counts.end(), counts.rbegin());
}

UnsupportedClosedForm::UnsupportedClosedForm(unsigned n, unsigned t)
    : std::invalid_argument("no closed form for t = " + std::to_string(t) + " at n = " +
                            std::to_string(n) + " (available: t = 1, t = 2, t >= n-1)") {}

DescentTable table_brute_force(unsigned n, unsigned t, const EnumerationOptions& opts) {
    if (t == 0) throw std::invalid_argument("t must be positive");
    return table_from_histogram(depth_histogram(n, t, opts), n, t);
}

std::vector<DescentTable> tables_all_t(unsigned n, const EnumerationOptions& opts) {
    const unsigned max_t = std::max(n, 2u) - 1;
    const auto h = depth_histogram(n, max_t, opts);
    std::vector<DescentTable> out;
    for (unsigned t = 1; t <= max_t; ++t) out.push_back(table_from_histogram(h, n, t));
    return out;
}

BigInt w1_closed(unsigned n, long k) {
    check_k(n, k);
    const long nn = n;
    const BigRational v = BigRational(binomial(nn, k)) * BigRational(binomial(nn, k + 1)) /
                          BigRational(nn);
    return v.to_integer();
}

BigInt w2_closed(unsigned n, long k) {
    check_k(n, k);
    const long nn = n;
    const BigRational v = fact(nn + k) * fact(2 * nn - k - 1) /
                          (fact(k + 1) * fact(nn - k) * fact(2 * k + 1) * fact(2 * nn - 2 * k - 1));
    return v.to_integer();
}

BigInt w2_closed_binomial(unsigned n, long k) {
    check_k(n, k);
    const long nn = n;
    const BigRational num = BigRational(binomial(2 * nn - k - 1, nn - 1)) *
                            BigRational(binomial(nn + k, nn - 1)) *
                            BigRational(binomial(2 * nn, 2 * k + 1));
    const BigRational den = BigRational(nn * nn) * BigRational(binomial(2 * nn, nn));
    return (num / den).to_integer();
}

BigInt w2_row_total(unsigned n) {
    const BigRational v = BigRational(2) * fact(3L * n) / (fact(n + 1L) * fact(2L * n + 1));
    return v.to_integer();
}

DescentTable table_closed_form(unsigned n, unsigned t, const EnumerationOptions& opts) {
    if (n == 0) throw std::invalid_argument("n must be positive");
    if (t == 0) throw std::invalid_argument("t must be positive");
    if (t == 1 || t == 2) {
        DescentTable table{n, t, {}, CountMethod::closed_form};
        for (long k = 0; k < static_cast<long>(n); ++k)
            table.counts.push_back(t == 1 ? w1_closed(n, k) : w2_closed(n, k));
        return table;
    }
    if (t + 1 >= n) return table_brute_force(n, t, opts);
    throw UnsupportedClosedForm(n, t);
}

DescentTable descent_table(unsigned n, unsigned t, CountMethod method, const EnumerationOptions& opts) {
    return method == CountMethod::brute_force ? table_brute_force(n, t, opts)
                                              : table_closed_form(n, t, opts);
}

RationalPoly to_polynomial(const DescentTable& table) {
    return RationalPoly::from_integers(table.counts);
}

RationalPoly descent_polynomial(unsigned n, unsigned t, CountMethod method, const EnumerationOptions& opts) {
    return to_polynomial(descent_table(n, t, method, opts));
}

}  // namespace stacksort
