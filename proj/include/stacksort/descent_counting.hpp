#pragma once

// Tables W_t(n, k): t-stack sortable permutations of length n with k descents.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "stacksort/exact_numeric.hpp"
#include "stacksort/permutation.hpp"
#include "stacksort/polynomial.hpp"

namespace stacksort {

enum class CountMethod { brute_force, closed_form };

std::string to_string(CountMethod m);

struct DescentTable {
    unsigned n = 0;
    unsigned t = 0;
    /// counts[k], k = 0..n-1
    std::vector<BigInt> counts;
    /// How the counts were actually obtained. A closed-form request for t >= n-1
    /// outside {1, 2} is served by enumeration and tagged brute_force.
    CountMethod method = CountMethod::brute_force;

    BigInt total() const;
    bool is_symmetric() const;

    friend bool operator==(const DescentTable&, const DescentTable&) = default;
};

struct EnumerationOptions {
    EnumerationLimit limit{};
    /// Worker threads; 0 means std::thread::hardware_concurrency().
    unsigned jobs = 1;
};

class UnsupportedClosedForm : public std::invalid_argument {
public:
    UnsupportedClosedForm(unsigned n, unsigned t);
};

/// counts[k] = #{pi in S_n : s^t(pi) = id, des(pi) = k}, by exhaustive enumeration.
DescentTable table_brute_force(unsigned n, unsigned t, const EnumerationOptions& opts = {});

/// All tables t = 1..max(n-1, 1) from a single enumeration: result[t-1] is the table for t.
std::vector<DescentTable> tables_all_t(unsigned n, const EnumerationOptions& opts = {});

/// Narayana number (1/n) C(n,k) C(n,k+1). Throws std::out_of_range unless 0 <= k < n.
BigInt w1_closed(unsigned n, long k);

/// (n+k)! (2n-k-1)! / ((k+1)! (n-k)! (2k+1)! (2n-2k-1)!).
BigInt w2_closed(unsigned n, long k);

/// C(2n-k-1, n-1) C(n+k, n-1) C(2n, 2k+1) / (n^2 C(2n, n)).
BigInt w2_closed_binomial(unsigned n, long k);

/// 2 (3n)! / ((n+1)! (2n+1)!), the known total number of 2-stack sortable permutations
/// (an external result used only as a cross-check of the row sums).
BigInt w2_row_total(unsigned n);

/// Closed-form table: t = 1 Narayana, t = 2 the factorial formula, t >= n-1 enumeration.
/// Throws UnsupportedClosedForm otherwise.
DescentTable table_closed_form(unsigned n, unsigned t, const EnumerationOptions& opts = {});

DescentTable descent_table(unsigned n, unsigned t, CountMethod method,
                           const EnumerationOptions& opts = {});

RationalPoly to_polynomial(const DescentTable& table);

/// W_{n,t}(x) = sum_k W_t(n,k) x^k.
RationalPoly descent_polynomial(unsigned n, unsigned t, CountMethod method,
                                const EnumerationOptions& opts = {});

}  // namespace stacksort
