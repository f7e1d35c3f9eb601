#include "stacksort/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <unordered_set>

namespace stacksort {

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
    std::unordered_set<Letter> seen;
    for (Letter a : letters_)
        if (!seen.insert(a).second)
            throw std::invalid_argument("word has repeated letter " + std::to_string(a));
}

Word Word::parse(std::string_view text) {
    std::vector<Letter> letters;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (c == ' ' || c == ',' || c == '\t' || c == '\n') {
            ++i;
            continue;
        }
        Letter value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
        if (ec != std::errc{} || ptr == text.data() + i)
            throw std::invalid_argument("bad letter in word '" + std::string(text) + "'");
        letters.push_back(value);
        i = static_cast<std::size_t>(ptr - text.data());
    }
    return Word(std::move(letters));
}

std::string Word::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(letters_[i]);
    }
    return out;
}

Permutation::Permutation(Word word) : word_(std::move(word)) {
    const auto n = word_.size();
    for (Letter a : word_.letters())
        if (a < 1 || a > n)
            throw std::invalid_argument("not a permutation of 1.." + std::to_string(n) + ": " +
                                        word_.to_string());
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<Letter> v(n);
    std::iota(v.begin(), v.end(), Letter{1});
    return Permutation(std::move(v));
}

bool Permutation::is_identity() const {
    const auto l = letters();
    for (std::size_t i = 0; i < l.size(); ++i)
        if (l[i] != i + 1) return false;
    return true;
}

void stack_sort_into(std::span<const Letter> in, std::span<Letter> out) {
    if (in.empty()) return;
    const auto max_it = std::max_element(in.begin(), in.end());
    const auto split = static_cast<std::size_t>(max_it - in.begin());
    const auto left = in.first(split);
    const auto right = in.subspan(split + 1);
    stack_sort_into(left, out.first(left.size()));
    stack_sort_into(right, out.subspan(left.size(), right.size()));
    out[in.size() - 1] = *max_it;
}

Word stack_sort(const Word& w) {
    std::vector<Letter> out(w.size());
    stack_sort_into(w.letters(), out);
    return Word(std::move(out));
}

Permutation stack_sort(const Permutation& p) { return Permutation(stack_sort(p.word())); }

std::size_t descent_count(std::span<const Letter> letters) {
    std::size_t d = 0;
    for (std::size_t i = 0; i + 1 < letters.size(); ++i)
        if (letters[i] > letters[i + 1]) ++d;
    return d;
}

bool is_increasing(std::span<const Letter> letters) {
    return std::is_sorted(letters.begin(), letters.end());
}

bool is_t_stack_sortable(const Permutation& p, unsigned t) {
    if (t == 0) throw std::invalid_argument("t must be positive");
    return sorting_depth(p.letters()) <= t;
}

unsigned sorting_depth(std::span<const Letter> letters) {
    std::vector<Letter> a(letters.begin(), letters.end());
    std::vector<Letter> b(a.size());
    unsigned depth = 0;
    while (!is_increasing(a)) {
        stack_sort_into(a, b);
        a.swap(b);
        ++depth;
    }
    return depth;
}

EnumerationLimitError::EnumerationLimitError(std::size_t n, std::size_t max_n)
    : std::runtime_error("n = " + std::to_string(n) + " exceeds the enumeration limit " +
                         std::to_string(max_n)) {}

EnumerationLimit EnumerationLimit::from_environment() {
    EnumerationLimit limit;
    if (const char* env = std::getenv("STACKSORT_MAX_N")) {
        std::size_t value = 0;
        const std::string_view s(env);
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
        if (ec == std::errc{} && ptr == s.data() + s.size() && value > 0) limit.max_n = value;
    }
    return limit;
}

void EnumerationLimit::check(std::size_t n) const {
    if (n > max_n) throw EnumerationLimitError(n, max_n);
}

PermutationEnumerator::PermutationEnumerator(std::size_t n, EnumerationLimit limit)
    : letters_(n) {
    if (n == 0) throw std::invalid_argument("enumeration requires n >= 1");
    limit.check(n);
    std::iota(letters_.begin(), letters_.end(), Letter{1});
}

PermutationEnumerator::PermutationEnumerator(std::size_t n, Letter first, EnumerationLimit limit)
    : PermutationEnumerator(n, limit) {
    if (first < 1 || first > n) throw std::invalid_argument("first letter out of range");
    std::rotate(letters_.begin(), letters_.begin() + (first - 1), letters_.begin() + first);
    fixed_first_ = true;
}

std::optional<std::span<const Letter>> PermutationEnumerator::current() const {
    if (done_) return std::nullopt;
    return std::span<const Letter>(letters_);
}

void PermutationEnumerator::advance() {
    if (done_) return;
    if (fixed_first_)
        done_ = !std::next_permutation(letters_.begin() + 1, letters_.end());
    else
        done_ = !std::next_permutation(letters_.begin(), letters_.end());
}

std::optional<Permutation> PermutationEnumerator::next() {
    auto cur = current();
    if (!cur) return std::nullopt;
    Permutation p(std::vector<Letter>(cur->begin(), cur->end()));
    advance();
    return p;
}

}  // namespace stacksort
