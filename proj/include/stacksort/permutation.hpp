#pragma once

// Words without repeated letters, permutations, and the stack-sorting map.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace stacksort {

using Letter = std::uint32_t;

/// Finite word over the naturals (0 included) with pairwise distinct letters.
class Word {
public:
    Word() = default;

    /// Throws std::invalid_argument if a letter repeats.
    explicit Word(std::vector<Letter> letters);

    /// Parses whitespace- or comma-separated letters, e.g. "3 1 4 2".
    static Word parse(std::string_view text);

    std::span<const Letter> letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }

    std::string to_string() const;

    friend bool operator==(const Word&, const Word&) = default;

private:
    std::vector<Letter> letters_;
};

/// A word whose letters are exactly 1..n.
class Permutation {
public:
    /// Throws std::invalid_argument unless the letters are 1..size.
    explicit Permutation(Word word);
    explicit Permutation(std::vector<Letter> letters) : Permutation(Word(std::move(letters))) {}

    static Permutation identity(std::size_t n);

    const Word& word() const { return word_; }
    std::span<const Letter> letters() const { return word_.letters(); }
    std::size_t size() const { return word_.size(); }
    bool is_identity() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    Word word_;
};

/// s(w): empty stays empty, otherwise w = L n R maps to s(L) s(R) n.
Word stack_sort(const Word& w);
Permutation stack_sort(const Permutation& p);

/// Writes s(in) into out (same length). No allocation; used by enumeration.
void stack_sort_into(std::span<const Letter> in, std::span<Letter> out);

std::size_t descent_count(std::span<const Letter> letters);
inline std::size_t descent_count(const Permutation& p) { return descent_count(p.letters()); }

bool is_increasing(std::span<const Letter> letters);

bool is_t_stack_sortable(const Permutation& p, unsigned t);

/// Least t with s^t(p) = id. Always at most max(n-1, 0).
unsigned sorting_depth(std::span<const Letter> letters);

class EnumerationLimitError : public std::runtime_error {
public:
    EnumerationLimitError(std::size_t n, std::size_t max_n);
};

/// Cap on n for exhaustive enumeration of S_n.
struct EnumerationLimit {
    static constexpr std::size_t default_max_n = 12;
    std::size_t max_n = default_max_n;

    /// Default cap, overridden by STACKSORT_MAX_N when set to a positive integer.
    static EnumerationLimit from_environment();

    void check(std::size_t n) const;
};

/// Lexicographic stream over S_n, optionally restricted to permutations
/// starting with a given letter (the unit of parallel work).
class PermutationEnumerator {
public:
    explicit PermutationEnumerator(std::size_t n, EnumerationLimit limit = {});
    PermutationEnumerator(std::size_t n, Letter first, EnumerationLimit limit = {});

    /// Current permutation, or nullopt once exhausted.
    std::optional<std::span<const Letter>> current() const;
    void advance();

    std::optional<Permutation> next();

private:
    std::vector<Letter> letters_;
    bool fixed_first_ = false;
    bool done_ = false;
};

}  // namespace stacksort
