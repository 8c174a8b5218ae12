#pragma once

#include <compare>
#include <cstddef>
#include <iterator>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "permfib/composition.hpp"

namespace permfib {

/// A permutation of [n] in one-line notation. Values are 1..n; positions in
/// every public accessor are 1-based.
class Permutation {
public:
    Permutation() = default;

    /// Throws InvalidInput unless letters is a rearrangement of 1..n.
    explicit Permutation(std::vector<int> letters);

    static Permutation identity(int n);

    int size() const { return static_cast<int>(letters_.size()); }
    bool empty() const { return letters_.empty(); }

    /// pi_i for 1 <= i <= n.
    int at(int i) const { return letters_.at(static_cast<std::size_t>(i - 1)); }

    std::span<const int> letters() const { return letters_; }

    /// Accepts "2 3 5 6 8 7 1 4", "2,3,5,...", or "23568714" (n <= 9).
    static Permutation parse(std::string_view text);

    /// Space separated letters.
    std::string to_string() const;
    /// Concatenated digits when n <= 9, otherwise same as to_string().
    std::string to_compact_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.letters_ <=> b.letters_; }

private:
    friend class SymmetricGroupIterator;
    struct Unchecked {};
    Permutation(std::vector<int> letters, Unchecked) : letters_(std::move(letters)) {}

    std::vector<int> letters_;
};

struct StatReport {
    int des = 0;
    int pk = 0;
    int lpk = 0;
    int rpk = 0;
    int valleys = 0;
    int right_valleys = 0;
    int ipk = 0;
    int ilpk = 0;
    std::vector<int> descent_positions;
    std::vector<int> peak_positions;
    std::vector<int> left_peak_positions;
    std::vector<int> right_valley_positions;
};

/// Order-isomorphic permutation of a sequence of distinct integers.
Permutation standardize(std::span<const int> w);

Permutation inverse(const Permutation& p);
Permutation reverse(const Permutation& p);

// Individual statistics, defined on the letters in one-line notation.
int des(std::span<const int> w);
int pk(std::span<const int> w);
int lpk(std::span<const int> w);
int rpk(std::span<const int> w);
int valleys(std::span<const int> w);
int right_valleys(std::span<const int> w);

int ipk(const Permutation& p);
int ilpk(const Permutation& p);

StatReport statistics(const Permutation& p);

/// True iff some window of length |sigma| standardizes to sigma.
/// Throws InvalidInput when sigma is empty.
bool contains_consecutive(const Permutation& p, const Permutation& sigma);
inline bool avoids_consecutive(const Permutation& p, const Permutation& sigma) {
    return !contains_consecutive(p, sigma);
}

/// 12...m and m...21.
Permutation increasing_pattern(int m);
Permutation decreasing_pattern(int m);

/// Lengths of the maximal increasing runs, left to right.
Composition descent_composition(const Permutation& p);

bool is_alternating(const Permutation& p);
bool is_reverse_alternating(const Permutation& p);

/// Default cap on n for exhaustive enumeration: 12, or the value of the
/// PERMFIB_MAX_N environment variable when set.
int enumeration_cap();

class SymmetricGroupIterator {
public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Permutation;
    using difference_type = std::ptrdiff_t;
    using pointer = const Permutation*;
    using reference = const Permutation&;

    SymmetricGroupIterator() = default;
    SymmetricGroupIterator(int n, int first_letter);

    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    SymmetricGroupIterator& operator++();
    void operator++(int) { ++*this; }

    friend bool operator==(const SymmetricGroupIterator& a, const SymmetricGroupIterator& b) {
        return a.done_ == b.done_;
    }

private:
    Permutation current_;
    int first_letter_ = 0;
    bool done_ = true;
};

/// All n! permutations of [n] in lexicographic order, or only those starting
/// with first_letter when it is nonzero. Single pass.
class SymmetricGroup {
public:
    SymmetricGroup(int n, int first_letter = 0) : n_(n), first_letter_(first_letter) {}
    SymmetricGroupIterator begin() const { return {n_, first_letter_}; }
    SymmetricGroupIterator end() const { return {}; }

private:
    int n_;
    int first_letter_;
};

/// Throws ResourceLimit when n exceeds enumeration_cap() and allow_large is false,
/// InvalidInput when n < 0.
SymmetricGroup enumerate_symmetric_group(int n, bool allow_large = false);

/// Counts permutations of [n] satisfying pred. The work is split across threads
/// by first letter; the result equals a sequential count.
template <class Pred>
std::size_t count_permutations(int n, Pred pred, bool allow_large = false);

} // namespace permfib

#include "permfib/detail/permutation_parallel.hpp"
