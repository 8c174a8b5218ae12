#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "permfib/bigint.hpp"

namespace permfib {

/// An ordered list of positive parts. The empty composition (n = 0) is the
/// descent composition of the empty permutation.
class Composition {
public:
    Composition() = default;

    /// Throws InvalidInput if some part is < 1.
    explicit Composition(std::vector<int> parts);

    std::span<const int> parts() const { return parts_; }
    int part(std::size_t i) const { return parts_.at(i); }
    std::size_t num_parts() const { return parts_.size(); }
    int total() const { return total_; }
    bool empty() const { return parts_.empty(); }

    /// Parses "(1,2,3)", "1,2,3" or "1 2 3".
    static Composition parse(std::string_view text);

    /// "(1,2,3,1,1)"
    std::string to_string() const;

    friend bool operator==(const Composition&, const Composition&) = default;
    friend auto operator<=>(const Composition& a, const Composition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
    int total_ = 0;
};

/// Order-k Fibonacci number f_n^(k) with f_0 = 1 and f_n = 0 for n < 0.
/// Throws InvalidInput for k < 1.
BigInt fib(int k, long n);

/// f_0^(k), ..., f_{n_max}^(k).
std::vector<BigInt> fib_sequence(int k, long n_max);

/// All compositions of n, in lexicographic order of their part lists, with every
/// part <= max_part when a bound is given. Throws InvalidInput for n < 1.
std::vector<Composition> enumerate_compositions(int n, std::optional<int> max_part = std::nullopt);

/// Descent composition of the reverse of any permutation whose descent
/// composition is L. Involution on compositions of n.
Composition composition_reverse(const Composition& L);

/// Number of compositions of n with exactly k parts greater than 1.
BigInt count_parts_gt1(int n, int k);

/// Descent set {L_1, L_1 + L_2, ...} (excluding n), 1-based.
std::vector<int> descent_set(const Composition& L);

/// Inverse of descent_set for a given n.
Composition composition_from_descent_set(int n, std::span<const int> descents);

} // namespace permfib
