#include "permfib/composition.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

#include "permfib/error.hpp"

namespace permfib {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p < 1) throw InvalidInput("composition parts must be positive, got " + std::to_string(p));
    total_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Composition Composition::parse(std::string_view text) {
    auto bad = [&] { return InvalidInput("bad composition \"" + std::string(text) + "\""); };
    std::vector<int> parts;
    // A part must follow every ',' or '+'; whitespace alone also separates parts.
    bool need_part = false;
    std::size_t i = 0;
    while (i < text.size()) {
        char ch = text[i];
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            int value = 0;
            auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
            if (ec != std::errc()) throw bad();
            parts.push_back(value);
            need_part = false;
            i = static_cast<std::size_t>(ptr - text.data());
        } else if (ch == ',' || ch == '+') {
            if (parts.empty() || need_part) throw bad();
            need_part = true;
            ++i;
        } else if (ch == '(' || ch == ')' || std::isspace(static_cast<unsigned char>(ch))) {
            ++i;
        } else {
            throw InvalidInput("unexpected character '" + std::string(1, ch) + "' in composition");
        }
    }
    if (need_part) throw bad();
    return Composition(std::move(parts));
}

std::string Composition::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out + ")";
}

std::vector<BigInt> fib_sequence(int k, long n_max) {
    if (k < 1) throw InvalidInput("Fibonacci order must be at least 1");
    std::vector<BigInt> f;
    if (n_max < 0) return f;
    f.reserve(static_cast<std::size_t>(n_max) + 1);
    f.emplace_back(1);
    // Running window sum f_{n-1} + ... + f_{n-k}.
    BigInt window = 1;
    for (long n = 1; n <= n_max; ++n) {
        f.push_back(window);
        window += f.back();
        if (n - k >= 0) window -= f[static_cast<std::size_t>(n - k)];
    }
    return f;
}

BigInt fib(int k, long n) {
    if (k < 1) throw InvalidInput("Fibonacci order must be at least 1");
    if (n < 0) return 0;
    return fib_sequence(k, n).back();
}

namespace {

void compositions_rec(int remaining, int max_part, std::vector<int>& prefix, std::vector<Composition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int first = 1; first <= std::min(remaining, max_part); ++first) {
        prefix.push_back(first);
        compositions_rec(remaining - first, max_part, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Composition> enumerate_compositions(int n, std::optional<int> max_part) {
    if (n < 1) throw InvalidInput("compositions need n >= 1");
    if (max_part && *max_part < 1) return {};
    std::vector<Composition> out;
    std::vector<int> prefix;
    compositions_rec(n, max_part.value_or(n), prefix, out);
    return out;
}

std::vector<int> descent_set(const Composition& L) {
    std::vector<int> d;
    int acc = 0;
    for (std::size_t i = 0; i + 1 < L.num_parts(); ++i) {
        acc += L.part(i);
        d.push_back(acc);
    }
    return d;
}

Composition composition_from_descent_set(int n, std::span<const int> descents) {
    std::vector<int> parts;
    int prev = 0;
    for (int d : descents) {
        if (d <= prev || d >= n) throw InvalidInput("descent set must be increasing within [1, n-1]");
        parts.push_back(d - prev);
        prev = d;
    }
    if (n > 0) parts.push_back(n - prev);
    return Composition(std::move(parts));
}

Composition composition_reverse(const Composition& L) {
    // Reversal sends position i to n+1-i, so i is a descent of the reverse
    // exactly when n-i is an ascent of the original.
    const int n = L.total();
    std::vector<bool> is_descent(static_cast<std::size_t>(n) + 1, false);
    for (int d : descent_set(L)) is_descent[static_cast<std::size_t>(d)] = true;
    std::vector<int> reversed;
    for (int i = 1; i < n; ++i)
        if (!is_descent[static_cast<std::size_t>(n - i)]) reversed.push_back(i);
    return composition_from_descent_set(n, reversed);
}

BigInt count_parts_gt1(int n, int k) {
    if (n < 1 || k < 0) return 0;
    // ways[s][j]: compositions of s with exactly j parts greater than 1.
    std::vector<std::vector<BigInt>> ways(static_cast<std::size_t>(n) + 1,
                                          std::vector<BigInt>(static_cast<std::size_t>(k) + 1, 0));
    ways[0][0] = 1;
    for (int s = 1; s <= n; ++s)
        for (int j = 0; j <= k; ++j) {
            BigInt total = ways[static_cast<std::size_t>(s - 1)][static_cast<std::size_t>(j)];
            if (j > 0)
                for (int last = 2; last <= s; ++last)
                    total += ways[static_cast<std::size_t>(s - last)][static_cast<std::size_t>(j - 1)];
            ways[static_cast<std::size_t>(s)][static_cast<std::size_t>(j)] = total;
        }
    return ways[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

} // namespace permfib
