#pragma once

// Deliberately naive reference implementations. Nothing here calls the
// library code it is used to check; only plain vectors and strings.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace oracle {

using Perm = std::vector<int>;

inline std::vector<Perm> all_perms(int n) {
    Perm p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    std::vector<Perm> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

inline Perm inverse(const Perm& p) {
    Perm q(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) q[static_cast<std::size_t>(p[i] - 1)] = static_cast<int>(i) + 1;
    return q;
}

// Ranks by sorting a copy.
inline Perm standardize(const std::vector<int>& w) {
    std::vector<int> sorted = w;
    std::sort(sorted.begin(), sorted.end());
    Perm out;
    for (int x : w) out.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), x) - sorted.begin()) + 1);
    return out;
}

inline bool contains_consecutive(const Perm& p, const Perm& sigma) {
    const std::size_t k = sigma.size();
    for (std::size_t i = 0; i + k <= p.size(); ++i)
        if (standardize(std::vector<int>(p.begin() + static_cast<long>(i), p.begin() + static_cast<long>(i + k))) == sigma)
            return true;
    return false;
}

inline Perm increasing(int m) {
    Perm s(static_cast<std::size_t>(m));
    std::iota(s.begin(), s.end(), 1);
    return s;
}

inline Perm decreasing(int m) {
    Perm s = increasing(m);
    std::reverse(s.begin(), s.end());
    return s;
}

// Peak positions (0-based), optionally counting a descent at the front as a left peak.
inline int peaks(const Perm& p, bool left) {
    int c = 0;
    const std::size_t n = p.size();
    for (std::size_t i = 0; i < n; ++i) {
        const bool before = i == 0 ? left : p[i - 1] < p[i];
        const bool after = i + 1 < n && p[i] > p[i + 1];
        if (before && after) ++c;
    }
    return c;
}

inline int ipk(const Perm& p) { return peaks(inverse(p), false); }
inline int ilpk(const Perm& p) { return peaks(inverse(p), true); }

inline int descents(const Perm& p) {
    int c = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) c += p[i] > p[i + 1];
    return c;
}

// Lengths of maximal increasing runs.
inline std::vector<int> runs(const Perm& p) {
    std::vector<int> out;
    int len = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        ++len;
        if (i + 1 == p.size() || p[i] > p[i + 1]) {
            out.push_back(len);
            len = 0;
        }
    }
    return out;
}

// f_n of order k by direct recursion on the definition.
inline std::uint64_t fib(int k, int n) {
    if (n < 0) return 0;
    if (n == 0) return 1;
    std::uint64_t s = 0;
    for (int i = 1; i <= k; ++i) s += fib(k, n - i);
    return s;
}

// Compositions of n from subsets of {1..n-1} (bitmasks).
inline std::vector<std::vector<int>> compositions(int n) {
    std::vector<std::vector<int>> out;
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
        std::vector<int> parts;
        int last = 0;
        for (int i = 1; i < n; ++i)
            if (mask & (1u << (i - 1))) {
                parts.push_back(i - last);
                last = i;
            }
        parts.push_back(n - last);
        out.push_back(parts);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<std::string> all_words(int n) {
    std::vector<std::string> out{""};
    for (int i = 0; i < n; ++i) {
        std::vector<std::string> next;
        for (const auto& w : out)
            for (char c : std::string("abc")) next.push_back(w + c);
        out = std::move(next);
    }
    return out;
}

// w = a^i c u a c^j, by trying every (i, j).
inline bool n_image_form(const std::string& w) {
    const int n = static_cast<int>(w.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; i + 1 + 1 + j <= n; ++j) {
            bool ok = true;
            for (int x = 0; x < i; ++x) ok = ok && w[static_cast<std::size_t>(x)] == 'a';
            ok = ok && w[static_cast<std::size_t>(i)] == 'c';
            ok = ok && w[static_cast<std::size_t>(n - j - 1)] == 'a';
            for (int x = n - j; x < n; ++x) ok = ok && w[static_cast<std::size_t>(x)] == 'c';
            if (ok) return true;
        }
    return false;
}

inline bool in_W(const std::string& w, int m) {
    if (!n_image_form(w)) return false;
    const std::string b1(static_cast<std::size_t>(m - 1), 'b'), b2(static_cast<std::size_t>(m - 2), 'b');
    for (const std::string& f : {b1 + "a", b1 + "b", "c" + b2 + "a", "c" + b1})
        if (w.find(f) != std::string::npos) return false;
    return true;
}

// Membership in a* c (c | bc | a+b | a+c)* by recursive descent with backtracking.
inline bool z_tail(const std::string& w, std::size_t pos) {
    if (pos == w.size()) return true;
    if (w[pos] == 'c' && z_tail(w, pos + 1)) return true;
    if (w.compare(pos, 2, "bc") == 0 && z_tail(w, pos + 2)) return true;
    std::size_t q = pos;
    while (q < w.size() && w[q] == 'a') {
        ++q;
        if (q < w.size() && (w[q] == 'b' || w[q] == 'c') && z_tail(w, q + 1)) return true;
    }
    return false;
}

inline bool in_Z(const std::string& w) {
    std::size_t i = 0;
    while (i < w.size() && w[i] == 'a') ++i;
    return i < w.size() && w[i] == 'c' && z_tail(w, i + 1);
}

// All rows of width k as block lists, from bitmasks of cut positions.
inline std::vector<std::vector<int>> rows(int k) {
    std::vector<std::vector<int>> out;
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        // bit x set means a cut after cell x; last cell always cut.
        if (!(mask & (1u << (k - 1)))) continue;
        std::vector<int> row;
        int last = -1;
        bool ok = true;
        for (int x = 0; x < k; ++x)
            if (mask & (1u << x)) {
                const int len = x - last;
                ok = ok && len <= 2;
                row.push_back(len);
                last = x;
            }
        if (ok) out.push_back(row);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Plain polynomial product truncated to `order`.
template <class R>
std::vector<R> poly_mul(const std::vector<R>& a, const std::vector<R>& b, std::size_t order) {
    std::vector<R> out(order + 1);
    for (std::size_t i = 0; i < a.size() && i <= order; ++i)
        for (std::size_t j = 0; j < b.size() && i + j <= order; ++j) out[i + j] += a[i] * b[j];
    return out;
}

} // namespace oracle
