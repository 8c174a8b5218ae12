#include "permfib/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <numeric>

#include "permfib/error.hpp"

namespace permfib {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

} // namespace

Permutation::Permutation(std::vector<int> letters) : letters_(std::move(letters)) {
    const int n = size();
    std::vector<bool> seen(idx(n) + 1, false);
    for (int v : letters_) {
        if (v < 1 || v > n) throw InvalidInput("letter " + std::to_string(v) + " is outside 1.." + std::to_string(n));
        if (seen[idx(v)]) throw InvalidInput("letter " + std::to_string(v) + " appears twice");
        seen[idx(v)] = true;
    }
}

Permutation Permutation::identity(int n) {
    if (n < 0) throw InvalidInput("negative permutation length");
    std::vector<int> v(idx(n));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v), Unchecked{});
}

Permutation Permutation::parse(std::string_view text) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && (text[i] == ',' || std::isspace(static_cast<unsigned char>(text[i])))) ++i;
        std::size_t start = i;
        while (i < text.size() && text[i] != ',' && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        if (i > start) tokens.push_back(text.substr(start, i - start));
    }
    std::vector<int> letters;
    auto digits_only = [](std::string_view t) {
        return std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    };
    if (tokens.size() == 1 && tokens[0].size() > 1 && digits_only(tokens[0])) {
        if (tokens[0].size() > 9) throw InvalidInput("single-token form is only for n <= 9");
        for (char c : tokens[0]) letters.push_back(c - '0');
    } else {
        for (auto t : tokens) {
            int value = 0;
            auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
            if (ec != std::errc() || ptr != t.data() + t.size())
                throw InvalidInput("bad permutation letter \"" + std::string(t) + "\"");
            letters.push_back(value);
        }
    }
    return Permutation(std::move(letters));
}

std::string Permutation::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(letters_[i]);
    }
    return out;
}

std::string Permutation::to_compact_string() const {
    if (size() > 9) return to_string();
    std::string out;
    for (int v : letters_) out += static_cast<char>('0' + v);
    return out;
}

Permutation standardize(std::span<const int> w) {
    std::vector<int> order(w.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return w[idx(a)] < w[idx(b)]; });
    std::vector<int> out(w.size());
    for (std::size_t rank = 0; rank < order.size(); ++rank) {
        if (rank > 0 && w[idx(order[rank])] == w[idx(order[rank - 1])])
            throw InvalidInput("standardize needs distinct entries");
        out[idx(order[rank])] = static_cast<int>(rank) + 1;
    }
    return Permutation(std::move(out));
}

Permutation inverse(const Permutation& p) {
    std::vector<int> q(idx(p.size()));
    auto w = p.letters();
    for (std::size_t i = 0; i < w.size(); ++i) q[idx(w[i] - 1)] = static_cast<int>(i) + 1;
    return Permutation(std::move(q));
}

Permutation reverse(const Permutation& p) {
    auto w = p.letters();
    return Permutation(std::vector<int>(w.rbegin(), w.rend()));
}

namespace {

// All position lists are 1-based.
std::vector<int> descent_positions(std::span<const int> w) {
    std::vector<int> out;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1]) out.push_back(static_cast<int>(i) + 1);
    return out;
}

std::vector<int> peak_positions(std::span<const int> w) {
    std::vector<int> out;
    for (std::size_t i = 1; i + 1 < w.size(); ++i)
        if (w[i - 1] < w[i] && w[i] > w[i + 1]) out.push_back(static_cast<int>(i) + 1);
    return out;
}

std::vector<int> left_peak_positions(std::span<const int> w) {
    std::vector<int> out;
    if (w.size() >= 2 && w[0] > w[1]) out.push_back(1);
    auto peaks = peak_positions(w);
    out.insert(out.end(), peaks.begin(), peaks.end());
    return out;
}

std::vector<int> right_valley_positions(std::span<const int> w) {
    std::vector<int> out;
    const std::size_t n = w.size();
    for (std::size_t i = 1; i + 1 < n; ++i)
        if (w[i - 1] > w[i] && w[i] < w[i + 1]) out.push_back(static_cast<int>(i) + 1);
    if (n >= 2 && w[n - 2] > w[n - 1]) out.push_back(static_cast<int>(n));
    return out;
}

} // namespace

int des(std::span<const int> w) {
    int c = 0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) c += w[i] > w[i + 1];
    return c;
}

int pk(std::span<const int> w) {
    int c = 0;
    for (std::size_t i = 1; i + 1 < w.size(); ++i) c += (w[i - 1] < w[i] && w[i] > w[i + 1]);
    return c;
}

int lpk(std::span<const int> w) { return pk(w) + (w.size() >= 2 && w[0] > w[1] ? 1 : 0); }

int rpk(std::span<const int> w) {
    const std::size_t n = w.size();
    return pk(w) + (n >= 2 && w[n - 1] > w[n - 2] ? 1 : 0);
}

int valleys(std::span<const int> w) {
    int c = 0;
    for (std::size_t i = 1; i + 1 < w.size(); ++i) c += (w[i - 1] > w[i] && w[i] < w[i + 1]);
    return c;
}

int right_valleys(std::span<const int> w) {
    const std::size_t n = w.size();
    return valleys(w) + (n >= 2 && w[n - 2] > w[n - 1] ? 1 : 0);
}

int ipk(const Permutation& p) { return pk(inverse(p).letters()); }
int ilpk(const Permutation& p) { return lpk(inverse(p).letters()); }

StatReport statistics(const Permutation& p) {
    auto w = p.letters();
    const Permutation q = inverse(p);
    StatReport r;
    r.des = des(w);
    r.pk = pk(w);
    r.lpk = lpk(w);
    r.rpk = rpk(w);
    r.valleys = valleys(w);
    r.right_valleys = right_valleys(w);
    r.ipk = pk(q.letters());
    r.ilpk = lpk(q.letters());
    r.descent_positions = descent_positions(w);
    r.peak_positions = peak_positions(w);
    r.left_peak_positions = left_peak_positions(w);
    r.right_valley_positions = right_valley_positions(w);
    return r;
}

bool contains_consecutive(const Permutation& p, const Permutation& sigma) {
    const int m = sigma.size();
    if (m == 0) throw InvalidInput("pattern must be nonempty");
    auto w = p.letters();
    auto s = sigma.letters();
    const int n = p.size();
    // A window standardizes to sigma iff it is order-isomorphic to sigma.
    for (int start = 0; start + m <= n; ++start) {
        bool match = true;
        for (int a = 0; a < m && match; ++a)
            for (int b = a + 1; b < m; ++b)
                if ((w[idx(start + a)] < w[idx(start + b)]) != (s[idx(a)] < s[idx(b)])) {
                    match = false;
                    break;
                }
        if (match) return true;
    }
    return false;
}

Permutation increasing_pattern(int m) { return Permutation::identity(m); }

Permutation decreasing_pattern(int m) { return reverse(Permutation::identity(m)); }

Composition descent_composition(const Permutation& p) {
    auto w = p.letters();
    std::vector<int> parts;
    if (w.empty()) return Composition();
    int run = 1;
    for (std::size_t i = 1; i < w.size(); ++i) {
        if (w[i] > w[i - 1]) {
            ++run;
        } else {
            parts.push_back(run);
            run = 1;
        }
    }
    parts.push_back(run);
    return Composition(std::move(parts));
}

bool is_alternating(const Permutation& p) {
    auto w = p.letters();
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        bool up = w[i] < w[i + 1];
        if (up != (i % 2 == 0)) return false;
    }
    return true;
}

bool is_reverse_alternating(const Permutation& p) {
    auto w = p.letters();
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        bool down = w[i] > w[i + 1];
        if (down != (i % 2 == 0)) return false;
    }
    return true;
}

int enumeration_cap() {
    if (const char* env = std::getenv("PERMFIB_MAX_N")) {
        int value = 0;
        std::string_view s(env);
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
        if (ec == std::errc() && ptr == s.data() + s.size() && value >= 0) return value;
    }
    return 12;
}

SymmetricGroupIterator::SymmetricGroupIterator(int n, int first_letter) : first_letter_(first_letter), done_(false) {
    std::vector<int> v(idx(n));
    std::iota(v.begin(), v.end(), 1);
    if (first_letter != 0) {
        if (first_letter < 1 || first_letter > n) {
            done_ = true;
            return;
        }
        std::rotate(v.begin(), v.begin() + first_letter - 1, v.begin() + first_letter);
    }
    current_ = Permutation(std::move(v), Permutation::Unchecked{});
}

SymmetricGroupIterator& SymmetricGroupIterator::operator++() {
    auto& v = current_.letters_;
    if (first_letter_ != 0) {
        // The first letter stays fixed; permute the tail.
        done_ = !std::next_permutation(v.begin() + 1, v.end());
    } else {
        done_ = !std::next_permutation(v.begin(), v.end());
    }
    return *this;
}

SymmetricGroup enumerate_symmetric_group(int n, bool allow_large) {
    if (n < 0) throw InvalidInput("negative permutation length");
    if (n > enumeration_cap() && !allow_large)
        throw ResourceLimit("enumerating S_" + std::to_string(n) + " exceeds the cap of " +
                            std::to_string(enumeration_cap()) + " (set an override to proceed)");
    return SymmetricGroup(n);
}

} // namespace permfib
