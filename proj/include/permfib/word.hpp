#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>

namespace permfib {

/// A finite word over the alphabet {a, b, c}.
class Word {
public:
    Word() = default;

    /// Throws InvalidInput on any symbol outside {a, b, c}.
    explicit Word(std::string symbols);

    const std::string& str() const { return symbols_; }
    std::string_view view() const { return symbols_; }
    std::size_t size() const { return symbols_.size(); }
    bool empty() const { return symbols_.empty(); }
    char operator[](std::size_t i) const { return symbols_[i]; }

    friend Word operator+(const Word& a, const Word& b) { return Word(a.symbols_ + b.symbols_, Trusted{}); }
    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word& a, const Word& b) { return a.symbols_ <=> b.symbols_; }

    /// s repeated count times.
    static Word repeat(char s, std::size_t count);

private:
    struct Trusted {};
    Word(std::string symbols, Trusted) : symbols_(std::move(symbols)) {}
    std::string symbols_;
};

inline constexpr std::string_view kAlphabet = "abc";

/// True iff v does not occur in w as a contiguous factor.
/// Throws InvalidInput when v is empty.
bool avoids_factor(std::string_view w, std::string_view v);
inline bool avoids_factor(const Word& w, const Word& v) { return avoids_factor(w.view(), v.view()); }

/// Calls f(std::string_view) for every word of length n in lexicographic order.
template <class F>
void for_each_word(int n, F&& f) {
    std::string w(static_cast<std::size_t>(n), 'a');
    for (;;) {
        f(std::string_view(w));
        int i = n - 1;
        while (i >= 0 && w[static_cast<std::size_t>(i)] == 'c') w[static_cast<std::size_t>(i--)] = 'a';
        if (i < 0) return;
        ++w[static_cast<std::size_t>(i)];
    }
}

} // namespace permfib
