#include "permfib/word.hpp"

#include "permfib/error.hpp"

namespace permfib {

Word::Word(std::string symbols) : symbols_(std::move(symbols)) {
    for (char c : symbols_)
        if (c != 'a' && c != 'b' && c != 'c')
            throw InvalidInput("word symbol '" + std::string(1, c) + "' is not in {a,b,c}");
}

Word Word::repeat(char s, std::size_t count) { return Word(std::string(count, s)); }

bool avoids_factor(std::string_view w, std::string_view v) {
    if (v.empty()) throw InvalidInput("factor must be nonempty");
    return w.find(v) == std::string_view::npos;
}

} // namespace permfib
