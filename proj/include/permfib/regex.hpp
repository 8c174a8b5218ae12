#pragma once

#include <array>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "permfib/bigint.hpp"
#include "permfib/word.hpp"

namespace permfib {

/// Immutable regular-expression tree over {a, b, c}. Nodes are shared, so
/// copies are cheap.
class RegexAst {
public:
    enum class Kind { Epsilon, Literal, Concat, Union, Star, Plus, AtMost };

    static RegexAst epsilon();
    static RegexAst literal(char symbol);
    static RegexAst concat(std::vector<RegexAst> parts);
    static RegexAst alt(std::vector<RegexAst> options);
    static RegexAst star(RegexAst body);
    static RegexAst plus(RegexAst body);
    /// body^{<=t} = (eps | body | body^2 | ... | body^t). Throws InvalidInput if t < 0.
    static RegexAst at_most(RegexAst body, int t);

    Kind kind() const;
    char symbol() const;
    int bound() const;
    const std::vector<RegexAst>& children() const;
    const void* identity() const { return node_.get(); }

    /// Notation with ∪, * and ⁺, e.g. "a* c (c ∪ bc ∪ a⁺b ∪ a⁺c)* a⁺ c*".
    std::string to_string() const;

private:
    struct Node;
    explicit RegexAst(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

/// Deterministic automaton over {a, b, c}; the transition function is total.
class Dfa {
public:
    Dfa(std::vector<std::array<int, 3>> transitions, std::vector<bool> accepting, int start);

    int num_states() const { return static_cast<int>(delta_.size()); }
    int start() const { return start_; }
    bool is_accepting(int state) const { return accepting_[static_cast<std::size_t>(state)]; }
    /// Throws InvalidInput for a symbol outside {a, b, c}.
    int next(int state, char symbol) const;

    bool accepts(std::string_view w) const;
    bool accepts(const Word& w) const { return accepts(w.view()); }

    /// Number of accepted words of the given length, by path counting.
    BigInt count_accepted(int length) const;

    /// Accepted words of the given length in lexicographic order.
    std::vector<Word> accepted_words(int length) const;

private:
    std::vector<std::array<int, 3>> delta_;
    std::vector<bool> accepting_;
    int start_;
};

/// Position (Glushkov) automaton followed by the subset construction.
/// Bounded repetitions are expanded into unions before positions are assigned.
Dfa compile(const RegexAst& ast);

/// Direct recursive matcher, independent of the automaton construction.
bool matches_backtracking(const RegexAst& ast, std::string_view w);

/// Number of distinct parse trees of w. Star and plus iterations are required
/// to consume at least one symbol, so the count is finite.
BigInt count_parses(const RegexAst& ast, std::string_view w);

/// a* c (c ∪ bc ∪ a⁺b ∪ a⁺c)*
RegexAst z_regex();

/// a* c [b^{≤m-3}(c ∪ bc ∪ a⁺b ∪ a⁺c)]* b^{≤m-3} a⁺ c*. For m = 3 the bounded
/// factors are dropped. Throws InvalidInput for m < 3.
RegexAst w_regex(int m);

/// Compiled automata for z_regex() and w_regex(m), built once per process.
const Dfa& z_dfa();
const Dfa& w_dfa(int m);

/// One factor in the decomposition of a word of Z_k.
struct ZBlock {
    enum class Kind { C, BC, AB, AC };
    Kind kind;
    int a_run = 0; ///< number of leading a's for AB and AC

    /// Width of the block (its length as a word).
    int width() const;
    std::string text() const;
    friend bool operator==(const ZBlock&, const ZBlock&) = default;
};

/// Greedy left-to-right factorisation of z into c, bc, a⁺b, a⁺c with the first
/// block c or a⁺c. Throws NotInLanguage if z does not match z_regex().
std::vector<ZBlock> unique_factor_decomposition(const Word& z);

/// "aac|bc|c|c|aaab|bc|ac"
std::string format_blocks(const std::vector<ZBlock>& blocks);

struct WSplit {
    int j = 0;
    int k = 0;
    Word z;
    friend bool operator==(const WSplit&, const WSplit&) = default;
};

/// Writes w = z a^{n-j-k} c^j with z in Z_k. Throws NotInLanguage unless w
/// matches w_regex(3).
WSplit split_W_word(const Word& w);

} // namespace permfib
