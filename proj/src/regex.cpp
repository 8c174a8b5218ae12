#include "permfib/regex.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <set>
#include <tuple>

#include "permfib/error.hpp"

namespace permfib {

struct RegexAst::Node {
    Kind kind;
    char symbol = 0;
    int bound = 0;
    std::vector<RegexAst> children;
};

namespace {

int symbol_index(char c) {
    switch (c) {
    case 'a': return 0;
    case 'b': return 1;
    case 'c': return 2;
    default: throw InvalidInput("symbol '" + std::string(1, c) + "' is not in {a,b,c}");
    }
}

} // namespace

RegexAst RegexAst::epsilon() { return RegexAst(std::make_shared<const Node>(Node{Kind::Epsilon, 0, 0, {}})); }

RegexAst RegexAst::literal(char symbol) {
    symbol_index(symbol);
    return RegexAst(std::make_shared<const Node>(Node{Kind::Literal, symbol, 0, {}}));
}

RegexAst RegexAst::concat(std::vector<RegexAst> parts) {
    if (parts.empty()) return epsilon();
    if (parts.size() == 1) return parts.front();
    return RegexAst(std::make_shared<const Node>(Node{Kind::Concat, 0, 0, std::move(parts)}));
}

RegexAst RegexAst::alt(std::vector<RegexAst> options) {
    if (options.empty()) throw InvalidInput("union needs at least one option");
    if (options.size() == 1) return options.front();
    return RegexAst(std::make_shared<const Node>(Node{Kind::Union, 0, 0, std::move(options)}));
}

RegexAst RegexAst::star(RegexAst body) {
    return RegexAst(std::make_shared<const Node>(Node{Kind::Star, 0, 0, {std::move(body)}}));
}

RegexAst RegexAst::plus(RegexAst body) {
    return RegexAst(std::make_shared<const Node>(Node{Kind::Plus, 0, 0, {std::move(body)}}));
}

RegexAst RegexAst::at_most(RegexAst body, int t) {
    if (t < 0) throw InvalidInput("bounded repetition needs t >= 0");
    return RegexAst(std::make_shared<const Node>(Node{Kind::AtMost, 0, t, {std::move(body)}}));
}

RegexAst::Kind RegexAst::kind() const { return node_->kind; }
char RegexAst::symbol() const { return node_->symbol; }
int RegexAst::bound() const { return node_->bound; }
const std::vector<RegexAst>& RegexAst::children() const { return node_->children; }

namespace {

bool is_atom(const RegexAst& r) { return r.kind() == RegexAst::Kind::Literal || r.kind() == RegexAst::Kind::Epsilon; }

std::string print(const RegexAst& r, bool top);

// Operand of a postfix operator: atoms bare, unions in (), concatenations in [].
std::string print_operand(const RegexAst& r) {
    switch (r.kind()) {
    case RegexAst::Kind::Epsilon:
    case RegexAst::Kind::Literal: return print(r, false);
    case RegexAst::Kind::Union: return print(r, false);
    case RegexAst::Kind::Concat: return "[" + print(r, false) + "]";
    default: return "(" + print(r, false) + ")";
    }
}

std::string print(const RegexAst& r, bool top) {
    using K = RegexAst::Kind;
    switch (r.kind()) {
    case K::Epsilon: return "ε";
    case K::Literal: return std::string(1, r.symbol());
    case K::Concat: {
        std::string out;
        for (std::size_t i = 0; i < r.children().size(); ++i) {
            if (top && i) out += ' ';
            out += print(r.children()[i], false);
        }
        return out;
    }
    case K::Union: {
        std::string out = top ? "" : "(";
        for (std::size_t i = 0; i < r.children().size(); ++i) {
            if (i) out += " ∪ ";
            out += print(r.children()[i], false);
        }
        return top ? out : out + ")";
    }
    case K::Star: return print_operand(r.children()[0]) + "*";
    case K::Plus: return print_operand(r.children()[0]) + "⁺";
    case K::AtMost: {
        const auto& body = r.children()[0];
        std::string b = is_atom(body) ? print(body, false) : print_operand(body);
        return b + "^{≤" + std::to_string(r.bound()) + "}";
    }
    }
    return {};
}

} // namespace

std::string RegexAst::to_string() const { return print(*this, true); }

// ---------------------------------------------------------------------------
// Position automaton.

namespace {

struct Glushkov {
    std::vector<char> position_symbol;
    std::vector<std::set<int>> follow;

    struct Info {
        bool nullable;
        std::set<int> first;
        std::set<int> last;
    };

    int new_position(char c) {
        position_symbol.push_back(c);
        follow.emplace_back();
        return static_cast<int>(position_symbol.size()) - 1;
    }

    void link(const std::set<int>& from, const std::set<int>& to) {
        for (int p : from) follow[static_cast<std::size_t>(p)].insert(to.begin(), to.end());
    }

    Info concat(Info a, const Info& b) {
        link(a.last, b.first);
        Info r;
        r.nullable = a.nullable && b.nullable;
        r.first = a.first;
        if (a.nullable) r.first.insert(b.first.begin(), b.first.end());
        r.last = b.last;
        if (b.nullable) r.last.insert(a.last.begin(), a.last.end());
        return r;
    }

    // Every visit allocates fresh positions, so repeated subtrees (from bounded
    // repetition) get distinct positions.
    Info build(const RegexAst& r) {
        using K = RegexAst::Kind;
        switch (r.kind()) {
        case K::Epsilon: return {true, {}, {}};
        case K::Literal: {
            int p = new_position(r.symbol());
            return {false, {p}, {p}};
        }
        case K::Concat: {
            Info acc{true, {}, {}};
            for (const auto& c : r.children()) acc = concat(std::move(acc), build(c));
            return acc;
        }
        case K::Union: {
            Info acc{false, {}, {}};
            for (const auto& c : r.children()) {
                Info i = build(c);
                acc.nullable = acc.nullable || i.nullable;
                acc.first.insert(i.first.begin(), i.first.end());
                acc.last.insert(i.last.begin(), i.last.end());
            }
            return acc;
        }
        case K::Star:
        case K::Plus: {
            Info i = build(r.children()[0]);
            link(i.last, i.first);
            if (r.kind() == K::Star) i.nullable = true;
            return i;
        }
        case K::AtMost: {
            // eps | x | xx | ... | x^t, each copy with its own positions.
            Info acc{true, {}, {}};
            for (int reps = 1; reps <= r.bound(); ++reps) {
                Info chain{true, {}, {}};
                for (int k = 0; k < reps; ++k) chain = concat(std::move(chain), build(r.children()[0]));
                acc.first.insert(chain.first.begin(), chain.first.end());
                acc.last.insert(chain.last.begin(), chain.last.end());
            }
            return acc;
        }
        }
        return {true, {}, {}};
    }
};

} // namespace

Dfa::Dfa(std::vector<std::array<int, 3>> transitions, std::vector<bool> accepting, int start)
    : delta_(std::move(transitions)), accepting_(std::move(accepting)), start_(start) {
    const int n = num_states();
    if (static_cast<int>(accepting_.size()) != n) throw InvalidInput("accepting set size mismatch");
    if (start < 0 || start >= n) throw InvalidInput("start state out of range");
    for (const auto& row : delta_)
        for (int to : row)
            if (to < 0 || to >= n) throw InvalidInput("transition target out of range");
}

int Dfa::next(int state, char symbol) const {
    return delta_[static_cast<std::size_t>(state)][static_cast<std::size_t>(symbol_index(symbol))];
}

bool Dfa::accepts(std::string_view w) const {
    int s = start_;
    for (char c : w) s = next(s, c);
    return is_accepting(s);
}

BigInt Dfa::count_accepted(int length) const {
    std::vector<BigInt> ways(delta_.size(), 0);
    ways[static_cast<std::size_t>(start_)] = 1;
    for (int step = 0; step < length; ++step) {
        std::vector<BigInt> next_ways(delta_.size(), 0);
        for (std::size_t s = 0; s < delta_.size(); ++s) {
            if (ways[s] == 0) continue;
            for (int to : delta_[s]) next_ways[static_cast<std::size_t>(to)] += ways[s];
        }
        ways = std::move(next_ways);
    }
    BigInt total = 0;
    for (std::size_t s = 0; s < delta_.size(); ++s)
        if (accepting_[s]) total += ways[s];
    return total;
}

std::vector<Word> Dfa::accepted_words(int length) const {
    // live[k][s]: some word of length k leads from s to acceptance.
    std::vector<std::vector<bool>> live(static_cast<std::size_t>(length) + 1, std::vector<bool>(delta_.size()));
    live[0] = accepting_;
    for (int k = 1; k <= length; ++k)
        for (std::size_t s = 0; s < delta_.size(); ++s)
            for (int to : delta_[s])
                if (live[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(to)]) live[static_cast<std::size_t>(k)][s] = true;

    std::vector<Word> out;
    std::string buf;
    auto dfs = [&](auto&& self, int state, int remaining) -> void {
        if (!live[static_cast<std::size_t>(remaining)][static_cast<std::size_t>(state)]) return;
        if (remaining == 0) {
            out.emplace_back(buf);
            return;
        }
        for (char c : kAlphabet) {
            buf.push_back(c);
            self(self, next(state, c), remaining - 1);
            buf.pop_back();
        }
    };
    if (length >= 0) dfs(dfs, start_, length);
    return out;
}

Dfa compile(const RegexAst& ast) {
    Glushkov g;
    Glushkov::Info root = g.build(ast);

    // NFA state -1 is the initial state; positions are 0..P-1.
    using Subset = std::vector<int>;
    std::map<Subset, int> ids;
    std::vector<Subset> subsets;
    std::vector<std::array<int, 3>> delta;
    std::vector<bool> accepting;

    auto intern = [&](Subset s) {
        auto [it, inserted] = ids.emplace(s, static_cast<int>(subsets.size()));
        if (inserted) {
            subsets.push_back(std::move(s));
            delta.push_back({-1, -1, -1});
            accepting.push_back(false);
        }
        return it->second;
    };

    const int start = intern(Subset{-1});
    for (std::size_t cur = 0; cur < subsets.size(); ++cur) {
        const Subset here = subsets[cur];
        bool acc = false;
        for (int q : here) acc = acc || (q == -1 ? root.nullable : root.last.count(q) > 0);
        accepting[cur] = acc;
        for (int sym = 0; sym < 3; ++sym) {
            const char c = kAlphabet[static_cast<std::size_t>(sym)];
            std::set<int> target;
            for (int q : here) {
                const std::set<int>& succ = q == -1 ? root.first : g.follow[static_cast<std::size_t>(q)];
                for (int p : succ)
                    if (g.position_symbol[static_cast<std::size_t>(p)] == c) target.insert(p);
            }
            // The empty subset is the dead state.
            int id = intern(Subset(target.begin(), target.end()));
            delta[cur][static_cast<std::size_t>(sym)] = id;
        }
    }
    return Dfa(std::move(delta), std::move(accepting), start);
}

// ---------------------------------------------------------------------------
// Backtracking matcher and parse counting, straight from the definitions.

namespace {

std::set<std::size_t> match_ends(const RegexAst& r, std::string_view w, std::size_t pos);

std::set<std::size_t> iterate_ends(const RegexAst& body, std::string_view w, std::size_t pos, bool at_least_one) {
    std::set<std::size_t> reached;
    if (!at_least_one) reached.insert(pos);
    std::vector<std::size_t> frontier{pos};
    std::set<std::size_t> expanded;
    while (!frontier.empty()) {
        std::size_t p = frontier.back();
        frontier.pop_back();
        if (!expanded.insert(p).second) continue;
        for (std::size_t e : match_ends(body, w, p)) {
            reached.insert(e);
            frontier.push_back(e);
        }
    }
    return reached;
}

std::set<std::size_t> match_ends(const RegexAst& r, std::string_view w, std::size_t pos) {
    using K = RegexAst::Kind;
    switch (r.kind()) {
    case K::Epsilon: return {pos};
    case K::Literal:
        if (pos < w.size() && w[pos] == r.symbol()) return {pos + 1};
        return {};
    case K::Concat: {
        std::set<std::size_t> cur{pos};
        for (const auto& c : r.children()) {
            std::set<std::size_t> nxt;
            for (std::size_t p : cur) {
                auto e = match_ends(c, w, p);
                nxt.insert(e.begin(), e.end());
            }
            cur = std::move(nxt);
            if (cur.empty()) break;
        }
        return cur;
    }
    case K::Union: {
        std::set<std::size_t> out;
        for (const auto& c : r.children()) {
            auto e = match_ends(c, w, pos);
            out.insert(e.begin(), e.end());
        }
        return out;
    }
    case K::Star: return iterate_ends(r.children()[0], w, pos, false);
    case K::Plus: return iterate_ends(r.children()[0], w, pos, true);
    case K::AtMost: {
        std::set<std::size_t> out{pos};
        std::set<std::size_t> cur{pos};
        for (int k = 1; k <= r.bound(); ++k) {
            std::set<std::size_t> nxt;
            for (std::size_t p : cur) {
                auto e = match_ends(r.children()[0], w, p);
                nxt.insert(e.begin(), e.end());
            }
            out.insert(nxt.begin(), nxt.end());
            cur = std::move(nxt);
        }
        return out;
    }
    }
    return {};
}

struct CountOverflow {};

// Checked machine-word counts; BigInt is used only when these overflow.
struct Count64 {
    using Value = std::uint64_t;
    static Value add(Value a, Value b) {
        Value r;
        if (__builtin_add_overflow(a, b, &r)) throw CountOverflow{};
        return r;
    }
    static Value mul(Value a, Value b) {
        Value r;
        if (__builtin_mul_overflow(a, b, &r)) throw CountOverflow{};
        return r;
    }
};

struct CountBig {
    using Value = BigInt;
    static Value add(const Value& a, const Value& b) { return a + b; }
    static Value mul(const Value& a, const Value& b) { return a * b; }
};

template <class Ops>
class ParseCounter {
public:
    using Value = typename Ops::Value;

    ParseCounter(const RegexAst& root, std::string_view w) : w_(w), span_(w.size() + 1) {
        number(root);
        memo_.resize(ids_.size() * 2 * span_ * span_);
        concat_memo_.resize(ids_.size() * max_parts_ * span_ * span_);
    }

    // Parses of w[i, j) by r.
    Value count(const RegexAst& r, std::size_t i, std::size_t j) {
        auto& slot = memo_[index(r, 0, i, j)];
        if (!slot) slot = compute(r, i, j);
        return *slot;
    }

private:
    using K = RegexAst::Kind;

    void number(const RegexAst& r) {
        if (!ids_.emplace(r.identity(), ids_.size()).second) return;
        max_parts_ = std::max(max_parts_, r.children().size());
        for (const auto& c : r.children()) number(c);
    }

    std::size_t index(const RegexAst& r, std::size_t table, std::size_t i, std::size_t j) const {
        return ((ids_.at(r.identity()) * 2 + table) * span_ + i) * span_ + j;
    }

    // Sequences of nonempty body parses covering w[i, j).
    Value iterations(const RegexAst& body, std::size_t i, std::size_t j) {
        if (i == j) return 1;
        const std::size_t key = index(body, 1, i, j);
        if (memo_[key]) return *memo_[key];
        Value total = 0;
        for (std::size_t k = i + 1; k <= j; ++k) {
            Value head = count(body, i, k);
            if (head != 0) total = Ops::add(total, Ops::mul(head, iterations(body, k, j)));
        }
        memo_[key] = total;
        return total;
    }

    // Parses of w[i, j) by children[from..] of a concatenation.
    Value concat_from(const RegexAst& r, std::size_t from, std::size_t i, std::size_t j) {
        const auto& parts = r.children();
        if (from == parts.size()) return i == j ? 1 : 0;
        const std::size_t key = ((ids_.at(r.identity()) * max_parts_ + from) * span_ + i) * span_ + j;
        if (concat_memo_[key]) return *concat_memo_[key];
        Value total = 0;
        for (std::size_t k = i; k <= j; ++k) {
            Value head = count(parts[from], i, k);
            if (head != 0) total = Ops::add(total, Ops::mul(head, concat_from(r, from + 1, k, j)));
        }
        concat_memo_[key] = total;
        return total;
    }

    Value power(const RegexAst& body, int reps, std::size_t i, std::size_t j) {
        if (reps == 0) return i == j ? 1 : 0;
        Value total = 0;
        for (std::size_t k = i; k <= j; ++k) {
            Value head = count(body, i, k);
            if (head != 0) total = Ops::add(total, Ops::mul(head, power(body, reps - 1, k, j)));
        }
        return total;
    }

    Value compute(const RegexAst& r, std::size_t i, std::size_t j) {
        switch (r.kind()) {
        case K::Epsilon: return i == j ? 1 : 0;
        case K::Literal: return (j == i + 1 && w_[i] == r.symbol()) ? 1 : 0;
        case K::Concat: return concat_from(r, 0, i, j);
        case K::Union: {
            Value total = 0;
            for (const auto& c : r.children()) total = Ops::add(total, count(c, i, j));
            return total;
        }
        case K::Star: return iterations(r.children()[0], i, j);
        case K::Plus: {
            if (i == j) return count(r.children()[0], i, i);
            Value total = 0;
            for (std::size_t k = i + 1; k <= j; ++k) {
                Value head = count(r.children()[0], i, k);
                if (head != 0) total = Ops::add(total, Ops::mul(head, iterations(r.children()[0], k, j)));
            }
            return total;
        }
        case K::AtMost: {
            Value total = 0;
            for (int reps = 0; reps <= r.bound(); ++reps) total = Ops::add(total, power(r.children()[0], reps, i, j));
            return total;
        }
        }
        return 0;
    }

    std::string_view w_;
    std::size_t span_;
    std::size_t max_parts_ = 1;
    std::unordered_map<const void*, std::size_t> ids_;
    std::vector<std::optional<Value>> memo_;
    std::vector<std::optional<Value>> concat_memo_;
};

} // namespace

bool matches_backtracking(const RegexAst& ast, std::string_view w) { return match_ends(ast, w, 0).count(w.size()) > 0; }

BigInt count_parses(const RegexAst& ast, std::string_view w) {
    try {
        return ParseCounter<Count64>(ast, w).count(ast, 0, w.size());
    } catch (const CountOverflow&) {
        return ParseCounter<CountBig>(ast, w).count(ast, 0, w.size());
    }
}

// ---------------------------------------------------------------------------
// The expressions for Z_k and W_n.

namespace {

RegexAst lit(char c) { return RegexAst::literal(c); }

// (c ∪ bc ∪ a⁺b ∪ a⁺c)
RegexAst block_union() {
    auto a_plus = RegexAst::plus(lit('a'));
    return RegexAst::alt({lit('c'), RegexAst::concat({lit('b'), lit('c')}), RegexAst::concat({a_plus, lit('b')}),
                          RegexAst::concat({a_plus, lit('c')})});
}

} // namespace

RegexAst z_regex() { return RegexAst::concat({RegexAst::star(lit('a')), lit('c'), RegexAst::star(block_union())}); }

RegexAst w_regex(int m) {
    if (m < 3) throw InvalidInput("w_regex needs m >= 3");
    const int t = m - 3;
    std::vector<RegexAst> parts{RegexAst::star(lit('a')), lit('c')};
    if (t == 0) {
        parts.push_back(RegexAst::star(block_union()));
    } else {
        auto bs = RegexAst::at_most(lit('b'), t);
        parts.push_back(RegexAst::star(RegexAst::concat({bs, block_union()})));
        parts.push_back(bs);
    }
    parts.push_back(RegexAst::plus(lit('a')));
    parts.push_back(RegexAst::star(lit('c')));
    return RegexAst::concat(std::move(parts));
}

const Dfa& z_dfa() {
    static const Dfa dfa = compile(z_regex());
    return dfa;
}

const Dfa& w_dfa(int m) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<Dfa>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[m];
    if (!slot) slot = std::make_unique<Dfa>(compile(w_regex(m)));
    return *slot;
}

int ZBlock::width() const {
    switch (kind) {
    case Kind::C: return 1;
    case Kind::BC: return 2;
    default: return a_run + 1;
    }
}

std::string ZBlock::text() const {
    switch (kind) {
    case Kind::C: return "c";
    case Kind::BC: return "bc";
    case Kind::AB: return std::string(static_cast<std::size_t>(a_run), 'a') + "b";
    case Kind::AC: return std::string(static_cast<std::size_t>(a_run), 'a') + "c";
    }
    return {};
}

std::vector<ZBlock> unique_factor_decomposition(const Word& z) {
    const std::string& s = z.str();
    auto reject = [&]() { return NotInLanguage("\"" + s + "\" does not match a* c (c ∪ bc ∪ a⁺b ∪ a⁺c)*"); };
    std::vector<ZBlock> blocks;
    std::size_t i = 0;
    while (i < s.size()) {
        if (s[i] == 'c') {
            blocks.push_back({ZBlock::Kind::C, 0});
            ++i;
        } else if (s[i] == 'b') {
            if (blocks.empty() || i + 1 >= s.size() || s[i + 1] != 'c') throw reject();
            blocks.push_back({ZBlock::Kind::BC, 0});
            i += 2;
        } else {
            std::size_t j = i;
            while (j < s.size() && s[j] == 'a') ++j;
            if (j == s.size()) throw reject();
            const int run = static_cast<int>(j - i);
            if (s[j] == 'b') {
                if (blocks.empty()) throw reject();
                blocks.push_back({ZBlock::Kind::AB, run});
            } else {
                blocks.push_back({ZBlock::Kind::AC, run});
            }
            i = j + 1;
        }
    }
    if (blocks.empty()) throw reject();
    return blocks;
}

std::string format_blocks(const std::vector<ZBlock>& blocks) {
    std::string out;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (i) out += '|';
        out += blocks[i].text();
    }
    return out;
}

WSplit split_W_word(const Word& w) {
    if (!w_dfa(3).accepts(w)) throw NotInLanguage("\"" + w.str() + "\" does not match a* c (c ∪ bc ∪ a⁺b ∪ a⁺c)* a⁺ c*");
    const std::string& s = w.str();
    std::size_t end = s.size();
    int j = 0;
    while (end > 0 && s[end - 1] == 'c') {
        --end;
        ++j;
    }
    // Words of Z_k end in b or c, so the whole a-run before c^j belongs to the suffix.
    while (end > 0 && s[end - 1] == 'a') --end;
    WSplit out;
    out.j = j;
    out.k = static_cast<int>(end);
    out.z = Word(s.substr(0, end));
    return out;
}

} // namespace permfib
