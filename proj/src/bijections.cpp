#include "permfib/bijections.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "permfib/error.hpp"

namespace permfib {

Permutation zero_ipk_permutation(const Composition& L) {
    if (L.empty()) throw InvalidInput("zero_ipk_permutation needs a nonempty composition");
    const int n = L.total();
    const int k = static_cast<int>(L.num_parts());
    std::vector<int> letters(static_cast<std::size_t>(n), 0);
    int start = 0;
    for (int run = 0; run < k; ++run) {
        letters[static_cast<std::size_t>(start)] = k - run;
        start += L.part(static_cast<std::size_t>(run));
    }
    int next = k + 1;
    for (int& x : letters)
        if (x == 0) x = next++;
    return Permutation(std::move(letters));
}

std::string CanonicalDecomposition::to_string() const {
    auto join = [](const std::vector<int>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
        return s;
    };
    std::string out = join(alpha);
    out += beta.empty() ? " |" : " | " + join(beta);
    out += gamma.empty() ? " |" : " | " + join(gamma);
    return out;
}

bool in_N(const Permutation& p) { return lpk(p.letters()) == 1; }

bool in_N_prime(const Permutation& p, int m) {
    return in_N(p) && avoids_consecutive(inverse(p), decreasing_pattern(m));
}

namespace {

NotInDomain not_in_N(const Permutation& p) {
    return NotInDomain("lpk ≠ 1: not in N_n (" + p.to_string() + ")");
}

} // namespace

CanonicalDecomposition canonical_decomposition(const Permutation& p) {
    if (!in_N(p)) throw not_in_N(p);
    const StatReport s = statistics(p);
    // 1-based; exactly one of each because lpk = 1.
    const int i = s.left_peak_positions.front();
    const int j = s.right_valley_positions.front();
    auto w = p.letters();
    CanonicalDecomposition d;
    d.alpha.assign(w.begin(), w.begin() + i);
    d.beta.assign(w.begin() + i, w.begin() + (j - 1));
    d.gamma.assign(w.begin() + (j - 1), w.end());
    return d;
}

Word phi(const Permutation& p) {
    const CanonicalDecomposition d = canonical_decomposition(p);
    std::string w(static_cast<std::size_t>(p.size()), ' ');
    for (int v : d.alpha) w[static_cast<std::size_t>(v - 1)] = 'a';
    for (int v : d.beta) w[static_cast<std::size_t>(v - 1)] = 'b';
    for (int v : d.gamma) w[static_cast<std::size_t>(v - 1)] = 'c';
    return Word(std::move(w));
}

bool has_N_image_form(std::string_view w) {
    if (w.find_first_not_of(kAlphabet) != std::string_view::npos) return false;
    const std::size_t first = w.find_first_not_of('a');
    if (first == std::string_view::npos || w[first] != 'c') return false;
    const std::size_t last = w.find_last_not_of('c');
    if (last == std::string_view::npos || w[last] != 'a') return false;
    return first < last;
}

Permutation phi_inverse(const Word& w) {
    if (!has_N_image_form(w.view()))
        throw NotInDomain("\"" + w.str() + "\" is not of the form a^i c u a c^j");
    std::vector<int> alpha, beta, gamma;
    for (std::size_t v = 0; v < w.size(); ++v) {
        const int value = static_cast<int>(v) + 1;
        switch (w[v]) {
        case 'a': alpha.push_back(value); break;
        case 'b': beta.push_back(value); break;
        default: gamma.push_back(value); break;
        }
    }
    std::reverse(beta.begin(), beta.end());
    alpha.insert(alpha.end(), beta.begin(), beta.end());
    alpha.insert(alpha.end(), gamma.begin(), gamma.end());
    return Permutation(std::move(alpha));
}

std::vector<std::string> W_forbidden_factors(int m) {
    if (m < 3) throw InvalidInput("W_n needs m >= 3");
    const auto bs = [](int count) { return std::string(static_cast<std::size_t>(count), 'b'); };
    return {bs(m - 1) + "a", bs(m), "c" + bs(m - 2) + "a", "c" + bs(m - 1)};
}

bool is_in_W(std::string_view w, int m) {
    const auto forbidden = W_forbidden_factors(m);
    if (!has_N_image_form(w)) return false;
    return std::all_of(forbidden.begin(), forbidden.end(), [&](const std::string& f) { return avoids_factor(w, f); });
}

// ---------------------------------------------------------------------------
// Tilings.

namespace {

int row_width(const std::vector<int>& row) {
    int s = 0;
    for (int b : row) s += b;
    return s;
}

// Row of width `width` starting with a monomino (or not), then dominoes, closed
// by a monomino when the parity requires it.
std::vector<int> brick_row(int width, bool starts_with_monomino) {
    std::vector<int> row;
    int filled = 0;
    if (starts_with_monomino) {
        row.push_back(1);
        filled = 1;
    }
    while (filled + 2 <= width) {
        row.push_back(2);
        filled += 2;
    }
    if (filled < width) row.push_back(1);
    return row;
}

void append_segment(Tiling& t, const ZBlock& block) {
    auto add = [&](const std::vector<int>& top, const std::vector<int>& bottom) {
        t.top.insert(t.top.end(), top.begin(), top.end());
        t.bottom.insert(t.bottom.end(), bottom.begin(), bottom.end());
    };
    const int i = block.width();
    switch (block.kind) {
    case ZBlock::Kind::C: add({1}, {1}); break;
    case ZBlock::Kind::BC: add({2}, {2}); break;
    case ZBlock::Kind::AC: add(brick_row(i, true), brick_row(i, false)); break;
    case ZBlock::Kind::AB: add(brick_row(i, false), brick_row(i, true)); break;
    }
}

std::vector<int> boundaries(const std::vector<int>& row) {
    std::vector<int> out;
    int x = 0;
    for (int b : row) out.push_back(x += b);
    return out;
}

} // namespace

int Tiling::width() const { return row_width(top); }

bool Tiling::is_valid() const {
    auto blocks_ok = [](const std::vector<int>& row) {
        return std::all_of(row.begin(), row.end(), [](int b) { return b == 1 || b == 2; });
    };
    return !top.empty() && top.front() == 1 && blocks_ok(top) && blocks_ok(bottom) &&
           row_width(top) == row_width(bottom);
}

std::string Tiling::serialize() const {
    std::string out;
    for (std::size_t i = 0; i < top.size(); ++i) out += (i ? " " : "") + std::to_string(top[i]);
    out += '\n';
    for (std::size_t i = 0; i < bottom.size(); ++i) out += (i ? " " : "") + std::to_string(bottom[i]);
    return out;
}

Tiling Tiling::parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string lines[2];
    if (!std::getline(in, lines[0]) || !std::getline(in, lines[1]))
        throw InvalidInput("tiling text needs two lines");
    std::string rest;
    while (std::getline(in, rest))
        if (rest.find_first_not_of(" \t\r") != std::string::npos) throw InvalidInput("tiling text has more than two rows");
    Tiling t;
    std::vector<int>* rows[2] = {&t.top, &t.bottom};
    for (int r = 0; r < 2; ++r) {
        for (char c : lines[r]) {
            if (c == '1' || c == '2')
                rows[r]->push_back(c - '0');
            else if (c != ' ' && c != '\t' && c != '\r' && c != ',')
                throw InvalidInput(std::string("unexpected character '") + c + "' in tiling");
        }
    }
    if (!t.is_valid()) throw InvalidInput("not a valid tiling: rows must have equal width and start top-left with a monomino");
    return t;
}

std::string Tiling::render() const {
    const int k = width();
    const auto top_cuts = boundaries(top);
    const auto bottom_cuts = boundaries(bottom);
    auto has = [](const std::vector<int>& cuts, int x) { return x == 0 || std::binary_search(cuts.begin(), cuts.end(), x); };
    auto border = [&](bool use_top, bool use_bottom) {
        std::string line;
        for (int x = 0; x <= k; ++x) {
            line += ((use_top && has(top_cuts, x)) || (use_bottom && has(bottom_cuts, x))) ? '+' : '-';
            if (x < k) line += '-';
        }
        return line;
    };
    auto cells = [&](const std::vector<int>& cuts) {
        std::string line;
        for (int x = 0; x <= k; ++x) {
            line += has(cuts, x) ? '|' : ' ';
            if (x < k) line += ' ';
        }
        return line;
    };
    return border(true, false) + '\n' + cells(top_cuts) + '\n' + border(true, true) + '\n' + cells(bottom_cuts) + '\n' +
           border(false, true) + '\n';
}

Tiling z_to_tiling(const Word& z) {
    Tiling t;
    for (const ZBlock& b : unique_factor_decomposition(z)) append_segment(t, b);
    return t;
}

Word tiling_to_z(const Tiling& t) {
    if (!t.is_valid()) throw InvalidInput("not a tiling in T_k");
    std::string z;
    std::size_t ti = 0, bi = 0;
    while (ti < t.top.size()) {
        // Grow the segment until both rows reach the same seam.
        std::vector<int> seg_top{t.top[ti++]}, seg_bottom{t.bottom[bi++]};
        int wt = seg_top.back(), wb = seg_bottom.back();
        while (wt != wb) {
            if (wt < wb) {
                seg_top.push_back(t.top[ti++]);
                wt += seg_top.back();
            } else {
                seg_bottom.push_back(t.bottom[bi++]);
                wb += seg_bottom.back();
            }
        }
        const int i = wt;
        ZBlock block{};
        if (i == 1)
            block = {ZBlock::Kind::C, 0};
        else if (seg_top == std::vector<int>{2} && seg_bottom == std::vector<int>{2})
            block = {ZBlock::Kind::BC, 0};
        else
            block = {seg_top.front() == 1 ? ZBlock::Kind::AC : ZBlock::Kind::AB, i - 1};
        // An indecomposable segment is forced by its width and top-left block.
        Tiling expected;
        append_segment(expected, block);
        if (expected.top != seg_top || expected.bottom != seg_bottom) throw InvalidInput("unexpected segment in tiling");
        z += block.text();
    }
    return Word(std::move(z));
}

std::vector<std::vector<int>> enumerate_row_tilings(int k) {
    if (k < 0) throw InvalidInput("row width must be nonnegative");
    std::vector<std::vector<int>> out;
    std::vector<int> row;
    std::function<void(int)> rec = [&](int remaining) {
        if (remaining == 0) {
            out.push_back(row);
            return;
        }
        for (int b = 1; b <= std::min(2, remaining); ++b) {
            row.push_back(b);
            rec(remaining - b);
            row.pop_back();
        }
    };
    rec(k);
    return out;
}

std::vector<Tiling> enumerate_tilings(int k) {
    if (k < 1) throw InvalidInput("T_k needs k >= 1");
    const auto tails = enumerate_row_tilings(k - 1);
    const auto bottoms = enumerate_row_tilings(k);
    std::vector<Tiling> out;
    out.reserve(tails.size() * bottoms.size());
    for (const auto& tail : tails) {
        std::vector<int> top{1};
        top.insert(top.end(), tail.begin(), tail.end());
        for (const auto& bottom : bottoms) out.push_back({top, bottom});
    }
    return out;
}

TripleJKT nprime_to_triple(const Permutation& p) {
    if (!in_N(p)) throw not_in_N(p);
    if (!in_N_prime(p, 3)) throw NotInDomain("inverse contains consecutive 321: not in N'_n (" + p.to_string() + ")");
    const WSplit split = split_W_word(phi(p));
    return {split.j, split.k, z_to_tiling(split.z)};
}

Permutation triple_to_nprime(const TripleJKT& triple, int n) {
    if (triple.k < 1 || triple.k > n - 1) throw InvalidInput("triple needs 1 <= k <= n-1");
    if (triple.j < 0 || triple.j > n - triple.k - 1) throw InvalidInput("triple needs 0 <= j <= n-k-1");
    if (triple.tiling.width() != triple.k) throw InvalidInput("tiling width must equal k");
    const Word z = tiling_to_z(triple.tiling);
    const Word w = z + Word::repeat('a', static_cast<std::size_t>(n - triple.j - triple.k)) +
                   Word::repeat('c', static_cast<std::size_t>(triple.j));
    return phi_inverse(w);
}

} // namespace permfib
