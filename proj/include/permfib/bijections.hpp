#pragma once

#include <string>
#include <vector>

#include "permfib/composition.hpp"
#include "permfib/permutation.hpp"
#include "permfib/regex.hpp"
#include "permfib/word.hpp"

namespace permfib {

/// The unique permutation with descent composition L whose inverse has no peaks.
/// Letter r starts run k-r+1 (r = 1..k); letters k+1..n fill the remaining
/// positions in ascending order. Throws InvalidInput for an empty composition.
Permutation zero_ipk_permutation(const Composition& L);

/// pi = alpha beta gamma with alpha, gamma increasing and beta decreasing;
/// the left-peak letter is in alpha and the right-valley letter in gamma.
struct CanonicalDecomposition {
    std::vector<int> alpha;
    std::vector<int> beta;
    std::vector<int> gamma;

    /// "1 2 5 10 12 | 8 6 4 | 3 7 9 11"
    std::string to_string() const;
    friend bool operator==(const CanonicalDecomposition&, const CanonicalDecomposition&) = default;
};

/// lpk(p) == 1.
bool in_N(const Permutation& p);
/// lpk(p) == 1 and the inverse avoids the consecutive pattern m...21.
bool in_N_prime(const Permutation& p, int m = 3);

/// Throws NotInDomain when lpk(p) != 1.
CanonicalDecomposition canonical_decomposition(const Permutation& p);

/// w_v = a, b, c according to the block of the canonical decomposition
/// containing the value v. Throws NotInDomain when lpk(p) != 1.
Word phi(const Permutation& p);

/// True iff w = a^i c u a c^j for some i, j >= 0.
bool has_N_image_form(std::string_view w);

/// Unique p in N_n with phi(p) = w. Throws NotInDomain if w is not of the form
/// a^i c u a c^j.
Permutation phi_inverse(const Word& w);

/// w = a^i c u a c^j avoiding b^{m-1}a, b^m, c b^{m-2} a and c b^{m-1}.
/// Throws InvalidInput for m < 3.
bool is_in_W(std::string_view w, int m = 3);
inline bool is_in_W(const Word& w, int m = 3) { return is_in_W(w.view(), m); }

/// The four forbidden factors for a given m, in the order listed above.
std::vector<std::string> W_forbidden_factors(int m);

/// A 2 x k tiling by monominoes (1) and horizontal dominoes (2).
struct Tiling {
    std::vector<int> top;
    std::vector<int> bottom;

    int width() const;
    /// Row sums agree, every block is 1 or 2, and the top row starts with a monomino.
    bool is_valid() const;

    /// Two lines of block codes: "1 2 2\n2 2 1".
    std::string serialize() const;
    /// Inverse of serialize(). Throws InvalidInput on malformed text.
    static Tiling parse(std::string_view text);
    /// ASCII box drawing of both rows.
    std::string render() const;

    friend bool operator==(const Tiling&, const Tiling&) = default;
    friend auto operator<=>(const Tiling&, const Tiling&) = default;
};

/// Image of z under the block table c, bc, a^{i-1}b, a^{i-1}c -> segments.
/// Throws NotInLanguage if z is not in Z_k.
Tiling z_to_tiling(const Word& z);

/// Cuts t at every full-height seam and inverts the block table.
/// Throws InvalidInput if t is not in T_k.
Word tiling_to_z(const Tiling& t);

/// All tilings in T_k ordered by top row, then bottom row (lexicographic on
/// block codes). Throws InvalidInput for k < 1.
std::vector<Tiling> enumerate_tilings(int k);

/// All 1 x k monomino/domino rows, lexicographic on block codes.
std::vector<std::vector<int>> enumerate_row_tilings(int k);

struct TripleJKT {
    int j = 0;
    int k = 0;
    Tiling tiling;
    friend bool operator==(const TripleJKT&, const TripleJKT&) = default;
};

/// phi, then split_W_word, then z_to_tiling. Throws NotInDomain when p is not in N'_n.
TripleJKT nprime_to_triple(const Permutation& p);

/// Inverse of nprime_to_triple for permutations of length n.
/// Throws InvalidInput if the triple is out of range for n.
Permutation triple_to_nprime(const TripleJKT& triple, int n);

} // namespace permfib
