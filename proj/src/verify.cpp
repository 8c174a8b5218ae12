#include "permfib/verify.hpp"

#include <chrono>
#include <set>

#include "permfib/bijections.hpp"
#include "permfib/error.hpp"
#include "permfib/permutation.hpp"
#include "permfib/regex.hpp"
#include "permfib/series.hpp"
#include "permfib/word.hpp"

namespace permfib {

void VerificationReport::fail(Json reproduction) {
    if (pass) counterexample = std::move(reproduction);
    pass = false;
}

Json VerificationReport::to_json(bool with_timing) const {
    Json j;
    j["claim"] = claim;
    j["params"] = params;
    j["pass"] = pass;
    j["counterexample"] = counterexample ? *counterexample : Json(nullptr);
    j["details"] = details;
    if (with_timing) j["millis"] = millis;
    return j;
}

namespace {

// Numbers that may outgrow 64 bits travel as decimal strings.
Json big(const BigInt& v) {
    if (v >= 0 && v <= std::numeric_limits<std::int64_t>::max()) return static_cast<std::int64_t>(v);
    return v.str();
}

Json rational(const Rational& r) {
    if (denominator(r) == 1) return big(numerator(r));
    return to_string(r);
}

class Stopwatch {
public:
    explicit Stopwatch(VerificationReport& r) : report_(r), start_(std::chrono::steady_clock::now()) {}
    ~Stopwatch() {
        report_.millis =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    VerificationReport& report_;
    std::chrono::steady_clock::time_point start_;
};

void check_oracle_n(int n, bool allow_large) {
    if (n < 1) throw InvalidInput("oracle counts need n >= 1");
    if (n > kOracleMaxN && !allow_large)
        throw ResourceLimit("n = " + std::to_string(n) + " exceeds the oracle cap " + std::to_string(kOracleMaxN));
}

void check_m(int m) {
    if (m < 3) throw InvalidInput("pattern length m must be >= 3");
}

BigInt f2(long n) { return fib(2, n); }

} // namespace

std::uint64_t count_ipk0_avoiders(int n, int m, bool allow_large) {
    check_oracle_n(n, allow_large);
    check_m(m);
    const Permutation pattern = increasing_pattern(m);
    return count_permutations(
        n, [&](const Permutation& p) { return avoids_consecutive(p, pattern) && ipk(p) == 0; }, true);
}

std::uint64_t count_ilpk1_avoiders(int n, int m, bool allow_large) {
    check_oracle_n(n, allow_large);
    check_m(m);
    const Permutation pattern = decreasing_pattern(m);
    return count_permutations(
        n, [&](const Permutation& p) { return avoids_consecutive(p, pattern) && ilpk(p) == 1; }, true);
}

std::uint64_t count_nprime(int n, int m, bool allow_large) {
    check_oracle_n(n, allow_large);
    check_m(m);
    const Permutation pattern = decreasing_pattern(m);
    return count_permutations(
        n, [&](const Permutation& p) { return lpk(p.letters()) == 1 && avoids_consecutive(inverse(p), pattern); },
        true);
}

VerificationReport verify_descent_uniqueness(int n) {
    VerificationReport r;
    r.claim = "descent-uniqueness";
    r.params = {{"n", n}};
    Stopwatch timer(r);
    std::map<Composition, std::vector<Permutation>> zero_ipk;
    for (const Permutation& p : enumerate_symmetric_group(n))
        if (ipk(p) == 0) zero_ipk[descent_composition(p)].push_back(p);
    const auto classes = enumerate_compositions(n);
    for (const Composition& L : classes) {
        const auto it = zero_ipk.find(L);
        const std::size_t found = it == zero_ipk.end() ? 0 : it->second.size();
        const Permutation expected = zero_ipk_permutation(L);
        if (found != 1 || it->second.front() != expected) {
            Json members = Json::array();
            if (found)
                for (const auto& p : it->second) members.push_back(p.to_string());
            r.fail({{"n", n},
                    {"composition", L.to_string()},
                    {"zero_ipk_members", members},
                    {"constructed", expected.to_string()}});
        }
    }
    r.details = {{"classes", classes.size()}, {"zero_ipk_permutations", zero_ipk.size()}};
    return r;
}

VerificationReport verify_corollaries(int n) {
    VerificationReport r;
    r.claim = "corollaries";
    r.params = {{"n", n}};
    Stopwatch timer(r);
    std::size_t alternating = 0, reverse_alternating = 0;
    std::vector<std::uint64_t> by_des(static_cast<std::size_t>(n) + 1), by_pk(by_des), by_lpk(by_des);
    for (const Permutation& p : enumerate_symmetric_group(n)) {
        if (ipk(p) != 0) continue;
        alternating += is_alternating(p);
        reverse_alternating += is_reverse_alternating(p);
        ++by_des[static_cast<std::size_t>(des(p.letters()))];
        ++by_pk[static_cast<std::size_t>(pk(p.letters()))];
        ++by_lpk[static_cast<std::size_t>(lpk(p.letters()))];
    }
    if (alternating != 1) r.fail({{"n", n}, {"criterion", "alternating"}, {"expected", 1}, {"actual", alternating}});
    if (reverse_alternating != 1)
        r.fail({{"n", n}, {"criterion", "reverse-alternating"}, {"expected", 1}, {"actual", reverse_alternating}});
    // Every k in 0..n, so vanishing counts are checked too.
    for (int k = 0; k <= n; ++k) {
        const auto check = [&](const char* stat, std::uint64_t actual, const BigInt& expected) {
            if (BigInt(actual) != expected)
                r.fail({{"n", n}, {"criterion", stat}, {"k", k}, {"expected", big(expected)}, {"actual", actual}});
        };
        const auto ku = static_cast<std::size_t>(k);
        check("des", by_des[ku], binomial(n - 1, k));
        check("pk", by_pk[ku], binomial(n, 2 * k + 1));
        check("lpk", by_lpk[ku], binomial(n, 2 * k));
    }
    r.details = {{"alternating", alternating}, {"reverse_alternating", reverse_alternating},
                 {"by_des", by_des},           {"by_pk", by_pk},
                 {"by_lpk", by_lpk}};
    return r;
}

DescentPairMatrix descent_pair_matrix(int n) {
    if (n > 8) throw ResourceLimit("descent_pair_matrix is limited to n <= 8");
    DescentPairMatrix out;
    for (const Permutation& p : enumerate_symmetric_group(n))
        ++out[{descent_composition(p), descent_composition(inverse(p))}];
    return out;
}

BigInt theorem2_double_sum(int n) {
    BigInt total = 0;
    for (int i = 1; i <= n - 1; ++i)
        for (int k = 1; k <= i; ++k) total += f2(k - 1) * f2(k);
    return total;
}

BigInt theorem2_closed_form(int n) { return f2(n - 1) * f2(n) - (n + 1) / 2; }

BigInt eq1_sum(int n) {
    BigInt total = 0;
    for (int k = 1; k <= n - 1; ++k)
        for (int j = 0; j <= n - k - 1; ++j) total += f2(k - 1) * f2(k);
    return total;
}

VerificationReport verify_identity_sums(int n_max) {
    if (n_max > 60) throw ResourceLimit("identity sums are checked up to n = 60");
    VerificationReport r;
    r.claim = "identity-sums";
    r.params = {{"n_max", n_max}};
    Stopwatch timer(r);
    std::size_t cases = 0;
    for (int n = 1; n <= n_max; ++n) {
        const BigInt lhs = theorem2_double_sum(n), closed = theorem2_closed_form(n), eq1 = eq1_sum(n);
        ++cases;
        if (lhs != closed || lhs != eq1)
            r.fail({{"n", n}, {"double_sum", big(lhs)}, {"closed_form", big(closed)}, {"eq1_sum", big(eq1)}});
        for (int k = 0; 2 * k + 1 <= n; ++k) {
            BigInt hockey = 0;
            for (int j = 0; j <= n - 1; ++j) hockey += binomial(j, 2 * k);
            ++cases;
            if (hockey != binomial(n, 2 * k + 1))
                r.fail({{"n", n}, {"k", k}, {"hockey_sum", big(hockey)}, {"binomial", big(binomial(n, 2 * k + 1))}});
        }
    }
    r.details = {{"cases", cases}};
    return r;
}

// ---------------------------------------------------------------------------
// Claim suites.

VerificationReport check_theorem1(int n_max, const std::vector<int>& ms, bool allow_large) {
    VerificationReport r;
    r.claim = "theorem1";
    r.params = {{"n_max", n_max}, {"m", ms}};
    Stopwatch timer(r);
    Json counts = Json::object();
    for (int m : ms) {
        Json row = Json::array();
        for (int n = 1; n <= n_max; ++n) {
            const std::uint64_t actual = count_ipk0_avoiders(n, m, allow_large);
            const BigInt expected = fib(m - 1, n);
            row.push_back(actual);
            if (BigInt(actual) != expected)
                r.fail({{"n", n}, {"m", m}, {"oracle", actual}, {"fib", big(expected)}});
        }
        counts[std::to_string(m)] = row;
    }
    r.details = {{"counts", counts}};
    return r;
}

VerificationReport check_theorem2(int n_max, bool allow_large) {
    VerificationReport r;
    r.claim = "theorem2";
    r.params = {{"n_max", n_max}, {"m", 3}};
    Stopwatch timer(r);
    Json row = Json::array();
    for (int n = 1; n <= n_max; ++n) {
        const std::uint64_t actual = count_ilpk1_avoiders(n, 3, allow_large);
        const BigInt expected = theorem2_closed_form(n);
        row.push_back(actual);
        if (BigInt(actual) != expected) r.fail({{"n", n}, {"oracle", actual}, {"closed_form", big(expected)}});
    }
    r.details = {{"counts", row}};
    return r;
}

VerificationReport check_theorem4(int n_max) {
    VerificationReport r;
    r.claim = "theorem4";
    r.params = {{"n_max", n_max}};
    Stopwatch timer(r);
    Json classes = Json::array();
    for (int n = 1; n <= n_max; ++n) {
        VerificationReport sub = verify_descent_uniqueness(n);
        classes.push_back(sub.details["classes"]);
        if (!sub.pass) r.fail(*sub.counterexample);
    }
    const std::string example = zero_ipk_permutation(Composition({3, 2, 3, 1})).to_compact_string();
    if (example != "456372891") r.fail({{"composition", "(3,2,3,1)"}, {"expected", "456372891"}, {"actual", example}});
    r.details = {{"classes", classes}, {"example", example}};
    return r;
}

VerificationReport check_corollaries(int n_max) {
    VerificationReport r;
    r.claim = "corollaries";
    r.params = {{"n_max", n_max}};
    Stopwatch timer(r);
    for (int n = 1; n <= n_max; ++n) {
        VerificationReport sub = verify_corollaries(n);
        if (!sub.pass) r.fail(*sub.counterexample);
    }
    VerificationReport sums = verify_identity_sums(std::max(n_max, 1));
    if (!sums.pass) r.fail(*sums.counterexample);
    r.details = {{"identity_cases", sums.details["cases"]}};
    return r;
}

VerificationReport check_prop6(int n_max, const std::vector<int>& ms, bool allow_large) {
    VerificationReport r;
    r.claim = "prop6";
    r.params = {{"n_max", n_max}, {"m", ms}};
    Stopwatch timer(r);
    Json sizes = Json::object();
    for (int m : ms) {
        check_m(m);
        Json row = Json::array();
        for (int n = 1; n <= n_max; ++n) {
            check_oracle_n(n, allow_large);
            std::set<std::string> images;
            std::size_t domain = 0;
            for (const Permutation& p : enumerate_symmetric_group(n, true)) {
                if (!in_N_prime(p, m)) continue;
                ++domain;
                const Word w = phi(p);
                if (!is_in_W(w, m)) r.fail({{"n", n}, {"m", m}, {"perm", p.to_string()}, {"phi", w.str()}, {"issue", "image not in W"}});
                if (phi_inverse(w) != p)
                    r.fail({{"n", n}, {"m", m}, {"perm", p.to_string()}, {"phi", w.str()}, {"issue", "phi_inverse round trip"}});
                images.insert(w.str());
            }
            std::size_t w_size = 0;
            for_each_word(n, [&](std::string_view w) { w_size += is_in_W(w, m); });
            if (images.size() != domain || domain != w_size)
                r.fail({{"n", n}, {"m", m}, {"nprime", domain}, {"distinct_images", images.size()}, {"W", w_size}});
            row.push_back(domain);
        }
        sizes[std::to_string(m)] = row;
    }
    r.details = {{"sizes", sizes}};
    return r;
}

VerificationReport check_prop7(int n_max, const std::vector<int>& ms) {
    if (n_max > 14) throw ResourceLimit("word enumeration is limited to length 14");
    VerificationReport r;
    r.claim = "prop7";
    r.params = {{"n_max", n_max}, {"m", ms}};
    Stopwatch timer(r);
    Json sizes = Json::object();
    std::size_t parses_checked = 0;
    std::map<std::string, std::size_t> ambiguous;
    for (int m : ms) {
        check_m(m);
        ambiguous[std::to_string(m)] = 0;
        const RegexAst regex = w_regex(m);
        const Dfa& dfa = w_dfa(m);
        Json row = Json::array();
        for (int n = 1; n <= n_max; ++n) {
            std::size_t members = 0;
            for_each_word(n, [&](std::string_view w) {
                const bool def = is_in_W(w, m);
                const bool by_dfa = dfa.accepts(w);
                members += def;
                if (def != by_dfa) {
                    r.fail({{"m", m}, {"word", std::string(w)}, {"definition", def}, {"dfa", by_dfa}});
                    return;
                }
                if (!def) return;
                ++parses_checked;
                const BigInt parses = count_parses(regex, w);
                // Only the m = 3 expression is unambiguous; for larger m the bounded
                // b-runs can be split between adjacent factors (cbca for m = 4).
                if (parses != 1 && m == 3) r.fail({{"m", m}, {"word", std::string(w)}, {"parses", big(parses)}});
                if (parses == 0) r.fail({{"m", m}, {"word", std::string(w)}, {"parses", 0}});
                if (parses > 1) ++ambiguous[std::to_string(m)];
            });
            if (BigInt(members) != dfa.count_accepted(n))
                r.fail({{"m", m}, {"n", n}, {"definition", members}, {"dfa_paths", big(dfa.count_accepted(n))}});
            row.push_back(members);
        }
        sizes[std::to_string(m)] = row;
    }
    r.details = {{"sizes", sizes}, {"parses_checked", parses_checked}, {"ambiguous_words", ambiguous}};
    return r;
}

VerificationReport check_prop8(int k_max) {
    VerificationReport r;
    r.claim = "prop8";
    r.params = {{"k_max", k_max}};
    Stopwatch timer(r);
    Json sizes = Json::array();
    const RegexAst regex = z_regex();
    for (int k = 1; k <= k_max; ++k) {
        const BigInt expected = f2(k - 1) * f2(k);
        const BigInt by_dfa = z_dfa().count_accepted(k);
        const auto tilings = enumerate_tilings(k);
        if (by_dfa != expected || BigInt(tilings.size()) != expected)
            r.fail({{"k", k}, {"expected", big(expected)}, {"dfa", big(by_dfa)}, {"tilings", tilings.size()}});
        std::set<Tiling> images;
        for (const Word& z : z_dfa().accepted_words(k)) {
            const Tiling t = z_to_tiling(z);
            if (t.width() != k || !t.is_valid() || tiling_to_z(t) != z)
                r.fail({{"k", k}, {"word", z.str()}, {"tiling", t.serialize()}, {"issue", "tiling round trip"}});
            std::string rebuilt;
            for (const ZBlock& b : unique_factor_decomposition(z)) rebuilt += b.text();
            if (rebuilt != z.str())
                r.fail({{"k", k}, {"word", z.str()}, {"issue", "block decomposition does not rebuild the word"}});
            if (count_parses(regex, z.view()) != 1) r.fail({{"k", k}, {"word", z.str()}, {"issue", "ambiguous parse"}});
            images.insert(t);
        }
        if (images != std::set<Tiling>(tilings.begin(), tilings.end()))
            r.fail({{"k", k}, {"issue", "image of Z_k differs from T_k"}, {"images", images.size()}});
        sizes.push_back(big(expected));
    }
    r.details = {{"sizes", sizes}};
    return r;
}

VerificationReport check_eq1(int n_max, bool allow_large) {
    VerificationReport r;
    r.claim = "eq1";
    r.params = {{"n_max", n_max}};
    Stopwatch timer(r);
    Json rows = Json::array();
    for (int n = 1; n <= n_max; ++n) {
        const std::uint64_t nprime = count_nprime(n, 3, allow_large);
        std::uint64_t by_definition = 0;
        for_each_word(n, [&](std::string_view w) { by_definition += is_in_W(w, 3); });
        const BigInt by_dfa = w_dfa(3).count_accepted(n);
        BigInt by_tilings = 0;
        for (int k = 1; k <= n - 1; ++k) by_tilings += BigInt(enumerate_tilings(k).size()) * (n - k);
        const BigInt formula = eq1_sum(n);
        if (BigInt(nprime) != formula || BigInt(by_definition) != formula || by_dfa != formula || by_tilings != formula)
            r.fail({{"n", n},
                    {"nprime", nprime},
                    {"W_definition", by_definition},
                    {"W_dfa", big(by_dfa)},
                    {"tilings", big(by_tilings)},
                    {"formula", big(formula)}});

        // Round trip through the composite bijection on all of N'_n.
        std::set<std::tuple<int, int, Tiling>> triples;
        for (const Permutation& p : enumerate_symmetric_group(n, true)) {
            if (!in_N_prime(p, 3)) continue;
            const TripleJKT t = nprime_to_triple(p);
            const bool in_range = t.k >= 1 && t.k <= n - 1 && t.j >= 0 && t.j <= n - t.k - 1;
            if (!in_range || triple_to_nprime(t, n) != p)
                r.fail({{"n", n}, {"perm", p.to_string()}, {"j", t.j}, {"k", t.k}, {"tiling", t.tiling.serialize()}});
            triples.emplace(t.j, t.k, t.tiling);
        }
        if (triples.size() != nprime) r.fail({{"n", n}, {"issue", "composite map not injective"}});
        rows.push_back({{"n", n}, {"count", nprime}});
    }
    r.details = {{"counts", rows}};
    return r;
}

namespace {

VerificationReport check_gf(const char* claim, const std::vector<int>& ms, int x_order, int t_order,
                            std::optional<SeriesMismatch> (*compare)(int, int, int)) {
    VerificationReport r;
    r.claim = claim;
    r.params = {{"m", ms}, {"x_order", x_order}, {"t_order", t_order}};
    Stopwatch timer(r);
    for (int m : ms) {
        if (auto mismatch = compare(m, x_order, t_order))
            r.fail({{"m", m},
                    {"x_degree", mismatch->x_degree},
                    {"t_degree", mismatch->t_degree},
                    {"lhs", rational(mismatch->lhs)},
                    {"rhs", rational(mismatch->rhs)}});
    }
    return r;
}

} // namespace

VerificationReport check_gf3(const std::vector<int>& ms, int x_order, int t_order) {
    return check_gf("gf3", ms, x_order, t_order, &compare_theorem3);
}

VerificationReport check_gf5(const std::vector<int>& ms, int x_order, int t_order) {
    return check_gf("gf5", ms, x_order, t_order, &compare_theorem5);
}

VerificationReport check_gf_general(int n_max, const std::vector<int>& ms, bool allow_large) {
    VerificationReport r;
    r.claim = "gf-general";
    r.params = {{"n_max", n_max}, {"m", ms}};
    Stopwatch timer(r);
    Json coeffs = Json::object();
    for (int m : ms) {
        check_m(m);
        const RationalSeries gf = ogf_ilpk_general(m, n_max);
        Json row = Json::array();
        for (int n = 1; n <= n_max; ++n) {
            const Rational c = gf.coeff(n);
            const BigInt words = w_dfa(m).count_accepted(n);
            const std::uint64_t oracle = count_ilpk1_avoiders(n, m, allow_large);
            if (c != Rational(words) || words != BigInt(oracle))
                r.fail({{"m", m}, {"n", n}, {"gf", rational(c)}, {"dfa", big(words)}, {"oracle", oracle}});
            row.push_back(rational(c));
        }
        coeffs[std::to_string(m)] = row;
    }
    r.details = {{"coefficients", coeffs}};
    return r;
}

} // namespace permfib
