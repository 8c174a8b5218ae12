#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "permfib/bigint.hpp"
#include "permfib/composition.hpp"

namespace permfib {

using Json = nlohmann::ordered_json;

/// Outcome of checking one claim over a parameter range.
struct VerificationReport {
    std::string claim;
    Json params = Json::object();
    bool pass = true;
    /// Full reproduction data for the first failure; present iff !pass.
    std::optional<Json> counterexample;
    /// Summary numbers (class counts, cases checked, ...).
    Json details = Json::object();
    std::int64_t millis = 0;

    /// Records the first failure only.
    void fail(Json reproduction);

    /// {claim, params, pass, counterexample, details, millis}; millis is
    /// omitted when with_timing is false.
    Json to_json(bool with_timing = true) const;
};

/// Largest n the permutation oracles accept without an override.
inline constexpr int kOracleMaxN = 10;

/// #{p in S_n(12...m) : ipk(p) = 0}, by enumeration.
/// Requires 1 <= n and m >= 3; n > kOracleMaxN throws ResourceLimit unless allow_large.
std::uint64_t count_ipk0_avoiders(int n, int m, bool allow_large = false);

/// #{p in S_n(m...21) : ilpk(p) = 1}, by enumeration.
std::uint64_t count_ilpk1_avoiders(int n, int m, bool allow_large = false);

/// #{p in N_n : inverse(p) avoids m...21}, by enumeration.
std::uint64_t count_nprime(int n, int m = 3, bool allow_large = false);

/// Groups S_n by descent composition; each class must hold exactly one
/// permutation with ipk = 0, equal to zero_ipk_permutation(L).
VerificationReport verify_descent_uniqueness(int n);

/// The four corollary counts (alternating, des, pk, lpk with ipk = 0) for S_n.
VerificationReport verify_corollaries(int n);

using DescentPairMatrix = std::map<std::pair<Composition, Composition>, std::uint64_t>;

/// Entry (L, M) counts permutations with descent composition L whose inverse has
/// descent composition M. Zero entries are not stored. Requires n <= 8.
DescentPairMatrix descent_pair_matrix(int n);

/// The three Fibonacci/binomial sum identities, for all n <= n_max (<= 60).
VerificationReport verify_identity_sums(int n_max);

/// sum_{i=1}^{n-1} sum_{k=1}^{i} f_{k-1} f_k
BigInt theorem2_double_sum(int n);
/// f_{n-1} f_n - floor((n+1)/2)
BigInt theorem2_closed_form(int n);
/// sum_{k=1}^{n-1} sum_{j=0}^{n-k-1} f_{k-1} f_k
BigInt eq1_sum(int n);

// Claim suites driven by the CLI. Each checks every n in [1, n_max] (or
// [0, n_max] where meaningful) and every m given.

VerificationReport check_theorem1(int n_max, const std::vector<int>& ms, bool allow_large = false);
VerificationReport check_theorem2(int n_max, bool allow_large = false);
VerificationReport check_theorem4(int n_max);
VerificationReport check_corollaries(int n_max);
/// phi restricted to N'_n (inverse avoiding m...21) is a bijection onto W_n^{(m)}.
VerificationReport check_prop6(int n_max, const std::vector<int>& ms, bool allow_large = false);
/// W_n^{(m)} by definition equals the words matching w_regex(m). Every match of
/// w_regex(3) has exactly one parse; for m > 3 ambiguous words are only counted.
VerificationReport check_prop7(int n_max, const std::vector<int>& ms);
/// |Z_k| = f_{k-1} f_k by DFA count and through the tiling bijection.
VerificationReport check_prop8(int k_max);
/// |N'_n| = |W_n| (definition) = |W_n| (DFA) = sum of |T_k| over triples.
VerificationReport check_eq1(int n_max, bool allow_large = false);
VerificationReport check_gf3(const std::vector<int>& ms, int x_order, int t_order);
VerificationReport check_gf5(const std::vector<int>& ms, int x_order, int t_order);
/// Coefficients of ogf_ilpk_general(m) against DFA word counts and the oracle.
VerificationReport check_gf_general(int n_max, const std::vector<int>& ms, bool allow_large = false);

} // namespace permfib
