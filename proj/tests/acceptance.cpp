// Exit gate: one line per acceptance criterion, nonzero exit if any fails.
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "permfib/bijections.hpp"
#include "permfib/composition.hpp"
#include "permfib/regex.hpp"
#include "permfib/series.hpp"
#include "permfib/verify.hpp"

using namespace permfib;

namespace {

struct Outcome {
    bool pass = true;
    std::string note;

    void require(bool ok, const std::string& what) {
        if (ok) return;
        pass = false;
        note += (note.empty() ? "" : "; ") + what;
    }
    void require(const VerificationReport& r) {
        require(r.pass, r.claim + " failed: " + (r.counterexample ? r.counterexample->dump() : std::string("?")));
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Runtime budget in seconds; 0 means none.
bool run_criterion(int id, const std::string& title, double budget, const std::function<void(Outcome&)>& body) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.require(false, std::string("exception: ") + e.what());
    }
    const double elapsed = seconds_since(t0);
    if (budget > 0) {
        std::ostringstream msg;
        msg << "took " << elapsed << " s, budget " << budget << " s";
        o.require(elapsed < budget, msg.str());
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << id << ": " << title << " (" << static_cast<int>(elapsed * 1000)
              << " ms)";
    if (!o.note.empty()) std::cout << "  " << o.note;
    std::cout << std::endl;
    return o.pass;
}

const char* kTwelve = "1 2 5 10 12 8 6 4 3 7 9 11";
const char* kTwenty = "1 2 8 9 10 14 16 17 12 11 4 3 5 6 7 13 15 18 19 20";

} // namespace

int main(int argc, char** argv) {
    // argv[1..] are property-test executables for criterion 9.
    const std::vector<std::string> property_tests(argv + 1, argv + argc);
    bool all = true;

    all &= run_criterion(1, "ipk = 0 avoiders of 12...m counted by fib(m-1, n), m in {3,4,5}, n <= 9", 30, [](Outcome& o) {
        o.require(check_theorem1(9, {3, 4, 5}));
    });

    all &= run_criterion(2, "ilpk = 1 avoiders of 321 equal f_{n-1} f_n - floor((n+1)/2), n <= 10", 60, [](Outcome& o) {
        const auto r = check_theorem2(10, true);
        o.require(r);
        o.require(r.details["counts"] == Json::array({0, 1, 4, 13, 37, 101, 269, 710, 1865, 4890}), "unexpected counts");
    });

    all &= run_criterion(3, "unique zero-ipk permutation per descent composition, n <= 9", 0, [](Outcome& o) {
        o.require(check_theorem4(9));
        o.require(zero_ipk_permutation(Composition({3, 2, 3, 1})).to_compact_string() == "456372891",
                  "zero_ipk_permutation((3,2,3,1))");
    });

    all &= run_criterion(4, "corollary counts (alternating, des, pk, lpk), n <= 9, all k", 0,
                         [](Outcome& o) { o.require(check_corollaries(9)); });

    all &= run_criterion(5, "four counting pipelines agree for n <= 10; |Z_k| for k <= 12; round trips", 0, [](Outcome& o) {
        o.require(check_eq1(10, true));
        o.require(check_prop6(10, {3}, true));
        o.require(check_prop8(12));
        for (int n = 1; n <= 10; ++n)
            for (const Word& w : w_dfa(3).accepted_words(n)) {
                const WSplit s = split_W_word(w);
                const Word back = s.z + Word::repeat('a', static_cast<std::size_t>(n - s.j - s.k)) +
                                  Word::repeat('c', static_cast<std::size_t>(s.j));
                o.require(back == w, "split round trip on " + w.str());
            }
    });

    all &= run_criterion(6, "worked examples reproduced byte-exact", 0, [](Outcome& o) {
        o.require(phi(Permutation::parse(kTwelve)).str() == "aacbabcbcaca", "phi of the length-12 example");
        const Word w = phi(Permutation::parse(kTwenty));
        o.require(w.str() == "aacbcccaaabbcacaaccc", "phi of the length-20 example: " + w.str());
        const WSplit s = split_W_word(w);
        o.require(s.j == 3 && s.k == 15, "split (j, k)");
        o.require(format_blocks(unique_factor_decomposition(s.z)) == "aac|bc|c|c|aaab|bc|ac", "block decomposition");
    });

    all &= run_criterion(7, "ipk and ilpk generating-function identities, m in {2,3,4}, x^7, t^5; v(t)", 10, [](Outcome& o) {
        for (int m = 2; m <= 4; ++m) {
            o.require(verify_theorem3(m, 7, 5), "ipk identity, m = " + std::to_string(m));
            o.require(verify_theorem5(m, 7, 5), "ilpk identity, m = " + std::to_string(m));
        }
        const auto v = v_of_t(3);
        o.require(v.coeff(0) == 0 && v.coeff(1) == Rational(1, 4) && v.coeff(2) == Rational(1, 8) &&
                      v.coeff(3) == Rational(5, 64),
                  "v(t) = " + to_string(v));
    });

    all &= run_criterion(8, "rational ogf coefficients = DFA word counts = oracle counts, m in {3,4}, n <= 10", 0,
                         [](Outcome& o) { o.require(check_gf_general(10, {3, 4}, true)); });

    all &= run_criterion(9, "property suites green; w_regex(3) unambiguous up to length 12", 0, [&](Outcome& o) {
        const auto r = check_prop7(12, {3});
        o.require(r);
        o.require(r.details["ambiguous_words"]["3"] == 0, "ambiguous words found");
        o.require(!property_tests.empty(), "no property-test executables given");
        for (const auto& exe : property_tests) {
            const std::string cmd = "\"" + exe + "\" --minimal > /dev/null 2>&1";
            o.require(std::system(cmd.c_str()) == 0, exe + " failed");
        }
    });

    return all ? 0 : 1;
}
