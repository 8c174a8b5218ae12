#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>

#include "oracles.hpp"
#include "permfib/bijections.hpp"
#include "permfib/composition.hpp"
#include "permfib/error.hpp"
#include "permfib/permutation.hpp"

using namespace permfib;

namespace {

std::vector<int> parts_of(const Composition& c) { return {c.parts().begin(), c.parts().end()}; }

} // namespace

TEST_CASE("parsing and printing") {
    CHECK(Composition::parse("(3,2,3,1)") == Composition({3, 2, 3, 1}));
    CHECK(Composition::parse("3,2,3,1") == Composition({3, 2, 3, 1}));
    CHECK(Composition::parse("3 2 3 1") == Composition({3, 2, 3, 1}));
    CHECK(Composition({1, 2, 3, 1, 1}).to_string() == "(1,2,3,1,1)");
    CHECK(Composition({1, 2}).total() == 3);
    CHECK_THROWS_AS(Composition({2, 0}), InvalidInput);
    CHECK(Composition::parse("1+2+1") == Composition({1, 2, 1}));
    CHECK_THROWS_AS(Composition::parse("1,,2"), InvalidInput);
    CHECK_THROWS_AS(Composition::parse("1,2,"), InvalidInput);
    CHECK_THROWS_AS(Composition::parse(",1"), InvalidInput);
}

TEST_CASE("order-k Fibonacci numbers") {
    const std::vector<int> k2{1, 1, 2, 3, 5, 8, 13, 21};
    for (int n = 0; n < 8; ++n) CHECK(fib(2, n) == k2[static_cast<std::size_t>(n)]);
    const std::vector<int> k3{1, 1, 2, 4, 7, 13, 24};
    for (int n = 0; n < 7; ++n) CHECK(fib(3, n) == k3[static_cast<std::size_t>(n)]);
    for (int k = 1; k <= 5; ++k) CHECK(fib(k, -1) == 0);
    CHECK(fib(1, 30) == 1);
    CHECK_THROWS_AS(fib(0, 3), InvalidInput);
    CHECK(fib(2, 100).str() == "573147844013817084101");

    for (int k = 1; k <= 6; ++k) {
        const auto seq = fib_sequence(k, 25);
        for (int n = 0; n <= 25; ++n) {
            CHECK(seq[static_cast<std::size_t>(n)] == fib(k, n));
            if (n <= 20) CHECK(seq[static_cast<std::size_t>(n)] == oracle::fib(k, n));
        }
    }
}

TEST_CASE("composition enumeration") {
    const auto c3 = enumerate_compositions(3);
    REQUIRE(c3.size() == 4);
    CHECK(c3[0] == Composition({1, 1, 1}));
    CHECK(c3[1] == Composition({1, 2}));
    CHECK(c3[2] == Composition({2, 1}));
    CHECK(c3[3] == Composition({3}));
    CHECK(enumerate_compositions(4, 2).size() == 5);
    CHECK(enumerate_compositions(5, 3).size() == 13);
    CHECK_THROWS_AS(enumerate_compositions(0), InvalidInput);

    for (int n = 1; n <= 12; ++n) {
        const auto all = enumerate_compositions(n);
        std::vector<std::vector<int>> got;
        for (const auto& c : all) got.push_back(parts_of(c));
        CHECK(got == oracle::compositions(n));
    }
}

TEST_CASE("bounded compositions are counted by order-k Fibonacci numbers") {
    for (int k = 2; k <= 4; ++k)
        for (int n = 1; n <= 14; ++n) CHECK(BigInt(enumerate_compositions(n, k).size()) == fib(k, n));
}

TEST_CASE("compositions with j parts") {
    for (int n = 1; n <= 10; ++n) {
        std::vector<int> by_parts(static_cast<std::size_t>(n) + 1);
        for (const auto& c : enumerate_compositions(n)) ++by_parts[c.num_parts()];
        for (int j = 1; j <= n; ++j) CHECK(BigInt(by_parts[static_cast<std::size_t>(j)]) == binomial(n - 1, j - 1));
    }
}

TEST_CASE("count of compositions with k parts greater than one") {
    CHECK(count_parts_gt1(4, 1) == 6);
    CHECK(count_parts_gt1(5, 0) == 1);
    CHECK(count_parts_gt1(6, 2) == 15);
    for (int n = 1; n <= 14; ++n)
        for (int k = 0; k <= n; ++k) {
            std::size_t direct = 0;
            for (const auto& c : enumerate_compositions(n)) {
                int big = 0;
                for (int x : c.parts()) big += x > 1;
                direct += big == k;
            }
            CHECK(count_parts_gt1(n, k) == BigInt(direct));
            CHECK(count_parts_gt1(n, k) == binomial(n, 2 * k));
        }
}

TEST_CASE("descent sets") {
    CHECK(descent_set(Composition({1, 2, 3, 1, 1})) == std::vector<int>{1, 3, 6, 7});
    for (int n = 1; n <= 8; ++n)
        for (const auto& c : enumerate_compositions(n)) CHECK(composition_from_descent_set(n, descent_set(c)) == c);
}

TEST_CASE("reverse of a descent composition") {
    CHECK(composition_reverse(Composition({4})) == Composition({1, 1, 1, 1}));
    // reverse(85712643) = 34621758, whose runs are 346|2|17|58.
    CHECK(composition_reverse(Composition({1, 2, 3, 1, 1})) == Composition({3, 1, 2, 2}));
    CHECK(descent_composition(reverse(Permutation::parse("85712643"))) == Composition({3, 1, 2, 2}));
    for (int n = 1; n <= 9; ++n)
        for (const auto& L : enumerate_compositions(n)) CHECK(composition_reverse(composition_reverse(L)) == L);
}

TEST_CASE("reverse is independent of the representative permutation") {
    for (int n = 1; n <= 7; ++n)
        for (const Permutation& p : enumerate_symmetric_group(n))
            CHECK(descent_composition(reverse(p)) == composition_reverse(descent_composition(p)));
}

TEST_CASE("reverse maps left-peak classes onto right-peak classes") {
    // lpk and rpk depend only on the descent composition.
    for (int n = 1; n <= 9; ++n) {
        std::map<int, std::set<Composition>> by_lpk, by_rpk;
        for (const auto& L : enumerate_compositions(n)) {
            const Permutation p = zero_ipk_permutation(L);
            by_lpk[lpk(p.letters())].insert(L);
            by_rpk[rpk(p.letters())].insert(L);
        }
        for (const auto& [k, comps] : by_lpk) {
            std::set<Composition> image;
            for (const auto& L : comps) image.insert(composition_reverse(L));
            CHECK(image == by_rpk[k]);
        }
    }
}

TEST_CASE("binomial") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(60, 30).str() == "118264581564861424");
}
