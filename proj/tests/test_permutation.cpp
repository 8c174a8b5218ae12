#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>

#include "oracles.hpp"
#include "permfib/error.hpp"
#include "permfib/permutation.hpp"

using namespace permfib;

namespace {

std::vector<int> letters(const Permutation& p) { return {p.letters().begin(), p.letters().end()}; }

Permutation P(const char* s) { return Permutation::parse(s); }

} // namespace

TEST_CASE("construction and parsing") {
    CHECK(P("2 3 5 6 8 7 1 4") == P("23568714"));
    CHECK(P("2,3,1") == Permutation({2, 3, 1}));
    CHECK(P("1 2 5 10 12 8 6 4 3 7 9 11").size() == 12);
    CHECK(P("").empty());
    CHECK_THROWS_AS(Permutation({1, 1, 2}), InvalidInput);
    CHECK_THROWS_AS(Permutation({0, 1}), InvalidInput);
    CHECK_THROWS_AS(P("1 x 2"), InvalidInput);
    CHECK(P("23568714").to_string() == "2 3 5 6 8 7 1 4");
    CHECK(P("23568714").to_compact_string() == "23568714");
    CHECK(P("1 2 5 10 12 8 6 4 3 7 9 11").to_compact_string() == "1 2 5 10 12 8 6 4 3 7 9 11");
}

TEST_CASE("standardize") {
    const std::vector<int> w{8, 3, 6, 1, 4};
    CHECK(standardize(w) == P("52413"));
    CHECK(standardize(std::vector<int>{}).empty());
    CHECK(standardize(P("52413").letters()) == P("52413"));
    CHECK_THROWS_AS(standardize(std::vector<int>{3, 1, 3}), InvalidInput);
    const Permutation s = standardize(std::vector<int>{40, -2, 17});
    CHECK(standardize(s.letters()) == s);
}

TEST_CASE("inverse and reverse") {
    CHECK(inverse(P("23568714")) == P("71283465"));
    CHECK(inverse(P("964123578")) == P("456372891"));
    CHECK(inverse(Permutation::identity(6)) == Permutation::identity(6));
    CHECK(reverse(P("123")) == P("321"));
    CHECK(reverse(P("23568714")) == P("41786532"));
    CHECK(reverse(Permutation()).empty());
}

TEST_CASE("statistics of worked examples") {
    const StatReport s = statistics(P("23568714"));
    CHECK(s.ipk == 2);
    CHECK(s.ilpk == 3);
    CHECK(s.des == 2);
    CHECK(s.descent_positions == std::vector<int>{5, 6});
    CHECK(s.peak_positions == std::vector<int>{5});

    const StatReport n = statistics(P("1 2 5 10 12 8 6 4 3 7 9 11"));
    CHECK(n.lpk == 1);
    CHECK(n.left_peak_positions == std::vector<int>{5});
    CHECK(n.right_valley_positions == std::vector<int>{9});
    CHECK(n.right_valleys == 1);

    for (int len = 1; len <= 6; ++len) {
        const StatReport id = statistics(Permutation::identity(len));
        CHECK(id.des + id.pk + id.lpk + id.ipk + id.ilpk == 0);
    }
    CHECK(statistics(P("21")).lpk == 1);
    CHECK(statistics(P("21")).rpk == 0);
    CHECK(statistics(P("12")).rpk == 1);
}

TEST_CASE("consecutive containment") {
    CHECK(contains_consecutive(P("85712643"), P("123")));
    CHECK_FALSE(contains_consecutive(Permutation::identity(4), P("21")));
    CHECK_THROWS_AS(contains_consecutive(P("12"), Permutation()), InvalidInput);
    CHECK_FALSE(contains_consecutive(P("12"), P("123")));

    int avoiders = 0;
    for (const Permutation& p : enumerate_symmetric_group(4)) avoiders += avoids_consecutive(p, P("123"));
    CHECK(avoiders == 17);
}

TEST_CASE("descent compositions and alternation") {
    CHECK(descent_composition(P("85712643")) == Composition({1, 2, 3, 1, 1}));
    CHECK(descent_composition(Permutation::identity(5)) == Composition({5}));
    CHECK(descent_composition(P("456372891")) == Composition({3, 2, 3, 1}));
    CHECK(descent_composition(Permutation()).empty());

    CHECK(is_alternating(P("1")));
    CHECK(is_reverse_alternating(P("1")));
    CHECK(is_alternating(P("132")));
    CHECK_FALSE(is_reverse_alternating(P("132")));
    CHECK(is_reverse_alternating(P("2143")));
}

TEST_CASE("symmetric group enumeration") {
    std::vector<Permutation> s0(enumerate_symmetric_group(0).begin(), enumerate_symmetric_group(0).end());
    REQUIRE(s0.size() == 1);
    CHECK(s0.front().empty());

    std::vector<Permutation> s3;
    for (const Permutation& p : enumerate_symmetric_group(3)) s3.push_back(p);
    REQUIRE(s3.size() == 6);
    CHECK(s3.front() == P("123"));
    CHECK(s3.back() == P("321"));
    CHECK(std::is_sorted(s3.begin(), s3.end()));

    std::size_t count = 0;
    for (const Permutation& p : enumerate_symmetric_group(8)) count += !p.empty();
    CHECK(count == 40320);

    CHECK_THROWS_AS(enumerate_symmetric_group(13), ResourceLimit);
    CHECK_NOTHROW(enumerate_symmetric_group(13, true));
    CHECK_THROWS_AS(enumerate_symmetric_group(-1), InvalidInput);

    // Restricting the first letter partitions the group.
    std::size_t total = 0;
    for (int first = 1; first <= 5; ++first)
        for (const Permutation& p : SymmetricGroup(5, first)) {
            CHECK(p.at(1) == first);
            ++total;
        }
    CHECK(total == 120);
}

TEST_CASE("parallel count equals sequential count") {
    for (int len = 0; len <= 8; ++len) {
        auto pred = [](const Permutation& p) { return ipk(p) == 0; };
        std::size_t sequential = 0;
        for (const Permutation& p : enumerate_symmetric_group(len)) sequential += pred(p);
        CHECK(count_permutations(len, pred) == sequential);
    }
}

TEST_CASE("enumeration cap follows the environment") {
    CHECK(enumeration_cap() == 12);
    setenv("PERMFIB_MAX_N", "7", 1);
    CHECK(enumeration_cap() == 7);
    CHECK_THROWS_AS(enumerate_symmetric_group(8), ResourceLimit);
    unsetenv("PERMFIB_MAX_N");
    CHECK(enumeration_cap() == 12);
}

// Exhaustive properties over every permutation of length <= 8.
TEST_CASE("exhaustive properties for n <= 8") {
    for (int len = 1; len <= 8; ++len) {
        for (const Permutation& p : enumerate_symmetric_group(len)) {
            const auto w = letters(p);
            CHECK(inverse(inverse(p)) == p);
            CHECK(reverse(reverse(p)) == p);
            CHECK(letters(inverse(p)) == oracle::inverse(w));

            const StatReport s = statistics(p);
            CHECK(s.lpk == oracle::peaks(w, true));
            CHECK(s.pk == oracle::peaks(w, false));
            CHECK(s.des == oracle::descents(w));
            CHECK(s.ipk == oracle::ipk(w));
            CHECK(s.ilpk == oracle::ilpk(w));
            CHECK(lpk(reverse(p).letters()) == s.rpk);

            const Composition L = descent_composition(p);
            CHECK(L.total() == len);
            CHECK(static_cast<int>(L.num_parts()) == s.des + 1);
            std::vector<int> parts(L.parts().begin(), L.parts().end());
            CHECK(parts == oracle::runs(w));

            // pk counts the non-final runs longer than 1; rpk counts all of them.
            int long_runs = 0, long_nonfinal = 0;
            for (std::size_t r = 0; r < parts.size(); ++r) {
                long_runs += parts[r] > 1;
                long_nonfinal += parts[r] > 1 && r + 1 < parts.size();
            }
            CHECK(s.pk == long_nonfinal);
            CHECK(s.rpk == long_runs);

            for (int m = 3; m <= 5; ++m) {
                const bool contains = contains_consecutive(p, increasing_pattern(m));
                const bool short_runs = std::all_of(parts.begin(), parts.end(), [m](int x) { return x < m; });
                CHECK(contains == !short_runs);
            }
        }
    }
}

TEST_CASE("containment agrees with naive window standardization") {
    for (int len = 1; len <= 7; ++len)
        for (const Permutation& p : enumerate_symmetric_group(len))
            for (const char* sigma : {"12", "21", "132", "321", "2413", "1234"})
                CHECK(contains_consecutive(p, P(sigma)) == oracle::contains_consecutive(letters(p), letters(P(sigma))));
}
