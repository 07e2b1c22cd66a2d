#include <doctest.h>

#include <bit>
#include <map>
#include <set>

#include "ncg/combinatorics.hpp"
#include "ncg/vecspace.hpp"

using namespace ncg;

namespace {

// independent digit-string enumeration: every length-n base-q string except
// all-zero, as (index, support) pairs
std::vector<std::pair<std::uint64_t, std::uint64_t>> naive_vectors(int n, int q) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    std::vector<int> digits(n, 0);
    for (;;) {
        int i = 0;
        while (i < n && digits[i] == q - 1) digits[i++] = 0;
        if (i == n) break;
        ++digits[i];
        std::uint64_t index = 0, support = 0;
        for (int j = n - 1; j >= 0; --j) index = index * q + digits[j];
        for (int j = 0; j < n; ++j)
            if (digits[j]) support |= std::uint64_t{1} << j;
        out.emplace_back(index, support);
    }
    return out;
}

} // namespace

TEST_CASE("vertex enumeration counts and consistency") {
    SUBCASE("n=3 q=2 has 7 vertices") {
        auto labels = enumerate_vertices({3, 2, kDefaultVertexCap});
        CHECK(labels.size() == 7);
        for (std::size_t i = 0; i < labels.size(); ++i) {
            CHECK(labels[i].index == i + 1);
            std::uint64_t value = 0;
            for (int j = 2; j >= 0; --j) value = value * 2 + labels[i].digits[j];
            CHECK(value == labels[i].index);
            CHECK(labels[i].weight == std::popcount(labels[i].support));
            CHECK(labels[i].weight >= 1);
        }
    }
    SUBCASE("n=1 q=2 is the single nonzero vector") {
        auto labels = enumerate_vertices({1, 2, kDefaultVertexCap});
        REQUIRE(labels.size() == 1);
        CHECK(labels[0].support == 1);
        CHECK(labels[0].weight == 1);
    }
    SUBCASE("n=2 q=3 has 8 vertices, 4 of weight 2") {
        auto labels = enumerate_vertices({2, 3, kDefaultVertexCap});
        CHECK(labels.size() == 8);
        int full = 0;
        for (const auto& l : labels)
            if (l.weight == 2) ++full;
        CHECK(full == 4);
        // cross-check against the independent digit-string walk
        auto naive = naive_vectors(2, 3);
        REQUIRE(naive.size() == labels.size());
        std::sort(naive.begin(), naive.end());
        for (std::size_t i = 0; i < labels.size(); ++i) {
            CHECK(labels[i].index == naive[i].first);
            CHECK(labels[i].support == naive[i].second);
        }
    }
}

TEST_CASE("weight classes") {
    auto labels = enumerate_vertices({3, 2, kDefaultVertexCap});
    // digits 110 = b1 + b2, index 3
    CHECK(weight_class(labels[2]) == 2);
    CHECK(labels[2].digits == std::vector<std::uint16_t>{1, 1, 0});
    CHECK(weight_class(labels[0]) == 1); // b1

    auto four = enumerate_vertices({4, 2, kDefaultVertexCap});
    int t2 = 0;
    for (const auto& l : four)
        if (weight_class(l) == 2) ++t2;
    CHECK(t2 == 6);
}

TEST_CASE("support keys group twin candidates") {
    auto labels = enumerate_vertices({2, 3, kDefaultVertexCap});
    // b1 + 2*b2 has digits (1,2), 2*b1 + b2 has digits (2,1)
    const VectorLabel* a = nullptr;
    const VectorLabel* b = nullptr;
    for (const auto& l : labels) {
        if (l.digits == std::vector<std::uint16_t>{1, 2}) a = &l;
        if (l.digits == std::vector<std::uint16_t>{2, 1}) b = &l;
    }
    REQUIRE(a);
    REQUIRE(b);
    CHECK(support_key(*a) == support_key(*b));
    CHECK(support_key(*a) == 0b11);
    CHECK(support_key(labels[0]) != support_key(labels[2])); // b1 vs b2

    std::set<std::uint64_t> keys;
    for (const auto& l : labels) keys.insert(support_key(l));
    CHECK(keys.size() == 3);
}

TEST_CASE("class sizes and support groups across a parameter grid") {
    for (auto [n, q] : {std::pair{1, 2}, {2, 2}, {3, 2}, {6, 2}, {2, 3}, {3, 3},
                        {2, 4}, {1, 7}, {3, 4}}) {
        CAPTURE(n);
        CAPTURE(q);
        SpaceParams params{n, q, kDefaultVertexCap};
        auto labels = enumerate_vertices(params);
        CHECK(labels.size() == params.order());

        std::map<int, std::uint64_t> by_weight;
        std::map<std::uint64_t, std::uint64_t> by_support;
        for (const auto& l : labels) {
            by_weight[l.weight]++;
            by_support[l.support]++;
        }
        std::uint64_t total = 0;
        for (int i = 1; i <= n; ++i) {
            CHECK(by_weight[i] == binomial(n, i) * checked_pow(q - 1, i));
            total += by_weight[i];
        }
        CHECK(total == params.order());

        CHECK(by_support.size() == checked_pow(2, n) - 1);
        for (auto [mask, count] : by_support)
            CHECK(count == checked_pow(q - 1, std::popcount(mask)));

        // deterministic: a second enumeration is identical
        auto again = enumerate_vertices(params);
        REQUIRE(again.size() == labels.size());
        for (std::size_t i = 0; i < labels.size(); ++i) {
            CHECK(again[i].index == labels[i].index);
            CHECK(again[i].digits == labels[i].digits);
        }
    }
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(enumerate_vertices({17, 2, kDefaultVertexCap}), CapExceeded);
    CHECK_THROWS_AS(enumerate_vertices({4, 2, 10}), CapExceeded);
    CHECK_THROWS_AS(enumerate_vertices({0, 2, kDefaultVertexCap}), InvalidArgument);
    CHECK_THROWS_AS(enumerate_vertices({2, 1, kDefaultVertexCap}), InvalidArgument);
    CHECK_NOTHROW(enumerate_vertices({17, 2, 1u << 20}));
}

TEST_CASE("digit labels") {
    auto labels = enumerate_vertices({3, 2, kDefaultVertexCap});
    CHECK(digit_label(labels[2].digits, 2) == "110");
    auto wide = enumerate_vertices({2, 12, kDefaultVertexCap});
    CHECK(digit_label(wide[10].digits, 12) == "11.0");
}
