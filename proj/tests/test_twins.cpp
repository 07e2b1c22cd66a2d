#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "ncg/codes.hpp"
#include "ncg/solver.hpp"
#include "ncg/twins.hpp"

using namespace ncg;

namespace {

ComponentGraph make(int n, int q) { return build_graph({n, q, kDefaultVertexCap}); }

std::vector<std::size_t> class_sizes(const TwinPartition& p, TwinKind kind) {
    std::vector<std::size_t> sizes;
    for (const auto& c : p.classes)
        if (c.kind == kind) sizes.push_back(c.members.count());
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

} // namespace

TEST_CASE("twin classes of small spaces") {
    SUBCASE("n=2 q=3: classes of sizes 2, 2, 4, all adjacent") {
        auto p = twin_partition(make(2, 3));
        CHECK(class_sizes(p, TwinKind::Adjacent) == std::vector<std::size_t>{2, 2, 4});
        CHECK(class_sizes(p, TwinKind::NonAdjacent).empty());
        CHECK(p.non_singleton_count() == 3);
    }
    SUBCASE("n=3 q=2: no twins at all") {
        auto g = make(3, 2);
        auto p = twin_partition(g);
        CHECK(p.classes.size() == 7);
        CHECK(p.non_singleton_count() == 0);
        // confirm by enumeration that no two neighborhoods coincide
        for (std::uint32_t u = 0; u < g.order(); ++u)
            for (std::uint32_t v = u + 1; v < g.order(); ++v) {
                CHECK(g.open_neighborhood(u) != g.open_neighborhood(v));
                CHECK(g.closed_neighborhood(u) != g.closed_neighborhood(v));
            }
    }
    SUBCASE("n=1 q=3 is a complete pair: one adjacent class") {
        auto p = twin_partition(make(1, 3));
        REQUIRE(p.classes.size() == 1);
        CHECK(p.classes[0].kind == TwinKind::Adjacent);
        CHECK(p.classes[0].members.count() == 2);
    }
    SUBCASE("n=2 q=2 is a path: the two endpoints are non-adjacent twins") {
        auto p = twin_partition(make(2, 2));
        CHECK(class_sizes(p, TwinKind::NonAdjacent) == std::vector<std::size_t>{2});
        CHECK(p.non_singleton_count() == 1);
        REQUIRE(p.classes.size() == 2);
        CHECK(p.classes[0].members.test(0)); // b1 and b2 share open neighborhoods
        CHECK(p.classes[0].members.test(1));
    }
}

TEST_CASE("reported twin relations hold exactly") {
    for (auto [n, q] : {std::pair{2, 2}, {4, 2}, {1, 3}, {2, 3}, {3, 3}, {2, 4}}) {
        CAPTURE(n);
        CAPTURE(q);
        auto g = make(n, q);
        auto p = twin_partition(g);

        // partition covers every vertex exactly once
        std::vector<int> seen(g.order(), 0);
        for (const auto& c : p.classes) c.members.for_each([&](std::uint32_t v) { seen[v]++; });
        CHECK(std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; }));

        for (const auto& c : p.classes) {
            auto members = c.members.positions();
            if (c.kind == TwinKind::Singleton) {
                CHECK(members.size() == 1);
                continue;
            }
            for (std::size_t i = 0; i < members.size(); ++i)
                for (std::size_t j = i + 1; j < members.size(); ++j) {
                    if (c.kind == TwinKind::Adjacent)
                        CHECK(g.closed_neighborhood(members[i]) ==
                              g.closed_neighborhood(members[j]));
                    else
                        CHECK(g.open_neighborhood(members[i]) ==
                              g.open_neighborhood(members[j]));
                }
        }
    }
}

TEST_CASE("for q >= 3 the twin classes are exactly the support groups") {
    for (auto [n, q] : {std::pair{1, 3}, {2, 3}, {3, 3}, {2, 4}, {1, 5}}) {
        CAPTURE(n);
        CAPTURE(q);
        auto g = make(n, q);
        auto p = twin_partition(g);
        CHECK(p.non_singleton_count() == checked_pow(2, n) - 1);
        for (const auto& c : p.classes) {
            CHECK(c.kind == TwinKind::Adjacent);
            auto members = c.members.positions();
            std::uint64_t support = g.vertex(members[0]).support;
            for (auto v : members) CHECK(g.vertex(v).support == support);
            CHECK(c.members.count() ==
                  checked_pow(q - 1, g.weight_of(members[0])));
        }
    }
}

TEST_CASE("twin lower bound") {
    CHECK(twin_lower_bound(twin_partition(make(2, 3))) == 5);
    CHECK(twin_lower_bound(twin_partition(make(3, 2))) == 0); // all singletons
    CHECK(twin_lower_bound(twin_partition(make(3, 3))) == 19);
}

TEST_CASE("twin swap") {
    auto g = make(2, 3);
    auto p = twin_partition(g);
    // positions 0,1 are the two multiples of the first basis vector
    VertexSet s(g.order());
    for (std::uint32_t v : {0u, 2u, 3u, 4u, 6u}) s.set(v);

    SUBCASE("a valid swap moves one twin out and the other in") {
        VertexSet swapped = twin_swap(s, 0, 1, p);
        CHECK(!swapped.test(0));
        CHECK(swapped.test(1));
        CHECK(swapped.count() == s.count());
    }
    SUBCASE("membership preconditions") {
        CHECK_THROWS_AS(twin_swap(s, 1, 0, p), InvalidArgument); // u not in set
        CHECK_THROWS_AS(twin_swap(s, 0, 2, p), InvalidArgument); // v already in set
        CHECK_THROWS_AS(twin_swap(s, 0, 0, p), InvalidArgument); // u = v
    }
    SUBCASE("non-twins are rejected") {
        CHECK_THROWS_AS(twin_swap(s, 0, 5, p), InvalidArgument); // different classes
    }
    SUBCASE("swaps preserve locating-domination on solver witnesses") {
        auto report = minimum_locating_dominating(g);
        REQUIRE(report.witness.has_value());
        VertexSet current = *report.witness;
        std::mt19937 rng(12345);
        for (int round = 0; round < 100; ++round) {
            // collect the valid (u, v) swap pairs of the current set
            std::vector<std::pair<std::uint32_t, std::uint32_t>> swaps;
            current.for_each([&](std::uint32_t u) {
                const auto& cls = p.classes[p.class_of[u]];
                if (cls.kind == TwinKind::Singleton) return;
                cls.members.for_each([&](std::uint32_t v) {
                    if (!current.test(v)) swaps.emplace_back(u, v);
                });
            });
            REQUIRE(!swaps.empty());
            auto [u, v] = swaps[rng() % swaps.size()];
            current = twin_swap(current, u, v, p);
            CHECK(is_locating_dominating(g, current).ok);
        }
    }
}
