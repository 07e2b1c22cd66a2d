#include <doctest.h>

#include <bit>

#include "ncg/graph.hpp"

using namespace ncg;

namespace {

ComponentGraph make(int n, int q) { return build_graph({n, q, kDefaultVertexCap}); }

// ground-truth edge count: pairwise support intersection over all vertex pairs
std::uint64_t naive_edge_count(const ComponentGraph& g) {
    std::uint64_t edges = 0;
    for (std::uint32_t v = 0; v < g.order(); ++v)
        for (std::uint32_t u = v + 1; u < g.order(); ++u)
            if (g.vertex(v).support & g.vertex(u).support) ++edges;
    return edges;
}

std::uint32_t position_of(const ComponentGraph& g, std::uint64_t index) {
    return static_cast<std::uint32_t>(index - 1);
}

} // namespace

TEST_CASE("order and size") {
    SUBCASE("n=3 q=2: 7 vertices, 15 edges") {
        auto g = make(3, 2);
        CHECK(g.order() == 7);
        CHECK(g.edge_count() == 15);
    }
    SUBCASE("n=1 q=2: a single isolated vertex") {
        auto g = make(1, 2);
        CHECK(g.order() == 1);
        CHECK(g.edge_count() == 0);
    }
    SUBCASE("n=2 q=3: 8 vertices; formula and brute force agree on 24 edges") {
        auto g = make(2, 3);
        CHECK(g.order() == 8);
        CHECK(naive_edge_count(g) == 24);
        CHECK(g.edge_count() == 24);
        CHECK(closed_form_size(2, 3) == 24);
    }
}

TEST_CASE("edge formula matches brute-force counting on every small instance") {
    for (int q = 2; q <= 23; ++q) {
        for (int n = 1; n <= 16; ++n) {
            SpaceParams params{n, q, kDefaultVertexCap};
            std::uint64_t order;
            try {
                order = params.order();
            } catch (const CapExceeded&) {
                break;
            }
            if (order > 512) break;
            CAPTURE(n);
            CAPTURE(q);
            auto g = ComponentGraph::build(params); // throws on formula mismatch
            CHECK(g.edge_count() == naive_edge_count(g));
        }
    }
}

TEST_CASE("degrees") {
    SUBCASE("examples") {
        auto g32 = make(3, 2);
        CHECK(g32.degree(position_of(g32, 1)) == 3); // b1, s=1
        CHECK(g32.degree(position_of(g32, 7)) == 6); // full support, q^n - 2
        auto g23 = make(2, 3);
        CHECK(g23.degree(position_of(g23, 1)) == 5); // b1
    }
    SUBCASE("closed form for every vertex, and handshake") {
        for (auto [n, q] : {std::pair{1, 2}, {2, 2}, {4, 2}, {6, 2}, {2, 3}, {3, 3}, {2, 5}}) {
            CAPTURE(n);
            CAPTURE(q);
            auto g = make(n, q);
            std::uint64_t degree_sum = 0;
            for (std::uint32_t v = 0; v < g.order(); ++v) {
                CHECK(g.degree(v) == closed_form_degree(n, q, g.weight_of(v)));
                degree_sum += g.degree(v);
            }
            CHECK(degree_sum == 2 * g.edge_count());
        }
    }
}

TEST_CASE("weight class profiles") {
    SUBCASE("examples") {
        auto g42 = make(4, 2);
        auto p = g42.weight_class_profile(position_of(g42, 1)); // b1, s=1
        CHECK(p[1] == 3);                                       // r=2
        auto g32 = make(3, 2);
        auto full = g32.weight_class_profile(position_of(g32, 7)); // s=n
        CHECK(full[0] == binomial(3, 1));
        CHECK(full[1] == binomial(3, 2));
        auto g23 = make(2, 3);
        auto b1 = g23.weight_class_profile(position_of(g23, 1));
        CHECK(b1[1] == 4); // all four weight-2 vertices touch coordinate 1
    }
    SUBCASE("four-case formula for q=2, n in 3..6, and profile sums to degree") {
        for (int n = 3; n <= 6; ++n) {
            auto g = make(n, 2);
            for (std::uint32_t v = 0; v < g.order(); ++v) {
                auto profile = g.weight_class_profile(v);
                std::uint64_t sum = 0;
                for (int r = 1; r <= n; ++r) {
                    CHECK(profile[r - 1] == closed_form_profile(n, g.weight_of(v), r));
                    sum += profile[r - 1];
                }
                CHECK(sum == g.degree(v));
            }
        }
    }
    SUBCASE("profile sums to degree for q >= 3 as well") {
        for (auto [n, q] : {std::pair{2, 3}, {3, 3}, {2, 4}}) {
            auto g = make(n, q);
            for (std::uint32_t v = 0; v < g.order(); ++v) {
                auto profile = g.weight_class_profile(v);
                std::uint64_t sum = 0;
                for (auto c : profile) sum += c;
                CHECK(sum == g.degree(v));
            }
        }
    }
}

TEST_CASE("neighborhoods") {
    auto g = make(3, 2);
    SUBCASE("full-support vertex sees everything") {
        auto nb = g.closed_neighborhood(position_of(g, 7));
        CHECK(nb.count() == 7);
    }
    SUBCASE("weight-2 vertex misses exactly the complementary basis vector") {
        auto nb = g.closed_neighborhood(position_of(g, 3)); // b1 + b2
        CHECK(nb.count() == 6);
        CHECK(!nb.test(position_of(g, 4))); // b3
    }
    SUBCASE("isolated vertex") {
        auto k1 = make(1, 2);
        auto nb = k1.closed_neighborhood(0);
        CHECK(nb.count() == 1);
        CHECK(nb.test(0));
    }
}

TEST_CASE("adjacency is symmetric and irreflexive") {
    for (auto [n, q] : {std::pair{2, 2}, {4, 2}, {2, 3}, {3, 3}}) {
        auto g = make(n, q);
        for (std::uint32_t v = 0; v < g.order(); ++v) {
            auto row = g.row(v);
            CHECK(((row[v >> 6] >> (v & 63)) & 1) == 0);
            for (std::uint32_t u = 0; u < g.order(); ++u) {
                bool vu = (row[u >> 6] >> (u & 63)) & 1;
                bool uv = (g.row(u)[v >> 6] >> (v & 63)) & 1;
                CHECK(vu == uv);
                // adjacency is exactly support intersection
                CHECK(vu == (u != v && (g.vertex(v).support & g.vertex(u).support) != 0));
            }
        }
    }
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(make(17, 2), CapExceeded);
    auto g = make(2, 2);
    CHECK_THROWS_AS(g.degree(3), InvalidArgument);
    CHECK_THROWS_AS(g.weight_class_members(0), InvalidArgument);
    CHECK_THROWS_AS(g.weight_class_members(3), InvalidArgument);
}
