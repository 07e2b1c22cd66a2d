#include <doctest.h>

#include <nlohmann/json.hpp>

#include "ncg/export.hpp"

using namespace ncg;

namespace {
ComponentGraph make(int n, int q) { return build_graph({n, q, kDefaultVertexCap}); }
} // namespace

TEST_CASE("dot rendering") {
    auto g = make(1, 2);
    CHECK(render_dot(g) == "graph ncg {\n  \"1\";\n}\n");

    auto g22 = make(2, 2);
    CHECK(render_dot(g22) == "graph ncg {\n"
                             "  \"10\";\n"
                             "  \"01\";\n"
                             "  \"11\";\n"
                             "  \"10\" -- \"11\";\n"
                             "  \"01\" -- \"11\";\n"
                             "}\n");
}

TEST_CASE("adjacency list rendering") {
    auto g = make(2, 2);
    std::string out = render_adjlist(g);
    CHECK(out == "10: 11\n01: 11\n11: 10,01\n");
}

TEST_CASE("json rendering") {
    auto g = make(3, 2);
    std::string out = render_json(g);
    REQUIRE(!out.empty());
    CHECK(out.back() == '\n');
    CHECK(out[out.size() - 2] != '\n');

    auto doc = nlohmann::json::parse(out);
    CHECK(doc["n"] == 3);
    CHECK(doc["q"] == 2);
    CHECK(doc["nodes"].size() == 7);
    CHECK(doc["edges"].size() == 15);
    CHECK(doc["nodes"][0]["id"] == 1);
    CHECK(doc["nodes"][0]["label"] == "100");
    CHECK(doc["nodes"][0]["weight"] == 1);
    // edge pairs are (smaller, larger) and sorted
    std::pair<std::uint64_t, std::uint64_t> prev{0, 0};
    for (const auto& e : doc["edges"]) {
        REQUIRE(e.size() == 2);
        std::pair<std::uint64_t, std::uint64_t> cur{e[0], e[1]};
        CHECK(cur.first < cur.second);
        CHECK(prev < cur);
        prev = cur;
    }
}

TEST_CASE("exports are deterministic and newline-terminated") {
    auto g = make(3, 3);
    for (auto fmt : {ExportFormat::Dot, ExportFormat::Json, ExportFormat::AdjList}) {
        std::string a = export_graph(g, fmt);
        std::string b = export_graph(g, fmt);
        CHECK(a == b);
        REQUIRE(!a.empty());
        CHECK(a.back() == '\n');
        CHECK(a[a.size() - 2] != '\n');
    }
}
