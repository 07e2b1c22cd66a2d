#include "ncg/export.hpp"

#include <bit>

#include <nlohmann/json.hpp>

namespace ncg {

namespace {

// edges as (u, v) position pairs with u < v, in lexicographic order
template <typename F>
void for_each_edge(const ComponentGraph& g, F&& f) {
    for (std::uint32_t v = 0; v < g.order(); ++v) {
        auto row = g.row(v);
        for (std::size_t wi = 0; wi < row.size(); ++wi) {
            std::uint64_t w = row[wi];
            while (w) {
                unsigned b = static_cast<unsigned>(std::countr_zero(w));
                std::uint32_t u = static_cast<std::uint32_t>(wi * 64 + b);
                if (u > v) f(v, u);
                w &= w - 1;
            }
        }
    }
}

} // namespace

std::string render_dot(const ComponentGraph& g) {
    std::string out = "graph ncg {\n";
    for (std::uint32_t v = 0; v < g.order(); ++v)
        out += "  \"" + g.label_of(v) + "\";\n";
    for_each_edge(g, [&](std::uint32_t v, std::uint32_t u) {
        out += "  \"" + g.label_of(v) + "\" -- \"" + g.label_of(u) + "\";\n";
    });
    out += "}\n";
    return out;
}

std::string render_json(const ComponentGraph& g) {
    nlohmann::ordered_json doc;
    doc["n"] = g.params().n;
    doc["q"] = g.params().q;
    auto nodes = nlohmann::ordered_json::array();
    for (std::uint32_t v = 0; v < g.order(); ++v) {
        nodes.push_back({{"id", g.vertex(v).index},
                         {"label", g.label_of(v)},
                         {"weight", g.vertex(v).weight}});
    }
    doc["nodes"] = std::move(nodes);
    auto edges = nlohmann::ordered_json::array();
    for_each_edge(g, [&](std::uint32_t v, std::uint32_t u) {
        edges.push_back({g.vertex(v).index, g.vertex(u).index});
    });
    doc["edges"] = std::move(edges);
    return doc.dump() + "\n";
}

std::string render_adjlist(const ComponentGraph& g) {
    std::string out;
    for (std::uint32_t v = 0; v < g.order(); ++v) {
        out += g.label_of(v) + ":";
        bool first = true;
        auto row = g.row(v);
        for (std::size_t wi = 0; wi < row.size(); ++wi) {
            std::uint64_t w = row[wi];
            while (w) {
                unsigned b = static_cast<unsigned>(std::countr_zero(w));
                out += first ? " " : ",";
                out += g.label_of(static_cast<std::uint32_t>(wi * 64 + b));
                first = false;
                w &= w - 1;
            }
        }
        out += "\n";
    }
    return out;
}

std::string export_graph(const ComponentGraph& g, ExportFormat format) {
    switch (format) {
    case ExportFormat::Dot: return render_dot(g);
    case ExportFormat::Json: return render_json(g);
    case ExportFormat::AdjList: return render_adjlist(g);
    }
    throw InvalidArgument("unknown export format");
}

} // namespace ncg
