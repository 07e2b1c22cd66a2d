#include "ncg/graph.hpp"

#include <bit>
#include <string>

namespace ncg {

std::uint64_t closed_form_order(int n, int q) {
    return checked_pow(static_cast<std::uint64_t>(q), n) - 1;
}

std::uint64_t closed_form_size(int n, int q) {
    unsigned __int128 qn = checked_pow(static_cast<std::uint64_t>(q), n);
    unsigned __int128 mixed = checked_pow(static_cast<std::uint64_t>(2 * q - 1), n);
    unsigned __int128 numerator = qn * qn - qn + 1 - mixed;
    if (numerator % 2 != 0) throw InternalError("edge-count formula is not even");
    return static_cast<std::uint64_t>(numerator / 2);
}

std::uint64_t closed_form_degree(int n, int q, int s) {
    if (s < 1 || s > n) throw InvalidArgument("weight out of range");
    return (checked_pow(static_cast<std::uint64_t>(q), s) - 1) *
               checked_pow(static_cast<std::uint64_t>(q), n - s) -
           1;
}

std::uint64_t closed_form_class_size(int n, int q, int i) {
    return binomial(n, i) * checked_pow(static_cast<std::uint64_t>(q - 1), i);
}

std::uint64_t closed_form_profile(int n, int s, int r) {
    if (s < 1 || s > n || r < 1 || r > n) throw InvalidArgument("weight out of range");
    return binomial(n, r) - binomial(n - s, r) - (r == s ? 1 : 0);
}

std::uint64_t closed_form_ld_number(int n, int q) {
    return closed_form_order(n, q) - (checked_pow(2, n) - 1);
}

ComponentGraph ComponentGraph::build(const SpaceParams& params) {
    params.validate();
    ComponentGraph g;
    g.params_ = params;
    g.labels_ = enumerate_vertices(params);

    const std::size_t order = g.labels_.size();
    const std::size_t words = (order + 63) / 64;
    g.words_ = words;
    g.adj_.assign(order * words, 0);

    // Two strategies for filling rows. Vertices sharing a support mask have
    // identical rows up to the self-bit, so when the mask space is small
    // relative to the vertex count it is cheaper to build one row per mask
    // (union of the vertex groups of every intersecting mask) and copy it.
    const std::size_t mask_count = std::size_t{1} << params.n;
    const bool per_mask =
        static_cast<unsigned __int128>(mask_count) * mask_count * words <=
        static_cast<unsigned __int128>(order) * order / 2 + 1024;

    if (per_mask) {
        std::vector<std::uint64_t> group(mask_count * words, 0);
        for (std::size_t v = 0; v < order; ++v) {
            std::size_t m = g.labels_[v].support;
            group[m * words + (v >> 6)] |= std::uint64_t{1} << (v & 63);
        }
        std::vector<std::uint64_t> mask_row(words);
        for (std::size_t m = 1; m < mask_count; ++m) {
            std::fill(mask_row.begin(), mask_row.end(), 0);
            for (std::size_t m2 = 1; m2 < mask_count; ++m2) {
                if ((m & m2) == 0) continue;
                const std::uint64_t* src = group.data() + m2 * words;
                for (std::size_t w = 0; w < words; ++w) mask_row[w] |= src[w];
            }
            for (std::size_t v = 0; v < order; ++v) {
                if (g.labels_[v].support != m) continue;
                std::uint64_t* row = g.adj_.data() + v * words;
                for (std::size_t w = 0; w < words; ++w) row[w] = mask_row[w];
                row[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); // irreflexive
            }
        }
    } else {
        for (std::size_t v = 0; v < order; ++v) {
            const std::uint64_t sv = g.labels_[v].support;
            std::uint64_t* rv = g.adj_.data() + v * words;
            for (std::size_t u = v + 1; u < order; ++u) {
                if (sv & g.labels_[u].support) {
                    rv[u >> 6] |= std::uint64_t{1} << (u & 63);
                    g.adj_[u * words + (v >> 6)] |= std::uint64_t{1} << (v & 63);
                }
            }
        }
    }

    std::uint64_t degree_sum = 0;
    for (std::size_t v = 0; v < order; ++v) {
        const std::uint64_t* row = g.adj_.data() + v * words;
        for (std::size_t w = 0; w < words; ++w) degree_sum += std::popcount(row[w]);
    }
    g.edges_ = degree_sum / 2;

    const std::uint64_t expected = closed_form_size(params.n, params.q);
    if (degree_sum % 2 != 0 || g.edges_ != expected)
        throw InternalError("edge count mismatch: counted " + std::to_string(g.edges_) +
                            " edges but the closed form gives " + std::to_string(expected) +
                            " for n=" + std::to_string(params.n) +
                            " q=" + std::to_string(params.q));

    g.classes_.assign(params.n, VertexSet(order));
    for (std::size_t v = 0; v < order; ++v)
        g.classes_[g.labels_[v].weight - 1].set(v);

    return g;
}

std::uint64_t ComponentGraph::degree(std::uint32_t pos) const {
    auto r = row(pos);
    std::uint64_t d = 0;
    for (auto w : r) d += std::popcount(w);
    return d;
}

std::vector<std::uint64_t> ComponentGraph::weight_class_profile(std::uint32_t pos) const {
    auto r = row(pos);
    std::vector<std::uint64_t> profile(params_.n, 0);
    for (std::size_t wi = 0; wi < r.size(); ++wi) {
        std::uint64_t w = r[wi];
        while (w) {
            unsigned b = static_cast<unsigned>(std::countr_zero(w));
            profile[labels_[wi * 64 + b].weight - 1]++;
            w &= w - 1;
        }
    }
    return profile;
}

VertexSet ComponentGraph::open_neighborhood(std::uint32_t pos) const {
    auto r = row(pos);
    VertexSet out(order());
    auto dst = out.words();
    for (std::size_t w = 0; w < r.size(); ++w) dst[w] = r[w];
    return out;
}

VertexSet ComponentGraph::closed_neighborhood(std::uint32_t pos) const {
    VertexSet out = open_neighborhood(pos);
    out.set(pos);
    return out;
}

const VertexSet& ComponentGraph::weight_class_members(int i) const {
    if (i < 1 || i > params_.n) throw InvalidArgument("weight class out of range");
    return classes_[i - 1];
}

ComponentGraph build_graph(const SpaceParams& params) { return ComponentGraph::build(params); }

} // namespace ncg
