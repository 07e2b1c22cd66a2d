#ifndef NCG_GRAPH_HPP
#define NCG_GRAPH_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "ncg/bitset.hpp"
#include "ncg/combinatorics.hpp"
#include "ncg/vecspace.hpp"

namespace ncg {

// Closed forms for the component graph of an n-dimensional space over an
// alphabet of q symbols. These are the values the constructed graph is
// checked against, never a substitute for counting.

/// Number of vertices: q^n - 1.
std::uint64_t closed_form_order(int n, int q);

/// Number of edges: (q^(2n) - q^n + 1 - (2q-1)^n) / 2.
std::uint64_t closed_form_size(int n, int q);

/// Degree of a vertex with s nonzero coordinates: (q^s - 1) q^(n-s) - 1.
std::uint64_t closed_form_degree(int n, int q, int s);

/// Size of weight class i: C(n,i) (q-1)^i.
std::uint64_t closed_form_class_size(int n, int q, int i);

/// For q = 2 only: |N(v) ∩ T_r| for a vertex v of weight s. Collapses the
/// four cases (r vs n-s, r vs s) into C(n,r) - C(n-s,r) - [r == s] using the
/// convention C(a,b) = 0 for b > a.
std::uint64_t closed_form_profile(int n, int s, int r);

/// Minimum size of a locating-dominating set for q >= 3:
/// sum over i of C(n,i)((q-1)^i - 1), which equals (q^n - 1) - (2^n - 1).
std::uint64_t closed_form_ld_number(int n, int q);

/// Immutable graph on the nonzero vectors of the space, two vertices adjacent
/// iff their supports intersect. Rows are bitsets over vertex positions
/// (position = index - 1). Construction validates the closed-form edge count
/// against the actual adjacency and fails hard on mismatch.
class ComponentGraph {
public:
    static ComponentGraph build(const SpaceParams& params);

    const SpaceParams& params() const { return params_; }
    std::size_t order() const { return labels_.size(); }
    std::uint64_t edge_count() const { return edges_; }
    std::size_t row_words() const { return words_; }

    std::span<const VectorLabel> vertices() const { return labels_; }
    const VectorLabel& vertex(std::uint32_t pos) const {
        check_position(pos);
        return labels_[pos];
    }

    /// Open neighborhood N(v) as a raw bitset row.
    std::span<const std::uint64_t> row(std::uint32_t pos) const {
        check_position(pos);
        return {adj_.data() + static_cast<std::size_t>(pos) * words_, words_};
    }

    int weight_of(std::uint32_t pos) const { return vertex(pos).weight; }
    std::uint64_t degree(std::uint32_t pos) const;

    /// Entry r-1 is |N(v) ∩ T_r|, counted from the adjacency row.
    std::vector<std::uint64_t> weight_class_profile(std::uint32_t pos) const;

    VertexSet open_neighborhood(std::uint32_t pos) const;
    VertexSet closed_neighborhood(std::uint32_t pos) const;

    /// All vertices of weight i (the class T_i), 1 <= i <= n.
    const VertexSet& weight_class_members(int i) const;

    std::string label_of(std::uint32_t pos) const {
        return digit_label(vertex(pos).digits, params_.q);
    }

private:
    ComponentGraph() = default;
    void check_position(std::uint32_t pos) const {
        if (pos >= labels_.size()) throw InvalidArgument("vertex position out of range");
    }

    SpaceParams params_;
    std::vector<VectorLabel> labels_;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> adj_; // order * words_, row-major
    std::uint64_t edges_ = 0;
    std::vector<VertexSet> classes_; // classes_[i-1] = T_i
};

ComponentGraph build_graph(const SpaceParams& params);

} // namespace ncg

#endif
