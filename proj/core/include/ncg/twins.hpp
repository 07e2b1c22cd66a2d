#ifndef NCG_TWINS_HPP
#define NCG_TWINS_HPP

#include <cstdint>
#include <vector>

#include "ncg/graph.hpp"

namespace ncg {

enum class TwinKind { Adjacent, NonAdjacent, Singleton };

/// A maximal group of mutual twins. Adjacent kind: all pairs share closed
/// neighborhoods. NonAdjacent kind: all pairs share open neighborhoods.
struct TwinClass {
    VertexSet members;
    TwinKind kind = TwinKind::Singleton;
};

/// Partition of all vertices into twin classes, sorted by smallest member.
struct TwinPartition {
    std::vector<TwinClass> classes;
    std::vector<std::uint32_t> class_of; // vertex position -> class id

    std::size_t non_singleton_count() const;
};

/// Groups vertices by equal closed neighborhoods, then regroups the remaining
/// singletons by equal open neighborhoods. Computed from adjacency alone so
/// the result can serve as an oracle for support-based twin structure rather
/// than assuming it.
TwinPartition twin_partition(const ComponentGraph& g);

/// Sum over classes of (size - 1): a lower bound on the size of every
/// locating-dominating set, since at most one member of each class may be
/// left out.
std::uint64_t twin_lower_bound(const TwinPartition& p);

/// Replaces u by its twin v in the given set. Requires u in the set, v not in
/// it, and both in the same non-singleton class; locating-domination is
/// preserved by the swap.
VertexSet twin_swap(const VertexSet& set, std::uint32_t u, std::uint32_t v,
                    const TwinPartition& p);

} // namespace ncg

#endif
