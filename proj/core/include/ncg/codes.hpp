#ifndef NCG_CODES_HPP
#define NCG_CODES_HPP

#include <cstdint>
#include <optional>
#include <span>

#include "ncg/graph.hpp"
#include "ncg/twins.hpp"

namespace ncg {

/// Which identifying-code definition to evaluate. RequireNonempty additionally
/// demands every closed-neighborhood trace be nonempty (the standard reading);
/// DistinctOnly checks pairwise distinctness alone.
enum class IdConvention { RequireNonempty, DistinctOnly };

/// Evidence for a failed check: either a vertex whose trace is empty, or a
/// pair of vertices whose traces coincide.
struct Violation {
    enum class Kind { EmptyTrace, EqualTraces };
    Kind kind = Kind::EmptyTrace;
    std::uint32_t first = 0;
    std::uint32_t second = 0; // meaningful for EqualTraces only
};

struct CheckResult {
    bool ok = false;
    std::optional<Violation> violation;
    explicit operator bool() const { return ok; }
};

/// True iff every vertex outside `s` has a nonempty trace N(u) ∩ s and the
/// traces of distinct outside vertices differ. On failure the certificate is
/// the smallest undominated vertex, or else the lexicographically least pair
/// with equal traces.
CheckResult is_locating_dominating(const ComponentGraph& g, const VertexSet& s);

/// True iff the closed-neighborhood traces N[u] ∩ s of all vertices are
/// pairwise distinct (and, under RequireNonempty, all nonempty).
CheckResult is_identifying_code(const ComponentGraph& g, const VertexSet& s,
                                IdConvention convention = IdConvention::RequireNonempty);

// Named set families used as witnesses.

/// All weight-1 vertices (the class T_1).
VertexSet family_weight_one(const ComponentGraph& g);

/// T_2 ∪ T_{n-1}; requires q = 2 and n >= 4. Cardinality C(n,2) + n.
VertexSet family_weight_two_penultimate(const ComponentGraph& g);

/// Everything except one chosen member of each non-singleton twin class;
/// requires q >= 3. `excluded` holds one position per non-singleton class of
/// `p` (in class order); empty means "exclude each class's smallest member".
/// Cardinality is sum over i of C(n,i)((q-1)^i - 1).
VertexSet family_twin_deletion(const ComponentGraph& g, const TwinPartition& p,
                               std::span<const std::uint32_t> excluded = {});

/// The 7-vertex set (three weight-2 vertices through the last coordinate,
/// plus all of T_3) witnessing minimal locating-dominating sets of unequal
/// size; requires q = 2 and n = 4.
VertexSet family_exchange_counterexample(const ComponentGraph& g);

} // namespace ncg

#endif
