#ifndef NCG_SOLVER_HPP
#define NCG_SOLVER_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ncg/codes.hpp"
#include "ncg/graph.hpp"
#include "ncg/twins.hpp"

namespace ncg {

enum class SolveTarget { LocatingDominating, IdentifyingCode };

struct SolveOptions {
    /// Upper bound on candidate sets a search may evaluate. A cardinality
    /// stage is entered only when its full candidate count fits in the
    /// remaining budget, so success, failure and every reported counter are
    /// independent of timing and thread count.
    std::uint64_t budget = 100'000'000;
    int threads = 1;
    IdConvention id_convention = IdConvention::RequireNonempty;
};

struct SolveReport {
    SolveTarget target = SolveTarget::LocatingDominating;
    std::optional<std::uint64_t> optimum; // empty iff nonexistent
    bool nonexistent = false;
    std::optional<VertexSet> witness; // lexicographically least optimal set
    std::uint64_t lower_bound_used = 0;
    std::uint64_t candidates_examined = 0;
    std::chrono::milliseconds elapsed{0};
};

struct ExchangeReport {
    bool holds = true;
    struct Witness {
        VertexSet from_set;        // L1
        VertexSet into_set;        // L2
        std::uint32_t element = 0; // u1 in L1 with no feasible swap into L2
    };
    std::optional<Witness> witness;
    std::uint64_t sets_examined = 0; // candidate swapped sets evaluated
};

/// n when q = 2 and n >= 3 (every locating-dominating set is then at least
/// that large), 0 otherwise.
std::uint64_t dimension_lower_bound(const ComponentGraph& g);

/// Exact minimum locating-dominating set. Iterates cardinality upward from
/// max(twin bound, dimension bound); candidates violating a twin-class quota
/// (at most one member of each twin class missing) are never generated.
SolveReport minimum_locating_dominating(const ComponentGraph& g,
                                        const SolveOptions& opts = {});

/// Exact minimum identifying code, or a nonexistent report when the full
/// vertex set already fails (equivalently: the graph has adjacent twins,
/// which is cross-checked).
SolveReport minimum_identifying_code(const ComponentGraph& g,
                                     const SolveOptions& opts = {});

/// All inclusion-minimal locating-dominating sets of size <= size_cap,
/// sorted lexicographically.
std::vector<VertexSet> minimal_locating_dominating_sets(const ComponentGraph& g,
                                                        std::size_t size_cap,
                                                        const SolveOptions& opts = {});

/// All inclusion-minimal identifying codes of size <= size_cap, sorted
/// lexicographically.
std::vector<VertexSet> minimal_identifying_codes(const ComponentGraph& g,
                                                 std::size_t size_cap,
                                                 const SolveOptions& opts = {});

/// Checks the exchange property over the given collection of inclusion-minimal
/// locating-dominating sets (each input is re-verified): for every ordered
/// pair (L1, L2) and every u1 in L1 there must be a u2 in L2 such that
/// (L2 \ {u2}) ∪ {u1} is again inclusion-minimal locating-dominating, where
/// minimality is established by the single-deletion test.
ExchangeReport check_exchange_property(const ComponentGraph& g,
                                       std::span<const VertexSet> sets,
                                       const SolveOptions& opts = {});

/// Independent oracle: plain subset enumeration in cardinality-then-
/// lexicographic order with no pruning at all. Only for graphs of order
/// <= 20; exists to cross-validate the staged searches.
SolveReport brute_force_optimum(const ComponentGraph& g, SolveTarget target,
                                const SolveOptions& opts = {});

} // namespace ncg

#endif
