#ifndef NCG_VERIFY_HPP
#define NCG_VERIFY_HPP

#include <string>
#include <vector>

#include "ncg/codes.hpp"
#include "ncg/solver.hpp"

namespace ncg {

enum class ClaimStatus { Pass, Fail, Skipped };

/// One verified claim: a closed-form or structural statement about the
/// component graph, the value it predicts, and the value actually computed.
struct ClaimRow {
    std::string id;
    std::string statement;
    std::string expected;
    std::string computed;
    ClaimStatus status = ClaimStatus::Skipped;
};

struct VerifyReport {
    int n = 0;
    int q = 0;
    std::vector<ClaimRow> rows;

    std::size_t passed() const;
    std::size_t failed() const;
    std::size_t skipped() const;
    bool all_passed() const { return failed() == 0; }
};

struct VerifyOptions {
    std::uint64_t budget = 100'000'000;
    int threads = 1;
    IdConvention id_convention = IdConvention::RequireNonempty;
    std::uint64_t vertex_cap = kDefaultVertexCap;
};

/// Runs the full claim matrix for one (n, q): order, size, class sizes,
/// degrees, neighbor profiles (q = 2), twin structure and bound (q >= 3),
/// minimum locating-dominating and identifying values, witness families, the
/// unique minimal code (q = 2), and the exchange property where tractable.
/// Claims outside their stated hypotheses are reported Skipped, never
/// Pass/Fail; claims whose exact computation would blow the budget are
/// Skipped with an explanatory note.
VerifyReport verify_claims(int n, int q, const VerifyOptions& opts = {});

/// The instances `verify` covers by default when no explicit (n, q) is given.
std::vector<std::pair<int, int>> default_verify_matrix();

} // namespace ncg

#endif
