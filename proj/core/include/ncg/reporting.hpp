#ifndef NCG_REPORTING_HPP
#define NCG_REPORTING_HPP

#include <string>
#include <vector>

#include "ncg/solver.hpp"
#include "ncg/verify.hpp"

namespace ncg {

/// Members of a set as digit-string labels, in canonical index order.
std::vector<std::string> set_labels(const ComponentGraph& g, const VertexSet& s);

std::string render_build_text(const ComponentGraph& g);
std::string render_build_json(const ComponentGraph& g);

/// Text and JSON forms of a solve report. JSON schema:
///   {"target": "ld"|"id", "optimum": int|null, "nonexistent": bool,
///    "witness": [label, ...]|null, "lower_bound": int, "candidates": int,
///    "elapsed_ms": int}
std::string render_solve_text(const ComponentGraph& g, const SolveReport& r);
std::string render_solve_json(const ComponentGraph& g, const SolveReport& r);

/// One line per non-singleton twin class: "kind size members...", classes
/// ordered by smallest member.
std::string render_twins_text(const ComponentGraph& g, const TwinPartition& p);
std::string render_twins_json(const ComponentGraph& g, const TwinPartition& p);

std::string render_exchange_text(const ComponentGraph& g, const ExchangeReport& r);
std::string render_exchange_json(const ComponentGraph& g, const ExchangeReport& r);

std::string render_verify_text(const VerifyReport& r);
std::string render_verify_json(const VerifyReport& r);

} // namespace ncg

#endif
