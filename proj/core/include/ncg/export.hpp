#ifndef NCG_EXPORT_HPP
#define NCG_EXPORT_HPP

#include <string>

#include "ncg/graph.hpp"

namespace ncg {

enum class ExportFormat { Dot, Json, AdjList };

/// Deterministic serializations of a component graph. Vertices are labeled by
/// digit string, reported in canonical index order, and every rendering ends
/// with exactly one trailing newline.
///
/// JSON schema:
///   {"n": int, "q": int,
///    "nodes": [{"id": int, "label": str, "weight": int}, ...],
///    "edges": [[int, int], ...]}           // id pairs, sorted
/// DOT: undirected `graph ncg { ... }` with quoted digit-string labels.
/// Adjacency list: one `label: neighbor,neighbor,...` line per vertex.
std::string export_graph(const ComponentGraph& g, ExportFormat format);

std::string render_dot(const ComponentGraph& g);
std::string render_json(const ComponentGraph& g);
std::string render_adjlist(const ComponentGraph& g);

} // namespace ncg

#endif
