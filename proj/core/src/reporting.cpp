#include "ncg/reporting.hpp"

#include <nlohmann/json.hpp>

namespace ncg {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string join(const std::vector<std::string>& parts, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

const char* target_name(SolveTarget t) {
    return t == SolveTarget::LocatingDominating ? "ld" : "id";
}

const char* kind_name(TwinKind k) {
    switch (k) {
    case TwinKind::Adjacent: return "adjacent";
    case TwinKind::NonAdjacent: return "nonadjacent";
    case TwinKind::Singleton: return "singleton";
    }
    return "?";
}

const char* status_name(ClaimStatus s) {
    switch (s) {
    case ClaimStatus::Pass: return "PASS";
    case ClaimStatus::Fail: return "FAIL";
    case ClaimStatus::Skipped: return "SKIP";
    }
    return "?";
}

} // namespace

std::vector<std::string> set_labels(const ComponentGraph& g, const VertexSet& s) {
    std::vector<std::string> out;
    out.reserve(s.count());
    s.for_each([&](std::uint32_t v) { out.push_back(g.label_of(v)); });
    return out;
}

std::string render_build_text(const ComponentGraph& g) {
    std::string out;
    out += "n " + std::to_string(g.params().n) + "\n";
    out += "q " + std::to_string(g.params().q) + "\n";
    out += "order " + std::to_string(g.order()) + "\n";
    out += "size " + std::to_string(g.edge_count()) + "\n";
    return out;
}

std::string render_build_json(const ComponentGraph& g) {
    ordered_json doc;
    doc["n"] = g.params().n;
    doc["q"] = g.params().q;
    doc["order"] = g.order();
    doc["size"] = g.edge_count();
    return doc.dump() + "\n";
}

std::string render_solve_text(const ComponentGraph& g, const SolveReport& r) {
    std::string out;
    out += std::string("target ") + target_name(r.target) + "\n";
    if (r.nonexistent) {
        out += "optimum nonexistent\n";
    } else {
        out += "optimum " + std::to_string(*r.optimum) + "\n";
        out += "witness " + join(set_labels(g, *r.witness), " ") + "\n";
    }
    out += "lower_bound " + std::to_string(r.lower_bound_used) + "\n";
    out += "candidates " + std::to_string(r.candidates_examined) + "\n";
    out += "elapsed_ms " + std::to_string(r.elapsed.count()) + "\n";
    return out;
}

std::string render_solve_json(const ComponentGraph& g, const SolveReport& r) {
    ordered_json doc;
    doc["target"] = target_name(r.target);
    if (r.optimum)
        doc["optimum"] = *r.optimum;
    else
        doc["optimum"] = nullptr;
    doc["nonexistent"] = r.nonexistent;
    if (r.witness)
        doc["witness"] = set_labels(g, *r.witness);
    else
        doc["witness"] = nullptr;
    doc["lower_bound"] = r.lower_bound_used;
    doc["candidates"] = r.candidates_examined;
    doc["elapsed_ms"] = r.elapsed.count();
    return doc.dump() + "\n";
}

std::string render_twins_text(const ComponentGraph& g, const TwinPartition& p) {
    std::string out;
    for (const auto& cls : p.classes) {
        if (cls.kind == TwinKind::Singleton) continue;
        out += kind_name(cls.kind);
        out += " " + std::to_string(cls.members.count());
        out += " " + join(set_labels(g, cls.members), " ");
        out += "\n";
    }
    return out;
}

std::string render_twins_json(const ComponentGraph& g, const TwinPartition& p) {
    ordered_json doc;
    auto classes = ordered_json::array();
    for (const auto& cls : p.classes) {
        if (cls.kind == TwinKind::Singleton) continue;
        classes.push_back({{"kind", kind_name(cls.kind)},
                           {"size", cls.members.count()},
                           {"members", set_labels(g, cls.members)}});
    }
    doc["classes"] = std::move(classes);
    doc["lower_bound"] = twin_lower_bound(p);
    return doc.dump() + "\n";
}

std::string render_exchange_text(const ComponentGraph& g, const ExchangeReport& r) {
    std::string out;
    out += std::string("holds ") + (r.holds ? "true" : "false") + "\n";
    if (r.witness) {
        out += "from_set (" + std::to_string(r.witness->from_set.count()) + ") " +
               join(set_labels(g, r.witness->from_set), " ") + "\n";
        out += "into_set (" + std::to_string(r.witness->into_set.count()) + ") " +
               join(set_labels(g, r.witness->into_set), " ") + "\n";
        out += "element " + g.label_of(r.witness->element) + "\n";
    }
    out += "sets_examined " + std::to_string(r.sets_examined) + "\n";
    return out;
}

std::string render_exchange_json(const ComponentGraph& g, const ExchangeReport& r) {
    ordered_json doc;
    doc["holds"] = r.holds;
    if (r.witness) {
        doc["witness"] = {{"from_set", set_labels(g, r.witness->from_set)},
                          {"into_set", set_labels(g, r.witness->into_set)},
                          {"element", g.label_of(r.witness->element)}};
    } else {
        doc["witness"] = nullptr;
    }
    doc["sets_examined"] = r.sets_examined;
    return doc.dump() + "\n";
}

std::string render_verify_text(const VerifyReport& r) {
    std::string out = "verify n=" + std::to_string(r.n) + " q=" + std::to_string(r.q) + "\n";
    for (const auto& row : r.rows) {
        out += status_name(row.status);
        out += " " + row.id;
        if (row.status == ClaimStatus::Skipped) {
            out += " (" + row.computed + ")";
        } else {
            out += " expected=" + row.expected + " computed=" + row.computed;
        }
        out += "\n";
    }
    out += "result: " + std::to_string(r.passed()) + " passed, " + std::to_string(r.failed()) +
           " failed, " + std::to_string(r.skipped()) + " skipped\n";
    return out;
}

std::string render_verify_json(const VerifyReport& r) {
    ordered_json doc;
    doc["n"] = r.n;
    doc["q"] = r.q;
    auto rows = ordered_json::array();
    for (const auto& row : r.rows) {
        rows.push_back({{"claim", row.id},
                        {"statement", row.statement},
                        {"expected", row.expected},
                        {"computed", row.computed},
                        {"status", row.status == ClaimStatus::Pass
                                       ? "pass"
                                       : row.status == ClaimStatus::Fail ? "fail" : "skipped"}});
    }
    doc["rows"] = std::move(rows);
    doc["passed"] = r.passed();
    doc["failed"] = r.failed();
    doc["skipped"] = r.skipped();
    return doc.dump() + "\n";
}

} // namespace ncg
