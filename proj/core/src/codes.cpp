#include "ncg/codes.hpp"

#include <algorithm>

namespace ncg {

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

struct TraceEntry {
    std::uint64_t hash;
    std::uint32_t vertex;
};

// Shared core of both predicates: collect the trace of every relevant vertex,
// reject on an empty trace (when required), then find equal traces. Traces
// are bucketed by a 64-bit hash and confirmed word-for-word on collisions.
CheckResult check_traces(const ComponentGraph& g, const VertexSet& s, bool closed,
                         bool skip_members, bool require_nonempty) {
    if (s.size() != g.order())
        throw InvalidArgument("vertex set does not match the graph order");

    const std::size_t words = g.row_words();
    const auto set_words = s.words();

    std::vector<std::uint64_t> traces; // contiguous, `words` per entry
    std::vector<TraceEntry> entries;
    traces.reserve(g.order() * words);
    entries.reserve(g.order());

    for (std::uint32_t v = 0; v < g.order(); ++v) {
        if (skip_members && s.test(v)) continue;
        auto row = g.row(v);
        std::uint64_t h = 0x452821e638d01377ULL;
        bool empty = true;
        for (std::size_t w = 0; w < words; ++w) {
            std::uint64_t t = row[w] & set_words[w];
            if (closed && (v >> 6) == w && s.test(v)) t |= std::uint64_t{1} << (v & 63);
            traces.push_back(t);
            if (t) empty = false;
            h = mix(h, t);
        }
        if (empty && require_nonempty)
            return {false, Violation{Violation::Kind::EmptyTrace, v, v}};
        entries.push_back({h, v});
    }

    std::sort(entries.begin(), entries.end(), [](const TraceEntry& a, const TraceEntry& b) {
        return a.hash != b.hash ? a.hash < b.hash : a.vertex < b.vertex;
    });

    // entries.index -> offset into traces: traces were appended in vertex
    // order, so recover each entry's slot from its rank in that order
    std::vector<std::uint32_t> slot_of(g.order(), 0);
    {
        std::uint32_t slot = 0;
        for (std::uint32_t v = 0; v < g.order(); ++v) {
            if (skip_members && s.test(v)) continue;
            slot_of[v] = slot++;
        }
    }
    auto trace_of = [&](std::uint32_t v) {
        return std::span<const std::uint64_t>(traces.data() +
                                              static_cast<std::size_t>(slot_of[v]) * words,
                                              words);
    };

    std::optional<Violation> best;
    for (std::size_t i = 0; i + 1 < entries.size(); ++i) {
        for (std::size_t j = i + 1; j < entries.size() && entries[j].hash == entries[i].hash;
             ++j) {
            auto ti = trace_of(entries[i].vertex);
            auto tj = trace_of(entries[j].vertex);
            if (!std::equal(ti.begin(), ti.end(), tj.begin(), tj.end())) continue;
            std::uint32_t a = std::min(entries[i].vertex, entries[j].vertex);
            std::uint32_t b = std::max(entries[i].vertex, entries[j].vertex);
            if (!best || a < best->first || (a == best->first && b < best->second))
                best = Violation{Violation::Kind::EqualTraces, a, b};
        }
    }
    if (best) return {false, best};
    return {true, std::nullopt};
}

} // namespace

CheckResult is_locating_dominating(const ComponentGraph& g, const VertexSet& s) {
    return check_traces(g, s, /*closed=*/false, /*skip_members=*/true,
                        /*require_nonempty=*/true);
}

CheckResult is_identifying_code(const ComponentGraph& g, const VertexSet& s,
                                IdConvention convention) {
    return check_traces(g, s, /*closed=*/true, /*skip_members=*/false,
                        convention == IdConvention::RequireNonempty);
}

VertexSet family_weight_one(const ComponentGraph& g) {
    return g.weight_class_members(1);
}

VertexSet family_weight_two_penultimate(const ComponentGraph& g) {
    if (g.params().q != 2 || g.params().n < 4)
        throw InvalidArgument("family requires q = 2 and n >= 4");
    VertexSet out = g.weight_class_members(2);
    g.weight_class_members(g.params().n - 1).for_each([&](std::uint32_t v) { out.set(v); });
    return out;
}

VertexSet family_twin_deletion(const ComponentGraph& g, const TwinPartition& p,
                               std::span<const std::uint32_t> excluded) {
    if (g.params().q < 3) throw InvalidArgument("family requires q >= 3");
    VertexSet out = VertexSet::full(g.order());
    std::size_t next = 0;
    for (std::uint32_t c = 0; c < p.classes.size(); ++c) {
        const auto& cls = p.classes[c];
        if (cls.kind == TwinKind::Singleton) continue;
        std::uint32_t drop;
        if (excluded.empty()) {
            drop = cls.members.positions().front();
        } else {
            if (next >= excluded.size())
                throw InvalidArgument("one excluded member required per non-singleton class");
            drop = excluded[next++];
            if (!cls.members.test(drop))
                throw InvalidArgument("excluded vertex is not a member of its class");
        }
        out.reset(drop);
    }
    if (!excluded.empty() && next != excluded.size())
        throw InvalidArgument("more exclusions than non-singleton classes");
    return out;
}

VertexSet family_exchange_counterexample(const ComponentGraph& g) {
    if (g.params().q != 2 || g.params().n != 4)
        throw InvalidArgument("family requires q = 2 and n = 4");
    VertexSet out = g.weight_class_members(3);
    const std::uint64_t top = std::uint64_t{1} << 3;
    for (std::uint32_t v = 0; v < g.order(); ++v) {
        const auto& label = g.vertex(v);
        if (label.weight == 2 && (label.support & top)) out.set(v);
    }
    return out;
}

} // namespace ncg
