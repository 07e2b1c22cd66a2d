#include "ncg/twins.hpp"

#include <algorithm>
#include <unordered_map>

namespace ncg {

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

std::uint64_t row_hash(std::span<const std::uint64_t> row) {
    std::uint64_t h = 0x243f6a8885a308d3ULL;
    for (auto w : row) h = mix(h, w);
    return h;
}

bool rows_equal(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
    return std::equal(a.begin(), a.end(), b.begin(), b.end());
}

// groups vertices in `pool` by the row produced by `key`; groups of size >= 2
// become classes of `kind`, the rest stay in the pool
void group_by_row(const ComponentGraph& g, std::vector<std::uint32_t>& pool,
                  TwinKind kind, bool closed, std::vector<TwinClass>& classes) {
    const std::size_t words = g.row_words();
    std::vector<std::uint64_t> scratch(words);
    auto key_row = [&](std::uint32_t v) -> std::span<const std::uint64_t> {
        auto r = g.row(v);
        if (!closed) return r;
        std::copy(r.begin(), r.end(), scratch.begin());
        scratch[v >> 6] |= std::uint64_t{1} << (v & 63);
        return scratch;
    };

    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> buckets;
    for (auto v : pool) buckets[row_hash(key_row(v))].push_back(v);

    std::vector<std::uint32_t> rest;
    std::vector<std::uint64_t> lead(words);
    for (auto& [h, verts] : buckets) {
        (void)h;
        // split hash buckets on true row equality
        std::vector<char> used(verts.size(), 0);
        for (std::size_t i = 0; i < verts.size(); ++i) {
            if (used[i]) continue;
            std::vector<std::uint32_t> group{verts[i]};
            auto ri = key_row(verts[i]);
            std::copy(ri.begin(), ri.end(), lead.begin());
            for (std::size_t j = i + 1; j < verts.size(); ++j) {
                if (used[j]) continue;
                if (rows_equal(lead, key_row(verts[j]))) {
                    group.push_back(verts[j]);
                    used[j] = 1;
                }
            }
            if (group.size() >= 2) {
                TwinClass c;
                c.kind = kind;
                c.members = VertexSet::from_positions(g.order(), group);
                classes.push_back(std::move(c));
            } else {
                rest.push_back(group[0]);
            }
        }
    }
    pool = std::move(rest);
}

} // namespace

std::size_t TwinPartition::non_singleton_count() const {
    std::size_t c = 0;
    for (const auto& cls : classes)
        if (cls.kind != TwinKind::Singleton) ++c;
    return c;
}

TwinPartition twin_partition(const ComponentGraph& g) {
    std::vector<std::uint32_t> pool(g.order());
    for (std::uint32_t v = 0; v < g.order(); ++v) pool[v] = v;

    std::vector<TwinClass> classes;
    group_by_row(g, pool, TwinKind::Adjacent, /*closed=*/true, classes);
    group_by_row(g, pool, TwinKind::NonAdjacent, /*closed=*/false, classes);
    for (auto v : pool) {
        TwinClass c;
        c.kind = TwinKind::Singleton;
        c.members = VertexSet(g.order());
        c.members.set(v);
        classes.push_back(std::move(c));
    }

    auto smallest = [](const TwinClass& c) {
        std::uint32_t m = 0;
        bool found = false;
        c.members.for_each([&](std::uint32_t p) {
            if (!found) { m = p; found = true; }
        });
        return m;
    };
    std::sort(classes.begin(), classes.end(),
              [&](const TwinClass& a, const TwinClass& b) { return smallest(a) < smallest(b); });

    TwinPartition part;
    part.classes = std::move(classes);
    part.class_of.assign(g.order(), 0);
    for (std::uint32_t c = 0; c < part.classes.size(); ++c)
        part.classes[c].members.for_each([&](std::uint32_t v) { part.class_of[v] = c; });
    return part;
}

std::uint64_t twin_lower_bound(const TwinPartition& p) {
    std::uint64_t bound = 0;
    for (const auto& c : p.classes) bound += c.members.count() - 1;
    return bound;
}

VertexSet twin_swap(const VertexSet& set, std::uint32_t u, std::uint32_t v,
                    const TwinPartition& p) {
    if (u >= p.class_of.size() || v >= p.class_of.size())
        throw InvalidArgument("twin_swap: vertex position out of range");
    if (!set.test(u)) throw InvalidArgument("twin_swap: u is not in the set");
    if (set.test(v)) throw InvalidArgument("twin_swap: v is already in the set");
    if (p.class_of[u] != p.class_of[v] ||
        p.classes[p.class_of[u]].kind == TwinKind::Singleton)
        throw InvalidArgument("twin_swap: u and v are not twins");
    VertexSet out = set;
    out.reset(u);
    out.set(v);
    return out;
}

} // namespace ncg
