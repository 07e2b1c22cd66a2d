#include "ncg/solver.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace ncg {

namespace {

constexpr std::uint32_t kNoClass = ~std::uint32_t{0};
constexpr std::uint64_t kSaturated = ~std::uint64_t{0};

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
    return a > kSaturated - b ? kSaturated : a + b;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
    return p > kSaturated ? kSaturated : static_cast<std::uint64_t>(p);
}

// C(n,k) saturating instead of overflowing; partial products are
// nondecreasing, so clamping early is sound.
std::uint64_t binomial_sat(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 acc = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;
        if (acc > kSaturated) return kSaturated;
    }
    return static_cast<std::uint64_t>(acc);
}

// Twin-class quota bookkeeping: every feasible set leaves out at most one
// member of each class of size >= 2 (a second missing member would make two
// twins outside the set share a trace).
struct QuotaInfo {
    std::vector<std::uint32_t> class_id; // vertex -> quota class, or kNoClass
    std::vector<std::uint32_t> class_size;
    std::vector<std::vector<std::uint32_t>> class_positions; // ascending
    std::size_t unconstrained = 0; // vertices without a quota class
};

QuotaInfo make_quota(const ComponentGraph& g, const TwinPartition& p) {
    QuotaInfo q;
    q.class_id.assign(g.order(), kNoClass);
    for (const auto& cls : p.classes) {
        if (cls.kind == TwinKind::Singleton) continue;
        std::uint32_t id = static_cast<std::uint32_t>(q.class_size.size());
        auto positions = cls.members.positions();
        for (auto v : positions) q.class_id[v] = id;
        q.class_size.push_back(static_cast<std::uint32_t>(positions.size()));
        q.class_positions.push_back(std::move(positions));
    }
    q.unconstrained = g.order();
    for (auto s : q.class_size) q.unconstrained -= s;
    return q;
}

// Exact number of quota-valid k-subsets, saturating. Each class of size m
// contributes the polynomial x^m + m x^(m-1); unconstrained vertices
// contribute binomial tails.
std::uint64_t quota_count(const QuotaInfo& q, int k) {
    std::vector<std::uint64_t> poly{1};
    for (auto m : q.class_size) {
        std::vector<std::uint64_t> next(poly.size() + m, 0);
        for (std::size_t d = 0; d < poly.size(); ++d) {
            if (!poly[d]) continue;
            next[d + m] = sat_add(next[d + m], poly[d]);
            next[d + m - 1] = sat_add(next[d + m - 1], sat_mul(poly[d], m));
        }
        poly = std::move(next);
    }
    std::uint64_t total = 0;
    for (std::size_t d = 0; d < poly.size(); ++d) {
        if (!poly[d] || static_cast<int>(d) > k) continue;
        total = sat_add(total, sat_mul(poly[d], binomial_sat(q.unconstrained, k - d)));
    }
    return total;
}

// Lexicographic scan of the quota-valid k-subsets whose smallest member is
// `first`. The visitor returns true to stop the block.
template <typename Visit>
class BlockScan {
public:
    BlockScan(const QuotaInfo& quota, std::size_t order, Visit& visit)
        : quota_(quota), order_(order), visit_(visit), current_(order),
          excluded_(quota.class_size.size(), 0) {}

    // returns candidates evaluated in this block
    std::uint64_t run(int k, std::uint32_t first) {
        evaluated_ = 0;
        stopped_ = false;
        std::uint32_t prefix_excluded = 0;
        bool feasible = true;
        for (std::uint32_t v = 0; v < first && feasible; ++v) {
            feasible = exclude(v);
            ++prefix_excluded;
        }
        if (feasible) {
            current_.set(first);
            descend(first + 1, k - 1);
            current_.reset(first);
        }
        for (std::uint32_t v = 0; v < prefix_excluded; ++v) unexclude(v);
        return evaluated_;
    }

    bool stopped() const { return stopped_; }

private:
    bool exclude(std::uint32_t v) {
        std::uint32_t c = quota_.class_id[v];
        if (c == kNoClass) return true;
        return ++excluded_[c] <= 1;
    }

    void unexclude(std::uint32_t v) {
        std::uint32_t c = quota_.class_id[v];
        if (c != kNoClass) --excluded_[c];
    }

    // all members of every quota class at positions >= from will be excluded
    bool tail_ok(std::uint32_t from) const {
        for (std::size_t c = 0; c < quota_.class_size.size(); ++c) {
            const auto& pos = quota_.class_positions[c];
            auto it = std::lower_bound(pos.begin(), pos.end(), from);
            std::uint32_t tail = static_cast<std::uint32_t>(pos.end() - it);
            if (excluded_[c] + tail > 1) return false;
        }
        return true;
    }

    void descend(std::uint32_t next, int remaining) {
        if (remaining == 0) {
            if (!tail_ok(next)) return;
            ++evaluated_;
            if (visit_(current_)) stopped_ = true;
            return;
        }
        const std::uint32_t limit = static_cast<std::uint32_t>(order_ - remaining);
        std::uint32_t excluded_upto = next;
        for (std::uint32_t v = next; v <= limit; ++v) {
            current_.set(v);
            descend(v + 1, remaining - 1);
            current_.reset(v);
            if (stopped_) break;
            excluded_upto = v + 1;
            if (!exclude(v)) break; // a second member of v's class is now out
        }
        for (std::uint32_t v = next; v < excluded_upto; ++v) unexclude(v);
    }

    const QuotaInfo& quota_;
    std::size_t order_;
    Visit& visit_;
    VertexSet current_;
    std::vector<std::uint32_t> excluded_;
    std::uint64_t evaluated_ = 0;
    bool stopped_ = false;
};

// Largest admissible first element for stage k: blocks whose prefix exclusion
// already drops two members of one class can never emit.
std::uint32_t block_limit(const QuotaInfo& q, std::size_t order, int k) {
    std::uint32_t limit = static_cast<std::uint32_t>(order - k);
    std::vector<std::uint32_t> seen(q.class_size.size(), 0);
    for (std::uint32_t v = 0; v + 1 < order; ++v) {
        std::uint32_t c = q.class_id[v];
        if (c != kNoClass && ++seen[c] == 2) return std::min(limit, v);
    }
    return limit;
}

struct StageResult {
    bool found = false;
    VertexSet witness;
    std::uint64_t evaluated = 0;
};

// Runs one cardinality stage over first-element blocks. Every block is
// scanned to its own first hit (or exhaustion) regardless of other blocks, so
// the outcome and the evaluation count do not depend on scheduling.
template <typename Pred>
StageResult run_stage(const ComponentGraph& g, const QuotaInfo& quota, int k,
                      int threads, Pred pred) {
    StageResult result;
    if (k == 0) {
        VertexSet empty(g.order());
        bool quota_ok = true;
        for (auto s : quota.class_size) quota_ok &= s <= 1;
        if (quota_ok) {
            result.evaluated = 1;
            if (pred(empty)) {
                result.found = true;
                result.witness = empty;
            }
        }
        return result;
    }
    if (static_cast<std::size_t>(k) > g.order()) return result;

    const std::uint32_t limit = block_limit(quota, g.order(), k);
    struct BlockOutcome {
        bool found = false;
        VertexSet witness;
        std::uint64_t evaluated = 0;
    };
    std::vector<BlockOutcome> blocks(limit + 1);

    auto worker = [&](std::atomic<std::uint32_t>& next_block) {
        for (;;) {
            std::uint32_t b = next_block.fetch_add(1);
            if (b > limit) return;
            BlockOutcome& out = blocks[b];
            auto visit = [&](const VertexSet& cand) {
                if (!pred(cand)) return false;
                out.found = true;
                out.witness = cand;
                return true;
            };
            BlockScan<decltype(visit)> scan(quota, g.order(), visit);
            out.evaluated = scan.run(k, b);
        }
    };

    std::atomic<std::uint32_t> next_block{0};
    int nthreads = std::max(1, threads);
    if (nthreads == 1) {
        worker(next_block);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nthreads);
        for (int t = 0; t < nthreads; ++t) pool.emplace_back([&] { worker(next_block); });
        for (auto& t : pool) t.join();
    }

    for (const auto& b : blocks) {
        result.evaluated += b.evaluated;
        if (!result.found && b.found) {
            result.found = true;
            result.witness = b.witness;
        }
    }
    return result;
}

template <typename Pred>
SolveReport staged_minimum(const ComponentGraph& g, SolveTarget target,
                           std::uint64_t lower_bound, const QuotaInfo& quota,
                           const SolveOptions& opts, std::uint64_t already_examined,
                           Pred pred) {
    auto t0 = std::chrono::steady_clock::now();
    SolveReport report;
    report.target = target;
    report.lower_bound_used = lower_bound;
    report.candidates_examined = already_examined;

    for (std::uint64_t k = lower_bound; k <= g.order(); ++k) {
        std::uint64_t stage_size = quota_count(quota, static_cast<int>(k));
        if (stage_size == 0) continue;
        if (stage_size == kSaturated ||
            sat_add(report.candidates_examined, stage_size) > opts.budget)
            throw BudgetExceeded("stage of " + std::to_string(stage_size) +
                                 " candidates at cardinality " + std::to_string(k) +
                                 " does not fit in the remaining budget");
        StageResult stage = run_stage(g, quota, static_cast<int>(k), opts.threads, pred);
        report.candidates_examined += stage.evaluated;
        if (stage.found) {
            report.optimum = k;
            report.witness = std::move(stage.witness);
            break;
        }
    }
    report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - t0);
    return report;
}

bool has_adjacent_twins(const TwinPartition& p) {
    for (const auto& c : p.classes)
        if (c.kind == TwinKind::Adjacent) return true;
    return false;
}

} // namespace

std::uint64_t dimension_lower_bound(const ComponentGraph& g) {
    if (g.params().q == 2 && g.params().n >= 3)
        return static_cast<std::uint64_t>(g.params().n);
    return 0;
}

SolveReport minimum_locating_dominating(const ComponentGraph& g, const SolveOptions& opts) {
    TwinPartition part = twin_partition(g);
    QuotaInfo quota = make_quota(g, part);
    std::uint64_t lb = std::max(twin_lower_bound(part), dimension_lower_bound(g));
    return staged_minimum(g, SolveTarget::LocatingDominating, lb, quota, opts, 0,
                          [&](const VertexSet& s) { return is_locating_dominating(g, s).ok; });
}

SolveReport minimum_identifying_code(const ComponentGraph& g, const SolveOptions& opts) {
    auto t0 = std::chrono::steady_clock::now();
    TwinPartition part = twin_partition(g);
    QuotaInfo quota = make_quota(g, part);

    std::uint64_t lb = twin_lower_bound(part);
    if (opts.id_convention == IdConvention::RequireNonempty)
        lb = std::max(lb, dimension_lower_bound(g));

    // Existence: if even the full vertex set is not a code, nothing is. That
    // happens exactly when two closed neighborhoods coincide, i.e. when the
    // graph has adjacent twins; the two views must agree.
    CheckResult full = is_identifying_code(g, VertexSet::full(g.order()), opts.id_convention);
    if (full.ok == has_adjacent_twins(part))
        throw InternalError("full-set identifying check disagrees with twin structure");
    if (!full.ok) {
        SolveReport report;
        report.target = SolveTarget::IdentifyingCode;
        report.nonexistent = true;
        report.lower_bound_used = lb;
        report.candidates_examined = 1;
        report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - t0);
        return report;
    }

    return staged_minimum(
        g, SolveTarget::IdentifyingCode, lb, quota, opts, 1,
        [&](const VertexSet& s) { return is_identifying_code(g, s, opts.id_convention).ok; });
}

namespace {

template <typename Pred>
std::vector<VertexSet> enumerate_minimal(const ComponentGraph& g, std::size_t size_cap,
                                         std::uint64_t lower_bound, const QuotaInfo& quota,
                                         const SolveOptions& opts, Pred pred) {
    const std::size_t cap = std::min(size_cap, g.order());

    std::uint64_t total = 0;
    for (std::uint64_t k = lower_bound; k <= cap; ++k)
        total = sat_add(total, quota_count(quota, static_cast<int>(k)));
    if (total > opts.budget)
        throw BudgetExceeded("enumeration of " + std::to_string(total) +
                             " candidates does not fit in the budget");

    auto is_minimal = [&](const VertexSet& s) {
        VertexSet probe = s;
        bool minimal = true;
        s.for_each([&](std::uint32_t v) {
            if (!minimal) return;
            probe.reset(v);
            if (pred(probe)) minimal = false;
            probe.set(v);
        });
        return minimal;
    };

    std::vector<VertexSet> out;
    for (std::uint64_t k = lower_bound; k <= cap; ++k) {
        if (quota_count(quota, static_cast<int>(k)) == 0) continue;
        auto visit = [&](const VertexSet& cand) {
            if (pred(cand) && is_minimal(cand)) out.push_back(cand);
            return false; // never stop early: the enumeration is exhaustive
        };
        const std::uint32_t limit = block_limit(quota, g.order(), static_cast<int>(k));
        if (k == 0) {
            VertexSet empty(g.order());
            bool quota_ok = true;
            for (auto s : quota.class_size) quota_ok &= s <= 1;
            if (quota_ok) visit(empty);
            continue;
        }
        if (k > g.order()) break;
        BlockScan<decltype(visit)> scan(quota, g.order(), visit);
        for (std::uint32_t b = 0; b <= limit; ++b) scan.run(static_cast<int>(k), b);
    }
    std::sort(out.begin(), out.end(), set_lex_less);
    return out;
}

} // namespace

std::vector<VertexSet> minimal_locating_dominating_sets(const ComponentGraph& g,
                                                        std::size_t size_cap,
                                                        const SolveOptions& opts) {
    TwinPartition part = twin_partition(g);
    QuotaInfo quota = make_quota(g, part);
    std::uint64_t lb = std::max(twin_lower_bound(part), dimension_lower_bound(g));
    return enumerate_minimal(g, size_cap, lb, quota, opts,
                             [&](const VertexSet& s) { return is_locating_dominating(g, s).ok; });
}

std::vector<VertexSet> minimal_identifying_codes(const ComponentGraph& g, std::size_t size_cap,
                                                 const SolveOptions& opts) {
    TwinPartition part = twin_partition(g);
    if (has_adjacent_twins(part)) return {};
    QuotaInfo quota = make_quota(g, part);
    std::uint64_t lb = twin_lower_bound(part);
    if (opts.id_convention == IdConvention::RequireNonempty)
        lb = std::max(lb, dimension_lower_bound(g));
    return enumerate_minimal(g, size_cap, lb, quota, opts, [&](const VertexSet& s) {
        return is_identifying_code(g, s, opts.id_convention).ok;
    });
}

ExchangeReport check_exchange_property(const ComponentGraph& g,
                                       std::span<const VertexSet> sets,
                                       const SolveOptions& opts) {
    std::uint64_t checks = 0;
    auto ld = [&](const VertexSet& s) {
        if (++checks > opts.budget)
            throw BudgetExceeded("exchange check exceeded the budget of " +
                                 std::to_string(opts.budget) + " predicate evaluations");
        return is_locating_dominating(g, s).ok;
    };
    auto is_minimal = [&](const VertexSet& s) {
        VertexSet probe = s;
        bool minimal = true;
        s.for_each([&](std::uint32_t v) {
            if (!minimal) return;
            probe.reset(v);
            if (ld(probe)) minimal = false;
            probe.set(v);
        });
        return minimal;
    };

    for (const auto& s : sets) {
        if (s.size() != g.order())
            throw InvalidArgument("exchange check: set does not match the graph");
        if (!ld(s)) throw InvalidArgument("exchange check: input set is not locating-dominating");
        if (!is_minimal(s))
            throw InvalidArgument("exchange check: input set is not inclusion-minimal");
    }

    TwinPartition part = twin_partition(g);

    // scan smallest sets first so a failure between sets of unequal size is
    // reported with the least witnessing pair
    std::vector<std::uint32_t> order(sets.size());
    for (std::uint32_t i = 0; i < sets.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        if (sets[a].count() != sets[b].count()) return sets[a].count() < sets[b].count();
        return set_lex_less(sets[a], sets[b]);
    });

    ExchangeReport report;
    for (auto fi : order) {
        const auto& from = sets[fi];
        auto from_members = from.positions();
        for (auto ti : order) {
            const auto& into = sets[ti];
            for (auto u1 : from_members) {
                if (into.test(u1)) continue; // u2 = u1 swaps the set onto itself
                // candidate u2 order: twins of u1 first (the likely swap for
                // a twin-deletion set), then the rest ascending
                auto into_members = into.positions();
                std::stable_partition(into_members.begin(), into_members.end(),
                                      [&](std::uint32_t v) {
                                          return part.class_of[v] == part.class_of[u1];
                                      });
                bool found = false;
                for (auto u2 : into_members) {
                    VertexSet swapped = into;
                    swapped.reset(u2);
                    swapped.set(u1);
                    ++report.sets_examined;
                    if (ld(swapped) && is_minimal(swapped)) {
                        found = true;
                        break;
                    }
                }
                if (!found) {
                    report.holds = false;
                    report.witness = ExchangeReport::Witness{from, into, u1};
                    return report;
                }
            }
        }
    }
    return report;
}

SolveReport brute_force_optimum(const ComponentGraph& g, SolveTarget target,
                                const SolveOptions& opts) {
    if (g.order() > 20)
        throw InvalidArgument("brute-force oracle is limited to graphs of order <= 20");

    auto t0 = std::chrono::steady_clock::now();
    auto pred = [&](const VertexSet& s) {
        return target == SolveTarget::LocatingDominating
                   ? is_locating_dominating(g, s).ok
                   : is_identifying_code(g, s, opts.id_convention).ok;
    };

    SolveReport report;
    report.target = target;

    VertexSet current(g.order());
    bool found = false;
    VertexSet witness;
    // plain lexicographic k-combination scan, no pruning of any kind
    auto scan = [&](auto&& self, std::uint32_t next, int remaining) -> void {
        if (found) return;
        if (remaining == 0) {
            ++report.candidates_examined;
            if (report.candidates_examined > opts.budget)
                throw BudgetExceeded("brute-force enumeration exceeded the budget");
            if (pred(current)) {
                found = true;
                witness = current;
            }
            return;
        }
        for (std::uint32_t v = next;
             v <= static_cast<std::uint32_t>(g.order() - remaining) && !found; ++v) {
            current.set(v);
            self(self, v + 1, remaining - 1);
            current.reset(v);
        }
    };

    for (std::size_t k = 0; k <= g.order() && !found; ++k) scan(scan, 0, static_cast<int>(k));

    if (found) {
        report.optimum = witness.count();
        report.witness = std::move(witness);
    } else {
        report.nonexistent = true;
    }
    report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - t0);
    return report;
}

} // namespace ncg
