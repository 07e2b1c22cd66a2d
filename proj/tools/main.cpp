// Command-line front end: builds the non-zero component graph for a given
// dimension and alphabet size, solves for minimum locating-dominating sets
// and identifying codes, inspects twin classes, checks the exchange property,
// exports the graph, and verifies the full closed-form claim matrix.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ncg/export.hpp"
#include "ncg/reporting.hpp"
#include "ncg/solver.hpp"
#include "ncg/verify.hpp"

namespace {

struct Options {
    int n = 0;
    int q = 0;
    std::string format = "text";
    std::uint64_t budget = 100'000'000;
    std::uint64_t size_cap = 0; // 0 = choose per command
    int threads = 1;
    bool strict_id = true;
    std::uint64_t seed = 0; // reserved; exact paths ignore it
    std::uint64_t vertex_cap = ncg::kDefaultVertexCap;

    bool has_instance() const { return n > 0 && q > 0; }

    ncg::SpaceParams space() const { return {n, q, vertex_cap}; }

    ncg::SolveOptions solve() const {
        ncg::SolveOptions s;
        s.budget = budget;
        s.threads = threads;
        s.id_convention = strict_id ? ncg::IdConvention::RequireNonempty
                                    : ncg::IdConvention::DistinctOnly;
        return s;
    }
};

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
    for (auto* a : allowed)
        if (format == a) return;
    throw ncg::InvalidArgument("format '" + format + "' is not valid for this command");
}

// default enumeration cap for `exchange`: large enough to contain the known
// minimal sets of unequal size for q = 2, everything for the rest
std::uint64_t default_exchange_cap(const ncg::ComponentGraph& g) {
    int n = g.params().n;
    if (g.params().q == 2 && n == 4) return 7;
    if (g.params().q == 2 && n >= 5)
        return ncg::binomial(n, 2) + static_cast<std::uint64_t>(n);
    return g.order();
}

int run_verify(const Options& opt) {
    ncg::VerifyOptions vopts;
    vopts.budget = opt.budget;
    vopts.threads = opt.threads;
    vopts.id_convention = opt.strict_id ? ncg::IdConvention::RequireNonempty
                                        : ncg::IdConvention::DistinctOnly;
    vopts.vertex_cap = opt.vertex_cap;

    std::vector<std::pair<int, int>> instances;
    if (opt.has_instance())
        instances.emplace_back(opt.n, opt.q);
    else
        instances = ncg::default_verify_matrix();

    bool all_ok = true;
    if (opt.format == "json") {
        std::string out = "[";
        for (std::size_t i = 0; i < instances.size(); ++i) {
            auto report = ncg::verify_claims(instances[i].first, instances[i].second, vopts);
            all_ok = all_ok && report.all_passed();
            std::string one = ncg::render_verify_json(report);
            one.pop_back(); // strip the per-report newline inside the array
            if (i) out += ",";
            out += one;
        }
        out += "]\n";
        std::cout << out;
    } else {
        for (std::size_t i = 0; i < instances.size(); ++i) {
            auto report = ncg::verify_claims(instances[i].first, instances[i].second, vopts);
            all_ok = all_ok && report.all_passed();
            if (i) std::cout << "\n";
            std::cout << ncg::render_verify_text(report);
        }
    }
    return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"non-zero component graph toolkit"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("-n", opt.n, "space dimension (>= 1)");
    app.add_option("-q", opt.q, "alphabet size (>= 2)");
    app.add_option("--format", opt.format,
                   "output format: text|json, or dot|json|adjlist for export");
    app.add_option("--budget", opt.budget, "candidate budget for exact searches");
    app.add_option("--size-cap", opt.size_cap,
                   "cardinality cap for minimal-set enumeration (0 = per-command default)");
    app.add_option("--threads", opt.threads, "worker threads for the solver");
    app.add_option("--strict-id-definition", opt.strict_id,
                   "require nonempty traces in the identifying-code predicate");
    app.add_option("--seed", opt.seed, "reserved");
    app.add_option("--vertex-cap", opt.vertex_cap, "maximum number of vertices to build");

    auto* cmd_build = app.add_subcommand("build", "construct the graph and print a summary");
    auto* cmd_solve_ld =
        app.add_subcommand("solve-ld", "minimum locating-dominating set, exactly");
    auto* cmd_solve_id = app.add_subcommand("solve-id", "minimum identifying code, exactly");
    auto* cmd_twins = app.add_subcommand("twins", "list non-singleton twin classes");
    auto* cmd_exchange =
        app.add_subcommand("exchange", "check the exchange property over minimal sets");
    auto* cmd_verify =
        app.add_subcommand("verify", "run the claim matrix (default instances without -n/-q)");
    auto* cmd_export = app.add_subcommand("export", "serialize the graph");
    for (auto* sub : {cmd_build, cmd_solve_ld, cmd_solve_id, cmd_twins, cmd_exchange,
                      cmd_verify, cmd_export})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_verify->parsed()) {
            require_format(opt.format, {"text", "json"});
            return run_verify(opt);
        }

        if (!opt.has_instance())
            throw ncg::InvalidArgument("this command requires -n and -q");

        if (cmd_export->parsed()) {
            require_format(opt.format, {"dot", "json", "adjlist"});
            auto g = ncg::build_graph(opt.space());
            auto fmt = opt.format == "dot"
                           ? ncg::ExportFormat::Dot
                           : opt.format == "json" ? ncg::ExportFormat::Json
                                                  : ncg::ExportFormat::AdjList;
            std::cout << ncg::export_graph(g, fmt);
            return 0;
        }

        require_format(opt.format, {"text", "json"});
        const bool json = opt.format == "json";
        auto g = ncg::build_graph(opt.space());

        if (cmd_build->parsed()) {
            std::cout << (json ? ncg::render_build_json(g) : ncg::render_build_text(g));
        } else if (cmd_solve_ld->parsed()) {
            auto r = ncg::minimum_locating_dominating(g, opt.solve());
            std::cout << (json ? ncg::render_solve_json(g, r) : ncg::render_solve_text(g, r));
        } else if (cmd_solve_id->parsed()) {
            auto r = ncg::minimum_identifying_code(g, opt.solve());
            std::cout << (json ? ncg::render_solve_json(g, r) : ncg::render_solve_text(g, r));
        } else if (cmd_twins->parsed()) {
            auto p = ncg::twin_partition(g);
            std::cout << (json ? ncg::render_twins_json(g, p) : ncg::render_twins_text(g, p));
        } else if (cmd_exchange->parsed()) {
            std::uint64_t cap = opt.size_cap ? opt.size_cap : default_exchange_cap(g);
            auto sets = ncg::minimal_locating_dominating_sets(g, cap, opt.solve());
            auto r = ncg::check_exchange_property(g, sets, opt.solve());
            std::cout << (json ? ncg::render_exchange_json(g, r)
                               : ncg::render_exchange_text(g, r));
        }
        return 0;
    } catch (const ncg::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ncg::InvalidArgument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ncg::CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ncg::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
