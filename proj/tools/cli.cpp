#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>

#include <CLI11.hpp>

#include "rainbowlab/constructions.hpp"
#include "rainbowlab/errors.hpp"
#include "rainbowlab/extremal.hpp"
#include "rainbowlab/graph_io.hpp"
#include "rainbowlab/rainbow.hpp"
#include "rainbowlab/verify.hpp"
#include "report.hpp"

namespace rainbowlab::cli {

namespace {

struct GlobalFlags {
    std::string format = "table";
    std::string out_path;
    int workers = 1;
    std::uint64_t seed = 1;
    int budget_edges = 16;
    long timeout_ms = 0;
    std::string allowlist;
};

int default_workers() {
    if (const char* env = std::getenv("RAINBOWLAB_WORKERS")) {
        try {
            return std::max(1, std::stoi(env));
        } catch (const std::exception&) {
        }
    }
    return 1;
}

SearchLimits limits_from(const GlobalFlags& g) {
    SearchLimits limits;
    limits.max_edges = g.budget_edges;
    limits.workers = g.workers;
    if (g.timeout_ms > 0) {
        limits.timeout = std::chrono::milliseconds(g.timeout_ms);
    }
    return limits;
}

// Where record output goes: --out when given, the command's stdout otherwise.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) {
                throw ParseError("cannot write " + path, 0);
            }
            stream_ = file_.get();
        }
    }

    std::ostream& get() { return *stream_; }

private:
    std::unique_ptr<std::ofstream> file_;
    std::ostream* stream_;
};

IntRange range_or(const std::string& text, IntRange fallback, const char* flag) {
    if (text.empty()) {
        return fallback;
    }
    auto r = parse_range(text);
    if (!r) {
        throw PreconditionError(std::string("bad range for ") + flag + ": '" + text + "' (expected a..b)");
    }
    return *r;
}

int to_int(const std::string& text, const char* what) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(text, &used);
        if (used == text.size()) {
            return v;
        }
    } catch (const std::exception&) {
    }
    throw PreconditionError(std::string("expected an integer for ") + what + ", got '" + text + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Rainbow numbers of matchings: exhaustive search, closed forms and extremal colorings"};
    app.fallthrough();
    app.require_subcommand(1);

    GlobalFlags g;
    g.workers = default_workers();
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"table", "json", "csv"}));
    app.add_option("--out", g.out_path, "Write output to FILE");
    app.add_option("--workers", g.workers, "Worker threads (default: $RAINBOWLAB_WORKERS or 1)")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", g.seed, "Seed for random graph families");
    app.add_option("--budget-edges", g.budget_edges, "Largest graph the exhaustive rb search accepts")
        ->check(CLI::PositiveNumber);
    app.add_option("--timeout-ms", g.timeout_ms, "Abort exhaustive searches after this many milliseconds");
    app.add_option("--allowlist", g.allowlist, "File of acknowledged discrepancies (verify)");

    // gen
    std::string gen_family;
    int gen_n = 0;
    int gen_k = 0;
    auto* gen = app.add_subcommand("gen", "Write a graph file");
    gen->add_option("family", gen_family, "path | cycle | complete_bipartite | circulant | random_regular")
        ->required()
        ->check(CLI::IsMember({"path", "cycle", "complete_bipartite", "circulant", "random_regular"}));
    gen->add_option("n", gen_n, "Size parameter")->required();
    gen->add_option("k", gen_k, "Degree (circulant, random_regular)");

    // rb / ext
    std::string graph_path;
    int m = 0;
    auto* rb = app.add_subcommand("rb", "Exact rainbow number rb(G, mK2) by exhaustive search");
    rb->add_option("graph", graph_path)->required();
    rb->add_option("m", m)->required();
    auto* ext = app.add_subcommand("ext", "Largest edge set without an m-matching");
    ext->add_option("graph", graph_path)->required();
    ext->add_option("m", m)->required();

    // check
    std::string coloring_path;
    auto* check = app.add_subcommand("check", "Look for a rainbow m-matching in a colored graph");
    check->add_option("graph", graph_path)->required();
    check->add_option("coloring", coloring_path)->required();
    check->add_option("m", m)->required();

    // construct
    std::string kind;
    std::vector<std::string> params;
    auto* construct = app.add_subcommand("construct", "Emit and certify an explicit rainbow-free coloring");
    construct->add_option("kind", kind, "regular GRAPH M | path_simple N M | path_tight N M | cycle_tight N M")
        ->required()
        ->check(CLI::IsMember({"regular", "path_simple", "path_tight", "cycle_tight"}));
    construct->add_option("params", params)->required();

    // verify / monotonicity
    std::string theorem;
    std::string n_text, k_text, m_text;
    int samples = 5;
    auto* verify = app.add_subcommand("verify", "Sweep instances and compare exhaustive values with closed forms");
    verify->add_option("theorem", theorem, "T2.3 T2.4 T2.5 T3.1 T3.2 T3.4 T3.5 T3.6 or all")->required();
    verify->add_option("--n", n_text, "Range a..b");
    verify->add_option("--k", k_text, "Range a..b");
    verify->add_option("--m", m_text, "Range a..b");
    verify->add_option("--samples", samples, "Realizations per regular cell (circulant + random)")
        ->check(CLI::PositiveNumber);
    auto* mono = app.add_subcommand("monotonicity", "Check that merging two vertices never lowers rb");
    mono->add_option("--n", n_text, "Range a..b");
    mono->add_option("--m", m_text, "Range a..b");
    mono->add_option("--samples", samples, "Random merged graphs to test")->check(CLI::NonNegativeNumber);

    std::vector<char*> argv;
    for (const auto& a : args) {
        argv.push_back(const_cast<char*>(a.c_str()));
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kPreconditionOrParse;
    }

    try {
        const Format fmt = *parse_format(g.format);
        const SearchLimits limits = limits_from(g);

        if (gen->parsed()) {
            Graph graph;
            std::map<std::string, std::string> meta{{"family", gen_family}, {"n", std::to_string(gen_n)}};
            if (gen_family == "path") {
                graph = make_path(gen_n);
            } else if (gen_family == "cycle") {
                graph = make_cycle(gen_n);
            } else if (gen_family == "complete_bipartite") {
                graph = make_complete_bipartite(gen_n);
                meta["k"] = std::to_string(gen_n);
            } else {
                if (gen_k < 1) {
                    throw PreconditionError(gen_family + " needs a degree k");
                }
                meta["k"] = std::to_string(gen_k);
                if (gen_family == "circulant") {
                    graph = make_circulant_regular_bipartite(gen_n, gen_k);
                } else {
                    auto r = make_random_regular_bipartite(gen_n, gen_k, g.seed);
                    graph = std::move(r.graph);
                    meta["seed"] = std::to_string(g.seed);
                    if (r.fell_back) {
                        meta["fallback"] = "circulant";
                        err << "warning: random sampling failed, wrote the circulant graph instead\n";
                    }
                }
            }
            Sink sink(g.out_path, out);
            write_graph(sink.get(), graph, meta);
            return kOk;
        }

        if (rb->parsed()) {
            const GraphFile file = load_graph(graph_path);
            const RbResult result = rb_exact(file.graph, m, limits);
            RbRecord rec;
            rec.graph_id = std::filesystem::path(graph_path).stem().string();
            auto meta_int = [&](const char* key) {
                auto it = file.meta.find(key);
                return it == file.meta.end() ? 0 : to_int(it->second, key);
            };
            rec.family = file.meta.count("family") ? file.meta.at("family") : "unknown";
            rec.n = meta_int("n");
            rec.k = meta_int("k");
            rec.m = m;
            rec.f_value = result.f_value;
            rec.rb_value = result.rb_value;
            if (auto claim = formula_for(rec.family, rec.n, rec.k, m)) {
                rec.formula_value = claim->value;
                rec.formula_source = claim->source;
                rec.agrees = claim->value == result.rb_value;
            }
            rec.colorings_examined = result.colorings_examined;
            rec.elapsed_ms = result.elapsed.count();
            if (result.extremal_coloring) {
                const auto colors = result.extremal_coloring->colors();
                rec.extremal_coloring.assign(colors.begin(), colors.end());
            }
            Sink sink(g.out_path, out);
            write_rb(sink.get(), rec, fmt);
            return kOk;
        }

        if (ext->parsed()) {
            const GraphFile file = load_graph(graph_path);
            Sink sink(g.out_path, out);
            write_ext(sink.get(), ext_exact(file.graph, m), fmt);
            return kOk;
        }

        if (check->parsed()) {
            const GraphFile file = load_graph(graph_path);
            const Coloring coloring = load_coloring(coloring_path);
            Sink sink(g.out_path, out);
            write_check(sink.get(), find_rainbow_matching(file.graph, coloring, m), fmt);
            return kOk;
        }

        if (construct->parsed()) {
            if (params.size() != 2) {
                throw PreconditionError("construct " + kind + " takes two arguments");
            }
            ConstructionReport report;
            if (kind == "regular") {
                report = extremal_coloring_regular(load_graph(params[0]).graph, to_int(params[1], "m"));
            } else {
                const int n = to_int(params[0], "n");
                const int mm = to_int(params[1], "m");
                report = kind == "path_simple"  ? extremal_coloring_path_simple(n, mm)
                         : kind == "path_tight" ? extremal_coloring_path_tight(n, mm)
                                                : extremal_coloring_cycle_tight(n, mm);
            }
            if (!g.out_path.empty()) {
                Sink sink(g.out_path, out);
                write_coloring(sink.get(), report.coloring);
            }
            write_construction(out, report, fmt);
            return report.rainbow_free_certified ? kOk : kCertificationFailed;
        }

        std::vector<AllowEntry> allow;
        if (!g.allowlist.empty()) {
            std::ifstream in(g.allowlist);
            if (!in) {
                throw ParseError("cannot open " + g.allowlist, 0);
            }
            allow = parse_allowlist(in);
        }

        std::vector<VerificationRecord> records;
        if (verify->parsed()) {
            std::vector<TheoremId> ids;
            if (theorem == "all") {
                ids = all_theorems();
            } else if (auto id = parse_theorem_id(theorem)) {
                ids.push_back(*id);
            } else {
                throw PreconditionError("unknown theorem id '" + theorem + "'");
            }
            for (TheoremId id : ids) {
                const bool regular = id == TheoremId::T2_3 || id == TheoremId::T2_4 || id == TheoremId::T2_5;
                VerifyOptions opt;
                opt.n = range_or(n_text, regular ? IntRange{3, 5} : IntRange{3, 9}, "--n");
                opt.k = range_or(k_text, IntRange{2, 5}, "--k");
                opt.m = range_or(m_text, regular ? IntRange{2, 3} : IntRange{2, 4}, "--m");
                opt.samples = samples;
                opt.seed = g.seed;
                opt.workers = g.workers;
                opt.limits = limits;
                auto part = verify_theorem(id, opt);
                records.insert(records.end(), part.begin(), part.end());
            }
        } else {
            VerifyOptions opt;
            opt.n = range_or(n_text, IntRange{3, 8}, "--n");
            opt.m = range_or(m_text, IntRange{2, 4}, "--m");
            opt.seed = g.seed;
            opt.workers = g.workers;
            opt.limits = limits;
            records = monotonicity_sweep(opt, samples);
        }
        apply_allowlist(records, allow);
        {
            Sink sink(g.out_path, out);
            write_verification(sink.get(), err, records, fmt);
        }
        if (!g.out_path.empty()) {
            out << summary_line(summarize(records)) << '\n';
        }
        return summarize(records).gated_failure() ? kDiscrepancy : kOk;
    } catch (const BudgetExceeded& e) {
        err << "budget refused: " << e.what() << '\n';
        return kBudgetRefused;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return kPreconditionOrParse;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kPreconditionOrParse;
    }
}

}  // namespace rainbowlab::cli
