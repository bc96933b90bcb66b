#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "nulldecomp/decomposition.hpp"
#include "nulldecomp/generator.hpp"
#include "nulldecomp/json_io.hpp"
#include "nulldecomp/null_basis.hpp"
#include "nulldecomp/oracles.hpp"
#include "nulldecomp/property_suite.hpp"
#include "nulldecomp/validate.hpp"

namespace nd = nulldecomp;

namespace {

int env_budget(int fallback) {
    if (const char* raw = std::getenv("NULLDECOMP_BUDGET")) {
        try {
            return std::stoi(raw);
        } catch (const std::exception&) {
            std::cerr << "ignoring malformed NULLDECOMP_BUDGET='" << raw << "'\n";
        }
    }
    return fallback;
}

void print_cycle(std::ostream& out, const nd::CycleWitness& w) {
    out << "length " << w.length << ": ";
    for (std::size_t i = 0; i < w.cycle.size(); ++i)
        out << (i ? "-" : "") << w.cycle[i];
    out << "\n";
}

std::string set_to_string(const nd::VertexSet& s) {
    std::string out = "{";
    for (int v : s) out += (out.size() > 1 ? "," : "") + std::to_string(v);
    return out + "}";
}

int cmd_validate(const std::string& path, long long cap) {
    nd::Graph g = nd::load_graph_file(path);
    auto result = nd::check_c4kfree_bipartite(g, cap);
    if (auto* cert = std::get_if<nd::Certificate>(&result)) {
        std::cout << "certified: C4k-free bipartite (" << g.vertex_count()
                  << " vertices, " << g.edge_count() << " edges, "
                  << cert->cycle_count << " elementary cycles)\n";
        return 0;
    }
    if (auto* rej = std::get_if<nd::Rejection>(&result)) {
        std::cout << "rejected: " << (rej->odd_cycle ? "odd cycle" : "cycle length ≡ 0 (mod 4)")
                  << ", witness ";
        print_cycle(std::cout, rej->witness);
        return 1;
    }
    std::cout << "inconclusive: more than " << std::get<nd::Inconclusive>(result).cap
              << " elementary cycles; raise --cap\n";
    return 2;
}

void print_report_table(const nd::AnalysisReport& rep) {
    const auto& d = rep.decomposition;
    std::cout << "nu       " << rep.nu << "\n"
              << "rank     " << rep.rank << "\n"
              << "nullity  " << rep.nullity << "\n"
              << "alpha    " << rep.alpha << "\n"
              << "inertia  (" << rep.inertia[0] << "," << rep.inertia[1] << ","
              << rep.inertia[2] << ")\n"
              << "m(G)     " << rep.m_count.get_str() << "\n"
              << "a(G)     " << rep.a_count.get_str() << "\n"
              << "supp     " << set_to_string(d.supp) << "\n"
              << "core     " << set_to_string(d.core) << "\n"
              << "npart    " << set_to_string(d.npart) << "\n";
    std::cout << "audit\n";
    for (const auto& entry : rep.audit)
        std::cout << "  [" << (entry.pass ? "pass" : "FAIL") << "] " << entry.identity
                  << " (" << entry.method << ")\n";
}

int cmd_analyze(const std::string& path, bool as_json, const nd::Options& opts) {
    nd::Graph g = nd::load_graph_file(path);
    nd::AnalysisReport rep = nd::analysis_report(g, opts);
    if (as_json)
        std::cout << nd::report_to_json(rep).dump(2) << "\n";
    else
        print_report_table(rep);
    for (const auto& entry : rep.audit)
        if (!entry.pass) return 1;
    return 0;
}

int cmd_nullbasis(const std::string& path, const nd::Options& opts) {
    nd::Graph g = nd::load_graph_file(path);
    if (!opts.unchecked) {
        auto vr = nd::check_c4kfree_bipartite(g, opts.cycle_cap);
        if (!nd::is_certified(vr)) throw nd::ValidationError("input not certified");
    }
    auto sides = nd::bipartition(g);
    if (std::holds_alternative<nd::CycleWitness>(sides))
        throw nd::ValidationError("graph is not bipartite");
    nd::Matching m = nd::maximum_matching(g, std::get<nd::Bipartition>(sides));
    std::cout << nd::basis_to_json(nd::null_basis(g, m)).dump(2) << "\n";
    return 0;
}

int cmd_oracle_check(const std::string& path, int budget) {
    nd::Graph g = nd::load_graph_file(path);
    auto zito = nd::oracle::zito_decomposition(g, budget);
    auto ge = nd::oracle::gallai_edmonds_decomposition(g, budget);
    auto ns = nd::oracle::nullspace_decomposition_general(g);
    auto row = [](const std::string& name, const nd::oracle::TripleDecomposition& t) {
        std::cout << name << "\n  always    " << set_to_string(t.always)
                  << "\n  never     " << set_to_string(t.never) << "\n  sometimes "
                  << set_to_string(t.sometimes) << "\n";
        if (!t.overlap.empty())
            std::cout << "  overlap   " << set_to_string(t.overlap) << "\n";
    };
    row("zito", zito);
    row("gallai_edmonds", ge);
    row("nullspace", ns);
    bool coincide = zito.always == ge.always && ge.always == ns.always &&
                    zito.never == ge.never && ge.never == ns.never &&
                    zito.sometimes == ge.sometimes && ge.sometimes == ns.sometimes &&
                    ns.overlap.empty();
    bool certified = nd::is_certified(nd::check_c4kfree_bipartite(g));
    std::cout << (coincide ? "decompositions coincide" : "decompositions differ")
              << (certified ? " (certified input)" : " (input outside the class)") << "\n";
    if (certified && !coincide) return 1;
    return 0;
}

int cmd_gen(const nd::GenSpec& spec, const std::string& out_path) {
    nd::Graph g = nd::generate(spec);
    std::string text = nd::serialize_edge_list(g);
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write " + out_path);
        out << text;
    }
    return 0;
}

int cmd_fuzz(nd::GenSpec spec, int trials, int budget) {
    if (spec.family != nd::Family::tree && spec.family != nd::Family::c4kfree)
        throw std::invalid_argument(
            "fuzz checks certified-class invariants; use --family tree or c4kfree");
    for (int t = 0; t < trials; ++t) {
        nd::GenSpec trial_spec = spec;
        trial_spec.seed = spec.seed + static_cast<std::uint64_t>(t);
        nd::Graph g = nd::generate(trial_spec);
        auto results = nd::run_property_suite(g, budget);
        if (!nd::all_passed(results)) {
            std::cout << "FAIL: reproduce with --family "
                      << nd::family_to_string(trial_spec.family) << " --n " << trial_spec.n
                      << " --extra " << trial_spec.extra_edges << " --seed "
                      << trial_spec.seed << "\n";
            for (const auto& name : nd::failed_names(results))
                std::cout << "  failed: " << name << "\n";
            return 1;
        }
    }
    std::cout << "ok: " << trials << " instances, all invariants hold\n";
    return 0;
}

int cmd_export_dot(const std::string& path, const std::string& out_path) {
    nd::Graph g = nd::load_graph_file(path);
    auto ns = nd::oracle::nullspace_decomposition_general(g);
    std::string dot = nd::to_dot(g, ns.always, ns.never, ns.sometimes);
    if (out_path.empty() || out_path == "-") {
        std::cout << dot;
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write " + out_path);
        out << dot;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"null-space decomposition toolkit for C4k-free bipartite graphs"};
    app.require_subcommand(1);

    std::string path, out_path;
    long long cap = nd::kDefaultCycleCap;
    nd::Options opts;
    opts.budget = env_budget(opts.budget);
    int budget = opts.budget;
    bool as_json = false;

    auto* validate = app.add_subcommand("validate", "certify a graph or print a witness");
    validate->add_option("file", path)->required();
    validate->add_option("--cap", cap, "elementary-cycle cap");

    auto* analyze = app.add_subcommand("analyze", "full analysis report");
    analyze->add_option("file", path)->required();
    analyze->add_flag("--json", as_json, "emit the JSON report");
    analyze->add_flag("--unchecked", opts.unchecked, "skip certification");
    analyze->add_option("--budget", opts.budget, "per-component brute-force budget");
    analyze->add_option("--cap", opts.cycle_cap, "elementary-cycle cap");

    auto* nullbasis = app.add_subcommand("nullbasis", "constructive null basis as JSON");
    nullbasis->add_option("file", path)->required();
    nullbasis->add_flag("--unchecked", opts.unchecked, "skip certification");

    auto* oracle = app.add_subcommand("oracle-check",
                                      "compare zito / gallai-edmonds / nullspace");
    oracle->add_option("file", path)->required();
    oracle->add_option("--budget", budget, "oracle vertex budget");

    nd::GenSpec spec;
    std::string family = "c4kfree";
    int trials = 100;
    auto* gen = app.add_subcommand("gen", "generate a test instance");
    gen->add_option("--family", family, "tree|c4kfree|bipartite_any|general");
    gen->add_option("--n", spec.n, "vertex count")->required();
    gen->add_option("--extra", spec.extra_edges, "extra edges beyond the tree");
    gen->add_option("--seed", spec.seed, "64-bit seed");
    gen->add_option("-o,--output", out_path, "output file (default stdout)");

    auto* fuzz = app.add_subcommand("fuzz", "run the invariant suite on random instances");
    fuzz->add_option("--family", family, "tree|c4kfree|bipartite_any|general");
    fuzz->add_option("--n", spec.n, "vertex count")->required();
    fuzz->add_option("--extra", spec.extra_edges, "extra edges beyond the tree");
    fuzz->add_option("--seed", spec.seed, "base seed");
    fuzz->add_option("--trials", trials, "number of instances");
    fuzz->add_option("--budget", budget, "oracle vertex budget");

    auto* dot = app.add_subcommand("export-dot", "DOT file with the vertex classes");
    dot->add_option("file", path)->required();
    dot->add_option("-o,--output", out_path, "output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) return cmd_validate(path, cap);
        if (analyze->parsed()) return cmd_analyze(path, as_json, opts);
        if (nullbasis->parsed()) return cmd_nullbasis(path, opts);
        if (oracle->parsed()) return cmd_oracle_check(path, budget);
        if (gen->parsed()) {
            spec.family = nd::family_from_string(family);
            return cmd_gen(spec, out_path);
        }
        if (fuzz->parsed()) {
            spec.family = nd::family_from_string(family);
            return cmd_fuzz(spec, trials, budget);
        }
        if (dot->parsed()) return cmd_export_dot(path, out_path);
    } catch (const nd::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const nd::ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
