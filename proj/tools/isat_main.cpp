#include <chrono>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "isat/assemble.hpp"
#include "isat/catalog.hpp"
#include "isat/detect.hpp"
#include "isat/graph6.hpp"
#include "isat/json_io.hpp"
#include "isat/territory.hpp"

namespace {

// exit codes: 0 property holds, 1 property fails, 2 construction infeasible,
// 3 budget exceeded, 4 I/O or parse error
constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitBudget = 3;
constexpr int kExitIoError = 4;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw isat::parse_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw isat::parse_error("cannot write " + path);
    out << content;
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// input is either a catalog spec ("vd(5)", "hex_torus(6,8)", ...) or a path
// to a graph6 (.g6), edge list (.txt/.edges) or territory JSON file
isat::Graph load_graph(const std::string& input) {
    try {
        return isat::named_graph(input);
    } catch (const std::invalid_argument&) {
        // fall through to file loading
    }
    const std::string text = read_file(input);
    if (ends_with(input, ".json")) return isat::territory_from_json(isat::json::parse(text)).graph;
    if (ends_with(input, ".g6") || ends_with(input, ".graph6")) return isat::decode_graph6(text);
    return isat::parse_edge_list(text);
}

void print_graph_summary(const isat::Graph& g) {
    const auto gi = isat::girth(g);
    std::cout << "vertices " << g.vertex_count() << ", edges " << g.edge_count() << ", girth "
              << (gi ? std::to_string(*gi) : std::string("inf")) << "\n";
}

struct ConstructOptions {
    std::string family;
    int t = 5;
    int m = -1;
    long long lambda = -1;
    int n = 0, a = 0, b = 0, rows = 0, cols = 0;
    std::string out;
    std::string dot;
};

int run_construct(const ConstructOptions& opt) {
    std::string family = opt.family;
    for (auto& c : family)
        if (c == '-') c = '_';

    if (family == "canonical") {
        isat::Territory T;
        if (opt.lambda >= 0) {
            auto plan = isat::canonical_with_perimeter(opt.t, opt.lambda);
            T = std::move(plan.territory);
            std::cout << "canonical territory t=" << opt.t << " perimeter " << T.perimeter()
                      << " via m=" << plan.solution.m << " s1=" << plan.solution.s1
                      << " s2=" << plan.solution.s2 << "\n";
        } else {
            T = isat::canonical(opt.t, opt.m < 0 ? 0 : opt.m);
            std::cout << "canonical territory t=" << opt.t << " m=" << (opt.m < 0 ? 0 : opt.m)
                      << " perimeter " << T.perimeter() << "\n";
        }
        print_graph_summary(T.graph);
        if (!opt.out.empty()) write_file(opt.out, isat::territory_to_json(T).dump(2) + "\n");
        if (!opt.dot.empty()) write_file(opt.dot, isat::to_dot(T.graph));
        return kExitHolds;
    }

    std::string spec = family;
    auto arg1 = [&](int v) { spec += "(" + std::to_string(v) + ")"; };
    if (family == "cycle" || family == "path" || family == "complete" || family == "edgeless")
        arg1(opt.n);
    else if (family == "vd" || family == "line_ktt")
        arg1(opt.t);
    else if (family == "complete_bipartite")
        spec += "(" + std::to_string(opt.a) + "," + std::to_string(opt.b) + ")";
    else if (family == "hex_torus")
        spec += "(" + std::to_string(opt.rows) + "," + std::to_string(opt.cols) + ")";

    const isat::Graph g = isat::named_graph(spec);
    std::cout << spec << ": ";
    print_graph_summary(g);
    if (!opt.out.empty()) write_file(opt.out, isat::encode_graph6(g) + "\n");
    if (!opt.dot.empty()) write_file(opt.dot, isat::to_dot(g));
    return kExitHolds;
}

struct VerifyOptions {
    std::string input;
    int cycle = 0;
    int path = 0;
    std::string mode = "is";
    std::string report;
    std::uint64_t nodes = 100'000'000;
    long long seconds = 300;
    int workers = 1;
};

int run_verify(const VerifyOptions& opt) {
    const isat::Graph g = load_graph(opt.input);
    if ((opt.cycle > 0) == (opt.path > 0))
        throw std::invalid_argument("verify: pass exactly one of --cycle or --path");
    const isat::TargetPattern target = opt.cycle > 0 ? isat::TargetPattern::cycle(opt.cycle)
                                                     : isat::TargetPattern::path(opt.path);
    isat::VerifyMode mode;
    if (opt.mode == "free") mode = isat::VerifyMode::free_only;
    else if (opt.mode == "del-critical") mode = isat::VerifyMode::del_critical;
    else if (opt.mode == "add-critical") mode = isat::VerifyMode::add_critical;
    else if (opt.mode == "is") mode = isat::VerifyMode::is_saturated;
    else throw std::invalid_argument("verify: unknown mode " + opt.mode);

    isat::SearchLimits limits;
    limits.max_nodes = opt.nodes;
    limits.max_time = std::chrono::milliseconds(opt.seconds * 1000);

    const isat::VerificationReport rep = isat::verify(g, target, mode, limits, opt.workers);
    const isat::json j = isat::report_to_json(rep);
    std::cout << j.dump(2) << "\n";
    if (!opt.report.empty()) write_file(opt.report, j.dump(2) + "\n");

    if (rep.free_budget_exceeded || !rep.deletion.budget_exceeded.empty() ||
        !rep.addition.budget_exceeded.empty())
        return kExitBudget;
    bool holds = false;
    switch (mode) {
        case isat::VerifyMode::free_only:
            holds = rep.free;
            break;
        case isat::VerifyMode::del_critical:
            holds = rep.free && rep.deletion.critical && g.edge_count() > 0;
            break;
        case isat::VerifyMode::add_critical:
            holds = rep.free && rep.addition.critical && !g.non_edges().empty();
            break;
        case isat::VerifyMode::is_saturated:
            holds = rep.induced_saturated;
            break;
    }
    return holds ? kExitHolds : kExitFails;
}

struct AssembleOptions {
    std::string base = "heawood";
    std::string base_graph;
    std::string base_cycle;
    int t = 5;
    std::string provider = "canonical";
    int g_min = 3;
    std::string out;
    std::string graph6_out;
    std::string dot;
    std::uint64_t nodes = 100'000'000;
    std::uint32_t seed = 0;
};

int run_assemble(const AssembleOptions& opt) {
    isat::Graph gamma;
    isat::CyclicSeq omega;
    std::string name = opt.base;
    if (!opt.base_graph.empty()) {
        gamma = isat::decode_graph6(read_file(opt.base_graph));
        std::istringstream in(read_file(opt.base_cycle));
        int v;
        while (in >> v) omega.verts.push_back(v);
        name = opt.base_graph;
    } else {
        auto spec = isat::cubic_base(opt.base);
        gamma = std::move(spec.graph);
        omega = std::move(spec.ham);
    }

    const isat::CubicBase base = isat::validate_base(gamma, omega, opt.g_min, name);
    const isat::Assembly assembly = isat::assemble_gt(base, opt.t, opt.provider);

    isat::SearchLimits limits;
    limits.max_nodes = opt.nodes;
    const isat::FreenessProbe freeness = isat::freeness_probe(assembly, limits);
    const int len_cap = std::max(1, (base.girth - 1) / 2);
    const isat::Lemma43Report lemma43 =
        isat::lemma43_probe(base, assembly.family, len_cap, 2000, opt.seed);
    isat::M3ProbeReport m3;
    if (opt.provider == "canonical") m3 = isat::m3_criticality_probe(assembly, limits);

    const isat::json manifest = isat::manifest_to_json(
        assembly, &freeness, opt.provider == "canonical" ? &m3 : nullptr, &lemma43);
    std::cout << manifest.dump(2) << "\n";
    if (!opt.out.empty()) write_file(opt.out, manifest.dump(2) + "\n");
    if (!opt.graph6_out.empty()) write_file(opt.graph6_out, isat::encode_graph6(assembly.result) + "\n");
    if (!opt.dot.empty()) write_file(opt.dot, isat::to_dot(assembly.result));
    return assembly.audit.pass ? kExitHolds : kExitFails;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"territory constructions and induced-saturation verification"};
    app.require_subcommand(1);

    ConstructOptions copt;
    auto* construct = app.add_subcommand("construct", "build a catalog graph or territory");
    construct->add_option("--family", copt.family, "family name (see README)")->required();
    construct->add_option("--t", copt.t, "parameter t");
    construct->add_option("--m", copt.m, "canonical level m");
    construct->add_option("--lambda", copt.lambda, "target perimeter");
    construct->add_option("--n", copt.n, "vertex count parameter");
    construct->add_option("--a", copt.a, "first part size");
    construct->add_option("--b", copt.b, "second part size");
    construct->add_option("--rows", copt.rows, "torus rows");
    construct->add_option("--cols", copt.cols, "torus columns");
    construct->add_option("--out", copt.out, "output file (graph6 or territory JSON)");
    construct->add_option("--dot", copt.dot, "also write a DOT rendering");

    VerifyOptions vopt;
    auto* verify = app.add_subcommand("verify", "check freeness / criticality / saturation");
    verify->add_option("input", vopt.input, "graph file or catalog spec")->required();
    verify->add_option("--cycle", vopt.cycle, "cycle target size");
    verify->add_option("--path", vopt.path, "path target size");
    verify->add_option("--mode", vopt.mode, "free | del-critical | add-critical | is");
    verify->add_option("--report", vopt.report, "write the JSON report here");
    verify->add_option("--nodes", vopt.nodes, "search node budget per query");
    verify->add_option("--seconds", vopt.seconds, "wall clock budget per query");
    verify->add_option("--workers", vopt.workers, "parallel workers for per-edge scans");

    AssembleOptions aopt;
    auto* assemble = app.add_subcommand("assemble", "glue territories onto a cubic base");
    assemble->add_option("--base", aopt.base, "catalog base name");
    assemble->add_option("--base-graph", aopt.base_graph, "graph6 file with a custom base");
    assemble->add_option("--base-cycle", aopt.base_cycle, "vertex order of its Hamiltonian cycle");
    assemble->add_option("--t", aopt.t, "parameter t");
    assemble->add_option("--provider", aopt.provider, "canonical | trivial");
    assemble->add_option("--g-min", aopt.g_min, "required base girth");
    assemble->add_option("--out", aopt.out, "manifest JSON file");
    assemble->add_option("--graph6-out", aopt.graph6_out, "write the assembled graph");
    assemble->add_option("--dot", aopt.dot, "also write a DOT rendering");
    assemble->add_option("--nodes", aopt.nodes, "search node budget for probes");
    assemble->add_option("--seed", aopt.seed, "seed for probe sampling");

    CLI11_PARSE(app, argc, argv);

    try {
        if (construct->parsed()) return run_construct(copt);
        if (verify->parsed()) return run_verify(vopt);
        if (assemble->parsed()) return run_assemble(aopt);
    } catch (const isat::infeasible_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const isat::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIoError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIoError;
    }
    return kExitIoError;
}
