// planesplit: generate, bound, split, verify, and draw planar k-splits.
//
// Exit codes: 0 success/accept, 1 reject/UNSAT, 2 budget exhausted,
// 3 input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "planesplit/planesplit.hpp"

using namespace planesplit;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitReject = 1;
constexpr int kExitExhausted = 2;
constexpr int kExitInput = 3;

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw input_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Graph load_graph(const std::string& path) {
    std::istringstream in(slurp(path));
    return io::read_edge_list(in);
}

std::string reasons_str(const std::vector<BoundReason>& rs) {
    std::string out;
    for (size_t i = 0; i < rs.size(); ++i) {
        if (i) out += ",";
        out += to_string(rs[i]);
    }
    return out;
}

struct GenArgs {
    std::string family;
    std::vector<int> params;
    std::string sat_file;
    std::string kblock = "k12";
    uint64_t seed = 1;
};

int run_gen(const GenArgs& a) {
    if (a.family == "complete") {
        if (a.params.size() != 1) throw input_error("gen complete needs <n>");
        io::write_edge_list(std::cout, gen_complete(a.params[0]));
    } else if (a.family == "bipartite") {
        if (a.params.size() != 2) throw input_error("gen bipartite needs <m> <n>");
        io::write_edge_list(std::cout, gen_complete_bipartite(a.params[0], a.params[1]));
    } else if (a.family == "double-k12") {
        io::write_edge_list(std::cout, gen_double_k12());
    } else if (a.family == "reduction") {
        if (a.sat_file.empty()) throw input_error("gen reduction needs --sat <file>");
        std::istringstream in(slurp(a.sat_file));
        SatInstance inst = io::read_sat(in);
        if (a.kblock != "k78" && a.kblock != "k12")
            throw input_error("--kblock must be k12 or k78");
        KBlock kb = a.kblock == "k78" ? KBlock::K78 : KBlock::K12;
        HardnessGraph hg = reduce(inst, kb);
        std::cout << "# reduction kblock=" << a.kblock
                  << " kvertices=" << hg.block_companions.size() << "\n";
        io::write_edge_list(std::cout, hg.graph);
    } else if (a.family == "random-planar") {
        if (a.params.size() != 1) throw input_error("gen random-planar needs <n>");
        io::write_edge_list(std::cout, random_planar_graph(a.params[0], 0.85, a.seed));
    } else {
        throw input_error("unknown family '" + a.family + "'");
    }
    return kExitOk;
}

int run_bounds(const std::string& file) {
    Graph g = load_graph(file);
    ThicknessBounds tb = bounds_report(g);
    std::cout << "lower " << tb.lower << " (" << reasons_str(tb.lower_reasons) << ")";
    if (tb.upper)
        std::cout << " upper " << *tb.upper << " (" << reasons_str(tb.upper_reasons) << ")";
    else
        std::cout << " upper unknown";
    std::cout << "\n";
    return kExitOk;
}

struct SplitArgs {
    std::string file;
    std::string method;
    int k = 2;
    long long budget_nodes = 10'000'000;
    double budget_seconds = 60.0;
};

int run_split(const SplitArgs& a) {
    std::optional<SplitCertificate> cert;
    if (a.method == "degree") {
        cert = split_by_degree(load_graph(a.file));
    } else if (a.method == "columns") {
        Graph g = load_graph(a.file);
        // recognize K_{m,n} with an even part and map onto canonical labels
        auto parts = g.bipartition();
        if (parts.empty() || g.component_count() != 1)
            throw input_error("columns: input must be a connected complete bipartite graph");
        std::vector<int> a_side, b_side;
        for (int v = 0; v < g.vertex_count(); ++v) (parts[v] == 0 ? a_side : b_side).push_back(v);
        if (static_cast<long long>(a_side.size()) * static_cast<long long>(b_side.size()) !=
            g.edge_count())
            throw input_error("columns: input must be complete bipartite");
        if (a_side.size() % 2 != 0 && b_side.size() % 2 == 0) std::swap(a_side, b_side);
        if (a_side.size() % 2 != 0) throw input_error("columns: neither part has even size");
        int m = static_cast<int>(a_side.size()), n = static_cast<int>(b_side.size());
        SplitCertificate canon = split_bipartite_columns(m, n);
        std::vector<int> to_input(m + n);
        for (int i = 0; i < m; ++i) to_input[i] = a_side[i];
        for (int j = 0; j < n; ++j) to_input[m + j] = b_side[j];
        std::vector<int> counts(g.vertex_count(), 1);
        for (int v = 0; v < m + n; ++v) counts[to_input[v]] = canon.copy_counts[v];
        std::vector<SplitEdge> edges;
        for (const auto& e : canon.split_edges)
            edges.push_back({to_input[e.u], e.ui, to_input[e.v], e.vi});
        cert = SplitCertificate(g, std::move(counts), std::move(edges));
    } else if (a.method == "torus") {
        std::istringstream in(slurp(a.file));
        cert = split_torus(io::read_torus(in));
    } else if (a.method == "projective") {
        std::istringstream in(slurp(a.file));
        cert = split_projective(io::read_signed(in));
    } else if (a.method == "pseudoforest") {
        cert = split_by_pseudoforests(load_graph(a.file));
    } else if (a.method == "exact") {
        SearchBudget budget{a.budget_nodes, a.budget_seconds};
        SearchOutcome out = find_k_split(load_graph(a.file), a.k, budget);
        std::cerr << to_string(out.status) << " nodes=" << out.nodes_explored << "\n";
        if (out.status == SearchStatus::Unsat) return kExitReject;
        if (out.status == SearchStatus::Exhausted) return kExitExhausted;
        cert = out.certificate;
    } else {
        throw input_error("unknown method '" + a.method + "'");
    }
    io::write_certificate(std::cout, *cert);
    return kExitOk;
}

struct VerifyArgs {
    std::string file;
    int k = 2;
    bool empire = false;
    bool quad = false;
};

int run_verify(const VerifyArgs& a) {
    std::istringstream in(slurp(a.file));
    SplitCertificate cert = io::read_certificate(in);
    CertReport rep = verify_certificate(cert, a.k);
    if (!rep.accepted) {
        for (const auto& [code, msg] : rep.violations)
            std::cerr << to_string(code) << ": " << msg << "\n";
        std::cout << "reject\n";
        return kExitReject;
    }
    if (a.empire || a.quad) {
        EmpireReport er =
            a.empire ? check_empire_conditions(cert) : check_quadrangulation_conditions(cert);
        std::cerr << "every-vertex-split=" << (er.every_vertex_split ? "pass" : "fail")
                  << " face-sizes=" << (er.face_sizes_ok ? "pass" : "fail")
                  << " no-face-duplicates=" << (er.no_face_duplicates ? "pass" : "fail") << "\n";
        if (!er.all()) {
            std::cout << "reject\n";
            return kExitReject;
        }
    }
    std::cout << "accept\n";
    return kExitOk;
}

int run_draw(const std::string& file) {
    std::string text = slurp(file);
    // certificates are JSON; everything else is an edge list
    size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        std::istringstream in(text);
        std::cout << render_certificate_svg(io::read_certificate(in));
    } else {
        std::istringstream in(text);
        std::cout << render_graph_svg(io::read_edge_list(in));
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"planar split thickness toolkit"};
    app.require_subcommand(1);

    GenArgs gen_args;
    auto* gen = app.add_subcommand("gen", "generate a graph family as an edge list");
    gen->add_option("family", gen_args.family,
                    "complete | bipartite | double-k12 | reduction | random-planar")
        ->required();
    gen->add_option("params", gen_args.params, "family parameters");
    gen->add_option("--sat", gen_args.sat_file, "SAT instance file (reduction)");
    gen->add_option("--kblock", gen_args.kblock, "k12 | k78 (reduction)");
    gen->add_option("--seed", gen_args.seed, "random seed (random-planar)");

    std::string bounds_file;
    auto* bounds = app.add_subcommand("bounds", "lower/upper split-thickness bounds");
    bounds->add_option("graph", bounds_file, "edge list file or -")->required();

    SplitArgs split_args;
    auto* split = app.add_subcommand("split", "produce a split certificate");
    split->add_option("input", split_args.file, "input file or -")->required();
    split->add_option("--method", split_args.method,
                      "degree | columns | torus | projective | pseudoforest | exact")
        ->required();
    split->add_option("-k", split_args.k, "copy budget (exact)");
    split->add_option("--budget-nodes", split_args.budget_nodes, "search node budget (exact)");
    split->add_option("--budget-seconds", split_args.budget_seconds, "search time budget (exact)");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "check a split certificate");
    verify->add_option("certificate", verify_args.file, "certificate file or -")->required();
    verify->add_option("-k", verify_args.k, "copy budget");
    verify->add_flag("--empire", verify_args.empire,
                     "also check the triangulation empire conditions");
    verify->add_flag("--quad", verify_args.quad,
                     "also check the quadrangulation empire conditions");

    std::string draw_file;
    auto* draw = app.add_subcommand("draw", "render a planar graph or certificate as SVG");
    draw->add_option("input", draw_file, "edge list or certificate file, or -")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitInput;
    }

    try {
        if (gen->parsed()) return run_gen(gen_args);
        if (bounds->parsed()) return run_bounds(bounds_file);
        if (split->parsed()) return run_split(split_args);
        if (verify->parsed()) return run_verify(verify_args);
        if (draw->parsed()) return run_draw(draw_file);
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
