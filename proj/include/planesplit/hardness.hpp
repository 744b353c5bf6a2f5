#pragma once

// Planar Cycle 3-SAT model, the reduction to planar-2-split recognition, and
// the witness builder that turns a satisfying assignment into a planar
// 2-split certificate of the reduction graph.

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "planesplit/certificate.hpp"
#include "planesplit/empire.hpp"
#include "planesplit/graph.hpp"
#include "planesplit/planarity.hpp"

namespace planesplit {

struct Literal {
    int var = 0;          // 0-based variable index
    bool positive = true;
};

// 3-SAT instance with a cyclic order on its clauses.
struct SatInstance {
    int var_count = 0;
    std::vector<std::array<Literal, 3>> clauses;
    std::vector<int> clause_cycle;  // permutation of clause indices

    int clause_count() const { return static_cast<int>(clauses.size()); }
};

struct Assignment {
    std::vector<bool> value;  // per variable

    bool satisfies(const SatInstance& inst) const {
        for (const auto& cl : inst.clauses) {
            bool sat = false;
            for (const auto& lit : cl)
                if (value[lit.var] == lit.positive) {
                    sat = true;
                    break;
                }
            if (!sat) return false;
        }
        return true;
    }
};

enum class InstanceViolation {
    BadLiteral,           // variable index out of range
    RepeatedVariable,     // clause mentions a variable twice
    BadCycle,             // clause_cycle is not a permutation of the clauses
    NonPlanarIncidence,   // variable-clause graph plus clause cycle not planar
};

inline const char* to_string(InstanceViolation v) {
    switch (v) {
        case InstanceViolation::BadLiteral: return "bad-literal";
        case InstanceViolation::RepeatedVariable: return "repeated-variable";
        case InstanceViolation::BadCycle: return "bad-cycle";
        case InstanceViolation::NonPlanarIncidence: return "non-planar-incidence";
    }
    return "unknown";
}

struct InstanceReport {
    bool ok = false;
    std::vector<std::pair<InstanceViolation, std::string>> violations;

    bool has(InstanceViolation v) const {
        for (const auto& [code, msg] : violations)
            if (code == v) return true;
        return false;
    }
};

// Incidence graph: variables 0..V-1, clause j at vertex V+j, an edge per
// occurrence, plus the clause cycle.
inline Graph incidence_graph(const SatInstance& inst) {
    int v = inst.var_count, c = inst.clause_count();
    std::set<Edge> edges;
    for (int j = 0; j < c; ++j)
        for (const auto& lit : inst.clauses[j]) edges.insert(make_edge(lit.var, v + j));
    for (int t = 0; t < c; ++t) {
        int a = inst.clause_cycle[t], b = inst.clause_cycle[(t + 1) % c];
        if (a != b) edges.insert(make_edge(v + a, v + b));
    }
    return Graph(v + c, std::vector<Edge>(edges.begin(), edges.end()));
}

// Structural checks plus planarity of the incidence-with-cycle graph.
inline InstanceReport validate_instance(const SatInstance& inst) {
    InstanceReport rep;
    bool structural = true;
    for (int j = 0; j < inst.clause_count(); ++j) {
        const auto& cl = inst.clauses[j];
        std::set<int> vars;
        for (const auto& lit : cl) {
            if (lit.var < 0 || lit.var >= inst.var_count) {
                rep.violations.push_back({InstanceViolation::BadLiteral,
                                          "clause " + std::to_string(j) +
                                              " references variable " + std::to_string(lit.var)});
                structural = false;
            } else if (!vars.insert(lit.var).second) {
                rep.violations.push_back({InstanceViolation::RepeatedVariable,
                                          "clause " + std::to_string(j) + " repeats variable " +
                                              std::to_string(lit.var)});
                structural = false;
            }
        }
    }
    std::set<int> cyc(inst.clause_cycle.begin(), inst.clause_cycle.end());
    bool cycle_ok = static_cast<int>(inst.clause_cycle.size()) == inst.clause_count() &&
                    static_cast<int>(cyc.size()) == inst.clause_count();
    for (int x : cyc)
        if (x < 0 || x >= inst.clause_count()) cycle_ok = false;
    if (!cycle_ok) {
        rep.violations.push_back(
            {InstanceViolation::BadCycle, "clause cycle is not a permutation of the clauses"});
        structural = false;
    }
    if (structural && !is_planar(incidence_graph(inst)))
        rep.violations.push_back({InstanceViolation::NonPlanarIncidence,
                                  "incidence graph with clause cycle is not planar"});
    rep.ok = rep.violations.empty();
    return rep;
}

enum class KBlock { K12, K78 };

// Reduction output: the graph, which vertices carry an attached rigid block,
// and where every gadget vertex lives.
struct HardnessGraph {
    Graph graph;
    KBlock kblock = KBlock::K12;
    std::vector<bool> is_kvertex;

    // gadget index
    std::vector<int> var_pos, var_neg;             // v_i, vbar_i
    std::vector<std::array<int, 4>> var_cycle;     // v_i^1..v_i^4
    std::vector<int> clause_main, clause_aux;      // c_j, c'_j
    std::vector<std::array<int, 3>> lit_prime;     // l'_{j,k}
    std::vector<std::array<int, 3>> lit_sub;       // l_{j,k} (not K-vertices)

    // per K-vertex: the fresh companion vertices completing its block
    std::map<int, std::vector<int>> block_companions;
};

namespace detail {

// companion count and local index of the identified vertex inside the block
inline int kblock_size(KBlock kb) { return kb == KBlock::K12 ? 12 : 15; }
// K_{7,8}: identify with an 8-side vertex (block degree 7), keeping the
// reduction's maximum degree at 15
inline int kblock_identified(KBlock kb) { return kb == KBlock::K12 ? 0 : 7; }

inline Graph kblock_graph(KBlock kb) {
    return kb == KBlock::K12 ? gen_complete(12) : gen_complete_bipartite(7, 8);
}

}  // namespace detail

// Builds the reduction graph for a validated instance: a K-vertex clause
// cycle, the six-K-vertex variable gadgets, the K5 clause gadgets with their
// subdivision vertices, literal edges, and a fresh block attached to every
// K-vertex. Deterministic labeling.
inline HardnessGraph reduce(const SatInstance& inst, KBlock kblock) {
    InstanceReport rep = validate_instance(inst);
    if (!rep.ok) throw input_error("reduce: instance fails validation");

    HardnessGraph hg;
    hg.kblock = kblock;
    int V = inst.var_count, C = inst.clause_count();

    // skeleton labels: per variable [v, vbar, v1..v4], per clause
    // [c, c', l'1..l'3, l1..l3]
    auto var_base = [&](int i) { return 6 * i; };
    auto clause_base = [&](int j) { return 6 * V + 8 * j; };
    int skeleton = 6 * V + 8 * C;

    hg.var_pos.resize(V);
    hg.var_neg.resize(V);
    hg.var_cycle.resize(V);
    hg.clause_main.resize(C);
    hg.clause_aux.resize(C);
    hg.lit_prime.resize(C);
    hg.lit_sub.resize(C);

    std::set<Edge> edges;
    for (int i = 0; i < V; ++i) {
        int b = var_base(i);
        hg.var_pos[i] = b;
        hg.var_neg[i] = b + 1;
        hg.var_cycle[i] = {b + 2, b + 3, b + 4, b + 5};
        // cycle v1 v2 v3 v4 with paths v1-v-v3 and v2-vbar-v4
        edges.insert(make_edge(b + 2, b + 3));
        edges.insert(make_edge(b + 3, b + 4));
        edges.insert(make_edge(b + 4, b + 5));
        edges.insert(make_edge(b + 5, b + 2));
        edges.insert(make_edge(b + 2, b));
        edges.insert(make_edge(b, b + 4));
        edges.insert(make_edge(b + 3, b + 1));
        edges.insert(make_edge(b + 1, b + 5));
    }
    for (int j = 0; j < C; ++j) {
        int b = clause_base(j);
        hg.clause_main[j] = b;
        hg.clause_aux[j] = b + 1;
        hg.lit_prime[j] = {b + 2, b + 3, b + 4};
        hg.lit_sub[j] = {b + 5, b + 6, b + 7};
        // K5 on {c, c', l'1, l'2, l'3} with each (c, l'_k) subdivided by l_k
        edges.insert(make_edge(b, b + 1));
        for (int k = 0; k < 3; ++k) {
            edges.insert(make_edge(b + 1, b + 2 + k));
            edges.insert(make_edge(b, b + 5 + k));
            edges.insert(make_edge(b + 5 + k, b + 2 + k));
        }
        edges.insert(make_edge(b + 2, b + 3));
        edges.insert(make_edge(b + 2, b + 4));
        edges.insert(make_edge(b + 3, b + 4));
        // literal edges to the variable gadgets
        for (int k = 0; k < 3; ++k) {
            const Literal& lit = inst.clauses[j][k];
            int vv = lit.positive ? hg.var_pos[lit.var] : hg.var_neg[lit.var];
            edges.insert(make_edge(vv, b + 5 + k));
        }
    }
    // clause cycle over the c_j
    for (int t = 0; t < C; ++t) {
        int a = hg.clause_main[inst.clause_cycle[t]];
        int b = hg.clause_main[inst.clause_cycle[(t + 1) % C]];
        if (a != b) edges.insert(make_edge(a, b));
    }

    // every skeleton vertex except the subdivision vertices is a K-vertex
    hg.is_kvertex.assign(skeleton, true);
    for (int j = 0; j < C; ++j)
        for (int k = 0; k < 3; ++k) hg.is_kvertex[hg.lit_sub[j][k]] = false;

    // attach a fresh block to every K-vertex
    int next = skeleton;
    int block_n = detail::kblock_size(kblock);
    int idv = detail::kblock_identified(kblock);
    Graph block = detail::kblock_graph(kblock);
    for (int v = 0; v < skeleton; ++v) {
        if (!hg.is_kvertex[v]) continue;
        std::vector<int> global(block_n);
        std::vector<int>& comp = hg.block_companions[v];
        for (int t = 0; t < block_n; ++t) {
            if (t == idv) {
                global[t] = v;
            } else {
                global[t] = next++;
                comp.push_back(global[t]);
            }
        }
        for (auto [a, b] : block.edges()) edges.insert(make_edge(global[a], global[b]));
    }

    hg.is_kvertex.resize(next, false);
    hg.graph = Graph(next, std::vector<Edge>(edges.begin(), edges.end()));

    // generator self-check: subdivision vertices have degree exactly 3
    for (int j = 0; j < C; ++j)
        for (int k = 0; k < 3; ++k)
            if (hg.graph.degree(hg.lit_sub[j][k]) != 3)
                throw std::logic_error("reduce: subdivision vertex degree != 3");
    return hg;
}

// Assignment does not satisfy the instance.
struct unsatisfying_assignment_error : error {
    explicit unsatisfying_assignment_error(const std::string& what) : error(what) {}
};

// Supplied block certificate is not a valid empire-style 2-split.
struct invalid_block_certificate_error : error {
    explicit invalid_block_certificate_error(const std::string& what) : error(what) {}
};

// Assembles the planar 2-split of the reduction graph from a satisfying
// assignment: false literals take the F-split (variable edge split off),
// true literals split off the edge toward l'_{j,k}, and every attached block
// is split by the given block certificate with all external edges kept on
// copy 1 of the K-vertex.
inline SplitCertificate build_witness(const HardnessGraph& hg, const SatInstance& inst,
                                      const Assignment& a,
                                      const SplitCertificate& kblock_cert) {
    if (static_cast<int>(a.value.size()) != inst.var_count)
        throw input_error("build_witness: assignment size mismatch");
    if (!a.satisfies(inst))
        throw unsatisfying_assignment_error("build_witness: assignment falsifies a clause");

    Graph block = detail::kblock_graph(hg.kblock);
    if (kblock_cert.base != block)
        throw invalid_block_certificate_error("build_witness: certificate is not over the block graph");
    if (!verify_certificate(kblock_cert, 2).accepted)
        throw invalid_block_certificate_error("build_witness: block certificate rejected at k = 2");
    EmpireReport er = hg.kblock == KBlock::K12 ? check_empire_conditions(kblock_cert)
                                               : check_quadrangulation_conditions(kblock_cert);
    if (!er.all())
        throw invalid_block_certificate_error(
            "build_witness: block certificate fails the empire conditions");

    const Graph& g = hg.graph;
    int n = g.vertex_count();
    int C = inst.clause_count();
    int idv = detail::kblock_identified(hg.kblock);

    std::vector<int> counts(n, 2);  // every vertex is split

    // literal split shape: copy of l_{j,k} carrying the variable edge
    // F-split (false literal): variable edge alone on copy 2
    // true literal: edge to l'_{j,k} alone on copy 2
    std::vector<SplitEdge> edges;

    // block-internal edges, mapped through the local -> global labeling
    for (const auto& [kv, comp] : hg.block_companions) {
        std::vector<int> global(detail::kblock_size(hg.kblock));
        int ci = 0;
        for (int t = 0; t < detail::kblock_size(hg.kblock); ++t)
            global[t] = (t == idv) ? kv : comp[ci++];
        for (const auto& e : kblock_cert.split_edges)
            edges.push_back({global[e.u], e.ui, global[e.v], e.vi});
    }

    // classify the subdivision vertices
    std::map<int, std::pair<int, int>> lit_info;  // l vertex -> (clause j, slot k)
    for (int j = 0; j < C; ++j)
        for (int k = 0; k < 3; ++k) lit_info[hg.lit_sub[j][k]] = {j, k};

    std::set<Edge> block_edges;
    for (const auto& [kv, comp] : hg.block_companions) {
        std::vector<int> global(detail::kblock_size(hg.kblock));
        int ci = 0;
        for (int t = 0; t < detail::kblock_size(hg.kblock); ++t)
            global[t] = (t == idv) ? kv : comp[ci++];
        Graph block_g = detail::kblock_graph(hg.kblock);
        for (auto [x, y] : block_g.edges()) block_edges.insert(make_edge(global[x], global[y]));
    }

    for (auto [u, v] : g.edges()) {
        if (block_edges.count({u, v})) continue;  // handled via the block certificate
        auto iu = lit_info.find(u), iv = lit_info.find(v);
        int lit_vertex = -1, other = -1;
        if (iu != lit_info.end()) {
            lit_vertex = u;
            other = v;
        } else if (iv != lit_info.end()) {
            lit_vertex = v;
            other = u;
        }
        if (lit_vertex < 0) {
            // external edge between two K-vertices: real copies on both sides
            edges.push_back({u, 1, v, 1});
            continue;
        }
        auto [j, k] = lit_info.at(lit_vertex);
        const Literal& lit = inst.clauses[j][k];
        bool lit_true = a.value[lit.var] == lit.positive;
        int copy;
        if (other == hg.clause_main[j]) {
            copy = 1;  // the clause-side edge always stays on copy 1
        } else if (other == hg.lit_prime[j][k]) {
            copy = lit_true ? 2 : 1;
        } else {
            copy = lit_true ? 1 : 2;  // variable edge; F-split pushes it to copy 2
        }
        edges.push_back({other, 1, lit_vertex, copy});
    }

    return SplitCertificate(g, std::move(counts), std::move(edges));
}

}  // namespace planesplit
