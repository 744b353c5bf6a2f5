#pragma once

// Constructive polynomial-time splitters and the pseudoarboricity machinery.

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <vector>

#include "planesplit/certificate.hpp"
#include "planesplit/graph.hpp"
#include "planesplit/planarity.hpp"

namespace planesplit {

// --- degree splitter -------------------------------------------------------

// Every vertex of degree d becomes ceil(d/2) copies carrying at most two of
// its edges each; the split graph has maximum degree 2 and is planar.
// Valid at k = ceil(max_degree / 2).
inline SplitCertificate split_by_degree(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> counts(n, 1);
    for (int v = 0; v < n; ++v) counts[v] = std::max(1, (g.degree(v) + 1) / 2);

    // edge slot within each endpoint's sorted neighbor list decides the copy
    std::vector<SplitEdge> edges;
    edges.reserve(g.edge_count());
    std::vector<int> next_slot(n, 0);
    std::map<Edge, std::pair<int, int>> copy_of;
    for (int v = 0; v < n; ++v)
        for (int w : g.neighbors(v)) {
            int slot = next_slot[v]++;
            auto& entry = copy_of[make_edge(v, w)];
            (v < w ? entry.first : entry.second) = slot / 2 + 1;
        }
    for (auto [uv, cc] : copy_of)
        edges.push_back({uv.first, cc.first, uv.second, cc.second});
    return SplitCertificate(g, std::move(counts), std::move(edges));
}

// --- column splitter for K_{2k,n} ------------------------------------------

// Partitions the even side of K_{m,n} into pairs; each n-side vertex gets one
// copy per pair, giving k = m/2 disjoint planar copies of K_{2,n}.
inline SplitCertificate split_bipartite_columns(int m, int n) {
    if (m < 2 || m % 2 != 0)
        throw input_error("split_bipartite_columns: the m side must be even");
    if (n < 1) throw input_error("split_bipartite_columns: need n >= 1");
    Graph g = gen_complete_bipartite(m, n);
    int k = m / 2;
    std::vector<int> counts(m + n, 1);
    for (int j = 0; j < n; ++j) counts[m + j] = k;
    std::vector<SplitEdge> edges;
    edges.reserve(static_cast<size_t>(m) * n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) edges.push_back({i, 1, m + j, i / 2 + 1});
    return SplitCertificate(g, std::move(counts), std::move(edges));
}

// --- torus splitter ---------------------------------------------------------

// Toroidal drawing given combinatorially: per edge, the signed crossing
// counts of the fundamental square's boundaries. wrap (wx, wy) is stated
// travelling from the lower-labeled endpoint; wy = -1 means the edge leaves
// through the bottom boundary, wy = +1 through the top. Each boundary is
// crossed at most once.
struct TorusDrawing {
    Graph graph;
    std::map<Edge, std::pair<int, int>> wrap;
    std::map<int, std::pair<double, double>> coords;  // optional positions in [0,1)^2

    TorusDrawing() = default;
    TorusDrawing(Graph g, std::map<Edge, std::pair<int, int>> w,
                 std::map<int, std::pair<double, double>> pos = {})
        : graph(std::move(g)), wrap(std::move(w)), coords(std::move(pos)) {
        for (auto [u, v] : graph.edges()) {
            auto it = wrap.find({u, v});
            if (it == wrap.end())
                throw input_error("torus drawing: missing wrap for edge " + std::to_string(u) +
                                  "-" + std::to_string(v));
            auto [wx, wy] = it->second;
            if (wx < -1 || wx > 1 || wy < -1 || wy > 1)
                throw input_error("torus drawing: wrap out of range on edge " +
                                  std::to_string(u) + "-" + std::to_string(v));
        }
        if (wrap.size() != graph.edges().size())
            throw input_error("torus drawing: wrap listed for a non-edge");
    }
};

// Cuts the drawing along the horizontal boundary: for every edge crossing it,
// the endpoint whose edge part reaches the bottom boundary is split and the
// edge reattached to the new copy. Horizontal wraps reroute around the
// drawing and change nothing combinatorially. The result is checked for
// planarity; failure means the wrap data was not a toroidal embedding.
inline SplitCertificate split_torus(const TorusDrawing& d) {
    const Graph& g = d.graph;
    int n = g.vertex_count();
    std::vector<int> counts(n, 1);
    for (auto [u, v] : g.edges()) {
        int wy = d.wrap.at({u, v}).second;
        if (wy == -1) counts[u] = 2;
        if (wy == +1) counts[v] = 2;
    }
    std::vector<SplitEdge> edges;
    edges.reserve(g.edge_count());
    for (auto [u, v] : g.edges()) {
        int wy = d.wrap.at({u, v}).second;
        if (wy == -1)
            edges.push_back({u, 2, v, 1});
        else if (wy == +1)
            edges.push_back({u, 1, v, 2});
        else
            edges.push_back({u, 1, v, 1});
    }
    SplitCertificate cert(g, std::move(counts), std::move(edges));
    if (!is_planar(split_graph(cert)))
        throw invalid_embedding_error(
            "split_torus: wrap data does not describe a toroidal embedding");
    return cert;
}

// --- projective-plane splitter ----------------------------------------------

// Graph with a +-1 edge signature; -1 marks edges through the crosscap.
struct SignedGraph {
    Graph graph;
    std::map<Edge, int> sign;

    SignedGraph() = default;
    SignedGraph(Graph g, std::map<Edge, int> s) : graph(std::move(g)), sign(std::move(s)) {
        for (auto [u, v] : graph.edges()) {
            auto it = sign.find({u, v});
            if (it == sign.end() || (it->second != 1 && it->second != -1))
                throw input_error("signed graph: every edge needs a sign in {+1,-1}");
        }
        if (sign.size() != graph.edges().size())
            throw input_error("signed graph: sign listed for a non-edge");
    }
};

// Canonical double cover: two copies per vertex; a +1 edge lifts to parallel
// copies, a -1 edge to crossed ones. For a signature arising from a
// projective-planar embedding the cover is planar (it lives on the sphere).
inline SplitCertificate split_projective(const SignedGraph& sg) {
    const Graph& g = sg.graph;
    int n = g.vertex_count();
    std::vector<int> counts(n, 2);
    std::vector<SplitEdge> edges;
    edges.reserve(2 * g.edge_count());
    for (auto [u, v] : g.edges()) {
        if (sg.sign.at({u, v}) == 1) {
            edges.push_back({u, 1, v, 1});
            edges.push_back({u, 2, v, 2});
        } else {
            edges.push_back({u, 1, v, 2});
            edges.push_back({u, 2, v, 1});
        }
    }
    SplitCertificate cert(g, std::move(counts), std::move(edges));
    if (!is_planar(split_graph(cert)))
        throw invalid_signature_error(
            "split_projective: signature does not arise from a projective-planar embedding");
    return cert;
}

// --- orientations and pseudoarboricity ---------------------------------------

// Every edge directed exactly once; tail/head per edge index of the graph's
// canonical edge list.
struct Orientation {
    std::vector<uint8_t> toward_higher;  // per edge: true if directed low -> high label
    std::vector<int> outdegree;

    int tail(const Graph& g, int e) const {
        auto [u, v] = g.edges()[e];
        return toward_higher[e] ? u : v;
    }
    int head(const Graph& g, int e) const {
        auto [u, v] = g.edges()[e];
        return toward_higher[e] ? v : u;
    }
    int max_outdegree() const {
        int d = 0;
        for (int x : outdegree) d = std::max(d, x);
        return d;
    }
};

// Orientation with maximum outdegree <= p when one exists. Path reversal:
// while some vertex exceeds p, walk the directed graph to a vertex with
// outdegree < p and reverse the path; if none is reachable the set reached
// is denser than p edges per vertex, so no orientation exists.
inline std::optional<Orientation> orient_max_outdegree(const Graph& g, int p) {
    int n = g.vertex_count(), m = g.edge_count();
    Orientation ori;
    ori.toward_higher.assign(m, 1);
    ori.outdegree.assign(n, 0);
    std::vector<std::vector<int>> out(n);  // edge ids leaving each vertex
    for (int e = 0; e < m; ++e) {
        int t = g.edges()[e].first;
        out[t].push_back(e);
        ori.outdegree[t]++;
    }

    std::vector<int> via(n), prev(n);
    for (int s = 0; s < n; ++s) {
        while (ori.outdegree[s] > p) {
            // BFS over directed edges from s
            std::fill(via.begin(), via.end(), -1);
            std::deque<int> queue{s};
            via[s] = -2;
            int sink = -1;
            while (!queue.empty() && sink == -1) {
                int v = queue.front();
                queue.pop_front();
                for (int e : out[v]) {
                    int h = ori.head(g, e);
                    if (via[h] != -1) continue;
                    via[h] = e;
                    prev[h] = v;
                    if (ori.outdegree[h] < p) {
                        sink = h;
                        break;
                    }
                    queue.push_back(h);
                }
            }
            if (sink == -1) return std::nullopt;
            // reverse the path s -> ... -> sink
            int cur = sink;
            while (cur != s) {
                int e = via[cur];
                int v = prev[cur];
                ori.toward_higher[e] ^= 1;
                out[v].erase(std::find(out[v].begin(), out[v].end(), e));
                out[cur].push_back(e);
                ori.outdegree[v]--;
                ori.outdegree[cur]++;
                cur = v;
            }
        }
    }
    return ori;
}

// Exact pseudoarboricity: the smallest p admitting an orientation with
// maximum outdegree <= p. Edgeless graphs have pseudoarboricity 0.
inline int pseudoarboricity(const Graph& g) {
    int n = g.vertex_count(), m = g.edge_count();
    if (m == 0) return 0;
    int p = std::max(1, (m + n - 1) / n);  // density lower bound on the whole graph
    while (!orient_max_outdegree(g, p)) ++p;
    return p;
}

// --- pseudoforest splitter ----------------------------------------------------

// Decomposes the edges into p = p(G) pseudoforests via an outdegree-p
// orientation: vertex v gets p copies, its c-th out-edge joins copy c of v to
// copy c of the head. Each copy index class has outdegree <= 1, hence is a
// pseudoforest, and the classes are vertex-disjoint in the split graph.
inline SplitCertificate split_by_pseudoforests(const Graph& g) {
    if (g.edge_count() == 0)
        return identity_certificate(g);
    int n = g.vertex_count();
    int p = pseudoarboricity(g);
    Orientation ori = *orient_max_outdegree(g, p);

    std::vector<int> counts(n, p);
    std::vector<int> color_next(n, 0);
    std::vector<SplitEdge> edges;
    edges.reserve(g.edge_count());
    // deterministic colors: out-edges in canonical edge order per tail
    for (int e = 0; e < g.edge_count(); ++e) {
        int t = ori.tail(g, e), h = ori.head(g, e);
        int c = ++color_next[t];
        edges.push_back({t, c, h, c});
    }
    return SplitCertificate(g, std::move(counts), std::move(edges));
}

// --- arboricity bracket --------------------------------------------------------

namespace detail {

// Exhaustive search for a partition of the edges into `forests` acyclic
// classes; union-find per class with rollback. Node-capped.
class ForestPartitionSearch {
public:
    ForestPartitionSearch(const Graph& g, int forests, long long cap)
        : g_(g), forests_(forests), cap_(cap) {
        parent_.assign(static_cast<size_t>(forests) * g.vertex_count(), -1);
    }

    bool run(bool* conclusive) {
        *conclusive = true;
        bool found = search(0, 0);
        if (nodes_ > cap_) *conclusive = false;
        return found;
    }

private:
    const Graph& g_;
    int forests_;
    long long cap_, nodes_ = 0;
    std::vector<int> parent_;

    int find(int f, int x) {
        int base = f * g_.vertex_count();
        while (parent_[base + x] >= 0) x = parent_[base + x];
        return x;
    }

    bool search(int e, int used) {
        if (++nodes_ > cap_) return false;
        if (e == g_.edge_count()) return true;
        auto [u, v] = g_.edges()[e];
        int limit = std::min(forests_, used + 1);  // class symmetry: first-use order
        for (int f = 0; f < limit; ++f) {
            int ru = find(f, u), rv = find(f, v);
            if (ru == rv) continue;  // would close a cycle in class f
            parent_[f * g_.vertex_count() + ru] = rv;
            if (search(e + 1, std::max(used, f + 1))) return true;
            parent_[f * g_.vertex_count() + ru] = -1;
            if (nodes_ > cap_) return false;
        }
        return false;
    }
};

}  // namespace detail

// Bracket (lower, upper) containing the arboricity: lower from
// pseudoarboricity and whole-graph density, upper = p + 1. For small graphs
// an exhaustive forest-partition search settles which endpoint is exact.
inline std::pair<int, int> arboricity_bracket(const Graph& g) {
    if (g.edge_count() == 0) return {0, 0};
    int n = g.vertex_count();
    int p = pseudoarboricity(g);
    int lower = std::max(p, n >= 2 ? (g.edge_count() + n - 2) / (n - 1) : p);
    int upper = p + 1;
    if (lower >= upper) return {upper, upper};
    if (n <= 12) {
        bool conclusive = false;
        detail::ForestPartitionSearch search(g, lower, 4'000'000);
        bool found = search.run(&conclusive);
        if (found) return {lower, lower};
        if (conclusive) return {upper, upper};
    }
    return {lower, upper};
}

}  // namespace planesplit
