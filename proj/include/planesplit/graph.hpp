#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "planesplit/errors.hpp"

namespace planesplit {

using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) {
    return u < v ? Edge{u, v} : Edge{v, u};
}

// Simple undirected graph on dense integer labels 0..n-1.
// Immutable after construction; no self-loops, no parallel edges.
class Graph {
public:
    Graph() = default;

    Graph(int vertex_count, std::vector<Edge> edges) : n_(vertex_count) {
        if (vertex_count < 0) throw input_error("graph: negative vertex count");
        for (auto& [u, v] : edges) {
            if (u == v) throw input_error("graph: self-loop at vertex " + std::to_string(u));
            if (u < 0 || v < 0 || u >= n_ || v >= n_)
                throw input_error("graph: edge endpoint out of range: " + std::to_string(u) +
                                  " " + std::to_string(v));
            if (u > v) std::swap(u, v);
        }
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
            throw input_error("graph: duplicate edge");
        edges_ = std::move(edges);
        adj_.assign(n_, {});
        for (auto [u, v] : edges_) {
            adj_[u].push_back(v);
            adj_[v].push_back(u);
        }
        for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    int max_degree() const {
        int d = 0;
        for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
        return d;
    }

    bool has_edge(int u, int v) const {
        if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
        const auto& nb = adj_[std::min(u, v)];
        return std::binary_search(nb.begin(), nb.end(), std::max(u, v));
    }

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }
    bool operator!=(const Graph& o) const { return !(*this == o); }

    // 2-coloring; empty if an odd cycle exists. Isolated vertices get color 0.
    std::vector<int> bipartition() const {
        std::vector<int> color(n_, -1);
        std::vector<int> queue;
        for (int s = 0; s < n_; ++s) {
            if (color[s] != -1) continue;
            color[s] = 0;
            queue.assign(1, s);
            while (!queue.empty()) {
                int v = queue.back();
                queue.pop_back();
                for (int w : adj_[v]) {
                    if (color[w] == -1) {
                        color[w] = 1 - color[v];
                        queue.push_back(w);
                    } else if (color[w] == color[v]) {
                        return {};
                    }
                }
            }
        }
        return color;
    }

    bool is_bipartite() const { return n_ == 0 || !bipartition().empty(); }

    // Component id per vertex, ids dense in discovery order.
    std::vector<int> components(int* count = nullptr) const {
        std::vector<int> comp(n_, -1);
        int c = 0;
        std::vector<int> stack;
        for (int s = 0; s < n_; ++s) {
            if (comp[s] != -1) continue;
            comp[s] = c;
            stack.assign(1, s);
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int w : adj_[v])
                    if (comp[w] == -1) {
                        comp[w] = c;
                        stack.push_back(w);
                    }
            }
            ++c;
        }
        if (count) *count = c;
        return comp;
    }

    int component_count() const {
        int c = 0;
        components(&c);
        return c;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

// Complete graph K_n.
inline Graph gen_complete(int n) {
    if (n < 1) throw input_error("gen_complete: need n >= 1");
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

// Complete bipartite K_{m,n}; part labels 0..m-1 and m..m+n-1.
inline Graph gen_complete_bipartite(int m, int n) {
    if (m < 1 || n < 1) throw input_error("gen_complete_bipartite: need m,n >= 1");
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(m) * n);
    for (int u = 0; u < m; ++u)
        for (int v = 0; v < n; ++v) edges.push_back({u, m + v});
    return Graph(m + n, std::move(edges));
}

// Two copies of K_12 sharing vertex 0: 23 vertices, 132 edges.
inline Graph gen_double_k12() {
    std::vector<Edge> edges;
    for (int u = 0; u < 12; ++u)
        for (int v = u + 1; v < 12; ++v) edges.push_back({u, v});
    // second block: vertex 0 plus 12..22
    std::vector<int> block2{0};
    for (int v = 12; v < 23; ++v) block2.push_back(v);
    for (size_t a = 0; a < block2.size(); ++a)
        for (size_t b = a + 1; b < block2.size(); ++b)
            edges.push_back(make_edge(block2[a], block2[b]));
    return Graph(23, std::move(edges));
}

}  // namespace planesplit
