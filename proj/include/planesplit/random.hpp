#pragma once

// Seeded random graph generators. Deterministic for a fixed seed.

#include <algorithm>
#include <array>
#include <random>
#include <vector>

#include "planesplit/graph.hpp"

namespace planesplit {

// Erdos-Renyi style G(n, p).
inline Graph random_graph(int n, double p, uint64_t seed) {
    if (n < 0) throw input_error("random_graph: negative n");
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

// Random graph with exactly m edges (m capped at n(n-1)/2).
inline Graph random_graph_m(int n, int m, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Edge> all;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) all.push_back({u, v});
    std::shuffle(all.begin(), all.end(), rng);
    if (m > static_cast<int>(all.size())) m = static_cast<int>(all.size());
    all.resize(std::max(0, m));
    return Graph(n, std::move(all));
}

// Random planar graph: grows a stacked triangulation by repeatedly placing a
// new vertex inside a random face, then keeps each edge with probability
// `keep`. Planar by construction.
inline Graph random_planar_graph(int n, double keep, uint64_t seed) {
    if (n < 1) throw input_error("random_planar_graph: need n >= 1");
    std::mt19937_64 rng(seed);
    std::vector<Edge> tri_edges;
    if (n >= 2) tri_edges.push_back({0, 1});
    if (n >= 3) {
        tri_edges.push_back({0, 2});
        tri_edges.push_back({1, 2});
        std::vector<std::array<int, 3>> faces{{0, 1, 2}, {0, 1, 2}};
        for (int v = 3; v < n; ++v) {
            std::uniform_int_distribution<size_t> pick(0, faces.size() - 1);
            size_t slot = pick(rng);
            auto f = faces[slot];
            faces[slot] = faces.back();
            faces.pop_back();
            for (int c : f) tri_edges.push_back(make_edge(v, c));
            faces.push_back({f[0], f[1], v});
            faces.push_back({f[0], f[2], v});
            faces.push_back({f[1], f[2], v});
        }
    }
    std::bernoulli_distribution coin(keep);
    std::vector<Edge> edges;
    for (auto e : tri_edges)
        if (coin(rng)) edges.push_back(e);
    return Graph(n, std::move(edges));
}

}  // namespace planesplit
