#pragma once

// Reference constructions: the classical empire-map certificates for K_12
// and K_{7,8}, a toroidal drawing of K_7, and projective-plane signatures
// for K_5 and K_6. All of them are validated by the test suite through
// verify_certificate and the empire checkers, never trusted as data.

#include <array>
#include <cmath>
#include <map>

#include "planesplit/certificate.hpp"
#include "planesplit/graph.hpp"
#include "planesplit/splitters.hpp"

namespace planesplit {

namespace detail {

// {u, v, copy_u, copy_v}: the unique copy-level edge realizing each vertex
// pair. Found by a flip search over 24-vertex triangulations; the empire
// checker certifies it (triangulation, every vertex split, empires never
// share a face), in the tradition of Heawood's two-empire map.
inline constexpr std::array<std::array<int, 4>, 66> k12_empire_rows = {{
    {0, 1, 1, 1},  {0, 2, 2, 1},  {0, 3, 1, 2},  {0, 4, 2, 2},  {0, 5, 2, 1},
    {0, 6, 2, 1},  {0, 7, 1, 1},  {0, 8, 1, 2},  {0, 9, 2, 2},  {0, 10, 1, 1},
    {0, 11, 1, 2}, {1, 2, 2, 1},  {1, 3, 1, 2},  {1, 4, 2, 2},  {1, 5, 2, 2},
    {1, 6, 2, 2},  {1, 7, 1, 1},  {1, 8, 2, 2},  {1, 9, 2, 2},  {1, 10, 2, 2},
    {1, 11, 2, 2}, {2, 3, 2, 2},  {2, 4, 1, 2},  {2, 5, 2, 2},  {2, 6, 2, 2},
    {2, 7, 2, 1},  {2, 8, 2, 2},  {2, 9, 1, 2},  {2, 10, 2, 2}, {2, 11, 2, 2},
    {3, 4, 1, 2},  {3, 5, 1, 2},  {3, 6, 1, 1},  {3, 7, 2, 1},  {3, 8, 2, 2},
    {3, 9, 1, 1},  {3, 10, 2, 1}, {3, 11, 1, 1}, {4, 5, 2, 2},  {4, 6, 2, 1},
    {4, 7, 1, 2},  {4, 8, 1, 1},  {4, 9, 1, 1},  {4, 10, 1, 2}, {4, 11, 1, 1},
    {5, 6, 1, 1},  {5, 7, 1, 2},  {5, 8, 2, 2},  {5, 9, 1, 2},  {5, 10, 2, 2},
    {5, 11, 2, 1}, {6, 7, 1, 2},  {6, 8, 1, 1},  {6, 9, 1, 1},  {6, 10, 2, 2},
    {6, 11, 2, 2}, {7, 8, 2, 1},  {7, 9, 2, 2},  {7, 10, 2, 2}, {7, 11, 1, 2},
    {8, 9, 1, 1},  {8, 10, 2, 1}, {8, 11, 2, 2}, {9, 10, 2, 2}, {9, 11, 1, 1},
    {10, 11, 2, 1},
}};

// {i, j, copy_i, copy_j} over parts 0..6 and 0..7 of K_{7,8}; the split graph
// is a 30-vertex quadrangulation covering each of the 56 pairs once.
inline constexpr std::array<std::array<int, 4>, 56> k78_empire_rows = {{
    {0, 0, 1, 1}, {0, 1, 1, 1}, {0, 2, 1, 1}, {0, 3, 1, 1}, {0, 4, 2, 1},
    {0, 5, 2, 1}, {0, 6, 2, 1}, {0, 7, 2, 1}, {1, 0, 1, 2}, {1, 1, 2, 2},
    {1, 2, 2, 2}, {1, 3, 1, 2}, {1, 4, 2, 2}, {1, 5, 1, 2}, {1, 6, 2, 2},
    {1, 7, 1, 2}, {2, 0, 1, 2}, {2, 1, 2, 2}, {2, 2, 2, 1}, {2, 3, 1, 2},
    {2, 4, 1, 2}, {2, 5, 2, 1}, {2, 6, 2, 2}, {2, 7, 1, 1}, {3, 0, 1, 1},
    {3, 1, 2, 1}, {3, 2, 2, 2}, {3, 3, 1, 1}, {3, 4, 2, 2}, {3, 5, 2, 1},
    {3, 6, 2, 2}, {3, 7, 2, 1}, {4, 0, 1, 1}, {4, 1, 2, 2}, {4, 2, 1, 1},
    {4, 3, 2, 2}, {4, 4, 2, 2}, {4, 5, 2, 1}, {4, 6, 2, 1}, {4, 7, 2, 1},
    {5, 0, 1, 2}, {5, 1, 2, 1}, {5, 2, 2, 1}, {5, 3, 1, 2}, {5, 4, 1, 2},
    {5, 5, 1, 2}, {5, 6, 2, 2}, {5, 7, 1, 2}, {6, 0, 1, 1}, {6, 1, 1, 1},
    {6, 2, 1, 1}, {6, 3, 1, 1}, {6, 4, 2, 1}, {6, 5, 1, 1}, {6, 6, 2, 1},
    {6, 7, 2, 1},
}};

}  // namespace detail

// Planar 2-split certificate of K_12: every vertex split, the split graph a
// 24-vertex triangulation with no face meeting one empire twice.
inline SplitCertificate k12_empire_certificate() {
    std::vector<SplitEdge> edges;
    edges.reserve(66);
    for (const auto& r : detail::k12_empire_rows) edges.push_back({r[0], r[2], r[1], r[3]});
    return SplitCertificate(gen_complete(12), std::vector<int>(12, 2), std::move(edges));
}

// Planar 2-split certificate of K_{7,8}: the split graph is a 30-vertex
// quadrangulation, every vertex split, no face meeting one empire twice.
inline SplitCertificate k78_empire_certificate() {
    std::vector<SplitEdge> edges;
    edges.reserve(56);
    for (const auto& r : detail::k78_empire_rows)
        edges.push_back({r[0], r[2], 7 + r[1], r[3]});
    return SplitCertificate(gen_complete_bipartite(7, 8), std::vector<int>(15, 2),
                            std::move(edges));
}

// Toroidal drawing of the circulant C_n(1,2,3) in the unit square: vertex i
// sits at ((i + 1/2)/n, (3i + 1/2)/n mod 1) and the edge i -> i+d follows the
// displacement d*(1/n, 3/n) reduced to its short representative. For n = 7
// this is the triangular-lattice drawing of K_7 on the torus.
inline TorusDrawing circulant_torus_drawing(int n) {
    if (n < 7) throw input_error("circulant_torus_drawing: need n >= 7");
    const double dx[4] = {0, 1.0 / n, 2.0 / n, 3.0 / n};
    const double dy[4] = {0, 3.0 / n, -1.0 / n, 2.0 / n};
    std::vector<Edge> edges;
    std::map<Edge, std::pair<int, int>> wrap;
    std::map<int, std::pair<double, double>> pos;
    for (int i = 0; i < n; ++i) {
        double x = (i + 0.5) / n;
        double y = std::fmod((3.0 * i + 0.5) / n, 1.0);
        pos[i] = {x, y};
        for (int d = 1; d <= 3; ++d) {
            int j = (i + d) % n;
            double xe = x + dx[d], ye = y + dy[d];
            int wx = xe >= 1.0 ? 1 : (xe < 0.0 ? -1 : 0);
            int wy = ye >= 1.0 ? 1 : (ye < 0.0 ? -1 : 0);
            if (i > j) {  // store from the lower-labeled endpoint
                wx = -wx;
                wy = -wy;
            }
            edges.push_back(make_edge(i, j));
            wrap[make_edge(i, j)] = {wx, wy};
        }
    }
    return TorusDrawing(Graph(n, std::move(edges)), std::move(wrap), std::move(pos));
}

// K_7 = C_7(1,2,3) drawn on the torus.
inline TorusDrawing k7_torus_drawing() { return circulant_torus_drawing(7); }

// K_5 on the torus: the induced sub-drawing of the K_7 drawing on 0..4.
inline TorusDrawing k5_torus_drawing() {
    TorusDrawing full = k7_torus_drawing();
    std::vector<Edge> edges;
    std::map<Edge, std::pair<int, int>> wrap;
    std::map<int, std::pair<double, double>> pos;
    for (auto [u, v] : full.graph.edges())
        if (u < 5 && v < 5) {
            edges.push_back({u, v});
            wrap[{u, v}] = full.wrap.at({u, v});
        }
    for (int v = 0; v < 5; ++v) pos[v] = full.coords.at(v);
    return TorusDrawing(Graph(5, std::move(edges)), std::move(wrap), std::move(pos));
}

// Projective-plane signature of K_6: vertex 0 is the hub, 1..5 a pentagon.
// Spokes and pentagon edges are positive, pentagram chords negative; the
// double cover is the icosahedron.
inline SignedGraph k6_projective_signature() {
    std::map<Edge, int> sign;
    for (int i = 1; i <= 5; ++i) sign[make_edge(0, i)] = 1;
    for (int i = 0; i < 5; ++i) {
        sign[make_edge(1 + i, 1 + (i + 1) % 5)] = 1;
        sign[make_edge(1 + i, 1 + (i + 2) % 5)] = -1;
    }
    return SignedGraph(gen_complete(6), std::move(sign));
}

// Projective-plane signature of K_5: pentagon positive, pentagram negative;
// the double cover is the pentagonal antiprism.
inline SignedGraph k5_projective_signature() {
    std::map<Edge, int> sign;
    for (int i = 0; i < 5; ++i) {
        sign[make_edge(i, (i + 1) % 5)] = 1;
        sign[make_edge(i, (i + 2) % 5)] = -1;
    }
    return SignedGraph(gen_complete(5), std::move(sign));
}

}  // namespace planesplit
