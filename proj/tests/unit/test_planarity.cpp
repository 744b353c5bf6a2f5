#include "doctest.h"

#include <chrono>
#include <numeric>
#include <random>
#include <set>

#include "planesplit/graph.hpp"
#include "planesplit/planarity.hpp"
#include "planesplit/random.hpp"
#include "support/oracles.hpp"

using namespace planesplit;
using testsupport::cube_q3;
using testsupport::cycle;
using testsupport::path;
using testsupport::petersen;

namespace {

// n - m + f = 1 + c with one shared unbounded face.
void check_euler(const Graph& g) {
    REQUIRE(is_planar(g));
    Embedding emb = embed(g);
    // every neighbor appears exactly once per rotation
    int half_count = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::set<int> seen(emb.rotation[v].begin(), emb.rotation[v].end());
        CHECK(seen.size() == emb.rotation[v].size());
        CHECK(emb.rotation[v].size() == static_cast<size_t>(g.degree(v)));
        half_count += static_cast<int>(emb.rotation[v].size());
    }
    CHECK(half_count == 2 * g.edge_count());
    FaceList fl = faces(emb);
    int f = plane_face_count(emb, fl);
    CHECK(g.vertex_count() - g.edge_count() + f == 1 + emb.component_count);
    // every directed edge on exactly one walk
    int walk_halves = 0;
    for (const auto& w : fl.walks)
        if (w.size() > 1 || (w.size() == 1 && g.degree(w[0]) > 0)) walk_halves += static_cast<int>(w.size());
    CHECK(walk_halves == 2 * g.edge_count());
}

}  // namespace

TEST_CASE("planarity of the standard small graphs") {
    CHECK(is_planar(gen_complete(1)));
    CHECK(is_planar(gen_complete(4)));
    CHECK_FALSE(is_planar(gen_complete(5)));
    CHECK_FALSE(is_planar(gen_complete_bipartite(3, 3)));
    CHECK(is_planar(gen_complete_bipartite(2, 100)));
    CHECK(is_planar(cube_q3()));
    CHECK_FALSE(is_planar(petersen()));
    CHECK(is_planar(cycle(12)));
    CHECK(is_planar(path(2)));
    CHECK_FALSE(is_planar(gen_complete(6)));
    CHECK_FALSE(is_planar(gen_double_k12()));
}

TEST_CASE("embedding face counts match Euler") {
    SUBCASE("K4 has 4 faces") {
        Embedding emb = embed(gen_complete(4));
        CHECK(faces(emb).count() == 4);
    }
    SUBCASE("cube has 6 faces") {
        Embedding emb = embed(cube_q3());
        CHECK(faces(emb).count() == 6);
    }
    SUBCASE("K23 has 3 faces") {
        Embedding emb = embed(gen_complete_bipartite(2, 3));
        CHECK(faces(emb).count() == 3);
    }
    SUBCASE("triangle has 2 faces of length 3") {
        FaceList fl = faces(embed(cycle(3)));
        REQUIRE(fl.count() == 2);
        CHECK(fl.walk_length(0) == 3);
        CHECK(fl.walk_length(1) == 3);
    }
    SUBCASE("K4 faces are all triangles") {
        FaceList fl = faces(embed(gen_complete(4)));
        REQUIRE(fl.count() == 4);
        for (int f = 0; f < fl.count(); ++f) CHECK(fl.walk_length(f) == 3);
    }
    SUBCASE("tree on 5 vertices has one face of walk length 8") {
        FaceList fl = faces(embed(path(5)));
        REQUIRE(fl.count() == 1);
        CHECK(fl.walk_length(0) == 8);
    }
}

TEST_CASE("embed rejects non-planar input") {
    CHECK_THROWS_AS(embed(gen_complete(5)), nonplanar_error);
    CHECK_THROWS_AS(embed(petersen()), nonplanar_error);
}

TEST_CASE("faces rejects inconsistent rotation systems") {
    Embedding bogus;
    bogus.rotation = {{1, 1}, {0}};  // neighbor repeated
    bogus.component = {0, 0};
    bogus.component_count = 1;
    bogus.edge_count = 1;
    CHECK_THROWS_AS(faces(bogus), input_error);

    Embedding asymmetric;
    asymmetric.rotation = {{1}, {}};  // 0 claims 1 as neighbor, 1 disagrees
    asymmetric.component = {0, 0};
    asymmetric.component_count = 1;
    asymmetric.edge_count = 1;
    CHECK_THROWS_AS(faces(asymmetric), input_error);
}

TEST_CASE("Euler relation holds across planar fixtures") {
    check_euler(gen_complete(4));
    check_euler(cube_q3());
    check_euler(gen_complete_bipartite(2, 7));
    check_euler(path(9));
    check_euler(cycle(8));
    check_euler(Graph(1, {}));
    check_euler(Graph(6, {{0, 1}, {2, 3}, {3, 4}, {2, 4}}));  // disconnected
    for (uint64_t seed = 0; seed < 30; ++seed) {
        check_euler(random_planar_graph(20, 1.0, seed));
        check_euler(random_planar_graph(14, 0.7, seed + 1000));
        check_euler(random_planar_graph(9, 0.4, seed + 2000));
    }
}

TEST_CASE("agrees with the Kuratowski obstruction oracle on small graphs") {
    // exhaustive on 5 vertices
    for (unsigned mask = 0; mask < (1u << 10); ++mask) {
        std::vector<Edge> edges;
        int idx = 0;
        for (int u = 0; u < 5; ++u)
            for (int v = u + 1; v < 5; ++v, ++idx)
                if (mask & (1u << idx)) edges.push_back({u, v});
        Graph g(5, std::move(edges));
        CHECK(is_planar(g) == testsupport::planar_by_obstruction(g));
    }
    // sampled on 6..8 vertices
    int checked = 0;
    for (uint64_t seed = 0; seed < 400; ++seed) {
        int n = 6 + static_cast<int>(seed % 3);
        double p = 0.25 + 0.12 * static_cast<double>(seed % 5);
        Graph g = random_graph(n, p, seed * 7 + 1);
        bool fast = is_planar(g);
        bool oracle = testsupport::planar_by_obstruction(g);
        CHECK(fast == oracle);
        ++checked;
    }
    CHECK(checked == 400);
}

TEST_CASE("density caps imply rejection") {
    for (uint64_t seed = 0; seed < 40; ++seed) {
        Graph g = random_graph(9, 0.8, seed);
        if (g.vertex_count() >= 3 && g.edge_count() > 3 * g.vertex_count() - 6)
            CHECK_FALSE(is_planar(g));
    }
    // bipartite cap 2n - 4
    CHECK_FALSE(is_planar(gen_complete_bipartite(3, 3)));
    CHECK_FALSE(is_planar(gen_complete_bipartite(3, 4)));
    CHECK(gen_complete_bipartite(3, 4).edge_count() > 2 * 7 - 4);
}

TEST_CASE("planarity verdict is invariant under relabeling") {
    std::mt19937_64 rng(5);
    std::vector<Graph> fixtures{petersen(), gen_complete(5), cube_q3(),
                                random_planar_graph(15, 0.8, 3), random_graph(9, 0.45, 8)};
    for (const auto& g : fixtures) {
        bool verdict = is_planar(g);
        std::vector<int> perm(g.vertex_count());
        std::iota(perm.begin(), perm.end(), 0);
        for (int trial = 0; trial < 20; ++trial) {
            std::shuffle(perm.begin(), perm.end(), rng);
            std::vector<Edge> edges;
            for (auto [u, v] : g.edges()) edges.push_back(make_edge(perm[u], perm[v]));
            CHECK(is_planar(Graph(g.vertex_count(), edges)) == verdict);
        }
    }
}

TEST_CASE("handles graphs with a hundred thousand edges") {
    // 230 x 230 grid: 52,900 vertices, 105,340 edges
    int w = 230;
    std::vector<Edge> edges;
    auto id = [&](int r, int c) { return r * w + c; };
    for (int r = 0; r < w; ++r)
        for (int c = 0; c < w; ++c) {
            if (c + 1 < w) edges.push_back({id(r, c), id(r, c + 1)});
            if (r + 1 < w) edges.push_back({id(r, c), id(r + 1, c)});
        }
    Graph grid(w * w, std::move(edges));
    auto t0 = std::chrono::steady_clock::now();
    CHECK(is_planar(grid));
    Embedding emb = embed(grid);
    FaceList fl = faces(emb);
    double el = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    CHECK(grid.vertex_count() - grid.edge_count() + plane_face_count(emb, fl) == 2);
    CHECK(el < 10.0);
}

TEST_CASE("larger planar and non-planar instances") {
    // grid 30x30 is planar; adding a K5 on top breaks it
    int w = 30;
    std::vector<Edge> edges;
    auto id = [&](int r, int c) { return r * w + c; };
    for (int r = 0; r < w; ++r)
        for (int c = 0; c < w; ++c) {
            if (c + 1 < w) edges.push_back({id(r, c), id(r, c + 1)});
            if (r + 1 < w) edges.push_back({id(r, c), id(r + 1, c)});
        }
    Graph grid(w * w, std::move(edges));
    CHECK(is_planar(grid));
    check_euler(grid);

    std::vector<Edge> plus = grid.edges();
    int base = 0;
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) {
            Edge e = make_edge(base + u * 17, base + v * 17);
            if (!grid.has_edge(e.first, e.second)) plus.push_back(e);
        }
    CHECK_FALSE(is_planar(Graph(w * w, std::move(plus))));
}
