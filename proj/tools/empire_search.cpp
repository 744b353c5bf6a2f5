// Searches for a planar k-split certificate of K_n whose split graph is a
// triangulation on n*k vertices, by a focused edge-flip walk: flips keep the
// state a planar triangulation, so the only thing to optimize is which
// vertex pairs the edges cover. Energy counts uncovered pairs and edges
// inside one empire. At energy zero the edge set is a valid certificate,
// emitted as JSON on stdout.
//
// empire_search 12 2 finds two-copy empire maps of K_12 (Heawood's setting).
// The min-conflicts move also reaches the larger extremal families: 18 3 and
// 24 4 land in a few thousand flips each, certifying the ceil(n/6) upper
// bound constructively since the edge-count lower bound matches.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <iostream>
#include <random>
#include <vector>

#include "planesplit/certificate.hpp"
#include "planesplit/graph.hpp"
#include "planesplit/io.hpp"

using namespace planesplit;

namespace {

// Planar triangulation on labeled vertices with O(1) edge flips. Faces are
// tracked through the apex map: apex[a][b] is the third vertex of the face
// on the left of the directed edge a -> b.
class FlipTriangulation {
public:
    FlipTriangulation(int vertices, int empires)
        : n_(vertices), empires_(empires),
          apex_(static_cast<size_t>(vertices) * vertices, -1),
          epos_(static_cast<size_t>(vertices) * vertices, -1),
          deg_(vertices, 0),
          cover_(static_cast<size_t>(empires) * empires, 0) {}

    int empire_of(int v) const { return v % empires_; }

    void init_random(std::mt19937_64& rng) {
        std::fill(apex_.begin(), apex_.end(), -1);
        std::fill(epos_.begin(), epos_.end(), -1);
        std::fill(deg_.begin(), deg_.end(), 0);
        std::fill(cover_.begin(), cover_.end(), 0);
        edges_.clear();
        std::vector<int> order(n_);
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        int a = order[0], b = order[1], c = order[2];
        add_face(a, b, c);
        add_face(a, c, b);
        add_edge(a, b);
        add_edge(b, c);
        add_edge(a, c);
        std::vector<std::array<int, 3>> faces{{a, b, c}, {a, c, b}};
        for (int t = 3; t < n_; ++t) {
            int v = order[t];
            std::uniform_int_distribution<size_t> pick(0, faces.size() - 1);
            size_t s = pick(rng);
            auto [x, y, z] = faces[s];
            faces[s] = faces.back();
            faces.pop_back();
            add_face(x, y, v);
            add_face(y, z, v);
            add_face(z, x, v);
            add_edge(x, v);
            add_edge(y, v);
            add_edge(z, v);
            faces.push_back({x, y, v});
            faces.push_back({y, z, v});
            faces.push_back({z, x, v});
        }
    }

    bool flip(int a, int b) {
        int c = apex_at(a, b), d = apex_at(b, a);
        if (c < 0 || d < 0 || c == d) return false;
        if (deg_[a] <= 3 || deg_[b] <= 3) return false;
        if (has_edge(c, d)) return false;
        del_edge(a, b);
        apex_ref(a, b) = apex_ref(b, a) = -1;
        add_face(c, a, d);
        add_face(d, b, c);
        add_edge(c, d);
        return true;
    }

    // energy change if edge (a,b) were flipped; kBlocked when the flip is invalid
    static constexpr int kBlocked = 1 << 20;
    int flip_delta(int a, int b) const {
        int c = apex_at(a, b), d = apex_at(b, a);
        if (c < 0 || d < 0 || c == d) return kBlocked;
        if (deg_[a] <= 3 || deg_[b] <= 3) return kBlocked;
        if (has_edge(c, d)) return kBlocked;
        int ea = empire_of(a), eb = empire_of(b);
        int ec = empire_of(c), ed = empire_of(d);
        int delta = 0;
        delta += (ea == eb) ? -4 : (cover(ea, eb) == 1 ? +1 : 0);
        delta += (ec == ed) ? +4 : (cover(ec, ed) == 0 ? -1 : 0);
        return delta;
    }

    bool edge_violating(int u, int v) const {
        int a = empire_of(u), b = empire_of(v);
        if (a == b) return true;
        return cover(a, b) > 1;
    }

    long long energy() const {
        long long e = 0;
        for (int a = 0; a < empires_; ++a) {
            e += 4 * cover(a, a);
            for (int b = a + 1; b < empires_; ++b)
                if (cover(a, b) == 0) ++e;
        }
        return e;
    }

    const std::vector<Edge>& edges() const { return edges_; }

private:
    int n_, empires_;
    std::vector<int> apex_, epos_, deg_, cover_;
    std::vector<Edge> edges_;

    int& apex_ref(int a, int b) { return apex_[static_cast<size_t>(a) * n_ + b]; }
    int apex_at(int a, int b) const { return apex_[static_cast<size_t>(a) * n_ + b]; }
    int cover(int a, int b) const { return cover_[static_cast<size_t>(a) * empires_ + b]; }
    int& cover_ref(int a, int b) { return cover_[static_cast<size_t>(a) * empires_ + b]; }

    void add_face(int x, int y, int z) {
        apex_ref(x, y) = z;
        apex_ref(y, z) = x;
        apex_ref(z, x) = y;
    }

    void add_edge(int u, int v) {
        if (u > v) std::swap(u, v);
        epos_[static_cast<size_t>(u) * n_ + v] = static_cast<int>(edges_.size());
        edges_.push_back({u, v});
        deg_[u]++;
        deg_[v]++;
        bump(u, v, +1);
    }

    void del_edge(int u, int v) {
        if (u > v) std::swap(u, v);
        int p = epos_[static_cast<size_t>(u) * n_ + v];
        auto [lu, lv] = edges_.back();
        epos_[static_cast<size_t>(lu) * n_ + lv] = p;
        edges_[p] = edges_.back();
        edges_.pop_back();
        epos_[static_cast<size_t>(u) * n_ + v] = -1;
        deg_[u]--;
        deg_[v]--;
        bump(u, v, -1);
    }

    void bump(int u, int v, int by) {
        int a = empire_of(u), b = empire_of(v);
        cover_ref(a, b) += by;
        if (a != b) cover_ref(b, a) += by;
    }

    bool has_edge(int u, int v) const {
        if (u > v) std::swap(u, v);
        return epos_[static_cast<size_t>(u) * n_ + v] >= 0;
    }
};

}  // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::fprintf(stderr,
                     "usage: empire_search <n> <k> [seed] [max-flips]\n"
                     "finds a planar k-split certificate of K_n whose split graph is a\n"
                     "triangulation on n*k vertices; prints certificate JSON on stdout\n");
        return 3;
    }
    int n = std::atoi(argv[1]);
    int k = std::atoi(argv[2]);
    uint64_t seed = argc > 3 ? std::strtoull(argv[3], nullptr, 10) : 1;
    long long max_flips = argc > 4 ? std::atoll(argv[4]) : 200'000'000;

    if (n < 3 || k < 1) {
        std::fprintf(stderr, "error: need n >= 3 and k >= 1\n");
        return 3;
    }
    long long copies = static_cast<long long>(n) * k;
    long long pairs = static_cast<long long>(n) * (n - 1) / 2;
    if (copies < 4 || pairs > 3 * copies - 6) {
        std::fprintf(stderr,
                     "error: K_%d has %lld vertex pairs but a %lld-vertex triangulation "
                     "carries only %lld edges\n",
                     n, pairs, copies, 3 * copies - 6);
        return 1;
    }

    std::mt19937_64 rng(seed);
    FlipTriangulation tri(static_cast<int>(copies), n);
    long long flips_done = 0;
    int vio_buf_cap = static_cast<int>(3 * copies);
    std::vector<int> vio(vio_buf_cap);

    for (long long restart = 0;; ++restart) {
        tri.init_random(rng);
        long long best = tri.energy();
        long long since_best = 0;
        while (flips_done < max_flips) {
            ++flips_done;
            int nv = 0;
            const auto& edges = tri.edges();
            for (size_t i = 0; i < edges.size(); ++i)
                if (tri.edge_violating(edges[i].first, edges[i].second)) vio[nv++] = (int)i;
            long long e = tri.energy();
            if (e == 0) {
                // assemble the certificate: copy c of vertex v is (c-1)*n + v
                std::vector<SplitEdge> sedges;
                for (auto [u, v] : edges)
                    sedges.push_back({u % n, u / n + 1, v % n, v / n + 1});
                SplitCertificate cert(gen_complete(n), std::vector<int>(n, k),
                                      std::move(sedges));
                CertReport rep = verify_certificate(cert, k);
                if (!rep.accepted) {
                    std::fprintf(stderr, "internal error: search produced a bad certificate\n");
                    return 1;
                }
                io::write_certificate(std::cout, cert);
                std::fprintf(stderr, "found after %lld flips (%lld restarts)\n", flips_done,
                             restart);
                return 0;
            }
            std::uniform_int_distribution<size_t> pe(0, edges.size() - 1);
            std::uniform_real_distribution<double> coin(0.0, 1.0);
            if (coin(rng) < 0.85) {
                // min-conflicts: flip a uniformly chosen edge among the
                // best-improving valid flips
                int best_delta = FlipTriangulation::kBlocked;
                int ties = 0;
                Edge chosen{-1, -1};
                for (auto [x, y] : edges) {
                    int d = tri.flip_delta(x, y);
                    if (d > best_delta) continue;
                    if (d < best_delta) {
                        best_delta = d;
                        ties = 0;
                    }
                    if (std::uniform_int_distribution<int>(0, ties++)(rng) == 0) chosen = {x, y};
                }
                if (chosen.first >= 0)
                    tri.flip(chosen.first, chosen.second);
            } else {
                auto [u, v] =
                    nv > 0 ? edges[vio[std::uniform_int_distribution<int>(0, nv - 1)(rng)]]
                           : edges[pe(rng)];
                if (!tri.flip(u, v)) {
                    auto [x, y] = edges[pe(rng)];
                    tri.flip(x, y);
                }
            }
            if (e < best) {
                best = e;
                since_best = 0;
            } else if (++since_best > 3'000'000) {
                break;
            }
        }
        if (flips_done >= max_flips) {
            std::fprintf(stderr, "gave up after %lld flips (best energy %lld)\n", flips_done,
                         best);
            return 2;
        }
    }
}
