#pragma once

// Left-right planarity test with combinatorial embedding extraction.
//
// Three passes over a DFS orientation: the first computes lowpoints and
// nesting depths, the second runs the left-right constraint test on a stack
// of conflict pairs, the third resolves edge sides and assembles a rotation
// system. All passes are iterative, so deep graphs do not overflow the call
// stack. Runs in O(m log m) due to the adjacency sorts.

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <unordered_map>
#include <vector>

#include "planesplit/errors.hpp"
#include "planesplit/graph.hpp"

namespace planesplit {

// Rotation system of a planar graph: for every vertex the cyclic order of its
// neighbors, plus component bookkeeping. Faces are traced from it on demand.
struct Embedding {
    std::vector<std::vector<int>> rotation;  // rotation[v] = neighbors in cyclic order
    std::vector<int> component;              // component id per vertex
    int component_count = 0;
    int edge_count = 0;

    int vertex_count() const { return static_cast<int>(rotation.size()); }
};

// Faces of an embedding. Each face is the closed walk of vertices traversed
// along its boundary; every directed edge lies on exactly one walk.
struct FaceList {
    std::vector<std::vector<int>> walks;  // walks[f] = vertex sequence (closed; first not repeated)

    int count() const { return static_cast<int>(walks.size()); }
    int walk_length(int f) const { return static_cast<int>(walks[f].size()); }
};

namespace detail {

class LrPlanarity {
public:
    explicit LrPlanarity(const Graph& g) : g_(g), n_(g.vertex_count()), m_(g.edge_count()) {}

    // Runs the orientation and testing phases. True iff planar.
    bool test() {
        if (m_ == 0) return true;
        build_halves();
        orient();
        sort_out_edges_by(nesting_depth_);
        return run_tests();
    }

    // Full pipeline; only valid after test() returned true.
    Embedding extract_embedding() {
        Embedding emb;
        emb.rotation.assign(n_, {});
        emb.edge_count = m_;
        emb.component = g_.components(&emb.component_count);
        if (m_ == 0) return emb;

        for (int h = 0; h < 2 * m_; ++h)
            if (oriented_[h]) nesting_depth_[h] *= sign_of(h);
        sort_out_edges_by(nesting_depth_);

        // Per-vertex doubly linked cyclic neighbor lists keyed by half id.
        next_.assign(2 * m_, -1);
        prev_.assign(2 * m_, -1);
        first_half_.assign(n_, -1);
        left_ref_.assign(n_, kNone);
        right_ref_.assign(n_, kNone);
        for (int v = 0; v < n_; ++v)
            for (int idx : out_edges_[v]) insert_after_last(v, idx);

        std::vector<std::pair<int, size_t>> stack;
        for (int r : roots_) {
            stack.push_back({r, 0});
            while (!stack.empty()) {
                auto& [v, i] = stack.back();
                if (i >= out_edges_[v].size()) {
                    stack.pop_back();
                    continue;
                }
                int h = out_edges_[v][i++];
                int w = dst_[h];
                if (parent_half_[w] == h) {
                    // tree edge: its reversal becomes w's first half-edge
                    insert_first(w, twin(h));
                    left_ref_[v] = h;
                    right_ref_[v] = h;
                    stack.push_back({w, 0});
                } else {
                    // back edge: place reversal at the ancestor per its side
                    if (side_[h] == 1) {
                        insert_after(w, twin(h), right_ref_[w]);
                    } else {
                        insert_before(w, twin(h), left_ref_[w]);
                        left_ref_[w] = twin(h);
                    }
                }
            }
        }

        for (int v = 0; v < n_; ++v) {
            int h = first_half_[v];
            if (h == -1) continue;
            int cur = h;
            do {
                emb.rotation[v].push_back(dst_[cur]);
                cur = next_[cur];
            } while (cur != h);
        }
        return emb;
    }

private:
    static constexpr int kNone = -1;

    struct Interval {
        int lo = kNone, hi = kNone;
        bool empty() const { return lo == kNone && hi == kNone; }
    };
    struct ConflictPair {
        Interval left, right;
        void swap_sides() { std::swap(left, right); }
    };

    const Graph& g_;
    int n_, m_;

    // Half-edge h (0..2m-1): undirected edge h>>1; twin(h) = h^1.
    std::vector<int> src_, dst_;
    std::vector<std::vector<int>> incident_;  // half ids with src == v, sorted by (dst)

    std::vector<int> height_, parent_half_;
    std::vector<uint8_t> oriented_, edge_done_;
    std::vector<int> lowpt_, lowpt2_, nesting_depth_;
    std::vector<int> roots_;
    std::vector<std::vector<int>> out_edges_;  // oriented halves per source, sorted

    std::vector<int> ref_, side_;
    std::vector<int> lowpt_edge_;
    std::vector<size_t> stack_bottom_;
    std::vector<ConflictPair> S_;
    std::vector<int> first_out_;

    // embedding phase
    std::vector<int> next_, prev_, first_half_;
    std::vector<int> left_ref_, right_ref_;

    static int twin(int h) { return h ^ 1; }

    void build_halves() {
        src_.resize(2 * m_);
        dst_.resize(2 * m_);
        incident_.assign(n_, {});
        const auto& es = g_.edges();
        for (int e = 0; e < m_; ++e) {
            auto [u, v] = es[e];
            src_[2 * e] = u;
            dst_[2 * e] = v;
            src_[2 * e + 1] = v;
            dst_[2 * e + 1] = u;
            incident_[u].push_back(2 * e);
            incident_[v].push_back(2 * e + 1);
        }
        for (auto& inc : incident_)
            std::sort(inc.begin(), inc.end(),
                      [&](int a, int b) { return dst_[a] != dst_[b] ? dst_[a] < dst_[b] : a < b; });
    }

    void orient() {
        height_.assign(n_, -1);
        parent_half_.assign(n_, kNone);
        oriented_.assign(2 * m_, 0);
        edge_done_.assign(m_, 0);
        lowpt_.assign(2 * m_, 0);
        lowpt2_.assign(2 * m_, 0);
        nesting_depth_.assign(2 * m_, 0);

        std::vector<std::pair<int, size_t>> stack;
        for (int s = 0; s < n_; ++s) {
            if (height_[s] != -1) continue;
            height_[s] = 0;
            roots_.push_back(s);
            stack.push_back({s, 0});
            while (!stack.empty()) {
                auto& [v, i] = stack.back();
                if (i < incident_[v].size()) {
                    int h = incident_[v][i++];
                    int e = h >> 1;
                    if (edge_done_[e]) continue;
                    edge_done_[e] = 1;
                    oriented_[h] = 1;
                    lowpt_[h] = height_[v];
                    lowpt2_[h] = height_[v];
                    int w = dst_[h];
                    if (height_[w] == -1) {
                        parent_half_[w] = h;
                        height_[w] = height_[v] + 1;
                        stack.push_back({w, 0});
                    } else {
                        lowpt_[h] = height_[w];
                        finish_half(h, v);
                    }
                } else {
                    int done = v;
                    stack.pop_back();
                    int ph = parent_half_[done];
                    if (ph != kNone) finish_half(ph, src_[ph]);
                }
            }
        }
    }

    void finish_half(int h, int u) {
        nesting_depth_[h] = 2 * lowpt_[h] + (lowpt2_[h] < height_[u] ? 1 : 0);
        int pe = parent_half_[u];
        if (pe == kNone) return;
        if (lowpt_[h] < lowpt_[pe]) {
            lowpt2_[pe] = std::min(lowpt_[pe], lowpt2_[h]);
            lowpt_[pe] = lowpt_[h];
        } else if (lowpt_[h] > lowpt_[pe]) {
            lowpt2_[pe] = std::min(lowpt2_[pe], lowpt_[h]);
        } else {
            lowpt2_[pe] = std::min(lowpt2_[pe], lowpt2_[h]);
        }
    }

    void sort_out_edges_by(const std::vector<int>& key) {
        out_edges_.assign(n_, {});
        for (int h = 0; h < 2 * m_; ++h)
            if (oriented_[h]) out_edges_[src_[h]].push_back(h);
        for (auto& out : out_edges_)
            std::stable_sort(out.begin(), out.end(),
                             [&](int a, int b) { return key[a] < key[b]; });
    }

    bool run_tests() {
        ref_.assign(2 * m_, kNone);
        side_.assign(2 * m_, 1);
        lowpt_edge_.assign(2 * m_, kNone);
        stack_bottom_.assign(2 * m_, 0);
        first_out_.assign(n_, kNone);
        for (int v = 0; v < n_; ++v)
            if (!out_edges_[v].empty()) first_out_[v] = out_edges_[v][0];

        // frame: (vertex, out index, pending half to postprocess after child)
        struct Frame {
            int v;
            size_t i = 0;
            int pending = kNone;
        };
        std::vector<Frame> stack;
        for (int r : roots_) {
            stack.push_back({r});
            while (!stack.empty()) {
                Frame& f = stack.back();
                int v = f.v;
                if (f.pending != kNone) {
                    int hi = f.pending;
                    f.pending = kNone;
                    if (!after_subtree(hi, v)) return false;
                }
                if (f.i < out_edges_[v].size()) {
                    int h = out_edges_[v][f.i++];
                    stack_bottom_[h] = S_.size();
                    int w = dst_[h];
                    if (parent_half_[w] == h) {
                        f.pending = h;
                        stack.push_back({w});
                    } else {
                        lowpt_edge_[h] = h;
                        ConflictPair p;
                        p.right = {h, h};
                        S_.push_back(p);
                        if (!after_subtree(h, v)) return false;
                    }
                } else {
                    stack.pop_back();
                    if (parent_half_[v] != kNone && !leave_vertex(v)) return false;
                }
            }
        }
        return true;
    }

    // Common postprocessing once out-edge hi of v (back edge or completed
    // child subtree) is known to have its constraints on the stack.
    bool after_subtree(int hi, int v) {
        if (lowpt_[hi] >= height_[v]) return true;  // no return edge
        int pe = parent_half_[v];
        if (hi == first_out_[v]) {
            lowpt_edge_[pe] = lowpt_edge_[hi];
            return true;
        }
        return add_constraints(hi, pe);
    }

    bool add_constraints(int hi, int pe) {
        ConflictPair p;
        // merge return edges of hi into p.right
        do {
            ConflictPair q = S_.back();
            S_.pop_back();
            if (!q.left.empty()) q.swap_sides();
            if (!q.left.empty()) return false;
            if (lowpt_[q.right.lo] > lowpt_[pe]) {
                if (p.right.empty())
                    p.right.hi = q.right.hi;
                else
                    ref_[p.right.lo] = q.right.hi;
                p.right.lo = q.right.lo;
            } else {
                ref_[q.right.lo] = lowpt_edge_[pe];
            }
        } while (S_.size() > stack_bottom_[hi]);

        // merge conflicting return edges of earlier siblings into p.left
        while (!S_.empty() &&
               (conflicting(S_.back().left, hi) || conflicting(S_.back().right, hi))) {
            ConflictPair q = S_.back();
            S_.pop_back();
            if (conflicting(q.right, hi)) q.swap_sides();
            if (conflicting(q.right, hi)) return false;
            if (p.right.lo != kNone) ref_[p.right.lo] = q.right.hi;
            if (q.right.lo != kNone) p.right.lo = q.right.lo;
            if (p.left.empty())
                p.left.hi = q.left.hi;
            else
                ref_[p.left.lo] = q.left.hi;
            p.left.lo = q.left.lo;
        }
        if (!(p.left.empty() && p.right.empty())) S_.push_back(p);
        return true;
    }

    bool conflicting(const Interval& iv, int b) const {
        return !iv.empty() && lowpt_[iv.hi] > lowpt_[b];
    }

    int lowest(const ConflictPair& p) const {
        if (p.left.empty()) return lowpt_[p.right.lo];
        if (p.right.empty()) return lowpt_[p.left.lo];
        return std::min(lowpt_[p.left.lo], lowpt_[p.right.lo]);
    }

    bool leave_vertex(int v) {
        int pe = parent_half_[v];
        int u = src_[pe];
        // drop conflict pairs whose return edges all end at u
        while (!S_.empty() && lowest(S_.back()) == height_[u]) {
            ConflictPair p = S_.back();
            S_.pop_back();
            if (p.left.lo != kNone) side_[p.left.lo] = -1;
        }
        if (!S_.empty()) {
            ConflictPair p = S_.back();
            S_.pop_back();
            while (p.left.hi != kNone && dst_[p.left.hi] == u) p.left.hi = ref_[p.left.hi];
            if (p.left.hi == kNone && p.left.lo != kNone) {
                ref_[p.left.lo] = p.right.lo;
                side_[p.left.lo] = -1;
                p.left.lo = kNone;
            }
            while (p.right.hi != kNone && dst_[p.right.hi] == u) p.right.hi = ref_[p.right.hi];
            if (p.right.hi == kNone && p.right.lo != kNone) {
                ref_[p.right.lo] = p.left.lo;
                side_[p.right.lo] = -1;
                p.right.lo = kNone;
            }
            S_.push_back(p);
        }
        if (lowpt_[pe] < height_[u]) {  // pe has a return edge
            int hl = S_.back().left.hi;
            int hr = S_.back().right.hi;
            if (hl != kNone && (hr == kNone || lowpt_[hl] > lowpt_[hr]))
                ref_[pe] = hl;
            else
                ref_[pe] = hr;
        }
        return true;
    }

    int sign_of(int h) {
        // iterative resolution of the ref chain
        std::vector<int> chain;
        int cur = h;
        while (ref_[cur] != kNone) {
            chain.push_back(cur);
            cur = ref_[cur];
        }
        int s = side_[cur];
        for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
            side_[*it] *= s;
            ref_[*it] = kNone;
            s = side_[*it];
        }
        return s;
    }

    // --- cyclic neighbor list primitives (by half id) ---

    void insert_after_last(int v, int h) {
        if (first_half_[v] == kNone) {
            first_half_[v] = h;
            next_[h] = h;
            prev_[h] = h;
        } else {
            insert_after_half(h, prev_[first_half_[v]]);
        }
    }

    void insert_first(int v, int h) {
        insert_after_last(v, h);
        first_half_[v] = h;
    }

    // insert h clockwise-after reference half r (both at the same vertex)
    void insert_after(int v, int h, int r) {
        if (first_half_[v] == kNone || r == kNone) {
            insert_after_last(v, h);
        } else {
            insert_after_half(h, r);
        }
    }

    // insert h clockwise-before reference half r; becomes first if r was
    void insert_before(int v, int h, int r) {
        if (first_half_[v] == kNone || r == kNone) {
            insert_after_last(v, h);
        } else {
            insert_after_half(h, prev_[r]);
            if (first_half_[v] == r) first_half_[v] = h;
        }
    }

    void insert_after_half(int h, int r) {
        next_[h] = next_[r];
        prev_[h] = r;
        prev_[next_[r]] = h;
        next_[r] = h;
    }
};

}  // namespace detail

// True iff g admits a planar embedding. Deterministic.
inline bool is_planar(const Graph& g) {
    int n = g.vertex_count(), m = g.edge_count();
    if (m <= 2) return true;
    if (n >= 3 && m > 3 * n - 6) return false;
    detail::LrPlanarity lr(g);
    return lr.test();
}

// Computes a rotation system for a planar graph; throws nonplanar_error otherwise.
inline Embedding embed(const Graph& g) {
    detail::LrPlanarity lr(g);
    if (!lr.test()) throw nonplanar_error("embed: graph is not planar");
    return lr.extract_embedding();
}

// Traces all face walks of an embedding. Every directed edge (two per
// undirected edge) lies on exactly one walk; for each component the Euler
// relation n - m + f = 2 holds.
inline FaceList faces(const Embedding& emb) {
    int n = emb.vertex_count();
    // position of each neighbor within rotation[v]
    std::vector<std::unordered_map<int, int>> pos(n);
    for (int v = 0; v < n; ++v) {
        const auto& rot = emb.rotation[v];
        for (size_t i = 0; i < rot.size(); ++i) {
            auto ins = pos[v].emplace(rot[i], static_cast<int>(i));
            if (!ins.second) throw input_error("faces: neighbor repeated in rotation");
        }
    }

    FaceList fl;
    std::vector<std::vector<uint8_t>> used(n);
    for (int v = 0; v < n; ++v) used[v].assign(emb.rotation[v].size(), 0);

    for (int v = 0; v < n; ++v) {
        for (size_t i = 0; i < emb.rotation[v].size(); ++i) {
            if (used[v][i]) continue;
            std::vector<int> walk;
            int cv = v;
            int ci = static_cast<int>(i);
            // follow directed edges; next edge leaves the head at the
            // rotation position just before the arrival edge
            while (!used[cv][ci]) {
                used[cv][ci] = 1;
                walk.push_back(cv);
                int w = emb.rotation[cv][ci];
                auto it = pos[w].find(cv);
                if (it == pos[w].end())
                    throw input_error("faces: rotation system is not symmetric");
                int deg = static_cast<int>(emb.rotation[w].size());
                ci = (it->second - 1 + deg) % deg;
                cv = w;
            }
            fl.walks.push_back(std::move(walk));
        }
    }
    // an edgeless component is a single vertex; give it its trivial face so
    // the per-component Euler relation stays uniform
    for (int v = 0; v < n; ++v)
        if (emb.rotation[v].empty()) fl.walks.push_back({v});
    return fl;
}

// Number of faces when all components share one unbounded face in the plane:
// tracing counts each component's sphere faces separately, so c-1 of the
// outer faces coincide.
inline int plane_face_count(const Embedding& emb, const FaceList& fl) {
    return fl.count() - std::max(0, emb.component_count - 1);
}

}  // namespace planesplit
