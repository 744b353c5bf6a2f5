#pragma once

// Exact k-splittability decision by branch and bound over per-edge copy
// assignments with planarity pruning.
//
// Each base edge is realized by exactly one copy-level edge. That loses no
// decisions: dropping surplus copy edges from any planar k-split keeps the
// graph planar and keeps one edge per base pair, so a planar k-split exists
// iff one of this restricted shape does.

#include <algorithm>
#include <chrono>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "planesplit/bounds.hpp"
#include "planesplit/certificate.hpp"
#include "planesplit/graph.hpp"
#include "planesplit/planarity.hpp"

namespace planesplit {

struct SearchBudget {
    long long max_nodes = 10'000'000;
    double max_seconds = 60.0;
};

enum class SearchStatus { Found, Unsat, Exhausted };

inline const char* to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::Found: return "FOUND";
        case SearchStatus::Unsat: return "UNSAT";
        case SearchStatus::Exhausted: return "EXHAUSTED";
    }
    return "?";
}

struct SearchOutcome {
    SearchStatus status = SearchStatus::Exhausted;
    std::optional<SplitCertificate> certificate;
    long long nodes_explored = 0;
};

namespace detail {

class KSplitSearch {
public:
    KSplitSearch(const Graph& g, int k, const SearchBudget& budget)
        : g_(g), k_(k), budget_(budget), n_(g.vertex_count()) {
        // fail-first: edges by max endpoint degree descending
        order_.resize(g.edge_count());
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
            auto [au, av] = g_.edges()[a];
            auto [bu, bv] = g_.edges()[b];
            int da = std::max(g_.degree(au), g_.degree(av));
            int db = std::max(g_.degree(bu), g_.degree(bv));
            if (da != db) return da > db;
            int sa = std::min(g_.degree(au), g_.degree(av));
            int sb = std::min(g_.degree(bu), g_.degree(bv));
            if (sa != sb) return sa > sb;
            return a < b;
        });
        used_.assign(n_, 0);
        assign_.assign(g.edge_count(), {0, 0});
    }

    SearchOutcome run() {
        SearchOutcome out;
        start_ = std::chrono::steady_clock::now();
        bool complete = dfs(0, out);
        out.nodes_explored = nodes_;
        if (out.certificate) {
            out.status = SearchStatus::Found;
        } else {
            out.status = complete ? SearchStatus::Unsat : SearchStatus::Exhausted;
        }
        return out;
    }

private:
    const Graph& g_;
    int k_;
    SearchBudget budget_;
    int n_;
    std::vector<int> order_;
    std::vector<int> used_;                      // copies allocated per vertex
    std::vector<std::pair<int, int>> assign_;    // copy pair per edge (by edge id)
    std::vector<Edge> copy_edges_;               // copy-level edges of the partial split
    long long nodes_ = 0;
    std::chrono::steady_clock::time_point start_;

    bool budget_left() {
        if (nodes_ >= budget_.max_nodes) return false;
        if ((nodes_ & 1023) == 0) {
            double el = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
                            .count();
            if (el > budget_.max_seconds) return false;
        }
        return true;
    }

    // copy (v, i) with i in 1..k gets the provisional dense id v*k + i - 1;
    // compaction to first-use ids happens in the final certificate
    int cid(int v, int i) const { return v * k_ + i - 1; }

    // returns true if the subtree was searched completely
    bool dfs(size_t t, SearchOutcome& out) {
        if (t == order_.size()) {
            out.certificate = build_certificate();
            return true;
        }
        int e = order_[t];
        auto [u, v] = g_.edges()[e];
        for (int i = 1; i <= std::min(used_[u] + 1, k_); ++i) {
            for (int j = 1; j <= std::min(used_[v] + 1, k_); ++j) {
                ++nodes_;
                if (!budget_left()) return false;
                int du = (i > used_[u]) ? 1 : 0;
                int dv = (j > used_[v]) ? 1 : 0;
                used_[u] += du;
                used_[v] += dv;
                assign_[e] = {i, j};
                copy_edges_.push_back(make_edge(cid(u, i), cid(v, j)));
                bool complete = true;
                if (partial_planar()) {
                    complete = dfs(t + 1, out);
                    if (out.certificate) return true;
                }
                copy_edges_.pop_back();
                used_[u] -= du;
                used_[v] -= dv;
                if (!complete) return false;
            }
        }
        return true;
    }

    bool partial_planar() {
        Graph sg(n_ * k_, copy_edges_);
        return is_planar(sg);
    }

    SplitCertificate build_certificate() {
        std::vector<int> counts(n_, 1);
        for (int v = 0; v < n_; ++v) counts[v] = std::max(1, used_[v]);
        std::vector<SplitEdge> edges;
        edges.reserve(g_.edge_count());
        for (int e = 0; e < g_.edge_count(); ++e) {
            auto [u, v] = g_.edges()[e];
            edges.push_back({u, assign_[e].first, v, assign_[e].second});
        }
        return SplitCertificate(g_, std::move(counts), std::move(edges));
    }
};

}  // namespace detail

// Decides whether g has a planar k-split. FOUND certificates are verified
// before being returned; UNSAT is only reported after a complete search.
inline SearchOutcome find_k_split(const Graph& g, int k, const SearchBudget& budget = {}) {
    if (k < 1) throw input_error("find_k_split: need k >= 1");
    if (g.vertex_count() >= 3 && lb_euler(g) > k) {
        SearchOutcome out;
        out.status = SearchStatus::Unsat;
        return out;
    }
    detail::KSplitSearch search(g, k, budget);
    SearchOutcome out = search.run();
    if (out.certificate) {
        CertReport rep = verify_certificate(*out.certificate, k);
        if (!rep.accepted)
            throw std::logic_error("find_k_split: internal error, produced invalid certificate");
    }
    return out;
}

// Smallest k <= k_max with a planar k-split; nullopt when some level hit the
// budget before a split was found, or no level up to k_max admits one.
inline std::optional<int> split_thickness_exact(const Graph& g, int k_max,
                                                const SearchBudget& budget = {}) {
    for (int k = 1; k <= k_max; ++k) {
        SearchOutcome out = find_k_split(g, k, budget);
        if (out.status == SearchStatus::Found) return k;
        if (out.status == SearchStatus::Exhausted) return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace planesplit
