#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "planesplit/graph.hpp"
#include "planesplit/planarity.hpp"

namespace planesplit {

// One copy-level edge: copy `ui` of base vertex `u` adjacent to copy `vi` of
// base vertex `v`. Copy indices are 1-based (1..k_v).
struct SplitEdge {
    int u, ui, v, vi;

    SplitEdge normalized() const {
        if (std::tie(u, ui) <= std::tie(v, vi)) return *this;
        return {v, vi, u, ui};
    }
    bool operator==(const SplitEdge& o) const {
        return u == o.u && ui == o.ui && v == o.v && vi == o.vi;
    }
    bool operator<(const SplitEdge& o) const {
        return std::tie(u, ui, v, vi) < std::tie(o.u, o.ui, o.v, o.vi);
    }
};

// Witness of a k-split: per-vertex copy counts plus the copy-level edges
// whose projection must cover the base edge set.
struct SplitCertificate {
    Graph base;
    std::vector<int> copy_counts;        // per base vertex, >= 1
    std::vector<SplitEdge> split_edges;  // normalized and sorted on construction

    SplitCertificate() = default;
    SplitCertificate(Graph base_graph, std::vector<int> counts, std::vector<SplitEdge> edges)
        : base(std::move(base_graph)),
          copy_counts(std::move(counts)),
          split_edges(std::move(edges)) {
        for (auto& e : split_edges) e = e.normalized();
        std::sort(split_edges.begin(), split_edges.end());
    }

    int max_copies() const {
        int k = 1;
        for (int c : copy_counts) k = std::max(k, c);
        return k;
    }

    int total_copies() const {
        int t = 0;
        for (int c : copy_counts) t += c;
        return t;
    }

    bool operator==(const SplitCertificate& o) const {
        return base == o.base && copy_counts == o.copy_counts && split_edges == o.split_edges;
    }
};

// The k_v = 1 certificate whose split graph is the base itself.
inline SplitCertificate identity_certificate(const Graph& g) {
    std::vector<SplitEdge> edges;
    edges.reserve(g.edge_count());
    for (auto [u, v] : g.edges()) edges.push_back({u, 1, v, 1});
    return SplitCertificate(g, std::vector<int>(g.vertex_count(), 1), std::move(edges));
}

// Dense labeling of the copies of a certificate: copy (v, i) gets id
// offset[v] + i - 1. Owner maps a copy id back to its base vertex.
struct CopyLabeling {
    std::vector<int> offset;
    std::vector<int> owner;
    std::vector<int> index;  // 1-based copy index per copy id

    int id(int v, int i) const { return offset[v] + i - 1; }
    int count() const { return static_cast<int>(owner.size()); }
};

inline CopyLabeling label_copies(const SplitCertificate& cert) {
    CopyLabeling lab;
    int n = cert.base.vertex_count();
    lab.offset.assign(n, 0);
    int total = 0;
    for (int v = 0; v < n; ++v) {
        lab.offset[v] = total;
        total += cert.copy_counts[v];
    }
    lab.owner.resize(total);
    lab.index.resize(total);
    for (int v = 0; v < n; ++v)
        for (int i = 1; i <= cert.copy_counts[v]; ++i) {
            lab.owner[lab.id(v, i)] = v;
            lab.index[lab.id(v, i)] = i;
        }
    return lab;
}

// Graph induced by a certificate's copies and split edges. Requires the
// certificate to be structurally sound (indices in range, no duplicates).
inline Graph split_graph(const SplitCertificate& cert, CopyLabeling* labeling = nullptr) {
    CopyLabeling lab = label_copies(cert);
    std::vector<Edge> edges;
    edges.reserve(cert.split_edges.size());
    for (const auto& e : cert.split_edges)
        edges.push_back(make_edge(lab.id(e.u, e.ui), lab.id(e.v, e.vi)));
    if (labeling) *labeling = lab;
    return Graph(lab.count(), std::move(edges));
}

enum class CertViolation {
    MissingCopyCount,   // copy list absent or k_v < 1 for some vertex
    DanglingCopy,       // split edge references vertex or copy index out of range
    SelfLoop,           // split edge joins two copies of the same vertex
    NonEdgeProjection,  // split edge projects onto a pair that is not a base edge
    DuplicateSplitEdge, // the same copy-level edge listed twice
    UncoveredEdge,      // some base edge has no split edge projecting onto it
    CopyBudgetExceeded, // max_v k_v > k
    NonPlanarSplitGraph
};

inline const char* to_string(CertViolation v) {
    switch (v) {
        case CertViolation::MissingCopyCount: return "missing-copy-count";
        case CertViolation::DanglingCopy: return "dangling-copy";
        case CertViolation::SelfLoop: return "self-loop";
        case CertViolation::NonEdgeProjection: return "non-edge-projection";
        case CertViolation::DuplicateSplitEdge: return "duplicate-split-edge";
        case CertViolation::UncoveredEdge: return "uncovered-edge";
        case CertViolation::CopyBudgetExceeded: return "copy-budget-exceeded";
        case CertViolation::NonPlanarSplitGraph: return "non-planar-split-graph";
    }
    return "unknown";
}

struct CertReport {
    bool accepted = false;
    std::vector<std::pair<CertViolation, std::string>> violations;

    bool has(CertViolation v) const {
        for (const auto& [code, msg] : violations)
            if (code == v) return true;
        return false;
    }
};

// Checks every certificate invariant plus the copy budget and planarity of
// the split graph. Lists all violated conditions, not just the first.
inline CertReport verify_certificate(const SplitCertificate& cert, int k) {
    CertReport rep;
    const Graph& g = cert.base;
    int n = g.vertex_count();

    bool counts_ok = static_cast<int>(cert.copy_counts.size()) == n;
    if (counts_ok)
        for (int v = 0; v < n; ++v)
            if (cert.copy_counts[v] < 1) counts_ok = false;
    if (!counts_ok)
        rep.violations.push_back({CertViolation::MissingCopyCount,
                                  "copy counts must list every base vertex with k_v >= 1"});

    bool structure_ok = counts_ok;
    std::set<SplitEdge> seen;
    std::set<Edge> covered;
    for (const auto& e0 : cert.split_edges) {
        SplitEdge e = e0.normalized();
        bool in_range = e.u >= 0 && e.u < n && e.v >= 0 && e.v < n;
        if (in_range && counts_ok)
            in_range = e.ui >= 1 && e.ui <= cert.copy_counts[e.u] && e.vi >= 1 &&
                       e.vi <= cert.copy_counts[e.v];
        if (!in_range) {
            rep.violations.push_back(
                {CertViolation::DanglingCopy,
                 "split edge (" + std::to_string(e.u) + "," + std::to_string(e.ui) + ")-(" +
                     std::to_string(e.v) + "," + std::to_string(e.vi) +
                     ") references an undeclared copy"});
            structure_ok = false;
            continue;
        }
        if (e.u == e.v) {
            rep.violations.push_back({CertViolation::SelfLoop,
                                      "split edge joins two copies of vertex " +
                                          std::to_string(e.u)});
            structure_ok = false;
            continue;
        }
        if (!g.has_edge(e.u, e.v)) {
            rep.violations.push_back(
                {CertViolation::NonEdgeProjection,
                 "split edge projects onto non-edge (" + std::to_string(e.u) + "," +
                     std::to_string(e.v) + ")"});
            structure_ok = false;
            continue;
        }
        if (!seen.insert(e).second) {
            rep.violations.push_back(
                {CertViolation::DuplicateSplitEdge,
                 "duplicate split edge (" + std::to_string(e.u) + "," + std::to_string(e.ui) +
                     ")-(" + std::to_string(e.v) + "," + std::to_string(e.vi) + ")"});
            structure_ok = false;
            continue;
        }
        covered.insert(make_edge(e.u, e.v));
    }

    for (auto [u, v] : g.edges())
        if (!covered.count({u, v}))
            rep.violations.push_back({CertViolation::UncoveredEdge,
                                      "base edge (" + std::to_string(u) + "," +
                                          std::to_string(v) + ") has no split edge"});

    if (counts_ok && cert.max_copies() > k)
        rep.violations.push_back({CertViolation::CopyBudgetExceeded,
                                  "certificate uses " + std::to_string(cert.max_copies()) +
                                      " copies of a vertex, budget k = " + std::to_string(k)});

    if (structure_ok) {
        if (!is_planar(split_graph(cert)))
            rep.violations.push_back(
                {CertViolation::NonPlanarSplitGraph, "split graph is not planar"});
    }

    rep.accepted = rep.violations.empty();
    return rep;
}

// Collapses the split edges back onto base vertex pairs. Equals the base
// graph exactly when coverage holds.
inline Graph project(const SplitCertificate& cert) {
    int n = cert.base.vertex_count();
    std::set<Edge> edges;
    for (const auto& e : cert.split_edges) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            throw input_error("project: split edge endpoint out of range");
        if (e.u != e.v) edges.insert(make_edge(e.u, e.v));
    }
    return Graph(n, std::vector<Edge>(edges.begin(), edges.end()));
}

}  // namespace planesplit
