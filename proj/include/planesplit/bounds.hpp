#pragma once

// Closed-form values and edge-count bounds on planar split thickness.
// All arithmetic is exact integer arithmetic.

#include <optional>
#include <string>
#include <vector>

#include "planesplit/graph.hpp"
#include "planesplit/planarity.hpp"

namespace planesplit {

// Smallest k such that the edge count fits a planar k-split: a k-split has at
// most k|V| vertices, so at most 3k|V| - 6 edges (2k|V| - 4 when bipartite).
inline int lb_euler(const Graph& g) {
    int n = g.vertex_count(), m = g.edge_count();
    if (n < 3) return 1;
    long long cap_slope = g.is_bipartite() ? 2LL * n : 3LL * n;
    long long cap_off = g.is_bipartite() ? 4 : 6;
    // smallest k with m <= cap_slope*k - cap_off
    long long k = (m + cap_off + cap_slope - 1) / cap_slope;
    return static_cast<int>(std::max(1LL, k));
}

// Planar split thickness of the complete graph K_n.
inline int complete_thickness(int n) {
    if (n < 1) throw input_error("complete_thickness: need n >= 1");
    if (n <= 4) return 1;
    if (n <= 12) return 2;
    return (n + 5) / 6;
}

// K_{m,n} is 2-splittable exactly when mn <= 4(m+n) - 4.
inline bool bipartite_2splittable(long long m, long long n) {
    if (m < 1 || n < 1) throw input_error("bipartite_2splittable: need m,n >= 1");
    return m * n <= 4 * (m + n) - 4;
}

// Lower bound ceil((mn + 4) / (2(m + n))) on the split thickness of K_{m,n}.
inline int bipartite_lb(long long m, long long n) {
    if (m < 1 || n < 1) throw input_error("bipartite_lb: need m,n >= 1");
    long long num = m * n + 4, den = 2 * (m + n);
    long long k = (num + den - 1) / den;
    return static_cast<int>(std::max(1LL, k));
}

// Edge-count feasibility of a k-split of K_{m,d-m}: m(d-m) <= 2kd - 4.
inline bool eq2_feasible(long long m, long long d, long long k) {
    if (!(1 <= m && m < d)) throw input_error("eq2_feasible: need 1 <= m < d");
    if (k < 1) throw input_error("eq2_feasible: need k >= 1");
    return m * (d - m) <= 2 * k * d - 4;
}

enum class BoundReason {
    Euler,
    BipartiteEuler,
    Theorem1,
    Theorem5,
    Prop8,
    Nonplanar,
    Construction,
};

inline const char* to_string(BoundReason r) {
    switch (r) {
        case BoundReason::Euler: return "euler";
        case BoundReason::BipartiteEuler: return "bipartite-euler";
        case BoundReason::Theorem1: return "theorem1";
        case BoundReason::Theorem5: return "theorem5";
        case BoundReason::Prop8: return "prop8";
        case BoundReason::Nonplanar: return "nonplanar";
        case BoundReason::Construction: return "construction";
    }
    return "unknown";
}

struct ThicknessBounds {
    int lower = 1;
    std::optional<int> upper;
    std::vector<BoundReason> lower_reasons;
    std::vector<BoundReason> upper_reasons;
};

namespace detail {

// n of K_n if g is complete on >= 1 vertices.
inline std::optional<int> as_complete(const Graph& g) {
    int n = g.vertex_count();
    if (n < 1) return std::nullopt;
    if (g.edge_count() != n * (n - 1) / 2) return std::nullopt;
    return n;
}

// (m, n) of K_{m,n} with m <= n if g is complete bipartite.
inline std::optional<std::pair<int, int>> as_complete_bipartite(const Graph& g) {
    int n = g.vertex_count();
    if (n < 2 || g.edge_count() == 0) return std::nullopt;
    auto color = g.bipartition();
    if (color.empty()) return std::nullopt;
    if (g.component_count() != 1) return std::nullopt;
    long long a = 0, b = 0;
    for (int c : color) (c == 0 ? a : b)++;
    if (a * b != g.edge_count()) return std::nullopt;
    int m = static_cast<int>(std::min(a, b)), nn = static_cast<int>(std::max(a, b));
    return std::make_pair(m, nn);
}

}  // namespace detail

// Aggregates the known lower bounds and the recognized-family upper bounds.
inline ThicknessBounds bounds_report(const Graph& g) {
    ThicknessBounds tb;
    int n = g.vertex_count();

    struct Cand {
        int value;
        BoundReason reason;
    };
    std::vector<Cand> lower, upper;

    bool bip = g.is_bipartite();
    if (n >= 3)
        lower.push_back({lb_euler(g), bip ? BoundReason::BipartiteEuler : BoundReason::Euler});

    bool planar = is_planar(g);
    auto complete_n = detail::as_complete(g);
    auto bip_mn = detail::as_complete_bipartite(g);

    if (complete_n) {
        int f = complete_thickness(*complete_n);
        lower.push_back({f, BoundReason::Theorem1});
        upper.push_back({f, BoundReason::Theorem1});
    }
    if (bip_mn) {
        auto [m, nn] = *bip_mn;
        // the bipartite edge cap behind this bound needs >= 3 vertices, so
        // K_{1,1} is out of its domain
        if (m + nn >= 3) lower.push_back({bipartite_lb(m, nn), BoundReason::Prop8});
        if (bipartite_2splittable(m, nn)) {
            if (!planar) upper.push_back({2, BoundReason::Theorem5});
        } else {
            lower.push_back({3, BoundReason::Theorem5});
        }
        // K_{2k,n} splits into k planar copies of K_{2,n}; odd m pads to m+1
        upper.push_back({std::max(1, (m + 1) / 2), BoundReason::Construction});
    }

    if (planar) {
        upper.push_back({1, BoundReason::Construction});
    } else {
        lower.push_back({2, BoundReason::Nonplanar});
    }
    // degree splitter: ceil(max degree / 2) copies always suffice
    upper.push_back({std::max(1, (g.max_degree() + 1) / 2), BoundReason::Construction});

    int best_lower = 1;
    for (const auto& c : lower) best_lower = std::max(best_lower, c.value);
    tb.lower = best_lower;
    bool others_reach = false;
    for (const auto& c : lower)
        if (c.value == best_lower && c.reason != BoundReason::Nonplanar) others_reach = true;
    for (const auto& c : lower) {
        if (c.value != best_lower) continue;
        if (c.reason == BoundReason::Nonplanar && others_reach) continue;
        if (std::find(tb.lower_reasons.begin(), tb.lower_reasons.end(), c.reason) ==
            tb.lower_reasons.end())
            tb.lower_reasons.push_back(c.reason);
    }
    if (tb.lower_reasons.empty()) tb.lower_reasons.push_back(BoundReason::Construction);

    int best_upper = upper.front().value;
    for (const auto& c : upper) best_upper = std::min(best_upper, c.value);
    tb.upper = best_upper;
    for (const auto& c : upper)
        if (c.value == best_upper &&
            std::find(tb.upper_reasons.begin(), tb.upper_reasons.end(), c.reason) ==
                tb.upper_reasons.end())
            tb.upper_reasons.push_back(c.reason);
    return tb;
}

}  // namespace planesplit
