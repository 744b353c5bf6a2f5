#pragma once

// Crossing-free straight-line drawings of planar graphs as SVG documents.
// Layout pins the largest face of the computed embedding to a convex polygon
// and relaxes every other vertex to the average of its neighbors (Tutte's
// barycentric method, iterated numerically). For 3-connected inputs this is
// crossing-free; otherwise it is a best-effort placement.

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "planesplit/certificate.hpp"
#include "planesplit/graph.hpp"
#include "planesplit/planarity.hpp"

namespace planesplit {

namespace detail {

struct Layout {
    std::vector<double> x, y;
};

inline Layout barycentric_layout(const Graph& g) {
    int n = g.vertex_count();
    Layout ly;
    ly.x.assign(n, 0.5);
    ly.y.assign(n, 0.5);
    if (n == 0) return ly;
    if (!is_planar(g)) throw nonplanar_error("layout: graph is not planar");

    Embedding emb = embed(g);
    FaceList fl = faces(emb);

    // lay components out side by side
    int comp_count = emb.component_count;
    std::vector<double> shift(comp_count);
    for (int c = 0; c < comp_count; ++c) shift[c] = 1.1 * c;

    for (int c = 0; c < comp_count; ++c) {
        std::vector<int> verts;
        for (int v = 0; v < n; ++v)
            if (emb.component[v] == c) verts.push_back(v);
        if (verts.size() == 1) {
            ly.x[verts[0]] = 0.5 + shift[c];
            ly.y[verts[0]] = 0.5;
            continue;
        }
        // longest face walk of this component becomes the outer polygon
        const std::vector<int>* outer = nullptr;
        for (const auto& walk : fl.walks) {
            if (emb.component[walk[0]] != c) continue;
            if (!outer || walk.size() > outer->size()) outer = &walk;
        }
        std::vector<int> ring;
        std::set<int> on_ring;
        for (int v : *outer)
            if (on_ring.insert(v).second) ring.push_back(v);
        double R = 0.48;
        for (size_t i = 0; i < ring.size(); ++i) {
            double ang = 2.0 * M_PI * static_cast<double>(i) / static_cast<double>(ring.size());
            ly.x[ring[i]] = 0.5 + R * std::cos(ang) + shift[c];
            ly.y[ring[i]] = 0.5 + R * std::sin(ang);
        }
        // iterate averaging on the interior
        for (int it = 0; it < 600; ++it) {
            for (int v : verts) {
                if (on_ring.count(v) || g.degree(v) == 0) continue;
                double sx = 0, sy = 0;
                for (int w : g.neighbors(v)) {
                    sx += ly.x[w];
                    sy += ly.y[w];
                }
                ly.x[v] = sx / g.degree(v);
                ly.y[v] = sy / g.degree(v);
            }
        }
    }
    return ly;
}

inline std::string color_for(int owner, int owners) {
    int hue = owners > 0 ? (owner * 360) / owners : 0;
    return "hsl(" + std::to_string(hue) + ",70%,60%)";
}

inline void render(std::ostream& out, const Graph& g, const Layout& ly,
                   const std::vector<int>& owner, int owner_count,
                   const std::vector<std::string>& labels) {
    double w = 720, h = 720, pad = 30;
    double maxx = 1;
    for (double x : ly.x) maxx = std::max(maxx, x);
    auto X = [&](int v) { return pad + ly.x[v] / maxx * (w - 2 * pad); };
    auto Y = [&](int v) { return pad + ly.y[v] * (h - 2 * pad); };
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
        << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
    for (auto [u, v] : g.edges())
        out << "  <line x1=\"" << X(u) << "\" y1=\"" << Y(u) << "\" x2=\"" << X(v) << "\" y2=\""
            << Y(v) << "\" stroke=\"#555\" stroke-width=\"1.2\"/>\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        out << "  <circle cx=\"" << X(v) << "\" cy=\"" << Y(v) << "\" r=\"9\" fill=\""
            << color_for(owner[v], owner_count) << "\" stroke=\"#222\"/>\n";
        out << "  <text x=\"" << X(v) << "\" y=\"" << Y(v) + 3.5
            << "\" font-size=\"8\" text-anchor=\"middle\" font-family=\"sans-serif\">"
            << labels[v] << "</text>\n";
    }
    out << "</svg>\n";
}

}  // namespace detail

// Straight-line SVG drawing of a planar graph.
inline std::string render_graph_svg(const Graph& g) {
    detail::Layout ly = detail::barycentric_layout(g);
    std::vector<int> owner(g.vertex_count());
    std::vector<std::string> labels(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        owner[v] = v;
        labels[v] = std::to_string(v);
    }
    std::ostringstream out;
    detail::render(out, g, ly, owner, g.vertex_count(), labels);
    return out.str();
}

// Drawing of a certificate's split graph; the copies of each original vertex
// share a fill color and are labeled v.i.
inline std::string render_certificate_svg(const SplitCertificate& cert) {
    CopyLabeling lab;
    Graph sg = split_graph(cert, &lab);
    detail::Layout ly = detail::barycentric_layout(sg);
    std::vector<std::string> labels(sg.vertex_count());
    for (int v = 0; v < sg.vertex_count(); ++v)
        labels[v] = std::to_string(lab.owner[v]) + "." + std::to_string(lab.index[v]);
    std::ostringstream out;
    detail::render(out, sg, ly, lab.owner, cert.base.vertex_count(), labels);
    return out.str();
}

}  // namespace planesplit
