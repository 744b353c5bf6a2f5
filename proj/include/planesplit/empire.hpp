#pragma once

// Checks on 2-split certificates of maximal (bipartite) planar graphs: the
// split graph must use both copies of every vertex, be a triangulation
// (quadrangulation in the bipartite variant), and no face may touch two
// copies of the same original vertex.

#include <set>
#include <vector>

#include "planesplit/certificate.hpp"
#include "planesplit/planarity.hpp"

namespace planesplit {

struct EmpireReport {
    bool every_vertex_split = false;   // exactly 2 copies per original vertex
    bool face_sizes_ok = false;        // all faces of the target length, edge count extremal
    bool no_face_duplicates = false;   // no face touches one empire twice

    bool all() const { return every_vertex_split && face_sizes_ok && no_face_duplicates; }
};

namespace detail {

inline EmpireReport empire_conditions(const SplitCertificate& cert, int face_len) {
    EmpireReport rep;

    rep.every_vertex_split = true;
    for (int c : cert.copy_counts)
        if (c != 2) rep.every_vertex_split = false;

    CopyLabeling lab;
    Graph sg = split_graph(cert, &lab);
    Embedding emb = embed(sg);  // throws nonplanar_error on invalid input
    FaceList fl = faces(emb);

    int n = sg.vertex_count(), m = sg.edge_count();
    int extremal = face_len == 3 ? 3 * n - 6 : 2 * n - 4;
    rep.face_sizes_ok = (m == extremal);
    for (const auto& walk : fl.walks)
        if (static_cast<int>(walk.size()) != face_len) rep.face_sizes_ok = false;

    rep.no_face_duplicates = true;
    for (const auto& walk : fl.walks) {
        std::set<int> copies(walk.begin(), walk.end());
        std::set<int> owners;
        for (int copy : copies)
            if (!owners.insert(lab.owner[copy]).second) rep.no_face_duplicates = false;
    }
    return rep;
}

}  // namespace detail

// Triangulation variant: any planar 2-split of K_12 must be a triangulation
// with every vertex split and empires never sharing a face. The tested
// embedding is the one computed by embed(); condition (b) makes the split
// graph a maximal planar graph, whose embedding is unique up to reflection,
// so passing here extends to every embedding.
inline EmpireReport check_empire_conditions(const SplitCertificate& cert) {
    return detail::empire_conditions(cert, 3);
}

// Quadrangulation variant for maximal bipartite splits such as 2-splits of
// K_{7,8}: all faces length 4, every vertex split, no face with a repeated
// empire.
inline EmpireReport check_quadrangulation_conditions(const SplitCertificate& cert) {
    return detail::empire_conditions(cert, 4);
}

}  // namespace planesplit
