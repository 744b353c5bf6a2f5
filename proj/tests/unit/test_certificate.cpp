#include "doctest.h"

#include <random>

#include "planesplit/certificate.hpp"
#include "planesplit/constructions.hpp"
#include "planesplit/empire.hpp"
#include "planesplit/exact.hpp"
#include "planesplit/graph.hpp"
#include "support/oracles.hpp"

using namespace planesplit;
using testsupport::cycle;

TEST_CASE("identity certificate accepted on planar graphs") {
    SplitCertificate cert = identity_certificate(gen_complete(4));
    CertReport rep = verify_certificate(cert, 1);
    CHECK(rep.accepted);
    CHECK(verify_certificate(cert, 3).accepted);
}

TEST_CASE("identity certificate of a non-planar graph is rejected") {
    SplitCertificate cert = identity_certificate(gen_complete(5));
    CertReport rep = verify_certificate(cert, 1);
    CHECK_FALSE(rep.accepted);
    CHECK(rep.has(CertViolation::NonPlanarSplitGraph));
}

TEST_CASE("verifier flags every violation kind distinctly") {
    Graph k4 = gen_complete(4);

    SUBCASE("uncovered edge") {
        SplitCertificate cert = identity_certificate(k4);
        cert.split_edges.pop_back();
        CertReport rep = verify_certificate(cert, 1);
        CHECK_FALSE(rep.accepted);
        CHECK(rep.has(CertViolation::UncoveredEdge));
        CHECK_FALSE(rep.has(CertViolation::DanglingCopy));
    }
    SUBCASE("copy budget exceeded") {
        SplitCertificate cert = k12_empire_certificate();
        CertReport rep = verify_certificate(cert, 1);
        CHECK_FALSE(rep.accepted);
        CHECK(rep.has(CertViolation::CopyBudgetExceeded));
    }
    SUBCASE("dangling copy index") {
        SplitCertificate cert = identity_certificate(k4);
        cert.split_edges[0].ui = 2;  // only one copy declared
        CertReport rep = verify_certificate(cert, 2);
        CHECK_FALSE(rep.accepted);
        CHECK(rep.has(CertViolation::DanglingCopy));
    }
    SUBCASE("dangling vertex") {
        SplitCertificate cert = identity_certificate(k4);
        cert.split_edges.push_back({0, 1, 9, 1});
        CertReport rep = verify_certificate(cert, 2);
        CHECK(rep.has(CertViolation::DanglingCopy));
    }
    SUBCASE("projection onto a non-edge") {
        SplitCertificate cert = identity_certificate(cycle(5));
        cert.split_edges.push_back({0, 1, 2, 1});  // chord, not an edge of C5
        CertReport rep = verify_certificate(cert, 2);
        CHECK_FALSE(rep.accepted);
        CHECK(rep.has(CertViolation::NonEdgeProjection));
    }
    SUBCASE("duplicate split edge") {
        SplitCertificate cert = identity_certificate(k4);
        cert.split_edges.push_back(cert.split_edges.front());
        CertReport rep = verify_certificate(cert, 2);
        CHECK_FALSE(rep.accepted);
        CHECK(rep.has(CertViolation::DuplicateSplitEdge));
    }
    SUBCASE("self-loop between copies") {
        Graph g(3, {{0, 1}, {1, 2}, {0, 2}});
        std::vector<SplitEdge> edges{{0, 1, 1, 1}, {1, 1, 2, 1}, {0, 1, 2, 1}, {0, 1, 0, 2}};
        SplitCertificate cert(g, {2, 1, 1}, edges);
        CertReport rep = verify_certificate(cert, 2);
        CHECK_FALSE(rep.accepted);
        CHECK(rep.has(CertViolation::SelfLoop));
    }
    SUBCASE("missing copy counts") {
        SplitCertificate cert = identity_certificate(k4);
        cert.copy_counts.pop_back();
        CertReport rep = verify_certificate(cert, 2);
        CHECK_FALSE(rep.accepted);
        CHECK(rep.has(CertViolation::MissingCopyCount));
    }
    SUBCASE("multiple violations are all listed") {
        SplitCertificate cert = identity_certificate(k4);
        cert.split_edges.pop_back();
        cert.split_edges.push_back({0, 1, 9, 1});
        CertReport rep = verify_certificate(cert, 2);
        CHECK(rep.has(CertViolation::UncoveredEdge));
        CHECK(rep.has(CertViolation::DanglingCopy));
    }
}

TEST_CASE("project collapses split edges onto base pairs") {
    CHECK(project(identity_certificate(cycle(5))) == cycle(5));
    CHECK(project(k12_empire_certificate()) == gen_complete(12));
    CHECK(project(k78_empire_certificate()) == gen_complete_bipartite(7, 8));

    SplitCertificate cert = identity_certificate(gen_complete(4));
    cert.split_edges.pop_back();
    Graph proj = project(cert);
    CHECK(proj.edge_count() == 5);  // proper subgraph of the base
}

TEST_CASE("split graph size accounting") {
    SplitCertificate cert = k12_empire_certificate();
    Graph sg = split_graph(cert);
    CHECK(sg.vertex_count() == cert.total_copies());
    CHECK(sg.vertex_count() <= 2 * cert.base.vertex_count());
    CHECK(sg.edge_count() >= cert.base.edge_count());
}

TEST_CASE("empire conditions on the K12 fixture") {
    SplitCertificate cert = k12_empire_certificate();
    REQUIRE(verify_certificate(cert, 2).accepted);
    EmpireReport er = check_empire_conditions(cert);
    CHECK(er.every_vertex_split);
    CHECK(er.face_sizes_ok);
    CHECK(er.no_face_duplicates);
    CHECK(er.all());

    Graph sg = split_graph(cert);
    CHECK(sg.vertex_count() == 24);
    CHECK(sg.edge_count() == 66);
    FaceList fl = faces(embed(sg));
    CHECK(fl.count() == 44);
    for (int f = 0; f < fl.count(); ++f) CHECK(fl.walk_length(f) == 3);
}

TEST_CASE("empire conditions fail where they should") {
    SUBCASE("identity certificate of K4: no vertex split") {
        EmpireReport er = check_empire_conditions(identity_certificate(gen_complete(4)));
        CHECK_FALSE(er.every_vertex_split);
        CHECK(er.face_sizes_ok);  // K4 is itself a triangulation
    }
    SUBCASE("exact-solver 2-split of K5 is no triangulation") {
        SearchOutcome out = find_k_split(gen_complete(5), 2);
        REQUIRE(out.status == SearchStatus::Found);
        EmpireReport er = check_empire_conditions(*out.certificate);
        CHECK_FALSE(er.face_sizes_ok);
    }
    SUBCASE("sparse 2-split misses the triangulation count") {
        // 2-split of C5 splitting one vertex: planar, far below 3n-6
        Graph c5 = cycle(5);
        std::vector<SplitEdge> edges{{0, 1, 1, 1}, {1, 1, 2, 1}, {2, 1, 3, 1},
                                     {3, 1, 4, 1}, {0, 2, 4, 1}};
        SplitCertificate cert(c5, {2, 1, 1, 1, 1}, edges);
        REQUIRE(verify_certificate(cert, 2).accepted);
        EmpireReport er = check_empire_conditions(cert);
        CHECK_FALSE(er.face_sizes_ok);
    }
}

TEST_CASE("empire checker refuses certificates without a planar split graph") {
    CHECK_THROWS_AS(check_empire_conditions(identity_certificate(gen_complete(5))),
                    nonplanar_error);
}

TEST_CASE("quadrangulation conditions on the K78 fixture") {
    SplitCertificate cert = k78_empire_certificate();
    REQUIRE(verify_certificate(cert, 2).accepted);
    EmpireReport er = check_quadrangulation_conditions(cert);
    CHECK(er.all());

    Graph sg = split_graph(cert);
    CHECK(sg.vertex_count() == 30);
    CHECK(sg.edge_count() == 56);
    FaceList fl = faces(embed(sg));
    for (int f = 0; f < fl.count(); ++f) CHECK(fl.walk_length(f) == 4);
}

TEST_CASE("mutated certificates are rejected with the right code") {
    std::mt19937_64 rng(77);
    std::vector<SplitCertificate> bases{k12_empire_certificate(), k78_empire_certificate()};
    int tested = 0;
    for (const auto& base : bases) {
        for (int trial = 0; trial < 30; ++trial) {
            SplitCertificate cert = base;
            int kind = trial % 3;
            std::uniform_int_distribution<size_t> pick(0, cert.split_edges.size() - 1);
            if (kind == 0) {
                cert.split_edges.erase(cert.split_edges.begin() + pick(rng));
                CertReport rep = verify_certificate(cert, 2);
                CHECK_FALSE(rep.accepted);
                CHECK(rep.has(CertViolation::UncoveredEdge));
            } else if (kind == 1) {
                cert.copy_counts[pick(rng) % cert.copy_counts.size()] = 3;
                CertReport rep = verify_certificate(cert, 2);
                CHECK_FALSE(rep.accepted);
                CHECK(rep.has(CertViolation::CopyBudgetExceeded));
            } else {
                auto& e = cert.split_edges[pick(rng)];
                e.v = e.u;  // collapse onto a self-pair
                CertReport rep = verify_certificate(cert, 2);
                CHECK_FALSE(rep.accepted);
                CHECK(rep.has(CertViolation::SelfLoop));
            }
            ++tested;
        }
    }
    CHECK(tested == 60);
}
