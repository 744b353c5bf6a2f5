// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion pins its tolerances in code.

#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <vector>

#include "planesplit/planesplit.hpp"
#include "support/oracles.hpp"

using namespace planesplit;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

struct Criterion {
    const char* name;
    Clock::time_point t0 = Clock::now();
    bool ok = true;
    std::string detail;

    explicit Criterion(const char* n) : name(n) {}

    void expect(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        } else if (!cond) {
            ok = false;
        }
    }

    ~Criterion() {
        double el = std::chrono::duration<double>(Clock::now() - t0).count();
        if (ok) {
            std::printf("PASS  %-58s (%.2fs)\n", name, el);
        } else {
            std::printf("FAIL  %-58s (%.2fs)  %s\n", name, el, detail.c_str());
            ++g_failures;
        }
    }
};

SatInstance example_instance() {
    SatInstance inst;
    inst.var_count = 4;
    inst.clauses = {
        {{{0, false}, {1, false}, {2, false}}},
        {{{0, true}, {1, true}, {3, true}}},
        {{{1, true}, {2, false}, {3, false}}},
    };
    inst.clause_cycle = {0, 1, 2};
    return inst;
}

void criterion1_complete_thickness() {
    Criterion c("1. complete-graph thickness values and exact confirmation");
    int expected[31] = {0, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 2, 2,
                        3, 3, 3, 3, 3, 3, 4, 4, 4, 4, 4, 4,
                        5, 5, 5, 5, 5, 5};
    for (int n = 1; n <= 30; ++n)
        c.expect(complete_thickness(n) == expected[n],
                 "complete_thickness(" + std::to_string(n) + ")");
    for (int n : {5, 6}) {
        auto t0 = Clock::now();
        SearchBudget budget{10'000'000, 60.0};
        auto val = split_thickness_exact(gen_complete(n), 3, budget);
        double el = std::chrono::duration<double>(Clock::now() - t0).count();
        c.expect(val.has_value() && *val == 2, "exact f(K_" + std::to_string(n) + ") != 2");
        c.expect(el < 60.0, "exact K_" + std::to_string(n) + " exceeded 60s");
    }
}

void criterion2_theorem5() {
    Criterion c("2. 2-splittable complete bipartite characterization");
    auto t0 = Clock::now();
    for (int m = 1; m <= 200; ++m)
        for (int n = m; n <= 200; ++n)
            c.expect(bipartite_2splittable(m, n) == eq2_feasible(m, m + n, 2),
                     "mismatch at " + std::to_string(m) + "," + std::to_string(n));
    double el = std::chrono::duration<double>(Clock::now() - t0).count();
    c.expect(el < 1.0, "exhaustive check exceeded 1s");
    c.expect(bipartite_2splittable(5, 16), "K_{5,16}");
    c.expect(bipartite_2splittable(6, 10), "K_{6,10}");
    c.expect(bipartite_2splittable(7, 8), "K_{7,8}");
    c.expect(!bipartite_2splittable(5, 17), "K_{5,17}");
    c.expect(!bipartite_2splittable(6, 11), "K_{6,11}");
    c.expect(!bipartite_2splittable(7, 9), "K_{7,9}");
}

void criterion3_table1() {
    Criterion c("3. feasible-family table reproduction for k in {2,3}");
    auto table2 = [](int m, int n) {
        return m <= 4 || (m == 5 && n <= 16) || (m == 6 && n <= 10) || (m == 7 && n <= 8);
    };
    auto table3 = [](int m, int n) {
        return m <= 6 || (m == 7 && n <= 38) || (m == 8 && n <= 22) || (m == 9 && n <= 16) ||
               (m == 10 && n <= 14) || (m == 11 && n <= 12);
    };
    for (int m = 1; m <= 150; ++m)
        for (int n = m; n <= 400; ++n) {
            c.expect(eq2_feasible(m, m + n, 2) == table2(m, n),
                     "k=2 at " + std::to_string(m) + "," + std::to_string(n));
            c.expect(eq2_feasible(m, m + n, 3) == table3(m, n),
                     "k=3 at " + std::to_string(m) + "," + std::to_string(n));
        }
    for (int m = 1; m <= 7; ++m) c.expect(eq2_feasible(m, 14, 2), "diagonal d=14");
    for (int m = 1; m <= 11; ++m) c.expect(eq2_feasible(m, 22, 3), "diagonal d=22");
}

void criterion4_empire_fixtures() {
    Criterion c("4. empire conditions on the K_12 and K_{7,8} certificates");
    SplitCertificate k12 = k12_empire_certificate();
    c.expect(verify_certificate(k12, 2).accepted, "K12 certificate rejected");
    Graph sg = split_graph(k12);
    c.expect(sg.vertex_count() == 24, "K12 split vertex count");
    c.expect(sg.edge_count() == 66, "K12 split edge count");
    FaceList fl = faces(embed(sg));
    c.expect(fl.count() == 44, "K12 face count");
    for (int f = 0; f < fl.count(); ++f)
        c.expect(fl.walk_length(f) == 3, "K12 non-triangular face");
    EmpireReport er = check_empire_conditions(k12);
    c.expect(er.every_vertex_split, "K12 empire: vertex not split");
    c.expect(er.no_face_duplicates, "K12 empire: duplicate on a face");

    SplitCertificate k78 = k78_empire_certificate();
    c.expect(verify_certificate(k78, 2).accepted, "K78 certificate rejected");
    Graph sg78 = split_graph(k78);
    c.expect(sg78.vertex_count() == 30, "K78 split vertex count");
    c.expect(sg78.edge_count() == 56, "K78 split edge count");
    FaceList fl78 = faces(embed(sg78));
    for (int f = 0; f < fl78.count(); ++f)
        c.expect(fl78.walk_length(f) == 4, "K78 non-quadrilateral face");
    c.expect(check_quadrangulation_conditions(k78).all(), "K78 empire conditions");
}

void criterion5_genus1() {
    Criterion c("5. torus and projective-plane splitters on the fixtures");
    auto t0 = Clock::now();
    SplitCertificate k7 = split_torus(k7_torus_drawing());
    c.expect(verify_certificate(k7, 2).accepted, "K7 torus certificate rejected");
    c.expect(is_planar(split_graph(k7)), "K7 torus split not planar");

    SplitCertificate k5 = split_projective(k5_projective_signature());
    c.expect(verify_certificate(k5, 2).accepted, "K5 projective certificate rejected");
    SplitCertificate k6 = split_projective(k6_projective_signature());
    c.expect(verify_certificate(k6, 2).accepted, "K6 projective certificate rejected");
    double el = std::chrono::duration<double>(Clock::now() - t0).count();
    c.expect(el < 1.0, "genus-1 fixtures exceeded 1s");
}

void criterion6_approximation() {
    Criterion c("6. pseudoarboricity oracle agreement and planar bound");
    int done = 0;
    for (uint64_t seed = 0; done < 500; ++seed) {
        int n = 3 + static_cast<int>(seed % 6);
        double p = 0.2 + 0.15 * static_cast<double>(seed % 5);
        Graph g = random_graph(n, p, seed * 31 + 7);
        if (g.edge_count() == 0) continue;
        c.expect(pseudoarboricity(g) == testsupport::density_pseudoarboricity(g),
                 "oracle mismatch at seed " + std::to_string(seed));
        ++done;
    }
    for (uint64_t seed = 0; seed < 50; ++seed) {
        Graph g = random_planar_graph(10 + static_cast<int>(seed % 12), 0.9, seed);
        if (g.edge_count() == 0) continue;
        c.expect(pseudoarboricity(g) <= 3, "planar pseudoarboricity > 3");
    }
    SplitCertificate k12 = split_by_pseudoforests(gen_complete(12));
    c.expect(k12.max_copies() == 6, "K12 pseudoforest split not a 6-split");
    c.expect(verify_certificate(k12, 6).accepted, "K12 pseudoforest certificate rejected");
    c.expect(6 <= 3 * complete_thickness(12), "approximation guarantee violated");
}

void criterion7_hardness() {
    Criterion c("7. reduction witnesses verified end to end");
    auto t0 = Clock::now();
    std::mt19937_64 rng(512);
    SplitCertificate block = k12_empire_certificate();

    int done = 0;
    std::uniform_int_distribution<int> nv(3, 5), nc(1, 5);
    std::bernoulli_distribution coin(0.5);
    while (done < 25) {
        SatInstance inst;
        inst.var_count = nv(rng);
        int clauses = nc(rng);
        std::uniform_int_distribution<int> var(0, inst.var_count - 1);
        for (int j = 0; j < clauses; ++j) {
            std::set<int> vars;
            while (static_cast<int>(vars.size()) < 3) vars.insert(var(rng));
            std::array<Literal, 3> cl;
            int k = 0;
            for (int v : vars) cl[k++] = {v, coin(rng)};
            inst.clauses.push_back(cl);
        }
        inst.clause_cycle.resize(clauses);
        std::iota(inst.clause_cycle.begin(), inst.clause_cycle.end(), 0);
        std::shuffle(inst.clause_cycle.begin(), inst.clause_cycle.end(), rng);

        if (!validate_instance(inst).ok) continue;
        std::vector<bool> model;
        if (!testsupport::brute_force_satisfiable(inst.var_count, inst.clauses, &model)) continue;
        HardnessGraph hg = reduce(inst, KBlock::K12);
        SplitCertificate cert = build_witness(hg, inst, Assignment{model}, block);
        c.expect(verify_certificate(cert, 2).accepted,
                 "random witness " + std::to_string(done) + " rejected");
        ++done;
    }

    SatInstance fig = example_instance();
    Assignment a{{true, false, false, false}};
    HardnessGraph hg = reduce(fig, KBlock::K12);
    c.expect(verify_certificate(build_witness(hg, fig, a, block), 2).accepted,
             "example-formula witness rejected");
    HardnessGraph hg78 = reduce(fig, KBlock::K78);
    c.expect(hg78.graph.max_degree() <= 15, "K78 reduction max degree > 15");
    double el = std::chrono::duration<double>(Clock::now() - t0).count();
    c.expect(el < 30.0, "hardness end-to-end exceeded 30s");
}

void criterion8_mutations() {
    Criterion c("8. mutated certificates rejected with the right code");
    std::mt19937_64 rng(31337);
    std::vector<SplitCertificate> bases{k12_empire_certificate(), k78_empire_certificate(),
                                        split_by_degree(testsupport::petersen()),
                                        split_projective(k6_projective_signature())};
    int tested = 0;
    int attempts = 0;
    while (tested < 100 && ++attempts < 10000) {
        const SplitCertificate& base = bases[tested % bases.size()];
        SplitCertificate cert = base;
        std::uniform_int_distribution<size_t> pick(0, cert.split_edges.size() - 1);
        int kind = tested % 3;
        if (kind == 0) {
            // uncover one base edge by dropping every split edge over it
            SplitEdge gone = cert.split_edges[pick(rng)];
            std::erase_if(cert.split_edges, [&](const SplitEdge& e) {
                return e.u == gone.u && e.v == gone.v;
            });
            CertReport rep = verify_certificate(cert, base.max_copies());
            c.expect(!rep.accepted && rep.has(CertViolation::UncoveredEdge),
                     "edge drop not flagged as coverage loss");
        } else if (kind == 1) {
            cert.copy_counts[pick(rng) % cert.copy_counts.size()] += 2;
            CertReport rep = verify_certificate(cert, base.max_copies());
            c.expect(!rep.accepted && rep.has(CertViolation::CopyBudgetExceeded),
                     "budget bump not flagged");
        } else {
            // corrupt a projection: retarget a split edge onto a non-edge,
            // or onto a self-pair when the base is complete
            size_t at = pick(rng);
            auto& e = cert.split_edges[at];
            bool corrupted = false;
            for (int w = 0; w < cert.base.vertex_count() && !corrupted; ++w)
                if (w != e.u && !cert.base.has_edge(e.u, w)) {
                    e.v = w;
                    e.vi = 1;
                    corrupted = true;
                }
            CertViolation want = CertViolation::NonEdgeProjection;
            if (!corrupted) {
                e.v = e.u;
                e.vi = e.ui == 1 ? 2 : 1;
                want = CertViolation::SelfLoop;
            }
            CertReport rep = verify_certificate(cert, base.max_copies());
            c.expect(!rep.accepted && rep.has(want), "projection corruption not flagged");
        }
        ++tested;
    }
    c.expect(tested == 100, "could not build 100 mutants");
}

void criterion9_exclusions() {
    Criterion c("9. desk-scale exclusions covered by generator self-checks");
    Graph h = gen_double_k12();
    c.expect(h.vertex_count() == 23, "double-K12 vertex count");
    c.expect(h.edge_count() == 132, "double-K12 edge count");
    c.expect(h.degree(0) == 22, "double-K12 shared-vertex degree");
    c.expect(!is_planar(h), "double-K12 should not be planar");
    // the exact module stays clear of this scale: the euler prune alone
    // settles k = 1, and k = 2 is documented as out of reach for search
    SearchOutcome out = find_k_split(h, 1, SearchBudget{100, 1.0});
    c.expect(out.status == SearchStatus::Unsat, "double-K12 at k = 1 should be UNSAT");
}

}  // namespace

int main() {
    std::printf("acceptance suite\n");
    criterion1_complete_thickness();
    criterion2_theorem5();
    criterion3_table1();
    criterion4_empire_fixtures();
    criterion5_genus1();
    criterion6_approximation();
    criterion7_hardness();
    criterion8_mutations();
    criterion9_exclusions();
    std::printf("%s\n", g_failures == 0 ? "all criteria passed" : "FAILURES PRESENT");
    return g_failures == 0 ? 0 : 1;
}
