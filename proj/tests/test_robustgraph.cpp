#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "hypercore/fixtures.hpp"
#include "hypercore/hypergraph.hpp"
#include "robustgraph/certify.hpp"
#include "robustgraph/colouring.hpp"
#include "robustgraph/enumeration.hpp"
#include "robustgraph/gstar.hpp"
#include "robustgraph/labels.hpp"
#include "robustgraph/reachmatrix.hpp"
#include "robustgraph/rotatability.hpp"

using namespace hypercore;
using namespace robustgraph;

namespace {

// Every base edge is {0,1} plus a pair from a K5 on {2..6} or a triangle on
// {7,8,9}. The component chosen at {0,1} is the K5 side, so the triangle
// edges enter the construction only through their own pair witnesses.
Hypergraph five_three() {
    std::vector<Edge> edges;
    for (int x = 2; x <= 6; ++x)
        for (int y = x + 1; y <= 6; ++y) edges.push_back({0, 1, x, y});
    for (int x = 7; x <= 9; ++x)
        for (int y = x + 1; y <= 9; ++y) edges.push_back({0, 1, x, y});
    return Hypergraph::create(4, 10, edges);
}

bool any_note_contains(const std::vector<std::string>& notes, const std::string& needle) {
    return std::any_of(notes.begin(), notes.end(), [&](const std::string& s) {
        return s.find(needle) != std::string::npos;
    });
}

} // namespace

TEST_CASE("construction keeps complete graphs whole") {
    for (const auto& [k, n] : {std::pair{3, 6}, {4, 7}}) {
        const Hypergraph g = fixtures::complete(k, n);
        const RobustSubgraph rs = build_gstar(g);
        CHECK(rs.gstar.edge_count() == g.edge_count());
        CHECK(provenance_sound(rs));
        for (const ComponentChoice& c : rs.components) CHECK_FALSE(c.tie);
    }
}

TEST_CASE("membership at a set is narrower than containment") {
    const RobustSubgraph rs = build_gstar(five_three());
    CHECK(provenance_sound(rs));
    CHECK(rs.gstar.edge_count() == 13);

    // the component at {0,1} is the K5 side
    const ComponentChoice& c01 = rs.components[rs.component_index.at({0, 1})];
    CHECK(c01.vertices == std::vector<int>{2, 3, 4, 5, 6});
    CHECK_FALSE(c01.tie);

    const Edge cross{0, 1, 7, 8};
    CHECK(rs.gstar.has_edge(cross));
    const int cross_id = *rs.gstar.edge_index(cross);
    const std::vector<int> at01 = label_edge_set(rs, {0, 1});
    CHECK(at01.size() == 10);
    CHECK_FALSE(std::binary_search(at01.begin(), at01.end(), cross_id));
    // relaxing the set restores every edge through some witness
    CHECK(label_edge_set(rs, {0}).size() == 13);
    CHECK(label_edge_set(rs, {}).size() == 13);
}

TEST_CASE("component ties break toward the smaller vertex") {
    std::vector<Edge> edges;
    for (int x = 2; x <= 4; ++x)
        for (int y = x + 1; y <= 4; ++y) edges.push_back({0, 1, x, y});
    for (int x = 5; x <= 7; ++x)
        for (int y = x + 1; y <= 7; ++y) edges.push_back({0, 1, x, y});
    const RobustSubgraph rs = build_gstar(Hypergraph::create(4, 8, edges));
    const ComponentChoice& c01 = rs.components[rs.component_index.at({0, 1})];
    CHECK(c01.tie);
    CHECK(c01.vertices == std::vector<int>{2, 3, 4});
}

TEST_CASE("links of the construction contain the construction of links") {
    const RobustSubgraph rs = build_gstar(fixtures::complete(5, 7));
    for (int v : {0, 3, 6}) {
        const ContainmentCheck cc = containment_check(rs, {v});
        CHECK(cc.holds);
    }
    CHECK_THROWS_AS((void)containment_check(rs, {0, 1}), std::invalid_argument);
}

TEST_CASE("reachability matrix is worker-count independent") {
    const Hypergraph g = fixtures::complete(3, 6);
    const ReachMatrix m1 = reach_matrix(g, 1);
    const ReachMatrix m3 = reach_matrix(g, 3);
    CHECK(m1.least == m3.least);
    CHECK(m1.scc == m3.scc);
    CHECK(m1.scc_count == 1);
    CHECK(m1.mutual(0, m1.m - 1));
    CHECK(m1.max_finite <= 4);
}

TEST_CASE("reachability matrix separates disconnected blocks") {
    const Hypergraph g = fixtures::two_cliques(3, 5, 5);
    const ReachMatrix m = reach_matrix(g);
    CHECK(m.scc_count == 2);
    // edges are listed lexicographically, so the blocks split at id 10
    CHECK(m.mutual(0, 9));
    CHECK(m.mutual(10, 19));
    CHECK_FALSE(m.mutual(0, 10));
    CHECK(m.least[10][0] == -1);
    CHECK(m.least[0][10] == -1);
}

TEST_CASE("colouring analysis recognizes the expected shapes") {
    SUBCASE("monochromatic complete graph") {
        ColouredPairs cp;
        cp.n = 6;
        cp.pairs = shadow(fixtures::complete(3, 6), 2).edges;
        cp.colour.assign(cp.pairs.size(), 0);
        const ColouringAnalysis an = analyse_colouring(cp, Rat(1) / 3);
        CHECK(an.degree_ok);
        CHECK(an.rainbow_free);
        CHECK(an.locally_two);
        CHECK(an.h1_spans);
        CHECK(an.conclusions_ok);
    }
    SUBCASE("rainbow triangle is caught") {
        ColouredPairs cp;
        cp.n = 3;
        cp.pairs = {{0, 1}, {0, 2}, {1, 2}};
        cp.colour = {0, 1, 2};
        const ColouringAnalysis an = analyse_colouring(cp, Rat(1) / 3);
        CHECK_FALSE(an.rainbow_free);
        CHECK(an.rainbow_witness == std::array<int, 3>{{0, 1, 2}});
    }
    SUBCASE("three colours at one vertex are caught") {
        ColouredPairs cp;
        cp.n = 4;
        cp.pairs = {{0, 1}, {0, 2}, {0, 3}};
        cp.colour = {0, 1, 2};
        const ColouringAnalysis an = analyse_colouring(cp, Rat(1) / 3);
        CHECK_FALSE(an.locally_two);
        CHECK(an.busiest_vertex == 0);
        CHECK(an.busiest_count == 3);
    }
    SUBCASE("vertex classes") {
        const ColouringAnalysis two = analyse_vertex_colouring(5, {0, 0, 1, 1, -1}, Rat(1) / 3);
        CHECK(two.psi_classes == 2);
        CHECK(two.psi_two_classes);
        CHECK(two.components[0].vertices == std::vector<int>{0, 1});
        const ColouringAnalysis three = analyse_vertex_colouring(5, {0, 1, 2, -1, -1}, Rat(1) / 3);
        CHECK(three.psi_classes == 3);
        CHECK_FALSE(three.psi_two_classes);
    }
}

TEST_CASE("labels on complete graphs are all positive and silent") {
    SUBCASE("even arity") {
        const Hypergraph g = fixtures::complete(4, 7);
        const RobustSubgraph rs = build_gstar(g);
        const ReachMatrix m = reach_matrix(rs.gstar);
        const LabelStructure ls = build_labels(rs, Rat(1) / 100, m);
        CHECK(ls.anomalies.empty());
        CHECK_FALSE(ls.has_psi);
        for (const ACheck& c : ls.checks) {
            CHECK(c.case_tag <= 1);
            CHECK(c.a3_ok);
            CHECK(c.a4_ok);
        }
        const LabelSets& root = ls.labels.at(Edge{});
        CHECK(root.plus.size() == 35);
        CHECK(root.minus.empty());
    }
    SUBCASE("odd arity builds one vertex class") {
        const Hypergraph g = fixtures::complete(3, 6);
        const RobustSubgraph rs = build_gstar(g);
        const ReachMatrix m = reach_matrix(rs.gstar);
        const LabelStructure ls = build_labels(rs, Rat(1) / 100, m);
        CHECK(ls.anomalies.empty());
        CHECK(ls.has_psi);
        CHECK(ls.psi_analysis.psi_classes == 1);
        for (const auto& [a, lab] : ls.labels) {
            CHECK(lab.plus == lab.members);
            CHECK(lab.minus.empty());
        }
    }
}

TEST_CASE("labels split a disconnected even graph into plus and minus") {
    const Hypergraph g = fixtures::two_cliques(4, 7, 7);
    const RobustSubgraph rs = build_gstar(g);
    const ReachMatrix m = reach_matrix(rs.gstar);
    const LabelStructure ls = build_labels(rs, Rat(1) / 100, m);

    const KGraph& root_k = ls.K.at(Edge{});
    CHECK(root_k.case_tag == 2);
    CHECK_FALSE(root_k.full);
    CHECK(root_k.pairs.size() == 21);
    CHECK(root_k.vertices == std::vector<int>{7, 8, 9, 10, 11, 12, 13});

    const LabelSets& root = ls.labels.at(Edge{});
    CHECK(root.members.size() == 70);
    CHECK(root.plus.size() == 35);
    CHECK(root.minus.size() == 35);
    // block ids: the clique on {0..6} holds ids 0..34
    for (int e : root.plus) CHECK(rs.gstar.edges[e][0] >= 7);
    for (int e : root.minus) CHECK(rs.gstar.edges[e][0] < 7);

    const auto it = std::find_if(ls.checks.begin(), ls.checks.end(),
                                 [](const ACheck& c) { return c.a.empty(); });
    REQUIRE(it != ls.checks.end());
    CHECK(it->case_tag == 2);
    CHECK(it->a51_found);
    CHECK(it->a52_ok);
    CHECK_FALSE(it->a53_ok);

    const ColouringAnalysis& an = ls.colourings.at(Edge{});
    CHECK(an.rainbow_free);
    CHECK(an.locally_two);
    REQUIRE(an.components.size() == 2);
    CHECK(an.components[0].vertices == std::vector<int>{0, 1, 2, 3, 4, 5, 6});

    CHECK(any_note_contains(ls.anomalies, "second component"));
    CHECK(any_note_contains(ls.anomalies, "not reachable from every edge"));
    CHECK_FALSE(any_note_contains(ls.anomalies, "recursion mismatch"));
}

TEST_CASE("enumeration orders verify on complete graphs") {
    SUBCASE("even arity, plus labels first") {
        const Hypergraph g = fixtures::complete(4, 7);
        const RobustSubgraph rs = build_gstar(g);
        const ReachMatrix m = reach_matrix(rs.gstar);
        const LabelStructure ls = build_labels(rs, Rat(1) / 100, m);
        const EnumerationResult res = build_enumeration(rs, ls, m);
        CHECK(res.basis == "plus-first");
        CHECK(res.verified);
        CHECK(res.order.size() == 35);
        CHECK(res.refutation == std::array<int, 2>{{-1, -1}});
        CHECK_FALSE(res.cap_exceeded);
        CHECK(res.scc_possible);
        CHECK(res.scc_verified);
    }
    SUBCASE("odd arity, class blocks") {
        const Hypergraph g = fixtures::complete(3, 6);
        const RobustSubgraph rs = build_gstar(g);
        const ReachMatrix m = reach_matrix(rs.gstar);
        const LabelStructure ls = build_labels(rs, Rat(1) / 100, m);
        const EnumerationResult res = build_enumeration(rs, ls, m);
        CHECK(res.basis == "vertex-classes");
        CHECK(res.verified);
        CHECK(res.order.size() == 20);
    }
}

TEST_CASE("enumeration refutes a disconnected graph with a witness pair") {
    const Hypergraph g = fixtures::two_cliques(4, 7, 7);
    const RobustSubgraph rs = build_gstar(g);
    const ReachMatrix m = reach_matrix(rs.gstar);
    const LabelStructure ls = build_labels(rs, Rat(1) / 100, m);
    const EnumerationResult res = build_enumeration(rs, ls, m);
    CHECK_FALSE(res.verified);
    // plus block comes from the second clique, the refuted later edge from the first
    CHECK(res.refutation[0] >= 35);
    CHECK(res.refutation[1] < 35);
    CHECK(m.least[res.refutation[1]][res.refutation[0]] == -1);
    CHECK_FALSE(res.scc_possible);
}

TEST_CASE("every edge of a complete 4-graph rotates through walk chains") {
    const RobustSubgraph rs = build_gstar(fixtures::complete(4, 7));
    const RotatabilityReport rep = build_rotatability(rs);
    CHECK(rep.all_rotatable);
    CHECK(rep.notes.empty());
    CHECK_FALSE(rep.cap_exceeded);
    for (const EdgeRotation& er : rep.per_edge) {
        CHECK(er.method == "chain");
        CHECK(er.rotatable);
        CHECK(er.radius > 0);
        CHECK(er.dp_radius >= 0);      // cross-check ran
        CHECK(er.dp_radius <= er.radius);
    }
    CHECK(rep.max_radius <= 500);
}

TEST_CASE("3-graphs rotate through the fixpoint program directly") {
    const RobustSubgraph rs = build_gstar(fixtures::complete(3, 6));
    const RotatabilityReport rep = build_rotatability(rs);
    CHECK(rep.all_rotatable);
    for (const EdgeRotation& er : rep.per_edge) {
        CHECK(er.method == "dp");
        CHECK(er.dp_radius == er.radius);
    }
}

TEST_CASE("a bare loose path refuses rotation") {
    const Hypergraph g = Hypergraph::create(3, 5, {{0, 1, 2}, {2, 3, 4}});
    const RobustSubgraph rs = build_gstar(g);
    CHECK(rs.gstar.edge_count() == 2);
    const RotatabilityReport rep = build_rotatability(rs);
    CHECK_FALSE(rep.all_rotatable);
    for (const EdgeRotation& er : rep.per_edge) {
        CHECK(er.method == "dp");
        CHECK_FALSE(er.rotatable);
        CHECK(er.radius == -1);
    }
}

TEST_CASE("5-graphs rotate through 4-uniform link reductions") {
    const RobustSubgraph rs = build_gstar(fixtures::complete(5, 6));
    const RotatabilityReport rep = build_rotatability(rs);
    CHECK(rep.all_rotatable);
    CHECK(rep.notes.empty());
    for (const EdgeRotation& er : rep.per_edge) {
        CHECK(er.method == "link-reduction");
        CHECK(er.rotatable);
    }
}

TEST_CASE("component overlap count on a complete 4-graph") {
    const RobustSubgraph rs = build_gstar(fixtures::complete(4, 8));
    const ManyMonReport rep = many_mon(rs, 0, Rat(1) / 100);
    CHECK(rep.holds);
    CHECK(rep.count == 7);
    CHECK(rep.w == 1);
    CHECK_THROWS_AS((void)many_mon(build_gstar(fixtures::complete(3, 6)), 0, Rat(1) / 100),
                    std::invalid_argument);
}

TEST_CASE("complete graphs certify end to end") {
    const Hypergraph g = fixtures::complete(3, 6);
    const CertificationRun run = certify_robust(g, Rat(1) / 10, 4, 11);
    CHECK(run.cert.status == "certified");
    CHECK(run.cert.r1_ok);
    CHECK(run.cert.r2_ok);
    CHECK(run.cert.r3_ok);
    REQUIRE(run.cert.matching_evidence.size() == 4);
    CHECK(run.cert.matching_evidence[0].name == "uniform");
    CHECK(run.cert.matching_evidence[0].perfect);
    CHECK(run.cert.matching_evidence[0].chain_run);
    CHECK(run.cert.matching_evidence[3].name == "tight-budget");
    CHECK(run.cert.matching_evidence[3].total == (Rat(1) - Rat(1) / 10) * 6);

    const std::string once = certificate_json(run);
    const std::string twice = certificate_json(certify_robust(g, Rat(1) / 10, 4, 11));
    CHECK(once == twice);
    CHECK(once.find("\"status\"") != std::string::npos);
    CHECK(once.find("\"C1\"") != std::string::npos);
    CHECK(once.find("\"C2\"") != std::string::npos);
    CHECK(once.find("\"per_edge_rotation\"") != std::string::npos);
    CHECK(once.find("\"r1_evidence\"") != std::string::npos);
    CHECK(once.find("\"enumeration\"") != std::string::npos);
}

TEST_CASE("isolated vertices are carved out of the weighting") {
    std::vector<Edge> edges = fixtures::complete(3, 6).edges;
    const Hypergraph g = Hypergraph::create(3, 7, edges); // vertex 6 touches nothing
    const CertificationRun run = certify_robust(g, Rat(1) / 5, 3, 5);
    CHECK(run.cert.status == "certified");
    for (const OmegaEvidence& ev : run.cert.matching_evidence) {
        CHECK(ev.omega[6] == 0);
        if (ev.feasible) CHECK(ev.perfect);
    }
    CHECK(run.cert.matching_evidence[0].total == 6);
}

TEST_CASE("a disconnected graph is refuted at the enumeration step") {
    const Hypergraph g = fixtures::two_cliques(3, 7, 7);
    const CertificationRun run = certify_robust(g, Rat(1) / 10, 3, 7);
    CHECK(run.cert.status == "refuted");
    CHECK(run.cert.r1_ok);
    CHECK_FALSE(run.cert.r2_ok);
    CHECK(run.cert.r3_ok);
    CHECK(run.cert.refutation.find("enumeration") != std::string::npos);
    CHECK_FALSE(run.cert.enumeration.scc_possible);
    CHECK(run.labels.has_psi);
    CHECK(run.labels.psi_analysis.psi_classes == 2);
}
