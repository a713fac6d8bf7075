#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "autodel/autgroup.hpp"
#include "autodel/constructions.hpp"
#include "autodel/errors.hpp"
#include "autodel/verify.hpp"
#include "oracles.hpp"

using namespace autodel;

namespace {

Graph complete_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

} // namespace

TEST_CASE("verify_witness on constructed witnesses") {
    SUBCASE("I -> Z2") {
        VerificationReport r = verify_witness(trivial_to_gamma_witness(FiniteGroup::cyclic(2)));
        CHECK(r.pass());
        CHECK(r.aut_before_order == 1);
        CHECK(r.aut_after_order == 2);
        CHECK(r.map_before.has_value());
        CHECK(r.map_after.has_value());
        CHECK(r.elapsed_before_s >= 0);
    }
    SUBCASE("Z3 -> Z3 reflexive") {
        VerificationReport r = verify_witness(reflexive_witness(FiniteGroup::cyclic(3)));
        CHECK(r.pass());
        CHECK(r.aut_before_order == 3);
        CHECK(r.aut_after_order == 3);
    }
    SUBCASE("corrupted claim fails with an order mismatch") {
        Witness w = reflexive_witness(FiniteGroup::cyclic(3));
        w.gamma2 = FiniteGroup::cyclic(4);
        VerificationReport r = verify_witness(w);
        CHECK(!r.pass());
        CHECK(r.iso_before);
        CHECK(!r.iso_after);
        CHECK(r.aut_after_order == 3); // order 3 against a claimed 4
        CHECK(!r.map_after.has_value());
    }
    SUBCASE("same order but wrong group fails the isomorphism check") {
        Witness w = reflexive_witness(FiniteGroup::symmetric(3));
        w.gamma1 = FiniteGroup::cyclic(6); // |S3| = |Z6| = 6 but S3 is not Z6
        VerificationReport r = verify_witness(w);
        CHECK(!r.iso_before);
        CHECK(r.aut_before_order == 6);
    }
}

TEST_CASE("verify_witness contract checks") {
    SUBCASE("vertex witness needs at least 3 vertices") {
        Witness w;
        w.graph = complete_graph(2);
        w.target = 0;
        w.gamma1 = FiniteGroup::cyclic(2);
        w.gamma2 = FiniteGroup::trivial();
        VerificationReport r = verify_witness(w);
        CHECK(!r.pass());
        CHECK(r.note.find("|V| >= 3") != std::string::npos);
    }
    SUBCASE("out-of-range target") {
        Witness w;
        w.graph = complete_graph(3);
        w.target = 9;
        w.gamma1 = FiniteGroup::symmetric(3);
        w.gamma2 = FiniteGroup::cyclic(2);
        CHECK_THROWS_AS(verify_witness(w), input_error);
    }
    SUBCASE("missing target edge") {
        Witness w;
        w.graph = Graph(3);
        w.target = EdgeTarget{0, 1};
        w.gamma1 = FiniteGroup::symmetric(3);
        w.gamma2 = FiniteGroup::symmetric(3);
        CHECK_THROWS_AS(verify_witness(w), input_error);
    }
    SUBCASE("order mismatch fails fast without a resource error") {
        Witness w;
        w.graph = Graph(20); // Aut = S20, astronomically large
        w.target = 0;
        w.gamma1 = FiniteGroup::cyclic(2);
        w.gamma2 = FiniteGroup::cyclic(2);
        VerificationReport r = verify_witness(w);
        CHECK(!r.pass());
        CHECK(!r.resource_limited);
        CHECK(r.aut_before_order > 1000000);
    }
    SUBCASE("matching order above the cap reports resource_limited") {
        Witness w = reflexive_witness(FiniteGroup::symmetric(3));
        VerifyOptions opt;
        opt.abstract_group_cap = 2;
        VerificationReport r = verify_witness(w, opt);
        CHECK(r.resource_limited);
        CHECK(!r.pass());
        CHECK(r.aut_before_order == 6); // orders still reported
    }
}

TEST_CASE("verification is deterministic and matches the brute oracle") {
    std::mt19937 rng(53);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 3 + trial % 6;
        Graph g = oracles::random_graph(n, rng);
        Witness w;
        w.graph = g;
        w.target = 0;
        PermGroup aut = automorphisms(g);
        w.gamma1 = as_abstract_group(aut);
        w.gamma2 = as_abstract_group(automorphisms(delete_vertex(g, 0).first));
        VerificationReport r1 = verify_witness(w);
        VerificationReport r2 = verify_witness(w);
        CHECK(r1.pass());
        CHECK(r1.aut_before_order == r2.aut_before_order);
        CHECK(r1.aut_before_order == oracles::brute_aut_count(g));
        CHECK(r1.map_before == r2.map_before);
    }
}

TEST_CASE("check_stabilizer_subgroup") {
    SUBCASE("K4 from any vertex") {
        for (int v = 0; v < 4; ++v) CHECK(check_stabilizer_subgroup(complete_graph(4), v));
    }
    SUBCASE("identity vertex of the Z2 gadget, vacuously") {
        auto [g, lm] = cayley_gadget_graph(FiniteGroup::cyclic(2));
        CHECK(check_stabilizer_subgroup(g, lm.at("elem:0")));
    }
    SUBCASE("random graphs, every vertex") {
        std::mt19937 rng(67);
        for (int trial = 0; trial < 100; ++trial) {
            int n = 1 + trial % 10;
            Graph g = oracles::random_graph(n, rng);
            for (int v = 0; v < n; ++v) CHECK(check_stabilizer_subgroup(g, v));
        }
    }
}

TEST_CASE("negative controls: swapped groups fail on non-reflexive witnesses") {
    auto swap_groups = [](Witness w) {
        std::swap(w.gamma1, w.gamma2);
        return w;
    };
    CHECK(!verify_witness(swap_groups(trivial_to_gamma_witness(FiniteGroup::cyclic(2)))).pass());
    CHECK(!verify_witness(swap_groups(gamma_to_trivial_witness(FiniteGroup::cyclic(3)))).pass());
    CHECK(!verify_witness(
               swap_groups(vertex_deletion_witness(FiniteGroup::cyclic(2), FiniteGroup::cyclic(3))))
               .pass());
}
