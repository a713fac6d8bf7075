#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "autodel/autgroup.hpp"
#include "autodel/constructions.hpp"
#include "autodel/errors.hpp"
#include "autodel/sidecar.hpp"
#include "autodel/verify.hpp"

using namespace autodel;

namespace {

int tree_size(int n) { return n * n + 3 * n + 1; }

FiniteGroup v4() { return FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2)); }

} // namespace

TEST_CASE("rigid_tree") {
    for (int n = 2; n <= 6; ++n) {
        auto [tree, lm] = rigid_tree(n);
        CHECK(tree.vertex_count() == tree_size(n));
        CHECK(tree.edge_count() == tree.vertex_count() - 1); // it is a tree
        CHECK(lm.at("u0") == 0);
        for (int i = 0; i <= n; ++i) {
            int leaf = lm.at("u" + std::to_string(i));
            CHECK(tree.degree(leaf) == 1);
        }
    }
    auto [t2, lm2] = rigid_tree(2);
    CHECK(t2.vertex_count() == 11);
    CHECK(t2.edge_count() == 10);
    CHECK(automorphisms(t2).order() == 1);
    CHECK_THROWS_AS(rigid_tree(1), input_error);
}

TEST_CASE("cayley gadget graph sizes") {
    auto size_of = [](const FiniteGroup& g) {
        return cayley_gadget_graph(g).first.vertex_count();
    };
    CHECK(size_of(FiniteGroup::trivial()) == 1);
    CHECK(size_of(FiniteGroup::cyclic(2)) == 26);
    CHECK(size_of(FiniteGroup::cyclic(3)) == 99);
    CHECK(size_of(FiniteGroup::cyclic(4)) == 252);
    CHECK(size_of(v4()) == 252);
    CHECK(size_of(FiniteGroup::cyclic(5)) == 525);
    CHECK(size_of(FiniteGroup::symmetric(3)) == 966);

    // formula: n + sum over ordered pairs of (i^2 + 3i + 2)
    for (const auto& g : {FiniteGroup::cyclic(3), v4()}) {
        int expected = g.order();
        for (int a = 0; a < g.order(); ++a)
            for (int b = 0; b < g.order(); ++b) {
                if (a == b) continue;
                int i = g.mul(g.inverse(a), b) + 1;
                expected += i * i + 3 * i + 2;
            }
        CHECK(cayley_gadget_graph(g).first.vertex_count() == expected);
    }
}

TEST_CASE("cayley gadget graph automorphisms") {
    SUBCASE("trivial group gives K1") {
        auto [g, lm] = cayley_gadget_graph(FiniteGroup::trivial());
        CHECK(g.vertex_count() == 1);
        CHECK(automorphisms(g).order() == 1);
    }
    SUBCASE("|Aut| = |Gamma| and the identity vertex is trivially stabilized") {
        for (const auto& gamma : {FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), v4()}) {
            auto [g, lm] = cayley_gadget_graph(gamma);
            PermGroup aut = automorphisms(g);
            CHECK(aut.order() == gamma.order());
            CHECK(aut.stabilizer(lm.at("elem:0")).order() == 1);
        }
    }
    SUBCASE("the action on element vertices is translation by a group element") {
        // edge labels g^-1 b are preserved exactly by left translations
        // x -> gam * x (right translations conjugate the label)
        for (const auto& gamma : {FiniteGroup::cyclic(3), v4(), FiniteGroup::symmetric(3)}) {
            auto [g, lm] = cayley_gadget_graph(gamma);
            const int n = gamma.order();
            PermGroup aut = automorphisms(g);
            for (const Permutation& sigma : aut.generators()) {
                int gam = sigma[lm.at("elem:0")];
                REQUIRE(gam < n); // element vertices are ids 0..n-1
                for (int x = 0; x < n; ++x) CHECK(sigma[x] == gamma.mul(gam, x));
            }
        }
    }
    SUBCASE("abstract group of the gadget is the input group") {
        auto [g, lm] = cayley_gadget_graph(v4());
        CHECK(is_isomorphic(as_abstract_group(automorphisms(g)), v4()).has_value());
    }
}

TEST_CASE("reflexive witness") {
    SUBCASE("trivial group dispatches to T(2) with target u2") {
        Witness w = reflexive_witness(FiniteGroup::trivial());
        CHECK(w.graph.vertex_count() == 11);
        CHECK(w.vertex_target() == w.landmarks.at("u2"));
        CHECK(w.gamma1.order() == 1);
        CHECK(verify_witness(w).pass());
    }
    SUBCASE("Z2 witness has 28 vertices and verifies") {
        Witness w = reflexive_witness(FiniteGroup::cyclic(2));
        CHECK(w.graph.vertex_count() == 28);
        VerificationReport r = verify_witness(w);
        CHECK(r.pass());
        CHECK(r.aut_before_order == 2);
        CHECK(r.aut_after_order == 2);
    }
    SUBCASE("the target dominates the gadget") {
        Witness w = reflexive_witness(FiniteGroup::cyclic(3));
        int v = w.vertex_target();
        CHECK(w.graph.degree(v) == w.graph.vertex_count() - 1); // all gadget vertices + pendant
    }
}

TEST_CASE("trivial to gamma witness") {
    SUBCASE("sizes") {
        CHECK(trivial_to_gamma_witness(FiniteGroup::cyclic(2)).graph.vertex_count() == 83);
        CHECK(trivial_to_gamma_witness(FiniteGroup::cyclic(3)).graph.vertex_count() == 262);
    }
    SUBCASE("Z2 verifies with orders 1 then 2") {
        Witness w = trivial_to_gamma_witness(FiniteGroup::cyclic(2));
        VerificationReport r = verify_witness(w);
        CHECK(r.pass());
        CHECK(r.aut_before_order == 1);
        CHECK(r.aut_after_order == 2);
    }
    SUBCASE("Z2xZ2 verifies") {
        CHECK(verify_witness(trivial_to_gamma_witness(v4())).pass());
    }
}

TEST_CASE("gamma to trivial witness") {
    SUBCASE("Z2 has 70 vertices and verifies") {
        Witness w = gamma_to_trivial_witness(FiniteGroup::cyclic(2));
        CHECK(w.graph.vertex_count() == 70);
        VerificationReport r = verify_witness(w);
        CHECK(r.pass());
        CHECK(r.aut_before_order == 2);
        CHECK(r.aut_after_order == 1);
    }
    SUBCASE("Z3 kills all symmetry on deletion") {
        Witness w = gamma_to_trivial_witness(FiniteGroup::cyclic(3));
        VerificationReport r = verify_witness(w);
        CHECK(r.pass());
        CHECK(r.aut_after_order == 1);
    }
    SUBCASE("trivial input is rejected") {
        CHECK_THROWS_AS(gamma_to_trivial_witness(FiniteGroup::trivial()), input_error);
    }
}

TEST_CASE("vertex deletion witness") {
    SUBCASE("dispatches") {
        Witness ii = vertex_deletion_witness(FiniteGroup::trivial(), FiniteGroup::trivial());
        CHECK(ii.graph.vertex_count() == 11); // the T(2) witness
        Witness iz = vertex_deletion_witness(FiniteGroup::trivial(), FiniteGroup::cyclic(2));
        CHECK(iz.graph.vertex_count() == 83);
        Witness zi = vertex_deletion_witness(FiniteGroup::cyclic(2), FiniteGroup::trivial());
        CHECK(zi.graph.vertex_count() == 70);
    }
    SUBCASE("(Z2, Z3) has 550 vertices") {
        Witness w = vertex_deletion_witness(FiniteGroup::cyclic(2), FiniteGroup::cyclic(3));
        CHECK(w.graph.vertex_count() == 26 + 2 * 262);
    }
    SUBCASE("(Z2, Z2) verifies") {
        Witness w = vertex_deletion_witness(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
        VerificationReport r = verify_witness(w);
        CHECK(r.pass());
        CHECK(r.aut_before_order == 2);
        CHECK(r.aut_after_order == 2);
    }
}

TEST_CASE("rigid asymmetric edge gadget") {
    SUBCASE("Z2 sizes and groups") {
        Witness w = rigid_asymmetric_g2(FiniteGroup::cyclic(2));
        CHECK(w.graph.vertex_count() == 82);
        CHECK(!w.has_vertex_target());
        VerificationReport r = verify_witness(w);
        CHECK(r.pass());
        CHECK(r.aut_before_order == 1);
        CHECK(r.aut_after_order == 2);
    }
    SUBCASE("trivial gamma2 is rejected") {
        CHECK_THROWS_AS(rigid_asymmetric_g2(FiniteGroup::trivial()), input_error);
    }
}

TEST_CASE("edge deletion witness") {
    SUBCASE("(Z2, Z2) verifies") {
        Witness w = edge_deletion_witness(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
        CHECK(w.graph.vertex_count() == 26 + 2 * 82);
        CHECK(verify_witness(w).pass());
    }
    SUBCASE("trivial gamma1 falls back to the rigid gadget") {
        Witness w = edge_deletion_witness(FiniteGroup::trivial(), FiniteGroup::cyclic(2));
        CHECK(w.graph.vertex_count() == 82);
    }
    SUBCASE("trivial gamma2 is unsupported") {
        CHECK_THROWS_AS(edge_deletion_witness(FiniteGroup::cyclic(2), FiniteGroup::trivial()),
                        input_error);
    }
}

TEST_CASE("edge witness to vertex witness") {
    Witness e = edge_deletion_witness(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
    Witness v = edge_witness_to_vertex_witness(e);
    CHECK(v.graph.vertex_count() == e.graph.vertex_count() + 1);
    CHECK(v.has_vertex_target());
    CHECK(verify_witness(v).pass());
    CHECK_THROWS_AS(edge_witness_to_vertex_witness(v), input_error);
}

TEST_CASE("constructions are deterministic") {
    CHECK(to_graph6(cayley_gadget_graph(FiniteGroup::symmetric(3)).first) ==
          to_graph6(cayley_gadget_graph(FiniteGroup::symmetric(3)).first));
    CHECK(to_graph6(vertex_deletion_witness(FiniteGroup::cyclic(2), FiniteGroup::cyclic(3)).graph) ==
          to_graph6(vertex_deletion_witness(FiniteGroup::cyclic(2), FiniteGroup::cyclic(3)).graph));
    CHECK(to_graph6(rigid_asymmetric_g2(v4()).graph) == to_graph6(rigid_asymmetric_g2(v4()).graph));
}

TEST_CASE("witness sidecar round trip") {
    Witness w = vertex_deletion_witness(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
    nlohmann::json j = witness_to_json(w);
    Witness back = witness_from_json(j);
    CHECK(back.graph == w.graph);
    CHECK(back.vertex_target() == w.vertex_target());
    CHECK(back.gamma1.table() == w.gamma1.table());
    CHECK(back.gamma2.table() == w.gamma2.table());
    CHECK(back.landmarks.names == w.landmarks.names);

    Witness we = rigid_asymmetric_g2(FiniteGroup::cyclic(2));
    Witness backe = witness_from_json(witness_to_json(we));
    CHECK(backe.edge_target() == we.edge_target());

    // groups without a spec string serialize their table
    FiniteGroup custom = FiniteGroup::from_table(FiniteGroup::cyclic(3).table());
    Witness wc = reflexive_witness(custom);
    Witness backc = witness_from_json(witness_to_json(wc));
    CHECK(backc.gamma1.table() == custom.table());
}
