#include <algorithm>

#include "doctest.h"

#include "test_helpers.hpp"
#include "ualg/errors.hpp"

using namespace ualg;
using namespace ualg::testing;

TEST_CASE("identity and universal partitions are always congruences") {
    for (const FiniteAlgebra& a : registry_algebras()) {
        CHECK(is_congruence(a, Partition::identity(a.size)));
        CHECK(is_congruence(a, Partition::universal(a.size)));
    }
}

TEST_CASE("a block crossing the product structure is not a congruence") {
    FiniteAlgebra sq = *corpus::find_algebra("lat2x2");
    CHECK(!is_congruence(sq, Partition::from_blocks(4, {{0, 1}, {2}, {3}})));
}

TEST_CASE("cg of nothing is the identity congruence") {
    FiniteAlgebra z6 = corpus::z_n_ring(6);
    CHECK(cg(z6, {}).is_identity());
}

TEST_CASE("principal congruence on the 2x2 lattice is a projection kernel") {
    FiniteAlgebra sq = *corpus::find_algebra("lat2x2");
    Partition p = cg(sq, {{0, 1}});
    CHECK(p == Partition::from_blocks(4, {{0, 1}, {2, 3}}));
}

TEST_CASE("collapsing the bounds of a chain collapses everything") {
    FiniteAlgebra c3 = corpus::chain_lattice(3);
    CHECK(cg(c3, {{0, 2}}).is_universal());
}

TEST_CASE("congruence lattices of the named algebras") {
    CHECK(all_congruences(corpus::chain_lattice(2)).size() == 2);

    // Con(2x2) is the four-element Boolean lattice on the projection kernels
    FiniteAlgebra sq = *corpus::find_algebra("lat2x2");
    auto sq_cons = all_congruences(sq);
    REQUIRE(sq_cons.size() == 4);
    const Partition& k0 = sq_cons[1];
    const Partition& k1 = sq_cons[2];
    CHECK(meet(k0, k1).is_identity());
    CHECK(join(sq, k0, k1).is_universal());

    auto m3_cons = all_congruences(corpus::m3_lattice());
    REQUIRE(m3_cons.size() == 2);
    CHECK(m3_cons.front().is_identity());
    CHECK(m3_cons.back().is_universal());
}

TEST_CASE("congruence lattice agrees with partition enumeration") {
    for (const char* key : {"chain4", "lat2x2", "m3", "z6", "slcube2", "ck3", "disc2", "g2",
                            "lat2x3", "slcube3", "lat2x2x2"}) {
        FiniteAlgebra a = *corpus::find_algebra(key);
        CAPTURE(key);
        CHECK(all_congruences(a) == all_congruences_bruteforce(a));
    }
}

TEST_CASE("size bound is enforced") {
    CHECK_THROWS_AS(all_congruences(corpus::chain_lattice(15)), SizeBoundExceeded);
    // chain congruences are the interval partitions: 2^(n-1) of them
    CHECK(all_congruences(corpus::chain_lattice(9)).size() == 256);
}

TEST_CASE("cg equals the intersection of covering congruences") {
    for (const char* key : {"lat2x2", "m3", "z6", "chain4", "slcube2", "ck3"}) {
        FiniteAlgebra a = *corpus::find_algebra(key);
        auto cons = all_congruences(a);
        for (int x = 0; x < a.size; ++x)
            for (int y = x + 1; y < a.size; ++y) {
                Partition expected = Partition::universal(a.size);
                for (const Partition& c : cons)
                    if (c.same(x, y)) expected = meet(expected, c);
                CHECK(cg(a, {{x, y}}) == expected);
            }
    }
}

TEST_CASE("cg is monotone and idempotent") {
    FiniteAlgebra z6 = corpus::z_n_ring(6);
    std::vector<std::pair<int, int>> small{{0, 2}};
    std::vector<std::pair<int, int>> big{{0, 2}, {1, 5}};
    Partition ps = cg(z6, small);
    Partition pb = cg(z6, big);
    CHECK(ps.refines(pb));
    CHECK(cg(z6, ps.generator_pairs()) == ps);
    CHECK(cg(z6, pb.generator_pairs()) == pb);
}

TEST_CASE("lattice bounds behave under join and meet") {
    FiniteAlgebra z6 = corpus::z_n_ring(6);
    for (const Partition& p : all_congruences(z6)) {
        CHECK(meet(p, Partition::identity(6)).is_identity());
        CHECK(join(z6, p, Partition::identity(6)) == p);
        CHECK(join(z6, p, Partition::universal(6)).is_universal());
    }
}

TEST_CASE("congruence lattices satisfy the absorption laws") {
    for (const char* key : {"lat2x2", "m3", "z6", "chain4", "slcube3"}) {
        FiniteAlgebra a = *corpus::find_algebra(key);
        auto cons = all_congruences(a);
        for (const Partition& p : cons)
            for (const Partition& q : cons) {
                CHECK(join(a, p, meet(p, q)) == p);
                CHECK(meet(p, join(a, p, q)) == p);
            }
    }
}

TEST_CASE("kernels") {
    FiniteAlgebra m3 = corpus::m3_lattice();
    Homomorphism id{m3, m3, {0, 1, 2, 3, 4}, "id"};
    CHECK(kernel(id).is_identity());

    FiniteAlgebra trivial = quotient(m3, Partition::universal(5)).quotient;
    Homomorphism collapse{m3, trivial, {0, 0, 0, 0, 0}, "collapse"};
    CHECK(kernel(collapse).is_universal());

    FiniteAlgebra c2 = corpus::chain_lattice(2);
    ProductResult p = direct_product({c2, c2});
    CHECK(kernel(p.projections[0]) == Partition::from_blocks(4, {{0, 1}, {2, 3}}));

    Homomorphism bad{c2, c2, {1, 0}, "swap"};
    CHECK_THROWS_AS(kernel(bad), NotAHomomorphism);
}

TEST_CASE("factor pairs of the named algebras") {
    auto trivial_only = factor_pairs(corpus::chain_lattice(2));
    CHECK(trivial_only.size() == 2);

    auto sq = factor_pairs(*corpus::find_algebra("lat2x2"));
    CHECK(sq.size() == 4);
    Partition k0 = Partition::from_blocks(4, {{0, 1}, {2, 3}});
    Partition k1 = Partition::from_blocks(4, {{0, 2}, {1, 3}});
    bool found = false;
    for (const auto& fp : sq) found = found || (fp.theta == k0 && fp.theta_star == k1);
    CHECK(found);

    CHECK(factor_pairs(corpus::m3_lattice()).size() == 2);
}

TEST_CASE("factor pairs are symmetric and validate as product decompositions") {
    for (const FiniteAlgebra& a : registry_algebras()) {
        if (a.size > 9) continue;
        auto fps = factor_pairs(a);
        for (const auto& fp : fps) {
            CHECK(meet(fp.theta, fp.theta_star).is_identity());
            CHECK(compose(fp.theta, fp.theta_star).is_universal());
            CHECK(compose(fp.theta_star, fp.theta).is_universal());
            CHECK(factor_pair_valid(a, fp.theta, fp.theta_star));
            bool mirrored = false;
            for (const auto& other : fps)
                mirrored = mirrored ||
                           (other.theta == fp.theta_star && other.theta_star == fp.theta);
            CHECK(mirrored);
        }
    }
}

TEST_CASE("Fraser-Horn check on bounded distributive lattices and rings") {
    FiniteAlgebra c2 = corpus::chain_lattice(2);
    CHECK(!check_fhp_pair(c2, c2).has_value());
    CHECK(!check_fhp_pair(corpus::z_n_ring(2), corpus::z_n_ring(3)).has_value());
}

TEST_CASE("Fraser-Horn failure on bounded join semilattices") {
    FiniteAlgebra s = corpus::join_semilattice_cube(1);
    // oracle: FHP holds iff |Con(AxB)| = |Con(A)| * |Con(B)|
    ProductResult p = direct_product({s, s});
    const std::size_t product_cons = all_congruences_bruteforce(p.product).size();
    const std::size_t factor_cons = all_congruences_bruteforce(s).size();
    auto failure = check_fhp_pair(s, s);
    CHECK(product_cons != factor_cons * factor_cons);
    REQUIRE(failure.has_value());
    CHECK(is_congruence(p.product, *failure));
}

TEST_CASE("pushout along the empty pair set reproduces the homomorphism") {
    Homomorphism alpha = corpus::alpha_hom();
    PushoutResult r = pushout_quotient(alpha, {});
    CHECK(r.source_quotient.size == alpha.source.size);
    CHECK(r.target_quotient.size == alpha.target.size);
    CHECK(r.mediating.map == alpha.map); // identity-congruence blocks keep element order
}

TEST_CASE("pushout along the identity is an isomorphism") {
    FiniteAlgebra z6 = corpus::z_n_ring(6);
    Homomorphism id{z6, z6, {0, 1, 2, 3, 4, 5}, "id"};
    std::vector<std::pair<int, int>> pairs{{0, 3}};
    PushoutResult r = pushout_quotient(id, pairs);
    CHECK(r.mediating.source.size == r.mediating.target.size);
    std::vector<int> sorted = r.mediating.map;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < r.mediating.target.size; ++i)
        CHECK(sorted[static_cast<std::size_t>(i)] == i);
}

TEST_CASE("pushout quotient matches cg in the target") {
    // lattice embedding (a,b) -> (a,b,b) of 2x2 into 2x2x2
    FiniteAlgebra sq = *corpus::find_algebra("lat2x2");
    FiniteAlgebra cube = *corpus::find_algebra("lat2x2x2");
    Homomorphism emb{sq, cube, {0, 3, 4, 7}, "diag"};
    REQUIRE(is_homomorphism(emb));
    std::vector<std::pair<int, int>> pairs{{0, 1}};
    PushoutResult r = pushout_quotient(emb, pairs);
    Partition expected = cg(cube, {{0, 3}});
    CHECK(r.target_quotient.ops == quotient(cube, expected).quotient.ops);
    CHECK(is_homomorphism(r.mediating));
}

TEST_CASE("products are codisjoint across the corpus") {
    auto algebras = registry_algebras();
    for (const FiniteAlgebra& a : algebras)
        for (const FiniteAlgebra& b : algebras) {
            if (!a.same_signature(b)) continue;
            if (a.size * b.size > 30) continue;
            CHECK(codisjointness_check(a, b));
        }
    FiniteAlgebra trivial = quotient(corpus::chain_lattice(2), Partition::universal(2)).quotient;
    CHECK(codisjointness_check(trivial, trivial));
}
