#include "doctest.h"

#include "test_helpers.hpp"
#include "ualg/errors.hpp"
#include "ualg/hom.hpp"
#include "ualg/json_io.hpp"

using namespace ualg;
using namespace ualg::testing;

namespace {

void check_lattice_axioms(const FiniteAlgebra& a) {
    std::vector<FiniteAlgebra> gens{a};
    auto holds = [&](const char* lhs, const char* rhs) {
        return !check_identity(gens, parse_term(lhs, a.sig), parse_term(rhs, a.sig)).has_value();
    };
    CHECK(holds("(join x y)", "(join y x)"));
    CHECK(holds("(meet x y)", "(meet y x)"));
    CHECK(holds("(join x (join y z))", "(join (join x y) z)"));
    CHECK(holds("(meet x (meet y z))", "(meet (meet x y) z)"));
    CHECK(holds("(join x (meet x y))", "x"));
    CHECK(holds("(meet x (join x y))", "x"));
    CHECK(holds("(join x (0))", "x"));
    CHECK(holds("(meet x (1))", "x"));
}

void check_ring_axioms(const FiniteAlgebra& a) {
    std::vector<FiniteAlgebra> gens{a};
    auto holds = [&](const char* lhs, const char* rhs) {
        return !check_identity(gens, parse_term(lhs, a.sig), parse_term(rhs, a.sig)).has_value();
    };
    CHECK(holds("(add x y)", "(add y x)"));
    CHECK(holds("(add x (add y z))", "(add (add x y) z)"));
    CHECK(holds("(add x (0))", "x"));
    CHECK(holds("(add x (neg x))", "(0)"));
    CHECK(holds("(mul x y)", "(mul y x)"));
    CHECK(holds("(mul x (mul y z))", "(mul (mul x y) z)"));
    CHECK(holds("(mul x (1))", "x"));
    CHECK(holds("(mul x (add y z))", "(add (mul x y) (mul x z))"));
}

} // namespace

TEST_CASE("chain lattices") {
    FiniteAlgebra c2 = corpus::chain_lattice(2);
    CHECK(c2.size == 2);
    FiniteAlgebra c1 = corpus::chain_lattice(1);
    CHECK(c1.size == 1);
    FiniteAlgebra c3 = corpus::chain_lattice(3);
    CHECK(c3.op("join").table[static_cast<std::size_t>(1 * 3 + 2)] == 2); // max(1,2)
    check_lattice_axioms(c2);
    check_lattice_axioms(corpus::chain_lattice(4));
}

TEST_CASE("implication chains") {
    FiniteAlgebra k2 = corpus::c_k_implication(2);
    CHECK(k2.op("imp").table[static_cast<std::size_t>(1 * 2 + 0)] == 0); // 1 => 0
    for (int x = 0; x < 2; ++x)
        CHECK(k2.op("imp").table[static_cast<std::size_t>(x * 2 + x)] == 1);

    FiniteAlgebra k3 = corpus::c_k_implication(3);
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y)
            CHECK(k3.op("imp").table[static_cast<std::size_t>(x * 3 + y)] ==
                  (x <= y ? 2 : 0)); // case-split oracle
    check_lattice_axioms(k3);
}

TEST_CASE("truncated g_k algebras") {
    FiniteAlgebra g2 = corpus::g_k(2);
    CHECK(g2.size == 4);
    const OpTable& f2 = g2.op("f2");
    CHECK(f2.table[static_cast<std::size_t>(0 * 4 + 3)] == 0); // distinct pair
    for (int x = 0; x < 4; ++x)
        CHECK(f2.table[static_cast<std::size_t>(x * 4 + x)] == 3); // repeated tuple -> 1

    FiniteAlgebra g2a3 = corpus::g_k(2, 3);
    for (int v : g2a3.op("f3").table) CHECK(v == 3); // arity 3 != k is constantly 1

    FiniteAlgebra g3 = corpus::g_k(3);
    for (int v : g3.op("f2").table) CHECK(v == 8); // arity below k is constantly 1
    const OpTable& f3 = g3.op("f3");
    CHECK(f3.table[static_cast<std::size_t>((0 * 9 + 1) * 9 + 2)] == 0);
    CHECK(f3.table[static_cast<std::size_t>((0 * 9 + 1) * 9 + 1)] == 8);
}

TEST_CASE("m3 joins and meets of the antichain") {
    FiniteAlgebra d = corpus::m3_lattice();
    CHECK(d.op("join").table[static_cast<std::size_t>(1 * 5 + 2)] == 4); // a v b = 1
    CHECK(d.op("meet").table[static_cast<std::size_t>(1 * 5 + 2)] == 0); // a ^ b = 0
    CHECK(d.op("0").table[0] == 0);
    CHECK(d.op("1").table[0] == 4);
    check_lattice_axioms(d);
}

TEST_CASE("semilattice cubes") {
    FiniteAlgebra a = corpus::join_semilattice_cube(2);
    std::vector<FiniteAlgebra> gens{a};
    CHECK(!check_identity(gens, parse_term("(join x x)", a.sig), Term::var("x")).has_value());
    CHECK(corpus::join_semilattice_cube(3).op("1").table[0] == 7);
}

TEST_CASE("rings") {
    FiniteAlgebra z6 = corpus::z_n_ring(6);
    check_ring_axioms(z6);
    check_ring_axioms(corpus::z_n_ring(4));
    std::vector<int> idempotents;
    for (int e = 0; e < 6; ++e)
        if (z6.op("mul").table[static_cast<std::size_t>(e * 6 + e)] == e)
            idempotents.push_back(e);
    CHECK(idempotents == std::vector<int>{0, 1, 3, 4});
}

TEST_CASE("the repaired alpha is a homomorphism with the right behavior") {
    Homomorphism alpha = corpus::alpha_hom();
    CHECK(is_homomorphism(alpha));
    CHECK(alpha.map[0] == 0); // 0 -> 0
    CHECK(alpha.map[3] == 7); // 1 -> 1
    // join of the images of the two atoms reaches the image of the top
    const OpTable& jn = alpha.target.op("join");
    CHECK(jn.table[static_cast<std::size_t>(alpha.map[1] * 8 + alpha.map[2])] == alpha.map[3]);
}

TEST_CASE("the inclusion of the square into m3") {
    Homomorphism inc = corpus::inclusion_c_into_d();
    CHECK(is_homomorphism(inc));
    std::vector<char> seen(5, 0);
    for (int v : inc.map) {
        CHECK(!seen[static_cast<std::size_t>(v)]);
        seen[static_cast<std::size_t>(v)] = 1;
    }
    CHECK(subalgebra_generated(inc.target, std::vector<int>{1, 2}) ==
          std::vector<int>{0, 1, 2, 4});
}

TEST_CASE("contexts materialize against their signatures") {
    FiniteAlgebra c2 = corpus::chain_lattice(2);
    PierceContext l01 = lattice_ctx(c2);
    CHECK(l01.base.n_witnesses == 1);
    REQUIRE(l01.decomposition_term.has_value());
    CHECK(to_string(*l01.decomposition_term) == "(meet (join x z1) (join y w1))");
    CHECK(!l01.short_term.has_value());

    PierceContext sem = semilattice_ctx(corpus::join_semilattice_cube(2));
    CHECK(!sem.decomposition_term.has_value());
    CHECK(!sem.trusted_pierce);

    FiniteAlgebra z6 = corpus::z_n_ring(6);
    PierceContext ring = ring_ctx(z6);
    REQUIRE(ring.short_term.has_value());
    CHECK(*ring.short_term == *ring.decomposition_term);
}

TEST_CASE("materialization validates the context") {
    corpus::ContextSpec spec = corpus::l01_context();
    spec.zeros = {"x"}; // not closed
    CHECK_THROWS_AS(corpus::materialize(spec, corpus::chain_lattice(2).sig), Error);

    corpus::ContextSpec ring = corpus::ring_context();
    CHECK_THROWS_AS(corpus::materialize(ring, corpus::chain_lattice(2).sig), SyntaxError);
}

TEST_CASE("registry lookups cover every listed entry") {
    for (const auto& e : corpus::list_entries()) {
        if (e.kind == "algebra") CHECK(corpus::find_algebra(e.key).has_value());
        if (e.kind == "hom") CHECK(corpus::find_hom(e.key).has_value());
        if (e.kind == "context") CHECK(corpus::find_context(e.key).has_value());
    }
    CHECK(!corpus::find_algebra("nonsense").has_value());
    CHECK(corpus::find_algebra("chain5").has_value()); // parametric
    CHECK(corpus::find_algebra("z12").has_value());
}

TEST_CASE("builders are deterministic down to the serialized bytes") {
    for (const char* key : {"z6", "m3", "g2", "lat2x2x2", "slcube3"}) {
        const std::string once = to_json(*corpus::find_algebra(key)).dump();
        const std::string twice = to_json(*corpus::find_algebra(key)).dump();
        CHECK(once == twice);
    }
    CHECK(to_json(corpus::alpha_hom()).dump() == to_json(corpus::alpha_hom()).dump());
    CHECK(to_json(corpus::l01_context()).dump() == to_json(corpus::l01_context()).dump());
}

TEST_CASE("every registry algebra validates") {
    for (const FiniteAlgebra& a : registry_algebras()) {
        CAPTURE(a.name);
        CHECK_NOTHROW(validate(a));
    }
}
