// Acceptance suite: every criterion runs standalone, prints one pass/fail
// line, and enforces its runtime budget.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <chrono>
#include <cstdio>

#include "test_helpers.hpp"
#include "ualg/decompose.hpp"
#include "ualg/hom.hpp"
#include "ualg/varieties.hpp"

using namespace ualg;
using namespace ualg::testing;

namespace {

using Clock = std::chrono::steady_clock;

struct Timer {
    Clock::time_point start = Clock::now();
    double secs() const {
        return std::chrono::duration<double>(Clock::now() - start).count();
    }
};

void line(int id, const char* name, bool pass, double secs) {
    std::printf("[criterion %02d] %-38s %s  (%.2fs)\n", id, name, pass ? "PASS" : "FAIL", secs);
    std::fflush(stdout);
}

bool same_factors_up_to_iso(std::vector<FiniteAlgebra> xs, std::vector<FiniteAlgebra> ys) {
    if (xs.size() != ys.size()) return false;
    for (const FiniteAlgebra& x : xs) {
        auto it = std::find_if(ys.begin(), ys.end(),
                               [&](const FiniteAlgebra& y) { return isomorphic(x, y); });
        if (it == ys.end()) return false;
        ys.erase(it);
    }
    return true;
}

// Same-signature corpus families used by the product-shaped criteria.
std::vector<std::vector<FiniteAlgebra>> corpus_families() {
    std::vector<std::vector<FiniteAlgebra>> fams;
    fams.push_back({});
    for (const char* k : {"chain2", "chain3", "chain4", "lat2x2", "lat2x3", "lat2x2x2", "m3"})
        fams.back().push_back(*corpus::find_algebra(k));
    fams.push_back({});
    for (const char* k : {"slcube1", "slcube2", "slcube3"})
        fams.back().push_back(*corpus::find_algebra(k));
    fams.push_back({});
    for (const char* k : {"z2", "z3", "z4", "z6"})
        fams.back().push_back(*corpus::find_algebra(k));
    fams.push_back({});
    for (const char* k : {"ck2", "ck3"}) fams.back().push_back(*corpus::find_algebra(k));
    fams.push_back({*corpus::find_algebra("disc2")});
    fams.push_back({*corpus::find_algebra("g2")});
    return fams;
}

} // namespace

TEST_CASE("criterion 01: semilattice counterexample") {
    Timer t;
    Homomorphism alpha = corpus::alpha_hom();
    PierceContext ctx = semilattice_ctx(alpha.source);
    PreservationReport pc = hom_preserves_central(alpha, ctx);
    PreservationReport pp = hom_preserves_complementary(alpha, ctx);
    const bool witness_ok = !pp.pair_witnesses.empty() &&
                            pp.pair_witnesses.front().e == Tuple{1} &&
                            pp.pair_witnesses.front().f == Tuple{2};
    const bool pass = pc.preserved && !pp.preserved && witness_ok && t.secs() < 1.0;
    line(1, "semilattice counterexample (alpha)", pass, t.secs());
    CHECK(pc.preserved);
    CHECK(!pp.preserved);
    CHECK(witness_ok);
    CHECK(t.secs() < 1.0);
}

TEST_CASE("criterion 02: bounded-lattice counterexample") {
    Timer t;
    Homomorphism inc = corpus::inclusion_c_into_d();
    PierceContext ctx = lattice_ctx(inc.source);
    PreservationReport pc = hom_preserves_central(inc, ctx);
    CentralReport zc = central_elements(inc.source, ctx);
    CentralReport zd = central_elements(inc.target, ctx);
    const bool pass =
        !pc.preserved && zc.elements.size() == 4 && zd.elements.size() == 2 && t.secs() < 1.0;
    line(2, "bounded-lattice counterexample (C in D)", pass, t.secs());
    CHECK(!pc.preserved);
    CHECK(zc.elements.size() == 4);
    CHECK(zd.elements.size() == 2);
    CHECK(t.secs() < 1.0);
}

TEST_CASE("criterion 03: Pierce identities for bounded distributive lattices") {
    Timer t;
    FiniteAlgebra c2 = corpus::chain_lattice(2);
    GeneratorSet gens{"l01", {c2}};
    Verdict v = verify_pierce(gens, lattice_ctx(c2));
    const bool pass = v.holds && t.secs() < 1.0;
    line(3, "Pierce identities on the 2-chain", pass, t.secs());
    CHECK(v.holds);
    CHECK(t.secs() < 1.0);
}

TEST_CASE("criterion 04: oracle and equational tests agree on the Pierce corpus") {
    Timer t;
    int disagreements = 0;
    for (auto& [a, ctx] : pierce_corpus_le8()) {
        REQUIRE(a.size <= 8);
        const auto tuples = tuples_over(a.size, ctx.base.n_witnesses);
        for (const Tuple& e : tuples)
            for (const Tuple& f : tuples) {
                const bool oracle = is_complementary_pair_oracle(a, ctx.base, e, f);
                const bool equational = is_complementary_pair_equational(a, ctx, e, f);
                if (oracle != equational) ++disagreements;
            }
    }
    const bool pass = disagreements == 0 && t.secs() < 60.0;
    line(4, "oracle/equational equivalence", pass, t.secs());
    CHECK(disagreements == 0);
    CHECK(t.secs() < 60.0);
}

TEST_CASE("criterion 05: theta_{0,e} = Cg(0,e) with a verified natural map") {
    Timer t;
    int failures = 0;
    for (auto& [a, ctx] : pierce_corpus_le8()) {
        const Tuple zeros = zeros_of(a, ctx.base);
        CentralReport r = central_elements(a, ctx);
        for (const CentralPair& p : r.pairs) {
            std::vector<std::pair<int, int>> ge, gf;
            for (int i = 0; i < ctx.base.n_witnesses; ++i) {
                ge.emplace_back(zeros[static_cast<std::size_t>(i)],
                                p.e[static_cast<std::size_t>(i)]);
                gf.emplace_back(zeros[static_cast<std::size_t>(i)],
                                p.f[static_cast<std::size_t>(i)]);
            }
            Partition theta = cg(a, ge);
            Partition theta_star = cg(a, gf);
            const bool pair_ok = meet(theta, theta_star).is_identity() &&
                                 compose(theta, theta_star).is_universal() &&
                                 compose(theta_star, theta).is_universal() &&
                                 factor_pair_valid(a, theta, theta_star);
            if (!pair_ok) ++failures;
        }
    }
    const bool pass = failures == 0 && t.secs() < 60.0;
    line(5, "Cg(0,e) factor pairs with bijective map", pass, t.secs());
    CHECK(failures == 0);
    CHECK(t.secs() < 60.0);
}

TEST_CASE("criterion 06: decomposition certificates across the corpus") {
    Timer t;
    bool all_valid = true;
    for (const FiniteAlgebra& a : registry_algebras()) {
        REQUIRE(a.size <= 12);
        DecompositionCertificate cert = decompose(a);
        int64_t total = 1;
        for (const auto& f : cert.factors) total *= f.size;
        bool ok = total == a.size;
        if (!cert.factors.empty()) {
            ProductResult prod = direct_product(cert.factors);
            std::vector<char> seen(static_cast<std::size_t>(prod.product.size), 0);
            Homomorphism nat{a, prod.product, {}, "nat"};
            for (int64_t code : cert.natural_map) {
                if (seen[static_cast<std::size_t>(code)]) ok = false;
                seen[static_cast<std::size_t>(code)] = 1;
                nat.map.push_back(static_cast<int>(code));
            }
            ok = ok && is_homomorphism(nat);
        }
        CHECK(ok);
        all_valid = all_valid && ok;
    }

    DecompositionCertificate z6 = decompose(corpus::z_n_ring(6));
    std::vector<int> sizes;
    for (const auto& f : z6.factors) sizes.push_back(f.size);
    std::sort(sizes.begin(), sizes.end());
    const bool z6_ok = sizes == std::vector<int>{2, 3};

    DecompositionCertificate cube = decompose(*corpus::find_algebra("lat2x2x2"));
    bool cube_ok = cube.factors.size() == 3;
    for (const auto& f : cube.factors) cube_ok = cube_ok && isomorphic(f, corpus::chain_lattice(2));

    DecompositionCertificate m3 = decompose(corpus::m3_lattice());
    const bool m3_ok = m3.factors.size() == 1 && isomorphic(m3.factors[0], corpus::m3_lattice());

    const bool pass = all_valid && z6_ok && cube_ok && m3_ok && t.secs() < 30.0;
    line(6, "decomposition certificates", pass, t.secs());
    CHECK(z6_ok);
    CHECK(cube_ok);
    CHECK(m3_ok);
    CHECK(t.secs() < 30.0);
}

TEST_CASE("criterion 07: Pierce stalks coincide with decomposition factors") {
    Timer t;
    bool all_match = true;
    for (const FiniteAlgebra& a : registry_algebras()) {
        const bool match = same_factors_up_to_iso(pierce_stalks(a), decompose(a).factors);
        CHECK(match);
        all_match = all_match && match;
    }
    line(7, "stalk/factor coincidence", all_match, t.secs());
}

TEST_CASE("criterion 08: Z(AxB) is the product of Z(A) and Z(B)") {
    Timer t;
    bool all_ok = true;
    for (const auto& family : corpus_families()) {
        for (std::size_t i = 0; i < family.size(); ++i)
            for (std::size_t j = i; j < family.size(); ++j) {
                const FiniteAlgebra& a = family[i];
                const FiniteAlgebra& b = family[j];
                if (a.size * b.size > 16) continue;
                ProductResult prod = direct_product({a, b});
                PierceContext ctx = constants_ctx(prod.product);
                CentralReport rp = central_elements(prod.product, ctx, 16);
                CentralReport ra = central_elements(a, constants_ctx(a), 16);
                CentralReport rb = central_elements(b, constants_ctx(b), 16);

                bool ok = rp.elements.size() == ra.elements.size() * rb.elements.size();
                // membership is coordinatewise
                for (int e = 0; e < prod.product.size && ok; ++e) {
                    const bool in_p = rp.index_of({e}).has_value();
                    const bool coords =
                        ra.index_of({prod.projections[0].map[static_cast<std::size_t>(e)]})
                            .has_value() &&
                        rb.index_of({prod.projections[1].map[static_cast<std::size_t>(e)]})
                            .has_value();
                    ok = in_p == coords;
                }
                // the coordinate bijection is a Boolean-algebra isomorphism
                auto split = [&](int idx) {
                    const int e = rp.elements[static_cast<std::size_t>(idx)][0];
                    return std::pair<int, int>(
                        *ra.index_of({prod.projections[0].map[static_cast<std::size_t>(e)]}),
                        *rb.index_of({prod.projections[1].map[static_cast<std::size_t>(e)]}));
                };
                const int k = static_cast<int>(rp.elements.size());
                for (int x = 0; x < k && ok; ++x) {
                    auto [xa, xb] = split(x);
                    auto [ca, cb] = split(rp.complement[static_cast<std::size_t>(x)]);
                    ok = ca == ra.complement[static_cast<std::size_t>(xa)] &&
                         cb == rb.complement[static_cast<std::size_t>(xb)];
                    for (int y = 0; y < k && ok; ++y) {
                        auto [ya, yb] = split(y);
                        auto [ma, mb] =
                            split(rp.meet[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]);
                        auto [ja, jb] =
                            split(rp.join[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]);
                        ok = ma == ra.meet[static_cast<std::size_t>(xa)][static_cast<std::size_t>(ya)] &&
                             mb == rb.meet[static_cast<std::size_t>(xb)][static_cast<std::size_t>(yb)] &&
                             ja == ra.join[static_cast<std::size_t>(xa)][static_cast<std::size_t>(ya)] &&
                             jb == rb.join[static_cast<std::size_t>(xb)][static_cast<std::size_t>(yb)];
                    }
                }
                CAPTURE(a.name);
                CAPTURE(b.name);
                CHECK(ok);
                all_ok = all_ok && ok;
            }
    }
    line(8, "Z(AxB) coordinatewise", all_ok, t.secs());
}

TEST_CASE("criterion 09: Fraser-Horn property for the named product pairs") {
    Timer t;
    const bool lattice_ok = !check_fhp_pair(corpus::chain_lattice(2), corpus::chain_lattice(2))
                                 .has_value();
    const bool ring_ok = !check_fhp_pair(corpus::z_n_ring(2), corpus::z_n_ring(3)).has_value();
    line(9, "FHP on chain2 x chain2 and Z2 x Z3", lattice_ok && ring_ok, t.secs());
    CHECK(lattice_ok);
    CHECK(ring_ok);
}

TEST_CASE("criterion 10: products are codisjoint across the corpus") {
    Timer t;
    bool all_ok = true;
    for (const auto& family : corpus_families())
        for (const FiniteAlgebra& a : family)
            for (const FiniteAlgebra& b : family) {
                if (a.size * b.size > 16) continue;
                const bool ok = codisjointness_check(a, b);
                CAPTURE(a.name);
                CAPTURE(b.name);
                CHECK(ok);
                all_ok = all_ok && ok;
            }
    line(10, "codisjointness of corpus products", all_ok, t.secs());
}

TEST_CASE("criterion 11: congruence closure matches the lattice oracle") {
    Timer t;
    int failures = 0;
    for (const FiniteAlgebra& a : registry_algebras()) {
        if (a.size > 8) continue;
        auto cons = all_congruences(a);
        for (int x = 0; x < a.size; ++x)
            for (int y = x + 1; y < a.size; ++y) {
                Partition expected = Partition::universal(a.size);
                for (const Partition& c : cons)
                    if (c.same(x, y)) expected = meet(expected, c);
                if (!(cg(a, {{x, y}}) == expected)) ++failures;
            }
    }
    const bool pass = failures == 0 && t.secs() < 60.0;
    line(11, "cg vs intersection oracle", pass, t.secs());
    CHECK(failures == 0);
    CHECK(t.secs() < 60.0);
}

TEST_CASE("criterion 12: evidence reports single out the known failures") {
    Timer t;

    // L01 corpus with every homomorphism between its members: all-pass
    GeneratorSet l01{"l01",
                     {*corpus::find_algebra("chain2"), *corpus::find_algebra("lat2x2"),
                      *corpus::find_algebra("lat2x2x2"), *corpus::find_algebra("chain3")}};
    std::vector<Homomorphism> homs;
    for (const auto& a : l01.algebras)
        for (const auto& b : l01.algebras)
            for (auto& h : enumerate_homomorphisms(a, b)) homs.push_back(std::move(h));
    EvidenceReport rl = coextensivity_report(l01, lattice_ctx(l01.algebras[0]), homs, 16);
    const bool l01_ok = rl.required_pass() && rl.pierce_applicable &&
                        rl.pierce_identities.holds && homs.size() > 50;

    // semilattice corpus with alpha: only stability fails, with the alpha witness
    GeneratorSet sem{"semilattice",
                     {*corpus::find_algebra("slcube1"), *corpus::find_algebra("slcube2"),
                      *corpus::find_algebra("slcube3")}};
    EvidenceReport rs = coextensivity_report(sem, semilattice_ctx(sem.algebras[0]),
                                             {corpus::alpha_hom()}, 16);
    const bool sem_ok = !rs.required_pass() && !rs.pierce_applicable && rs.stalks_ok &&
                        rs.subalgebras_ok && !rs.stability_ok && rs.stability.size() == 1 &&
                        rs.stability[0].central_ok && !rs.stability[0].complementary_ok &&
                        !rs.stability[0].pair_witnesses.empty() &&
                        rs.stability[0].pair_witnesses.front().e == Tuple{1} &&
                        rs.stability[0].pair_witnesses.front().f == Tuple{2};

    // bounded-lattice corpus with the inclusion: central preservation and the
    // subalgebra audit fail, both through the C <= D witness
    GeneratorSet lat{"bounded-lattice",
                     {*corpus::find_algebra("lat2x2"), *corpus::find_algebra("m3")}};
    EvidenceReport rb = coextensivity_report(lat, lattice_ctx(lat.algebras[0]),
                                             {corpus::inclusion_c_into_d()}, 16);
    bool sub_witness = false;
    for (const auto& c : rb.subalgebras_di)
        sub_witness = sub_witness ||
                      (!c.ok && c.detail.find("0,1,2,4") != std::string::npos);
    const bool lat_ok = !rb.required_pass() && rb.pierce_identities.holds && rb.stalks_ok &&
                        !rb.subalgebras_ok && sub_witness && !rb.stability_ok &&
                        !rb.stability[0].central_ok &&
                        !rb.stability[0].central_witnesses.empty() &&
                        rb.stability[0].central_witnesses.front() == Tuple{1};

    const bool pass = l01_ok && sem_ok && lat_ok;
    line(12, "coextensivity evidence reports", pass, t.secs());
    CHECK(l01_ok);
    CHECK(sem_ok);
    CHECK(lat_ok);
}
