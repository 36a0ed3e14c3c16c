#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ualg/algebra.hpp"
#include "ualg/central.hpp"

namespace ualg::corpus {

/// Bounded distributive lattice on the k-chain 0 < 1 < ... < k-1,
/// signature (join, meet, 0, 1).
FiniteAlgebra chain_lattice(int k);

/// The k-chain expanded with implication: x=>y is 1 (top) when x <= y,
/// else 0.
FiniteAlgebra c_k_implication(int k);

/// Truncated G_k on C_k x C_k: the lattice/implication reduct plus f_n for
/// 2 <= n <= max_arity, where f_n is constantly 1 for n != k and f_k is 0
/// exactly on pairwise-distinct argument tuples. max_arity <= 0 means k.
FiniteAlgebra g_k(int k, int max_arity = 0);

/// D = {0, a, b, c, 1} with {a,b,c} pairwise incomparable, element order
/// [0, a, b, c, 1].
FiniteAlgebra m3_lattice();

/// Bounded join semilattice 2^n, signature (join, 0, 1).
FiniteAlgebra join_semilattice_cube(int n);

/// Commutative ring with unit on Z_n, signature (add, mul, neg, 0, 1).
FiniteAlgebra z_n_ring(int n);

/// Two-element algebra with a ternary discriminator symbol t plus 0, 1.
FiniteAlgebra discriminator_algebra(int k);

/// 2^2 -> 2^3 bounded-semilattice homomorphism that preserves central
/// elements but not complementary pairs.
Homomorphism alpha_hom();

/// Bounded-lattice embedding of 2x2 into m3 (atoms to a and b).
Homomorphism inclusion_c_into_d();

/// Raw context as stored in JSON; terms are strings until materialized
/// against a signature.
struct ContextSpec {
    int n_witnesses = 1;
    std::vector<std::string> zeros;
    std::vector<std::string> ones;
    std::optional<std::string> decomposition_term;
    std::optional<std::string> short_term;
    bool trusted_pierce = false;
};

PierceContext materialize(const ContextSpec& spec, const Signature& sig);

/// N=1, constants (0)/(1), U = (meet (join x z1) (join y w1)), trusted.
ContextSpec l01_context();
/// Constants only; bounded join semilattices carry no decomposition term.
ContextSpec semilattice_context();
/// N=1, U = u = (add x (mul z1 (add y (neg x)))), trusted.
ContextSpec ring_context();

struct Entry {
    std::string key;
    std::string kind; // "algebra" | "hom" | "context"
    std::string summary;
};

/// Registry of every named corpus artifact. Keys with a numeric suffix
/// (chainK, ckK, slcubeK, zK, gK, discK) are parametric.
std::vector<Entry> list_entries();
std::optional<FiniteAlgebra> find_algebra(const std::string& key);
std::optional<Homomorphism> find_hom(const std::string& key);
std::optional<ContextSpec> find_context(const std::string& key);

} // namespace ualg::corpus
