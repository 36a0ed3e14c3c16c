#pragma once

#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ualg/algebra.hpp"
#include "ualg/exec.hpp"
#include "ualg/hom.hpp"
#include "ualg/partition.hpp"

namespace ualg {

/// True iff p is compatible with every operation table (exhaustive).
bool is_congruence(const FiniteAlgebra& a, const Partition& p, Exec exec = default_exec());

/// Least congruence containing the pairs: union-find seeded with the pairs,
/// then a worklist closing each merged pair under all one-position
/// translations of the basic operations.
Partition cg(const FiniteAlgebra& a, std::span<const std::pair<int, int>> pairs);
Partition cg(const FiniteAlgebra& a, std::initializer_list<std::pair<int, int>> pairs);

/// The full congruence lattice: principal congruences closed under pairwise
/// join. Sorted by (block count descending, parent array ascending), so
/// Delta comes first and Nabla last. Throws SizeBoundExceeded above max_size.
std::vector<Partition> all_congruences(const FiniteAlgebra& a,
                                       int max_size = default_max_size(),
                                       Exec exec = default_exec());

/// Congruence join: cg over the union of generator pairs.
Partition join(const FiniteAlgebra& a, const Partition& p, const Partition& q);

/// Blocks are preimages of target elements. Throws NotAHomomorphism.
Partition kernel(const Homomorphism& h);

/// Complementary pair of factor congruences: theta ∧ theta* = Delta and
/// theta ∘ theta* = theta* ∘ theta = Nabla.
struct FactorPair {
    Partition theta;
    Partition theta_star;
};

/// All ordered factor pairs from Con(A) x Con(A), including the trivial
/// (Delta,Nabla) and (Nabla,Delta).
std::vector<FactorPair> factor_pairs(const FiniteAlgebra& a,
                                     int max_size = default_max_size(),
                                     Exec exec = default_exec());

/// Verifies the natural map a -> (a/theta, a/theta*) is a bijective
/// homomorphism onto the product of the two quotients.
bool factor_pair_valid(const FiniteAlgebra& a, const Partition& theta,
                       const Partition& theta_star);

/// Fraser-Horn check on A x B: every congruence of the product must equal
/// the product of its projection images. Returns the first failing
/// congruence, or nullopt when the property holds.
std::optional<Partition> check_fhp_pair(const FiniteAlgebra& a, const FiniteAlgebra& b,
                                        int max_size = default_max_size(),
                                        Exec exec = default_exec());

struct PushoutResult {
    FiniteAlgebra source_quotient; // A / Cg_A(pairs)
    FiniteAlgebra target_quotient; // B / Cg_B(f(pairs))
    Homomorphism mediating;        // source_quotient -> target_quotient
};

/// Pushout of the canonical quotient along f; the mediating square is
/// verified to commute.
PushoutResult pushout_quotient(const Homomorphism& f,
                               std::span<const std::pair<int, int>> pairs);

/// Quotient of A x B by the join of the projection kernels is trivial.
bool codisjointness_check(const FiniteAlgebra& a, const FiniteAlgebra& b);

} // namespace ualg
