#pragma once

#include <cstdint>
#include <vector>

#include "ualg/algebra.hpp"
#include "ualg/congruence.hpp"
#include "ualg/exec.hpp"

namespace ualg {

/// A verified direct-product representation: the natural map
/// a -> (a/theta_1, ..., a/theta_k) is a bijective homomorphism onto the
/// product of the factors, and every factor is directly indecomposable.
/// The one-element algebra yields the empty factor list.
struct DecompositionCertificate {
    std::vector<FiniteAlgebra> factors;
    std::vector<Partition> factor_congruences;
    std::vector<int64_t> natural_map; // a -> mixed-radix code over factor sizes
};

/// |A| > 1 and only the two trivial factor pairs exist.
bool is_directly_indecomposable(const FiniteAlgebra& a,
                                int max_size = default_max_size(),
                                Exec exec = default_exec());

/// Decomposition along the coatoms of the factor-congruence Boolean lattice
/// (complements of its atoms). Throws NonBooleanFC when the factor
/// congruences do not form a Boolean lattice.
DecompositionCertificate decompose(const FiniteAlgebra& a,
                                   int max_size = default_max_size(),
                                   Exec exec = default_exec());

/// Stalks A / U(m) for the maximal ideals m of the factor-congruence Boolean
/// lattice; in the finite case m = {theta : alpha not<= theta} for an atom
/// alpha and U(m) is the union of its members.
std::vector<FiniteAlgebra> pierce_stalks(const FiniteAlgebra& a,
                                         int max_size = default_max_size(),
                                         Exec exec = default_exec());

} // namespace ualg
