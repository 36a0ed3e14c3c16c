#pragma once

#include <optional>
#include <vector>

#include "ualg/algebra.hpp"

namespace ualg {

/// Exhaustive check that h.map commutes with every operation table.
bool is_homomorphism(const Homomorphism& h);

/// second ∘ first; algebras must line up.
Homomorphism compose(const Homomorphism& second, const Homomorphism& first);

/// Lexicographically least bijective homomorphism a -> b, if any
/// (backtracking over constant-respecting candidate maps).
std::optional<std::vector<int>> find_isomorphism(const FiniteAlgebra& a,
                                                 const FiniteAlgebra& b);
bool isomorphic(const FiniteAlgebra& a, const FiniteAlgebra& b);

/// All homomorphisms a -> b in lexicographic map order.
std::vector<Homomorphism> enumerate_homomorphisms(const FiniteAlgebra& a,
                                                  const FiniteAlgebra& b);

} // namespace ualg
