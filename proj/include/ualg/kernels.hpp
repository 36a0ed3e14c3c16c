#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ualg/algebra.hpp"
#include "ualg/central.hpp"
#include "ualg/exec.hpp"
#include "ualg/partition.hpp"
#include "ualg/term.hpp"

namespace ualg::kernels {

// Data-parallel inner loops. Each kernel exists twice: a serial reference
// implementation and an OpenMP variant returning identical results; the
// unsuffixed name dispatches on the Exec policy.

/// Least assignment code (mixed-radix over `vars`, first variable most
/// significant) where lhs and rhs evaluate differently.
std::optional<int64_t> identity_violation_serial(const FiniteAlgebra& alg, const Term& lhs,
                                                 const Term& rhs,
                                                 const std::vector<std::string>& vars);
std::optional<int64_t> identity_violation_omp(const FiniteAlgebra& alg, const Term& lhs,
                                              const Term& rhs,
                                              const std::vector<std::string>& vars);
std::optional<int64_t> identity_violation(const FiniteAlgebra& alg, const Term& lhs,
                                          const Term& rhs,
                                          const std::vector<std::string>& vars, Exec exec);

/// Least (op index, witness code) where p fails compatibility; the witness
/// code packs (argument tuple, position, replacement element).
std::optional<std::pair<int, int64_t>> incompatibility_serial(const FiniteAlgebra& alg,
                                                              const Partition& p);
std::optional<std::pair<int, int64_t>> incompatibility_omp(const FiniteAlgebra& alg,
                                                           const Partition& p);
std::optional<std::pair<int, int64_t>> incompatibility(const FiniteAlgebra& alg,
                                                       const Partition& p, Exec exec);

/// Deduplicated principal congruences cg(a,b) for a < b, sorted.
std::vector<Partition> principal_congruences_serial(const FiniteAlgebra& alg);
std::vector<Partition> principal_congruences_omp(const FiniteAlgebra& alg);
std::vector<Partition> principal_congruences(const FiniteAlgebra& alg, Exec exec);

/// Closure of base (congruences) plus Delta under pairwise congruence join.
std::vector<Partition> congruence_join_closure_serial(const FiniteAlgebra& alg,
                                                      std::vector<Partition> base);
std::vector<Partition> congruence_join_closure_omp(const FiniteAlgebra& alg,
                                                   std::vector<Partition> base);
std::vector<Partition> congruence_join_closure(const FiniteAlgebra& alg,
                                               std::vector<Partition> base, Exec exec);

/// All tuple pairs (e,f) passing the equational complementary-pair test,
/// in lexicographic (e,f) order.
std::vector<CentralPair> equational_pair_scan_serial(const FiniteAlgebra& alg,
                                                     const PierceContext& ctx);
std::vector<CentralPair> equational_pair_scan_omp(const FiniteAlgebra& alg,
                                                  const PierceContext& ctx);
std::vector<CentralPair> equational_pair_scan(const FiniteAlgebra& alg,
                                              const PierceContext& ctx, Exec exec);

} // namespace ualg::kernels
