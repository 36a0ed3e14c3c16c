#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ualg/algebra.hpp"
#include "ualg/congruence.hpp"
#include "ualg/term.hpp"

namespace ualg {

/// N-tuple of universe elements.
using Tuple = std::vector<int>;

/// Witness constants: closed terms 0_1..0_N and 1_1..1_N.
struct CentralContext {
    int n_witnesses = 1;
    std::vector<Term> zeros;
    std::vector<Term> ones;
};

/// CentralContext plus the decomposition term U(x,y,z1..zN,w1..wN) and the
/// optional short term u(x,y,z1..zN). trusted_pierce marks that the ambient
/// variety is declared a Pierce variety, enabling the equational route.
struct PierceContext {
    CentralContext base;
    std::optional<Term> decomposition_term;
    std::optional<Term> short_term;
    bool trusted_pierce = false;
};

Tuple eval_closed(const FiniteAlgebra& alg, const std::vector<Term>& terms);
Tuple zeros_of(const FiniteAlgebra& alg, const CentralContext& ctx);
Tuple ones_of(const FiniteAlgebra& alg, const CentralContext& ctx);

struct CentralPair {
    Tuple e;
    Tuple f;
};

/// Z(A) with its Boolean structure transported from the factor-congruence
/// lattice. Tables index into `elements` (lexicographically sorted).
struct CentralReport {
    std::string algebra;
    int n_witnesses = 1;
    std::vector<Tuple> elements;
    std::vector<CentralPair> pairs; // sorted by e
    int bottom = -1;                // index of 0-vector
    int top = -1;                   // index of 1-vector
    std::vector<std::vector<int>> meet;
    std::vector<std::vector<int>> join;
    std::vector<int> complement;
    std::vector<int> atoms;

    std::optional<int> index_of(const Tuple& e) const;
};

/// Definition-level test: some factor pair (theta,phi) has e = 0 (theta),
/// e = 1 (phi), f = 1 (theta), f = 0 (phi).
bool is_complementary_pair_oracle(const FiniteAlgebra& alg, const CentralContext& ctx,
                                  const Tuple& e, const Tuple& f,
                                  int max_size = default_max_size(),
                                  Exec exec = default_exec());

/// The five equation families of the decomposition-term characterization,
/// checked exhaustively. Requires the decomposition term.
bool is_complementary_pair_equational(const FiniteAlgebra& alg, const PierceContext& ctx,
                                      const Tuple& e, const Tuple& f);

/// Enumerates Z(A). Membership and pairing go through the oracle unless the
/// context is trusted_pierce with a decomposition term, in which case the
/// equational test is used and factor congruences come from Cg(0,e).
CentralReport central_elements(const FiniteAlgebra& alg, const PierceContext& ctx,
                               int max_size = default_max_size(),
                               Exec exec = default_exec());
CentralReport central_elements(const FiniteAlgebra& alg, const CentralContext& ctx,
                               int max_size = default_max_size(),
                               Exec exec = default_exec());

/// Unique f in Z(A) satisfying the two complement equation families of the
/// decomposition term. Throws NotCentral / NoComplementFound.
Tuple complement_general(const FiniteAlgebra& alg, const PierceContext& ctx, const Tuple& e,
                         int max_size = default_max_size(), Exec exec = default_exec());

/// f_i = u(1_i, 0_i, e); verified complementary afterwards.
Tuple complement_short(const FiniteAlgebra& alg, const PierceContext& ctx, const Tuple& e,
                       int max_size = default_max_size(), Exec exec = default_exec());

/// Cg(0,e); verified to form a factor pair with Cg(0,f) for the paired f.
Partition theta_zero_e(const FiniteAlgebra& alg, const PierceContext& ctx, const Tuple& e,
                       int max_size = default_max_size(), Exec exec = default_exec());

struct PreservationReport {
    bool preserved = true;
    std::vector<Tuple> central_witnesses;  // e with h(e) not central
    std::vector<CentralPair> pair_witnesses; // e<>f with images not complementary
};

PreservationReport hom_preserves_central(const Homomorphism& h, const PierceContext& ctx,
                                         int max_size = default_max_size(),
                                         Exec exec = default_exec());
PreservationReport hom_preserves_complementary(const Homomorphism& h, const PierceContext& ctx,
                                               int max_size = default_max_size(),
                                               Exec exec = default_exec());

} // namespace ualg
