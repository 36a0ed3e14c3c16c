#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ualg/algebra.hpp"
#include "ualg/central.hpp"
#include "ualg/exec.hpp"
#include "ualg/term.hpp"

namespace ualg {

/// Finite generator list; identities verified here hold in the whole
/// generated variety (identities persist under H, S and P).
struct GeneratorSet {
    std::string name;
    std::vector<FiniteAlgebra> algebras;
};

/// Pseudo-multiplication f_i and pseudo-addition g_i terms over
/// x1..xN, y1..yN.
struct ShellTerms {
    std::vector<Term> f_terms;
    std::vector<Term> g_terms;
};

struct Counterexample {
    std::string algebra;
    Environment env;
    std::string note;
};

/// A verdict always carries its exhaustion scope or a reproducible witness.
struct Verdict {
    bool holds = false;
    std::string scope;
    std::optional<Counterexample> counterexample;
};

/// U(x,y,0,1)=x and U(x,y,1,0)=y on every generator.
Verdict verify_pierce(const GeneratorSet& gens, const PierceContext& ctx,
                      Exec exec = default_exec());

/// u(x,y,0)=x and u(x,y,1)=y on every generator.
Verdict verify_short(const GeneratorSet& gens, const PierceContext& ctx,
                     Exec exec = default_exec());

/// The three shell equation families for every i on every generator.
Verdict verify_shell(const GeneratorSet& gens, const CentralContext& ctx,
                     const ShellTerms& st, Exec exec = default_exec());

/// t(a,a,c)=c and t(a,b,c)=a for a != b, exhaustively; t is a term in the
/// variables x,y,z.
Verdict verify_discriminator(const FiniteAlgebra& alg, const Term& t);

/// Per-algebra quasi-identity 0=1 -> x=y: if the witness constants collapse,
/// the algebra must be trivial.
Verdict verify_zero_one(const std::vector<FiniteAlgebra>& algs, const CentralContext& ctx);

/// All congruence pairs permute.
Verdict check_permutability(const FiniteAlgebra& alg, int max_size = default_max_size(),
                            Exec exec = default_exec());

struct HomAudit {
    std::string name;
    bool central_ok = true;
    bool complementary_ok = true;
    std::vector<Tuple> central_witnesses;
    std::vector<CentralPair> pair_witnesses;
};

struct AlgebraCheck {
    std::string algebra;
    bool ok = true;
    std::string detail;
};

struct FhpSample {
    std::string a;
    std::string b;
    bool product_ok = true;
    std::optional<Partition> failure;
};

/// Aggregated desk-scale evidence; every entry records its exhaustion scope.
/// permutability and fhp_samples are informational, the rest gate
/// required_pass().
struct EvidenceReport {
    std::string suite;
    std::vector<std::string> generators;
    std::string scope_note;

    bool pierce_applicable = false;
    Verdict pierce_identities;

    bool stalks_ok = true;
    std::vector<AlgebraCheck> stalks_di;

    bool subalgebras_ok = true;
    std::vector<AlgebraCheck> subalgebras_di;

    bool stability_ok = true;
    std::vector<HomAudit> stability;

    std::vector<AlgebraCheck> permutability; // informational
    std::vector<FhpSample> fhp_samples;      // informational

    bool required_pass() const;
};

EvidenceReport coextensivity_report(const GeneratorSet& gens, const PierceContext& ctx,
                                    const std::vector<Homomorphism>& homs,
                                    int max_size = default_max_size(),
                                    Exec exec = default_exec());

} // namespace ualg
