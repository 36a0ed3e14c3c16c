#include "ualg/varieties.hpp"

#include <algorithm>
#include <set>

#include "ualg/decompose.hpp"
#include "ualg/errors.hpp"
#include "ualg/hom.hpp"

namespace ualg {

namespace {

std::string gen_names(const GeneratorSet& gens) {
    std::string s = "{";
    for (std::size_t i = 0; i < gens.algebras.size(); ++i) {
        if (i) s += ", ";
        s += gens.algebras[i].name;
    }
    return s + "}";
}

Verdict check_scheme(const GeneratorSet& gens, const Term& lhs, const Term& rhs,
                     const std::string& label, Exec exec) {
    if (gens.algebras.empty()) throw Error("empty generator set");
    auto ce = check_identity(gens.algebras, lhs, rhs, exec);
    Verdict v;
    v.holds = !ce.has_value();
    v.scope = "exhaustive over " + gen_names(gens) +
              "; identities persist under H, S and P, so they hold in the generated variety";
    if (ce)
        v.counterexample = Counterexample{gens.algebras[ce->algebra_index].name, ce->env,
                                          label + " fails"};
    return v;
}

std::map<std::string, Term> tuple_substitution(const std::string& prefix,
                                               const std::vector<Term>& values) {
    std::map<std::string, Term> s;
    for (std::size_t i = 0; i < values.size(); ++i)
        s[prefix + std::to_string(i + 1)] = values[i];
    return s;
}

} // namespace

Verdict verify_pierce(const GeneratorSet& gens, const PierceContext& ctx, Exec exec) {
    if (!ctx.decomposition_term) throw Error("context has no decomposition term");
    const Term& U = *ctx.decomposition_term;

    auto zero_sub = tuple_substitution("z", ctx.base.zeros);
    auto one_sub = tuple_substitution("w", ctx.base.ones);
    auto sub01 = zero_sub;
    sub01.insert(one_sub.begin(), one_sub.end());
    Verdict first =
        check_scheme(gens, substitute(U, sub01), Term::var("x"), "U(x,y,0,1)=x", exec);
    if (!first.holds) return first;

    auto sub10 = tuple_substitution("z", ctx.base.ones);
    auto w0 = tuple_substitution("w", ctx.base.zeros);
    sub10.insert(w0.begin(), w0.end());
    return check_scheme(gens, substitute(U, sub10), Term::var("y"), "U(x,y,1,0)=y", exec);
}

Verdict verify_short(const GeneratorSet& gens, const PierceContext& ctx, Exec exec) {
    if (!ctx.short_term) throw ShortTermMissing("context has no short decomposition term");
    const Term& u = *ctx.short_term;

    Verdict first = check_scheme(gens, substitute(u, tuple_substitution("z", ctx.base.zeros)),
                                 Term::var("x"), "u(x,y,0)=x", exec);
    if (!first.holds) return first;
    return check_scheme(gens, substitute(u, tuple_substitution("z", ctx.base.ones)),
                        Term::var("y"), "u(x,y,1)=y", exec);
}

Verdict verify_shell(const GeneratorSet& gens, const CentralContext& ctx, const ShellTerms& st,
                     Exec exec) {
    const int N = ctx.n_witnesses;
    if (static_cast<int>(st.f_terms.size()) != N || static_cast<int>(st.g_terms.size()) != N)
        throw Error("shell term count disagrees with n_witnesses");

    std::map<std::string, Term> y_to_zero = tuple_substitution("y", ctx.zeros);
    std::map<std::string, Term> y_to_one = tuple_substitution("y", ctx.ones);
    // x_j := constant, y_j := x_j, for the mirrored equations
    auto flipped = [&](const std::vector<Term>& consts) {
        std::map<std::string, Term> s = tuple_substitution("x", consts);
        for (int j = 1; j <= N; ++j)
            s["y" + std::to_string(j)] = Term::var("x" + std::to_string(j));
        return s;
    };

    for (int i = 0; i < N; ++i) {
        const Term& f = st.f_terms[static_cast<std::size_t>(i)];
        const Term& g = st.g_terms[static_cast<std::size_t>(i)];
        const Term zero_i = ctx.zeros[static_cast<std::size_t>(i)];
        const Term x_i = Term::var("x" + std::to_string(i + 1));
        const std::string tag = "[i=" + std::to_string(i + 1) + "] ";

        struct Eq {
            Term lhs;
            Term rhs;
            std::string label;
        };
        const Eq eqs[] = {
            {substitute(f, y_to_zero), zero_i, tag + "f(x,0)=0"},
            {substitute(f, flipped(ctx.zeros)), zero_i, tag + "f(0,x)=0"},
            {substitute(f, y_to_one), x_i, tag + "f(x,1)=x"},
            {substitute(f, flipped(ctx.ones)), x_i, tag + "f(1,x)=x"},
            {substitute(g, y_to_zero), x_i, tag + "g(x,0)=x"},
            {substitute(g, flipped(ctx.zeros)), x_i, tag + "g(0,x)=x"},
        };
        for (const Eq& eq : eqs) {
            Verdict v = check_scheme(gens, eq.lhs, eq.rhs, eq.label, exec);
            if (!v.holds) return v;
        }
    }
    Verdict v;
    v.holds = true;
    v.scope = "exhaustive over " + gen_names(gens) +
              "; identities persist under H, S and P, so they hold in the generated variety";
    return v;
}

Verdict verify_discriminator(const FiniteAlgebra& alg, const Term& t) {
    const std::vector<std::string> vars = {"x", "y", "z"};
    const CompiledTerm ct(alg, t, vars);
    Verdict v;
    v.scope = "exhaustive over all triples of " + alg.name;
    int binding[3];
    for (int a = 0; a < alg.size; ++a)
        for (int b = 0; b < alg.size; ++b)
            for (int c = 0; c < alg.size; ++c) {
                binding[0] = a;
                binding[1] = b;
                binding[2] = c;
                const int want = a == b ? c : a;
                if (ct.eval(alg, std::span<const int>(binding, 3)) != want) {
                    v.holds = false;
                    Environment env{{"x", a}, {"y", b}, {"z", c}};
                    v.counterexample = Counterexample{
                        alg.name, env, a == b ? "t(a,a,c)=c fails" : "t(a,b,c)=a fails"};
                    return v;
                }
            }
    v.holds = true;
    return v;
}

Verdict verify_zero_one(const std::vector<FiniteAlgebra>& algs, const CentralContext& ctx) {
    Verdict v;
    v.scope = "per-algebra check only; quasi-identities are not inherited from generators "
              "by the variety";
    for (const FiniteAlgebra& a : algs) {
        if (zeros_of(a, ctx) == ones_of(a, ctx) && a.size != 1) {
            v.holds = false;
            v.counterexample =
                Counterexample{a.name, {}, "0=1 in a nontrivial algebra"};
            return v;
        }
    }
    v.holds = true;
    return v;
}

Verdict check_permutability(const FiniteAlgebra& alg, int max_size, Exec exec) {
    const std::vector<Partition> cons = all_congruences(alg, max_size, exec);
    Verdict v;
    v.scope = "exhaustive over all " + std::to_string(cons.size()) + " congruence pairs of " +
              alg.name;
    for (std::size_t i = 0; i < cons.size(); ++i)
        for (std::size_t j = i + 1; j < cons.size(); ++j)
            if (!permute(cons[i], cons[j])) {
                v.holds = false;
                v.counterexample = Counterexample{
                    alg.name, {}, "congruences #" + std::to_string(i) + " and #" +
                                      std::to_string(j) + " do not permute"};
                return v;
            }
    v.holds = true;
    return v;
}

bool EvidenceReport::required_pass() const {
    return (!pierce_applicable || pierce_identities.holds) && stalks_ok && subalgebras_ok &&
           stability_ok;
}

EvidenceReport coextensivity_report(const GeneratorSet& gens, const PierceContext& ctx,
                                    const std::vector<Homomorphism>& homs, int max_size,
                                    Exec exec) {
    EvidenceReport r;
    r.suite = gens.name;
    for (const auto& a : gens.algebras) r.generators.push_back(a.name);
    r.scope_note =
        "evidence at corpus scale: listed algebras, their subalgebras from seeds of size <= 3 "
        "(algebras <= 10 elements), and the supplied homomorphisms only";

    r.pierce_applicable = ctx.decomposition_term.has_value();
    if (r.pierce_applicable) r.pierce_identities = verify_pierce(gens, ctx, exec);

    for (const FiniteAlgebra& a : gens.algebras) {
        AlgebraCheck c{a.name, true, ""};
        try {
            DecompositionCertificate cert = decompose(a, max_size, exec);
            std::vector<FiniteAlgebra> stalks = pierce_stalks(a, max_size, exec);
            if (stalks.size() != cert.factors.size()) {
                c.ok = false;
                c.detail = "stalk count disagrees with factor count";
            } else {
                for (std::size_t i = 0; i < stalks.size(); ++i)
                    if (!isomorphic(stalks[i], cert.factors[i])) {
                        c.ok = false;
                        c.detail = "stalk " + std::to_string(i) + " not isomorphic to its factor";
                        break;
                    }
                if (c.ok)
                    c.detail = std::to_string(cert.factors.size()) +
                               " indecomposable factor(s); stalks coincide";
            }
        } catch (const Error& e) {
            c.ok = false;
            c.detail = e.what();
        }
        if (!c.ok) r.stalks_ok = false;
        r.stalks_di.push_back(std::move(c));
    }

    for (const FiniteAlgebra& a : gens.algebras) {
        AlgebraCheck c{a.name, true, ""};
        if (a.size > 10) {
            c.detail = "skipped: above the subalgebra-enumeration cap of 10 elements";
        } else if (!is_directly_indecomposable(a, max_size, exec)) {
            c.detail = "directly decomposable; not subject to the subalgebra audit";
        } else {
            std::set<std::vector<int>> universes;
            std::vector<int> seed;
            for (int s1 = 0; s1 < a.size; ++s1)
                for (int s2 = s1; s2 < a.size; ++s2)
                    for (int s3 = s2; s3 < a.size; ++s3) {
                        seed = {s1, s2, s3};
                        universes.insert(subalgebra_generated(a, seed));
                    }
            universes.insert(subalgebra_generated(a, std::vector<int>{}));
            int audited = 0;
            for (const auto& u : universes) {
                if (u.size() < 2) continue;
                ++audited;
                FiniteAlgebra sub = induced_subalgebra(a, u, a.name + "_sub");
                if (!is_directly_indecomposable(sub, max_size, exec)) {
                    c.ok = false;
                    std::string elems;
                    for (int e : u) elems += (elems.empty() ? "" : ",") + std::to_string(e);
                    c.detail = "decomposable subalgebra on {" + elems + "}";
                    break;
                }
            }
            if (c.ok)
                c.detail = std::to_string(audited) +
                           " subalgebra(s) from seeds of size <= 3, all indecomposable";
        }
        if (!c.ok) r.subalgebras_ok = false;
        r.subalgebras_di.push_back(std::move(c));
    }

    for (const Homomorphism& h : homs) {
        HomAudit audit;
        audit.name = h.name.empty() ? h.source.name + "->" + h.target.name : h.name;
        PreservationReport pc = hom_preserves_central(h, ctx, max_size, exec);
        PreservationReport pp = hom_preserves_complementary(h, ctx, max_size, exec);
        audit.central_ok = pc.preserved;
        audit.complementary_ok = pp.preserved;
        audit.central_witnesses = pc.central_witnesses;
        audit.pair_witnesses = pp.pair_witnesses;
        if (!audit.complementary_ok || !audit.central_ok) r.stability_ok = false;
        r.stability.push_back(std::move(audit));
    }

    for (const FiniteAlgebra& a : gens.algebras) {
        AlgebraCheck c{a.name, true, ""};
        if (a.size > max_size) {
            c.detail = "skipped: above the size bound";
        } else {
            Verdict v = check_permutability(a, max_size, exec);
            c.ok = v.holds;
            c.detail = v.holds ? "congruences permute"
                               : v.counterexample->note;
        }
        r.permutability.push_back(std::move(c));
    }

    for (std::size_t i = 0; i < gens.algebras.size(); ++i)
        for (std::size_t j = i; j < gens.algebras.size(); ++j) {
            const int64_t prod =
                static_cast<int64_t>(gens.algebras[i].size) * gens.algebras[j].size;
            if (prod > max_size) continue;
            FhpSample s;
            s.a = gens.algebras[i].name;
            s.b = gens.algebras[j].name;
            auto bad = check_fhp_pair(gens.algebras[i], gens.algebras[j], max_size, exec);
            s.product_ok = !bad.has_value();
            s.failure = bad;
            r.fhp_samples.push_back(std::move(s));
        }

    return r;
}

} // namespace ualg
