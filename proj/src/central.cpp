#include "ualg/central.hpp"

#include <algorithm>
#include <map>

#include "ualg/errors.hpp"
#include "ualg/kernels.hpp"

namespace ualg {

Tuple eval_closed(const FiniteAlgebra& alg, const std::vector<Term>& terms) {
    Tuple out;
    out.reserve(terms.size());
    const Environment empty;
    for (const Term& t : terms) out.push_back(eval_term(alg, t, empty));
    return out;
}

Tuple zeros_of(const FiniteAlgebra& alg, const CentralContext& ctx) {
    if (static_cast<int>(ctx.zeros.size()) != ctx.n_witnesses)
        throw Error("context zeros count disagrees with n_witnesses");
    return eval_closed(alg, ctx.zeros);
}

Tuple ones_of(const FiniteAlgebra& alg, const CentralContext& ctx) {
    if (static_cast<int>(ctx.ones.size()) != ctx.n_witnesses)
        throw Error("context ones count disagrees with n_witnesses");
    return eval_closed(alg, ctx.ones);
}

std::optional<int> CentralReport::index_of(const Tuple& e) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), e);
    if (it == elements.end() || *it != e) return std::nullopt;
    return static_cast<int>(it - elements.begin());
}

namespace {

bool tuple_congruent(const Partition& p, const Tuple& a, const Tuple& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!p.same(a[i], b[i])) return false;
    return true;
}

std::vector<Tuple> all_tuples(int n, int width) {
    const int64_t total = pow_size(n, width);
    if (total > 1'000'000) throw SizeBoundExceeded("tuple space too large");
    std::vector<int64_t> radix(static_cast<std::size_t>(width), n);
    std::vector<Tuple> out;
    out.reserve(static_cast<std::size_t>(total));
    for (int64_t c = 0; c < total; ++c) out.push_back(unpack_tuple(c, radix));
    return out;
}

const char* kVarX = "x";
const char* kVarY = "y";

std::string zvar(int i) { return "z" + std::to_string(i + 1); }
std::string wvar(int i) { return "w" + std::to_string(i + 1); }

// Environment for U(x, y, z, w); z/w slots are optional.
Environment u_env(int x, int y, const Tuple* z, const Tuple* w) {
    Environment env;
    env[kVarX] = x;
    env[kVarY] = y;
    if (z)
        for (std::size_t i = 0; i < z->size(); ++i) env[zvar(static_cast<int>(i))] = (*z)[i];
    if (w)
        for (std::size_t i = 0; i < w->size(); ++i) env[wvar(static_cast<int>(i))] = (*w)[i];
    return env;
}

const Term& decomposition_term_of(const PierceContext& ctx) {
    if (!ctx.decomposition_term)
        throw Error("context has no decomposition term");
    return *ctx.decomposition_term;
}

// Pairing of Z(A) collected from one of the two routes, with the factor
// congruence attached to every central element.
struct Pairing {
    std::vector<Tuple> elements;
    std::map<Tuple, Tuple> partner;
    std::map<Tuple, Partition> theta_of;
};

Pairing oracle_pairing(const FiniteAlgebra& alg, const CentralContext& ctx, int max_size,
                       Exec exec) {
    const Tuple zeros = zeros_of(alg, ctx);
    const Tuple ones = ones_of(alg, ctx);
    const std::vector<FactorPair> fps = factor_pairs(alg, max_size, exec);
    const std::vector<Tuple> tuples = all_tuples(alg.size, ctx.n_witnesses);

    Pairing out;
    for (const FactorPair& fp : fps) {
        std::vector<Tuple> es, fs;
        for (const Tuple& t : tuples) {
            if (tuple_congruent(fp.theta, t, zeros) && tuple_congruent(fp.theta_star, t, ones))
                es.push_back(t);
            if (tuple_congruent(fp.theta, t, ones) && tuple_congruent(fp.theta_star, t, zeros))
                fs.push_back(t);
        }
        for (const Tuple& e : es) {
            auto [it, fresh] = out.theta_of.emplace(e, fp.theta);
            if (!fresh && !(it->second == fp.theta))
                throw NonBooleanFC("central element with two factor congruences");
            for (const Tuple& f : fs) {
                auto [pit, pfresh] = out.partner.emplace(e, f);
                if (!pfresh && pit->second != f)
                    throw NonBooleanFC("central element with two complements");
            }
        }
    }
    for (const auto& [e, f] : out.partner) out.elements.push_back(e);
    return out;
}

Pairing equational_pairing(const FiniteAlgebra& alg, const PierceContext& ctx, int max_size,
                           Exec exec) {
    (void)max_size;
    const Tuple zeros = zeros_of(alg, ctx.base);
    Pairing out;
    for (const CentralPair& p : kernels::equational_pair_scan(alg, ctx, exec)) {
        auto [it, fresh] = out.partner.emplace(p.e, p.f);
        if (!fresh && it->second != p.f)
            throw NonBooleanFC("central element with two complements (equational)");
    }
    for (const auto& [e, f] : out.partner) {
        std::vector<std::pair<int, int>> gens;
        for (int i = 0; i < ctx.base.n_witnesses; ++i) gens.emplace_back(zeros[i], e[i]);
        out.theta_of.emplace(e, cg(alg, gens));
        out.elements.push_back(e);
    }
    return out;
}

void verify_boolean_tables(const CentralReport& r) {
    const int k = static_cast<int>(r.elements.size());
    auto mt = [&](int i, int j) { return r.meet[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; };
    auto jn = [&](int i, int j) { return r.join[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; };
    for (int i = 0; i < k; ++i) {
        if (mt(i, i) != i || jn(i, i) != i) throw NonBooleanFC("idempotence fails on Z(A)");
        if (mt(i, r.bottom) != r.bottom || jn(i, r.top) != r.top ||
            mt(i, r.top) != i || jn(i, r.bottom) != i)
            throw NonBooleanFC("bounds fail on Z(A)");
        const int c = r.complement[static_cast<std::size_t>(i)];
        if (mt(i, c) != r.bottom || jn(i, c) != r.top)
            throw NonBooleanFC("complement laws fail on Z(A)");
        for (int j = 0; j < k; ++j) {
            if (mt(i, j) != mt(j, i) || jn(i, j) != jn(j, i))
                throw NonBooleanFC("commutativity fails on Z(A)");
            if (mt(i, jn(i, j)) != i || jn(i, mt(i, j)) != i)
                throw NonBooleanFC("absorption fails on Z(A)");
            for (int l = 0; l < k; ++l) {
                if (mt(mt(i, j), l) != mt(i, mt(j, l)) || jn(jn(i, j), l) != jn(i, jn(j, l)))
                    throw NonBooleanFC("associativity fails on Z(A)");
                if (mt(i, jn(j, l)) != jn(mt(i, j), mt(i, l)))
                    throw NonBooleanFC("distributivity fails on Z(A)");
            }
        }
    }
}

CentralReport build_report(const FiniteAlgebra& alg, const CentralContext& ctx,
                           Pairing pairing) {
    CentralReport r;
    r.algebra = alg.name;
    r.n_witnesses = ctx.n_witnesses;
    std::sort(pairing.elements.begin(), pairing.elements.end());
    r.elements = pairing.elements;

    const int k = static_cast<int>(r.elements.size());
    for (const Tuple& e : r.elements) r.pairs.push_back({e, pairing.partner.at(e)});

    const Tuple zeros = zeros_of(alg, ctx);
    const Tuple ones = ones_of(alg, ctx);
    auto bot = r.index_of(zeros);
    auto top = r.index_of(ones);
    if (!bot || !top) throw NonBooleanFC("witness constants are not central");
    r.bottom = *bot;
    r.top = *top;

    std::map<Partition, int> elem_of_theta;
    std::vector<const Partition*> thetas(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        const Partition& th = pairing.theta_of.at(r.elements[static_cast<std::size_t>(i)]);
        thetas[static_cast<std::size_t>(i)] = &th;
        auto [it, fresh] = elem_of_theta.emplace(th, i);
        if (!fresh) throw NonBooleanFC("factor congruence with two central elements");
    }

    auto lookup = [&](const Partition& p) {
        auto it = elem_of_theta.find(p);
        if (it == elem_of_theta.end())
            throw NonBooleanFC("factor congruences not closed under lattice operations");
        return it->second;
    };

    r.meet.assign(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(k)));
    r.join.assign(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(k)));
    r.complement.resize(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        r.complement[static_cast<std::size_t>(i)] =
            *r.index_of(pairing.partner.at(r.elements[static_cast<std::size_t>(i)]));
        for (int j = 0; j < k; ++j) {
            r.meet[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                lookup(meet(*thetas[static_cast<std::size_t>(i)], *thetas[static_cast<std::size_t>(j)]));
            r.join[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                lookup(join(alg, *thetas[static_cast<std::size_t>(i)], *thetas[static_cast<std::size_t>(j)]));
        }
    }

    for (int i = 0; i < k; ++i) {
        if (i == r.bottom) continue;
        bool atom = true;
        for (int j = 0; j < k && atom; ++j) {
            if (j == r.bottom || j == i) continue;
            if (thetas[static_cast<std::size_t>(j)]->refines(*thetas[static_cast<std::size_t>(i)]) &&
                !(*thetas[static_cast<std::size_t>(j)] == *thetas[static_cast<std::size_t>(i)]))
                atom = false;
        }
        if (atom) r.atoms.push_back(i);
    }

    verify_boolean_tables(r);
    return r;
}

bool use_equational_route(const PierceContext& ctx) {
    return ctx.trusted_pierce && ctx.decomposition_term.has_value();
}

} // namespace

bool is_complementary_pair_oracle(const FiniteAlgebra& alg, const CentralContext& ctx,
                                  const Tuple& e, const Tuple& f, int max_size, Exec exec) {
    if (static_cast<int>(e.size()) != ctx.n_witnesses ||
        static_cast<int>(f.size()) != ctx.n_witnesses)
        throw Error("tuple width disagrees with n_witnesses");
    const Tuple zeros = zeros_of(alg, ctx);
    const Tuple ones = ones_of(alg, ctx);
    for (const FactorPair& fp : factor_pairs(alg, max_size, exec)) {
        if (tuple_congruent(fp.theta, e, zeros) && tuple_congruent(fp.theta_star, e, ones) &&
            tuple_congruent(fp.theta, f, ones) && tuple_congruent(fp.theta_star, f, zeros))
            return true;
    }
    return false;
}

bool is_complementary_pair_equational(const FiniteAlgebra& alg, const PierceContext& ctx,
                                      const Tuple& e, const Tuple& f) {
    const Term& U = decomposition_term_of(ctx);
    const int n = alg.size;
    const int N = ctx.base.n_witnesses;
    const Tuple zeros = zeros_of(alg, ctx.base);
    const Tuple ones = ones_of(alg, ctx.base);

    // tabulate (a,b) -> U(a,b,e,f) once
    std::vector<std::string> vars;
    vars.push_back(kVarX);
    vars.push_back(kVarY);
    for (int i = 0; i < N; ++i) vars.push_back(zvar(i));
    for (int i = 0; i < N; ++i) vars.push_back(wvar(i));
    const CompiledTerm cu(alg, U, vars);
    std::vector<int> binding(vars.size());
    for (int i = 0; i < N; ++i) {
        binding[static_cast<std::size_t>(2 + i)] = e[static_cast<std::size_t>(i)];
        binding[static_cast<std::size_t>(2 + N + i)] = f[static_cast<std::size_t>(i)];
    }
    std::vector<int> u(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            binding[0] = a;
            binding[1] = b;
            u[static_cast<std::size_t>(a) * n + b] = cu.eval(alg, binding);
        }
    auto U2 = [&](int a, int b) { return u[static_cast<std::size_t>(a) * n + b]; };

    // U(a,a,e,f) = a
    for (int a = 0; a < n; ++a)
        if (U2(a, a) != a) return false;
    // U(e_i,1_i,e,f) = U(0_i,e_i,e,f) = e_i and U(1_i,f_i,e,f) = U(f_i,0_i,e,f) = f_i
    for (int i = 0; i < N; ++i) {
        const std::size_t si = static_cast<std::size_t>(i);
        if (U2(e[si], ones[si]) != e[si] || U2(zeros[si], e[si]) != e[si]) return false;
        if (U2(ones[si], f[si]) != f[si] || U2(f[si], zeros[si]) != f[si]) return false;
    }
    // U(a,c,e,f) = U(a,U(b,c,e,f),e,f) = U(U(a,b,e,f),c,e,f)
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                const int ac = U2(a, c);
                if (ac != U2(a, U2(b, c)) || ac != U2(U2(a, b), c)) return false;
            }
    // F(U(a_1,b_1,e,f),...) = U(F(a),F(b),e,f) for every basic operation;
    // 0-ary F reduces to c = U(c,c,e,f), covered above
    for (std::size_t oi = 0; oi < alg.ops.size(); ++oi) {
        const int m = alg.ops[oi].arity;
        if (m == 0) continue;
        const int64_t rows = pow_size(n, 2 * m);
        std::vector<int> av(static_cast<std::size_t>(m)), bv(static_cast<std::size_t>(m)),
            uv(static_cast<std::size_t>(m));
        std::vector<int64_t> radix(static_cast<std::size_t>(2 * m), n);
        for (int64_t row = 0; row < rows; ++row) {
            std::vector<int> d = unpack_tuple(row, radix);
            for (int j = 0; j < m; ++j) {
                av[static_cast<std::size_t>(j)] = d[static_cast<std::size_t>(j)];
                bv[static_cast<std::size_t>(j)] = d[static_cast<std::size_t>(m + j)];
                uv[static_cast<std::size_t>(j)] =
                    U2(av[static_cast<std::size_t>(j)], bv[static_cast<std::size_t>(j)]);
            }
            const int lhs = alg.apply(static_cast<int>(oi), uv);
            const int rhs = U2(alg.apply(static_cast<int>(oi), av),
                               alg.apply(static_cast<int>(oi), bv));
            if (lhs != rhs) return false;
        }
    }
    return true;
}

CentralReport central_elements(const FiniteAlgebra& alg, const PierceContext& ctx,
                               int max_size, Exec exec) {
    Pairing pairing = use_equational_route(ctx)
                          ? equational_pairing(alg, ctx, max_size, exec)
                          : oracle_pairing(alg, ctx.base, max_size, exec);
    return build_report(alg, ctx.base, std::move(pairing));
}

CentralReport central_elements(const FiniteAlgebra& alg, const CentralContext& ctx,
                               int max_size, Exec exec) {
    return build_report(alg, ctx, oracle_pairing(alg, ctx, max_size, exec));
}

Tuple complement_general(const FiniteAlgebra& alg, const PierceContext& ctx, const Tuple& e,
                         int max_size, Exec exec) {
    const Term& U = decomposition_term_of(ctx);
    const CentralReport r = central_elements(alg, ctx, max_size, exec);
    if (!r.index_of(e)) throw NotCentral("element is not central");
    const Tuple zeros = zeros_of(alg, ctx.base);
    const Tuple ones = ones_of(alg, ctx.base);

    std::vector<Tuple> matches;
    for (const Tuple& f : r.elements) {
        bool ok = true;
        for (int i = 0; i < ctx.base.n_witnesses && ok; ++i) {
            const std::size_t si = static_cast<std::size_t>(i);
            const Tuple ones_t = ones, zeros_t = zeros;
            const int a1 = eval_term(alg, U, u_env(f[si], ones[si], &e, &ones_t));
            const int a2 = eval_term(alg, U, u_env(f[si], ones[si], &ones_t, &e));
            const int b1 = eval_term(alg, U, u_env(f[si], zeros[si], &e, &zeros_t));
            const int b2 = eval_term(alg, U, u_env(f[si], zeros[si], &zeros_t, &e));
            ok = a1 == a2 && b1 == b2;
        }
        if (ok) matches.push_back(f);
    }
    if (matches.size() != 1)
        throw NoComplementFound("complement equations admit " +
                                std::to_string(matches.size()) + " solutions");
    return matches.front();
}

Tuple complement_short(const FiniteAlgebra& alg, const PierceContext& ctx, const Tuple& e,
                       int max_size, Exec exec) {
    if (!ctx.short_term) throw ShortTermMissing("context has no short decomposition term");
    const CentralReport r = central_elements(alg, ctx, max_size, exec);
    if (!r.index_of(e)) throw NotCentral("element is not central");
    const Tuple zeros = zeros_of(alg, ctx.base);
    const Tuple ones = ones_of(alg, ctx.base);

    Tuple f(static_cast<std::size_t>(ctx.base.n_witnesses));
    for (int i = 0; i < ctx.base.n_witnesses; ++i) {
        const std::size_t si = static_cast<std::size_t>(i);
        f[si] = eval_term(alg, *ctx.short_term, u_env(ones[si], zeros[si], &e, nullptr));
    }

    const bool ok = use_equational_route(ctx)
                        ? is_complementary_pair_equational(alg, ctx, e, f)
                        : is_complementary_pair_oracle(alg, ctx.base, e, f, max_size, exec);
    if (!ok) throw VerificationFailed("short-term complement is not complementary");
    return f;
}

Partition theta_zero_e(const FiniteAlgebra& alg, const PierceContext& ctx, const Tuple& e,
                       int max_size, Exec exec) {
    const CentralReport r = central_elements(alg, ctx, max_size, exec);
    auto idx = r.index_of(e);
    if (!idx) throw NotCentral("element is not central");
    const Tuple zeros = zeros_of(alg, ctx.base);
    const Tuple& f = r.pairs[static_cast<std::size_t>(*idx)].f;

    std::vector<std::pair<int, int>> gens_e, gens_f;
    for (int i = 0; i < ctx.base.n_witnesses; ++i) {
        gens_e.emplace_back(zeros[static_cast<std::size_t>(i)], e[static_cast<std::size_t>(i)]);
        gens_f.emplace_back(zeros[static_cast<std::size_t>(i)], f[static_cast<std::size_t>(i)]);
    }
    Partition theta = cg(alg, gens_e);
    Partition theta_star = cg(alg, gens_f);
    if (!factor_pair_valid(alg, theta, theta_star))
        throw VerificationFailed("Cg(0,e) and Cg(0,f) do not form a factor pair");
    return theta;
}

PreservationReport hom_preserves_central(const Homomorphism& h, const PierceContext& ctx,
                                         int max_size, Exec exec) {
    if (!is_homomorphism(h)) throw NotAHomomorphism("preservation audit of a non-homomorphism");
    const CentralReport src = central_elements(h.source, ctx, max_size, exec);
    const CentralReport tgt = central_elements(h.target, ctx, max_size, exec);

    PreservationReport out;
    for (const Tuple& e : src.elements) {
        Tuple img(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) img[i] = h.map[static_cast<std::size_t>(e[i])];
        if (!tgt.index_of(img)) out.central_witnesses.push_back(e);
    }
    out.preserved = out.central_witnesses.empty();
    return out;
}

PreservationReport hom_preserves_complementary(const Homomorphism& h, const PierceContext& ctx,
                                               int max_size, Exec exec) {
    if (!is_homomorphism(h)) throw NotAHomomorphism("preservation audit of a non-homomorphism");
    const CentralReport src = central_elements(h.source, ctx, max_size, exec);
    const CentralReport tgt = central_elements(h.target, ctx, max_size, exec);

    PreservationReport out;
    for (const CentralPair& p : src.pairs) {
        Tuple ie(p.e.size()), if_(p.f.size());
        for (std::size_t i = 0; i < p.e.size(); ++i) {
            ie[i] = h.map[static_cast<std::size_t>(p.e[i])];
            if_[i] = h.map[static_cast<std::size_t>(p.f[i])];
        }
        auto idx = tgt.index_of(ie);
        const bool ok = idx && tgt.pairs[static_cast<std::size_t>(*idx)].f == if_;
        if (!ok) out.pair_witnesses.push_back({p.e, p.f});
    }
    out.preserved = out.pair_witnesses.empty();
    return out;
}

} // namespace ualg
