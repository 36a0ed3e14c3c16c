#include "ualg/kernels.hpp"

#include <algorithm>
#include <unordered_set>

#include "kernels_detail.hpp"
#include "ualg/congruence.hpp"
#include "ualg/errors.hpp"

namespace ualg::kernels {

namespace detail {

void sort_congruences(std::vector<Partition>& v) {
    std::sort(v.begin(), v.end(), [](const Partition& a, const Partition& b) {
        if (a.block_count() != b.block_count()) return a.block_count() > b.block_count();
        return a.parents() < b.parents();
    });
}

std::vector<Partition> dedup_sorted(std::vector<Partition> v) {
    sort_congruences(v);
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

// Join of two congruences: the transitive closure of their union is already
// compatible, so a plain union-find merge suffices. Not valid for arbitrary
// partitions.
Partition fast_congruence_join(const Partition& p, const Partition& q) {
    UnionFind uf(p);
    for (int i = 0; i < q.size(); ++i) uf.unite(i, q.rep(i));
    return uf.finalize();
}

} // namespace detail

std::optional<int64_t> identity_violation_serial(const FiniteAlgebra& alg, const Term& lhs,
                                                 const Term& rhs,
                                                 const std::vector<std::string>& vars) {
    const CompiledTerm cl(alg, lhs, vars);
    const CompiledTerm cr(alg, rhs, vars);
    const int n = alg.size;
    const int64_t total = pow_size(n, static_cast<int>(vars.size()));
    std::vector<int> digits(vars.size(), 0);
    for (int64_t code = 0; code < total; ++code) {
        if (cl.eval(alg, digits) != cr.eval(alg, digits)) return code;
        for (std::size_t j = vars.size(); j-- > 0;) {
            if (++digits[j] < n) break;
            digits[j] = 0;
        }
    }
    return std::nullopt;
}

std::optional<std::pair<int, int64_t>> incompatibility_serial(const FiniteAlgebra& alg,
                                                              const Partition& p) {
    const int n = alg.size;
    for (std::size_t oi = 0; oi < alg.ops.size(); ++oi) {
        const int m = alg.ops[oi].arity;
        if (m == 0) continue;
        const int64_t rows = pow_size(n, m);
        std::vector<int> args(static_cast<std::size_t>(m), 0);
        std::vector<int> probe(static_cast<std::size_t>(m));
        for (int64_t row = 0; row < rows; ++row) {
            const int r = alg.apply(static_cast<int>(oi), args);
            for (int i = 0; i < m; ++i) {
                probe = args;
                for (int b = 0; b < n; ++b) {
                    if (!p.same(b, args[static_cast<std::size_t>(i)])) continue;
                    probe[static_cast<std::size_t>(i)] = b;
                    if (!p.same(r, alg.apply(static_cast<int>(oi), probe)))
                        return std::make_pair(static_cast<int>(oi),
                                              (row * m + i) * n + b);
                }
            }
            for (int j = m; j-- > 0;) {
                if (++args[static_cast<std::size_t>(j)] < n) break;
                args[static_cast<std::size_t>(j)] = 0;
            }
        }
    }
    return std::nullopt;
}

std::vector<Partition> principal_congruences_serial(const FiniteAlgebra& alg) {
    std::vector<Partition> out;
    for (int a = 0; a < alg.size; ++a)
        for (int b = a + 1; b < alg.size; ++b)
            out.push_back(cg(alg, {{a, b}}));
    return detail::dedup_sorted(std::move(out));
}

std::vector<Partition> congruence_join_closure_serial(const FiniteAlgebra& alg,
                                                      std::vector<Partition> base) {
    std::vector<Partition> list;
    std::unordered_set<Partition, PartitionHash> seen;
    auto push = [&](Partition p) {
        if (seen.insert(p).second) list.push_back(std::move(p));
    };
    push(Partition::identity(alg.size));
    for (auto& p : base) push(std::move(p));
    for (std::size_t i = 0; i < list.size(); ++i)
        for (std::size_t j = 0; j <= i; ++j)
            push(detail::fast_congruence_join(list[i], list[j]));
    detail::sort_congruences(list);
    return list;
}

std::vector<CentralPair> equational_pair_scan_serial(const FiniteAlgebra& alg,
                                                     const PierceContext& ctx) {
    const int n = alg.size;
    const int N = ctx.base.n_witnesses;
    const int64_t total = pow_size(n, N);
    std::vector<int64_t> radix(static_cast<std::size_t>(N), n);
    std::vector<CentralPair> out;
    for (int64_t ec = 0; ec < total; ++ec) {
        const Tuple e = unpack_tuple(ec, radix);
        for (int64_t fc = 0; fc < total; ++fc) {
            const Tuple f = unpack_tuple(fc, radix);
            if (is_complementary_pair_equational(alg, ctx, e, f)) out.push_back({e, f});
        }
    }
    return out;
}

} // namespace ualg::kernels
