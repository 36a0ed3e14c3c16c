#include <algorithm>
#include <cmath>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "kernels_detail.hpp"
#include "ualg/congruence.hpp"
#include "ualg/errors.hpp"
#include "ualg/kernels.hpp"

namespace ualg::kernels {

// Workloads below this many items are not worth a parallel region.
static constexpr int64_t kParallelThreshold = 2048;

std::optional<int64_t> identity_violation_omp(const FiniteAlgebra& alg, const Term& lhs,
                                              const Term& rhs,
                                              const std::vector<std::string>& vars) {
#ifdef _OPENMP
    const int n = alg.size;
    const int64_t total = pow_size(n, static_cast<int>(vars.size()));
    if (total < kParallelThreshold) return identity_violation_serial(alg, lhs, rhs, vars);
    const CompiledTerm cl(alg, lhs, vars);
    const CompiledTerm cr(alg, rhs, vars);
    int64_t best = total;
#pragma omp parallel
    {
        std::vector<int> digits(vars.size(), 0);
        int64_t local = total;
#pragma omp for schedule(static)
        for (int64_t code = 0; code < total; ++code) {
            if (code >= local) continue;
            int64_t rest = code;
            for (std::size_t j = vars.size(); j-- > 0;) {
                digits[j] = static_cast<int>(rest % n);
                rest /= n;
            }
            if (cl.eval(alg, digits) != cr.eval(alg, digits)) local = std::min(local, code);
        }
#pragma omp critical
        best = std::min(best, local);
    }
    if (best == total) return std::nullopt;
    return best;
#else
    return identity_violation_serial(alg, lhs, rhs, vars);
#endif
}

std::optional<std::pair<int, int64_t>> incompatibility_omp(const FiniteAlgebra& alg,
                                                           const Partition& p) {
#ifdef _OPENMP
    const int n = alg.size;
    for (std::size_t oi = 0; oi < alg.ops.size(); ++oi) {
        const int m = alg.ops[oi].arity;
        if (m == 0) continue;
        const int64_t rows = pow_size(n, m);
        if (rows < kParallelThreshold) {
            // keep per-op order identical to the serial scan
            FiniteAlgebra one;
            one.name = alg.name;
            one.size = alg.size;
            one.sig.symbols = {alg.sig.symbols[oi]};
            one.ops = {alg.ops[oi]};
            if (auto hit = incompatibility_serial(one, p))
                return std::make_pair(static_cast<int>(oi), hit->second);
            continue;
        }
        const int64_t none = rows * m * n;
        int64_t best = none;
#pragma omp parallel
        {
            std::vector<int> args(static_cast<std::size_t>(m));
            std::vector<int> probe(static_cast<std::size_t>(m));
            int64_t local = none;
#pragma omp for schedule(static)
            for (int64_t row = 0; row < rows; ++row) {
                if (row * m * n >= local) continue;
                int64_t rest = row;
                for (int j = m; j-- > 0;) {
                    args[static_cast<std::size_t>(j)] = static_cast<int>(rest % n);
                    rest /= n;
                }
                const int r = alg.apply(static_cast<int>(oi), args);
                for (int i = 0; i < m; ++i) {
                    probe = args;
                    for (int b = 0; b < n; ++b) {
                        if (!p.same(b, args[static_cast<std::size_t>(i)])) continue;
                        probe[static_cast<std::size_t>(i)] = b;
                        if (!p.same(r, alg.apply(static_cast<int>(oi), probe))) {
                            local = std::min(local, (row * m + i) * n + b);
                            break;
                        }
                    }
                }
            }
#pragma omp critical
            best = std::min(best, local);
        }
        if (best != none) return std::make_pair(static_cast<int>(oi), best);
    }
    return std::nullopt;
#else
    return incompatibility_serial(alg, p);
#endif
}

std::vector<Partition> principal_congruences_omp(const FiniteAlgebra& alg) {
#ifdef _OPENMP
    const int n = alg.size;
    const int64_t pairs = static_cast<int64_t>(n) * (n - 1) / 2;
    if (pairs < 64) return principal_congruences_serial(alg);
    std::vector<Partition> out(static_cast<std::size_t>(pairs));
#pragma omp parallel for schedule(dynamic)
    for (int64_t idx = 0; idx < pairs; ++idx) {
        // invert the row-major pair index
        int a = 0;
        int64_t skip = idx;
        while (skip >= n - 1 - a) {
            skip -= n - 1 - a;
            ++a;
        }
        const int b = a + 1 + static_cast<int>(skip);
        out[static_cast<std::size_t>(idx)] = cg(alg, {{a, b}});
    }
    return detail::dedup_sorted(std::move(out));
#else
    return principal_congruences_serial(alg);
#endif
}

std::vector<Partition> congruence_join_closure_omp(const FiniteAlgebra& alg,
                                                   std::vector<Partition> base) {
#ifdef _OPENMP
    // pairs are processed in fixed-size chunks so the candidate buffer stays
    // bounded no matter how large the lattice gets
    static constexpr int64_t kChunk = 1 << 18;

    std::vector<Partition> list;
    std::unordered_set<Partition, PartitionHash> seen;
    auto push = [&](Partition p) {
        if (seen.insert(p).second) list.push_back(std::move(p));
    };
    push(Partition::identity(alg.size));
    for (auto& p : base) push(std::move(p));

    std::vector<Partition> cand;
    std::size_t lo = 0;
    while (lo < list.size()) {
        const std::size_t hi = list.size();
        // pairs (i, j) with lo <= i < hi and j <= i, flattened row by row
        const int64_t lo64 = static_cast<int64_t>(lo), hi64 = static_cast<int64_t>(hi);
        const int64_t total = hi64 * (hi64 + 1) / 2 - lo64 * (lo64 + 1) / 2;
        const int64_t offset = lo64 * (lo64 + 1) / 2;
        for (int64_t chunk = 0; chunk < total; chunk += kChunk) {
            const int64_t n = std::min(kChunk, total - chunk);
            cand.assign(static_cast<std::size_t>(n), Partition());
#pragma omp parallel for schedule(static) if (n >= 64)
            for (int64_t w = 0; w < n; ++w) {
                const int64_t flat = offset + chunk + w;
                // invert the triangular index
                int64_t i = static_cast<int64_t>((std::sqrt(8.0 * static_cast<double>(flat) + 1.0) - 1.0) / 2.0);
                while (i * (i + 1) / 2 > flat) --i;
                while ((i + 1) * (i + 2) / 2 <= flat) ++i;
                const int64_t j = flat - i * (i + 1) / 2;
                cand[static_cast<std::size_t>(w)] = detail::fast_congruence_join(
                    list[static_cast<std::size_t>(i)], list[static_cast<std::size_t>(j)]);
            }
            for (auto& p : cand) push(std::move(p));
        }
        lo = hi;
    }
    detail::sort_congruences(list);
    return list;
#else
    return congruence_join_closure_serial(alg, std::move(base));
#endif
}

std::vector<CentralPair> equational_pair_scan_omp(const FiniteAlgebra& alg,
                                                  const PierceContext& ctx) {
#ifdef _OPENMP
    const int n = alg.size;
    const int N = ctx.base.n_witnesses;
    const int64_t per = pow_size(n, N);
    const int64_t total = per * per;
    if (total < 64) return equational_pair_scan_serial(alg, ctx);
    std::vector<int64_t> radix(static_cast<std::size_t>(N), n);
    std::vector<char> hit(static_cast<std::size_t>(total), 0);
#pragma omp parallel for schedule(dynamic)
    for (int64_t code = 0; code < total; ++code) {
        const Tuple e = unpack_tuple(code / per, radix);
        const Tuple f = unpack_tuple(code % per, radix);
        if (is_complementary_pair_equational(alg, ctx, e, f))
            hit[static_cast<std::size_t>(code)] = 1;
    }
    std::vector<CentralPair> out;
    for (int64_t code = 0; code < total; ++code)
        if (hit[static_cast<std::size_t>(code)])
            out.push_back({unpack_tuple(code / per, radix), unpack_tuple(code % per, radix)});
    return out;
#else
    return equational_pair_scan_serial(alg, ctx);
#endif
}

std::optional<int64_t> identity_violation(const FiniteAlgebra& alg, const Term& lhs,
                                          const Term& rhs,
                                          const std::vector<std::string>& vars, Exec exec) {
    return exec == Exec::parallel ? identity_violation_omp(alg, lhs, rhs, vars)
                                  : identity_violation_serial(alg, lhs, rhs, vars);
}

std::optional<std::pair<int, int64_t>> incompatibility(const FiniteAlgebra& alg,
                                                       const Partition& p, Exec exec) {
    return exec == Exec::parallel ? incompatibility_omp(alg, p) : incompatibility_serial(alg, p);
}

std::vector<Partition> principal_congruences(const FiniteAlgebra& alg, Exec exec) {
    return exec == Exec::parallel ? principal_congruences_omp(alg)
                                  : principal_congruences_serial(alg);
}

std::vector<Partition> congruence_join_closure(const FiniteAlgebra& alg,
                                               std::vector<Partition> base, Exec exec) {
    return exec == Exec::parallel ? congruence_join_closure_omp(alg, std::move(base))
                                  : congruence_join_closure_serial(alg, std::move(base));
}

std::vector<CentralPair> equational_pair_scan(const FiniteAlgebra& alg,
                                              const PierceContext& ctx, Exec exec) {
    return exec == Exec::parallel ? equational_pair_scan_omp(alg, ctx)
                                  : equational_pair_scan_serial(alg, ctx);
}

} // namespace ualg::kernels
