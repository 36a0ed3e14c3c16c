#include "ualg/congruence.hpp"

#include <algorithm>
#include <unordered_map>

#include "ualg/errors.hpp"
#include "ualg/kernels.hpp"

namespace ualg {

bool is_congruence(const FiniteAlgebra& a, const Partition& p, Exec exec) {
    if (p.size() != a.size) throw Error("partition size mismatch");
    return !kernels::incompatibility(a, p, exec).has_value();
}

Partition cg(const FiniteAlgebra& a, std::span<const std::pair<int, int>> pairs) {
    const int n = a.size;
    UnionFind uf(n);
    std::vector<std::pair<int, int>> work;
    for (auto [x, y] : pairs) {
        if (x < 0 || x >= n || y < 0 || y >= n) throw Error("cg pair out of range");
        if (uf.unite(x, y)) work.emplace_back(x, y);
    }
    std::vector<int> args;
    while (!work.empty()) {
        auto [x, y] = work.back();
        work.pop_back();
        for (std::size_t oi = 0; oi < a.ops.size(); ++oi) {
            const int m = a.ops[oi].arity;
            if (m == 0) continue;
            args.assign(static_cast<std::size_t>(m), 0);
            for (int pos = 0; pos < m; ++pos) {
                // fillers run over the m-1 other positions
                for (;;) {
                    args[static_cast<std::size_t>(pos)] = x;
                    const int rx = a.apply(static_cast<int>(oi), args);
                    args[static_cast<std::size_t>(pos)] = y;
                    const int ry = a.apply(static_cast<int>(oi), args);
                    if (uf.unite(rx, ry)) work.emplace_back(rx, ry);
                    int j = m - 1;
                    while (j >= 0) {
                        if (j == pos) {
                            --j;
                            continue;
                        }
                        if (++args[static_cast<std::size_t>(j)] < n) break;
                        args[static_cast<std::size_t>(j)] = 0;
                        --j;
                    }
                    if (j < 0) break;
                }
                std::fill(args.begin(), args.end(), 0);
            }
        }
    }
    return uf.finalize();
}

Partition cg(const FiniteAlgebra& a, std::initializer_list<std::pair<int, int>> pairs) {
    std::vector<std::pair<int, int>> v(pairs);
    return cg(a, std::span<const std::pair<int, int>>(v));
}

std::vector<Partition> all_congruences(const FiniteAlgebra& a, int max_size, Exec exec) {
    if (a.size > max_size)
        throw SizeBoundExceeded("congruence lattice enumeration capped at " +
                                std::to_string(max_size) + " elements (algebra has " +
                                std::to_string(a.size) + ")");
    std::vector<Partition> principal = kernels::principal_congruences(a, exec);
    return kernels::congruence_join_closure(a, std::move(principal), exec);
}

Partition join(const FiniteAlgebra& a, const Partition& p, const Partition& q) {
    std::vector<std::pair<int, int>> gens = p.generator_pairs();
    auto qg = q.generator_pairs();
    gens.insert(gens.end(), qg.begin(), qg.end());
    return cg(a, gens);
}

Partition kernel(const Homomorphism& h) {
    if (!is_homomorphism(h)) throw NotAHomomorphism("kernel of a non-homomorphism");
    UnionFind uf(h.source.size);
    std::vector<int> first(static_cast<std::size_t>(h.target.size), -1);
    for (int i = 0; i < h.source.size; ++i) {
        int& f = first[static_cast<std::size_t>(h.map[static_cast<std::size_t>(i)])];
        if (f == -1)
            f = i;
        else
            uf.unite(f, i);
    }
    return uf.finalize();
}

namespace {

struct BlockBits {
    int words = 0;
    std::vector<int> reps;
    std::vector<uint64_t> bits; // rep-indexed rows

    explicit BlockBits(const Partition& p) {
        const int n = p.size();
        words = (n + 63) / 64;
        std::vector<int> rep_index(static_cast<std::size_t>(n), -1);
        for (int i = 0; i < n; ++i)
            if (p.rep(i) == i) {
                rep_index[static_cast<std::size_t>(i)] = static_cast<int>(reps.size());
                reps.push_back(i);
            }
        bits.assign(reps.size() * static_cast<std::size_t>(words), 0);
        for (int i = 0; i < n; ++i) {
            const int row = rep_index[static_cast<std::size_t>(p.rep(i))];
            bits[static_cast<std::size_t>(row) * words + i / 64] |= uint64_t{1} << (i % 64);
        }
    }
};

// theta o phi = Nabla iff every theta-block meets every phi-block.
bool blocks_all_intersect(const BlockBits& p, const BlockBits& q) {
    for (std::size_t i = 0; i < p.reps.size(); ++i)
        for (std::size_t j = 0; j < q.reps.size(); ++j) {
            bool hit = false;
            for (int w = 0; w < p.words && !hit; ++w)
                hit = (p.bits[i * p.words + w] & q.bits[j * q.words + w]) != 0;
            if (!hit) return false;
        }
    return true;
}

bool uniform_blocks(const Partition& p, int& block_size) {
    auto bs = p.blocks();
    block_size = static_cast<int>(bs.front().size());
    for (const auto& b : bs)
        if (static_cast<int>(b.size()) != block_size) return false;
    return true;
}

} // namespace

std::vector<FactorPair> factor_pairs(const FiniteAlgebra& a, int max_size, Exec exec) {
    const std::vector<Partition> cons = all_congruences(a, max_size, exec);
    const int n = a.size;

    std::vector<int> bcount(cons.size());
    std::vector<int> bsize(cons.size());
    std::vector<char> uniform(cons.size());
    std::vector<BlockBits> bits;
    bits.reserve(cons.size());
    for (std::size_t i = 0; i < cons.size(); ++i) {
        bcount[i] = cons[i].block_count();
        uniform[i] = uniform_blocks(cons[i], bsize[i]) ? 1 : 0;
        bits.emplace_back(cons[i]);
    }

    std::vector<FactorPair> out;
    for (std::size_t i = 0; i < cons.size(); ++i) {
        if (!uniform[i]) continue;
        for (std::size_t j = 0; j < cons.size(); ++j) {
            if (!uniform[j]) continue;
            if (static_cast<int64_t>(bcount[i]) * bcount[j] != n) continue;
            if (bsize[i] != bcount[j]) continue;
            if (!meet(cons[i], cons[j]).is_identity()) continue;
            if (!blocks_all_intersect(bits[i], bits[j])) continue;
            out.push_back({cons[i], cons[j]});
        }
    }
    return out;
}

bool factor_pair_valid(const FiniteAlgebra& a, const Partition& theta,
                       const Partition& theta_star) {
    QuotientResult q1 = quotient(a, theta);
    QuotientResult q2 = quotient(a, theta_star);
    ProductResult prod = direct_product({q1.quotient, q2.quotient});
    if (prod.product.size != a.size) return false;
    Homomorphism nat;
    nat.source = a;
    nat.target = prod.product;
    nat.name = "natural";
    nat.map.resize(static_cast<std::size_t>(a.size));
    std::vector<char> seen(static_cast<std::size_t>(a.size), 0);
    for (int x = 0; x < a.size; ++x) {
        const int code = q1.canonical.map[static_cast<std::size_t>(x)] * q2.quotient.size +
                         q2.canonical.map[static_cast<std::size_t>(x)];
        if (seen[static_cast<std::size_t>(code)]) return false;
        seen[static_cast<std::size_t>(code)] = 1;
        nat.map[static_cast<std::size_t>(x)] = code;
    }
    return is_homomorphism(nat);
}

std::optional<Partition> check_fhp_pair(const FiniteAlgebra& a, const FiniteAlgebra& b,
                                        int max_size, Exec exec) {
    ProductResult prod = direct_product({a, b});
    const int n = prod.product.size;
    const std::vector<Partition> cons = all_congruences(prod.product, max_size, exec);
    const auto& p0 = prod.projections[0].map;
    const auto& p1 = prod.projections[1].map;
    for (const Partition& theta : cons) {
        Relation img_a(a.size), img_b(b.size);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (theta.same(x, y)) {
                    img_a.set(p0[static_cast<std::size_t>(x)], p0[static_cast<std::size_t>(y)]);
                    img_b.set(p1[static_cast<std::size_t>(x)], p1[static_cast<std::size_t>(y)]);
                }
        bool ok = true;
        for (int x = 0; x < n && ok; ++x)
            for (int y = 0; y < n && ok; ++y)
                if (img_a.get(p0[static_cast<std::size_t>(x)], p0[static_cast<std::size_t>(y)]) &&
                    img_b.get(p1[static_cast<std::size_t>(x)], p1[static_cast<std::size_t>(y)]) &&
                    !theta.same(x, y))
                    ok = false;
        if (!ok) return theta;
    }
    return std::nullopt;
}

PushoutResult pushout_quotient(const Homomorphism& f,
                               std::span<const std::pair<int, int>> pairs) {
    if (!is_homomorphism(f)) throw NotAHomomorphism("pushout along a non-homomorphism");
    Partition theta_a = cg(f.source, pairs);
    std::vector<std::pair<int, int>> image_pairs;
    image_pairs.reserve(pairs.size());
    for (auto [x, y] : pairs)
        image_pairs.emplace_back(f.map[static_cast<std::size_t>(x)],
                                 f.map[static_cast<std::size_t>(y)]);
    Partition theta_b = cg(f.target, image_pairs);

    QuotientResult qa = quotient(f.source, theta_a);
    QuotientResult qb = quotient(f.target, theta_b);

    Homomorphism psi;
    psi.source = qa.quotient;
    psi.target = qb.quotient;
    psi.name = "psi";
    psi.map.assign(static_cast<std::size_t>(qa.quotient.size), -1);
    for (int x = 0; x < f.source.size; ++x) {
        const int from = qa.canonical.map[static_cast<std::size_t>(x)];
        const int to = qb.canonical.map[static_cast<std::size_t>(f.map[static_cast<std::size_t>(x)])];
        if (psi.map[static_cast<std::size_t>(from)] == -1)
            psi.map[static_cast<std::size_t>(from)] = to;
        else if (psi.map[static_cast<std::size_t>(from)] != to)
            throw VerificationFailed("pushout square does not commute");
    }
    if (!is_homomorphism(psi)) throw VerificationFailed("mediating map is not a homomorphism");
    return {std::move(qa.quotient), std::move(qb.quotient), std::move(psi)};
}

bool codisjointness_check(const FiniteAlgebra& a, const FiniteAlgebra& b) {
    ProductResult prod = direct_product({a, b});
    Partition k0 = kernel(prod.projections[0]);
    Partition k1 = kernel(prod.projections[1]);
    Partition j = join(prod.product, k0, k1);
    return quotient(prod.product, j).quotient.size == 1;
}

} // namespace ualg
