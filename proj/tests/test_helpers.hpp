#pragma once

#include <utility>
#include <vector>

#include "ualg/central.hpp"
#include "ualg/congruence.hpp"
#include "ualg/corpus.hpp"

namespace ualg::testing {

// Every partition of {0..n-1} via restricted growth strings. Test oracle for
// the congruence-lattice algorithms; keep n small (Bell numbers).
inline std::vector<Partition> all_partitions(int n) {
    std::vector<Partition> out;
    std::vector<int> rgs(static_cast<std::size_t>(n), 0);
    for (;;) {
        std::vector<std::vector<int>> blocks;
        for (int i = 0; i < n; ++i) {
            const std::size_t b = static_cast<std::size_t>(rgs[static_cast<std::size_t>(i)]);
            if (b == blocks.size()) blocks.emplace_back();
            blocks[b].push_back(i);
        }
        out.push_back(Partition::from_blocks(n, blocks));
        int i = n - 1;
        for (; i > 0; --i) {
            int maxv = 0;
            for (int j = 0; j < i; ++j) maxv = std::max(maxv, rgs[static_cast<std::size_t>(j)]);
            if (rgs[static_cast<std::size_t>(i)] <= maxv) break;
        }
        if (i == 0) return out;
        ++rgs[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < n; ++j) rgs[static_cast<std::size_t>(j)] = 0;
    }
}

// Definition-level congruence enumeration: filter every partition.
inline std::vector<Partition> all_congruences_bruteforce(const FiniteAlgebra& a) {
    std::vector<Partition> out;
    for (const Partition& p : all_partitions(a.size))
        if (is_congruence(a, p)) out.push_back(p);
    std::sort(out.begin(), out.end(), [](const Partition& x, const Partition& y) {
        if (x.block_count() != y.block_count()) return x.block_count() > y.block_count();
        return x.parents() < y.parents();
    });
    return out;
}

inline PierceContext lattice_ctx(const FiniteAlgebra& a) {
    return corpus::materialize(corpus::l01_context(), a.sig);
}

inline PierceContext ring_ctx(const FiniteAlgebra& a) {
    return corpus::materialize(corpus::ring_context(), a.sig);
}

inline PierceContext semilattice_ctx(const FiniteAlgebra& a) {
    return corpus::materialize(corpus::semilattice_context(), a.sig);
}

inline PierceContext constants_ctx(const FiniteAlgebra& a) {
    corpus::ContextSpec spec;
    spec.n_witnesses = 1;
    spec.zeros = {"(0)"};
    spec.ones = {"(1)"};
    return corpus::materialize(spec, a.sig);
}

// Corpus members declared to lie in a Pierce variety, with their contexts.
inline std::vector<std::pair<FiniteAlgebra, PierceContext>> pierce_corpus_le8() {
    std::vector<std::pair<FiniteAlgebra, PierceContext>> out;
    for (const char* key : {"chain2", "chain3", "chain4", "lat2x2", "lat2x3", "lat3x2",
                            "lat2x2x2", "m3", "ck2", "ck3"}) {
        FiniteAlgebra a = *corpus::find_algebra(key);
        PierceContext c = lattice_ctx(a);
        out.emplace_back(std::move(a), std::move(c));
    }
    for (const char* key : {"z2", "z3", "z4", "z6"}) {
        FiniteAlgebra a = *corpus::find_algebra(key);
        PierceContext c = ring_ctx(a);
        out.emplace_back(std::move(a), std::move(c));
    }
    return out;
}

// The whole algebra registry, materialized.
inline std::vector<FiniteAlgebra> registry_algebras() {
    std::vector<FiniteAlgebra> out;
    for (const auto& e : corpus::list_entries())
        if (e.kind == "algebra") out.push_back(*corpus::find_algebra(e.key));
    return out;
}

inline std::vector<Tuple> tuples_over(int n, int width) {
    std::vector<int64_t> radix(static_cast<std::size_t>(width), n);
    std::vector<Tuple> out;
    for (int64_t c = 0; c < pow_size(n, width); ++c) out.push_back(unpack_tuple(c, radix));
    return out;
}

} // namespace ualg::testing
