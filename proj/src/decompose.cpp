#include "ualg/decompose.hpp"

#include <algorithm>
#include <map>

#include "ualg/errors.hpp"
#include "ualg/hom.hpp"

namespace ualg {

namespace {

// The factor-congruence lattice with complements and atoms; throws
// NonBooleanFC unless it is a Boolean (distributive, uniquely complemented)
// sublattice of Con(A).
struct FcStructure {
    std::vector<Partition> fc; // ascending by (block count desc, parents)
    std::vector<int> complement;
    std::vector<int> atoms;
    int bottom = -1; // Delta
};

FcStructure fc_boolean_structure(const FiniteAlgebra& a, int max_size, Exec exec) {
    const std::vector<FactorPair> fps = factor_pairs(a, max_size, exec);

    std::map<Partition, int> index;
    FcStructure st;
    for (const FactorPair& fp : fps)
        if (index.emplace(fp.theta, 0).second) st.fc.push_back(fp.theta);
    std::sort(st.fc.begin(), st.fc.end(), [](const Partition& x, const Partition& y) {
        if (x.block_count() != y.block_count()) return x.block_count() > y.block_count();
        return x.parents() < y.parents();
    });
    index.clear();
    for (std::size_t i = 0; i < st.fc.size(); ++i) index[st.fc[i]] = static_cast<int>(i);

    const int k = static_cast<int>(st.fc.size());
    st.complement.assign(static_cast<std::size_t>(k), -1);
    for (const FactorPair& fp : fps) {
        const int i = index.at(fp.theta);
        const int j = index.at(fp.theta_star);
        if (st.complement[static_cast<std::size_t>(i)] != -1 &&
            st.complement[static_cast<std::size_t>(i)] != j)
            throw NonBooleanFC("factor congruence with two complements");
        st.complement[static_cast<std::size_t>(i)] = j;
    }
    for (int i = 0; i < k; ++i)
        if (st.complement[static_cast<std::size_t>(i)] == -1)
            throw NonBooleanFC("factor congruence without a complement");

    // closure under meet and join, then distributivity
    std::vector<std::vector<int>> mt(static_cast<std::size_t>(k),
                                     std::vector<int>(static_cast<std::size_t>(k)));
    std::vector<std::vector<int>> jn = mt;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            auto mit = index.find(meet(st.fc[static_cast<std::size_t>(i)],
                                       st.fc[static_cast<std::size_t>(j)]));
            auto jit = index.find(join(a, st.fc[static_cast<std::size_t>(i)],
                                       st.fc[static_cast<std::size_t>(j)]));
            if (mit == index.end() || jit == index.end())
                throw NonBooleanFC("factor congruences not closed under meet/join");
            mt[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = mit->second;
            jn[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = jit->second;
        }
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            for (int l = 0; l < k; ++l)
                if (mt[static_cast<std::size_t>(i)][static_cast<std::size_t>(jn[static_cast<std::size_t>(j)][static_cast<std::size_t>(l)])] !=
                    jn[static_cast<std::size_t>(mt[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])][static_cast<std::size_t>(mt[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)])])
                    throw NonBooleanFC("factor congruences are not distributive");

    for (int i = 0; i < k; ++i)
        if (st.fc[static_cast<std::size_t>(i)].is_identity()) st.bottom = i;

    for (int i = 0; i < k; ++i) {
        if (i == st.bottom) continue;
        bool atom = true;
        for (int j = 0; j < k && atom; ++j) {
            if (j == st.bottom || j == i) continue;
            if (st.fc[static_cast<std::size_t>(j)].refines(st.fc[static_cast<std::size_t>(i)]) &&
                !(st.fc[static_cast<std::size_t>(j)] == st.fc[static_cast<std::size_t>(i)]))
                atom = false;
        }
        if (atom) st.atoms.push_back(i);
    }
    return st;
}

} // namespace

bool is_directly_indecomposable(const FiniteAlgebra& a, int max_size, Exec exec) {
    if (a.size <= 1) return false;
    for (const FactorPair& fp : factor_pairs(a, max_size, exec))
        if (!fp.theta.is_identity() && !fp.theta.is_universal()) return false;
    return true;
}

DecompositionCertificate decompose(const FiniteAlgebra& a, int max_size, Exec exec) {
    DecompositionCertificate cert;
    if (a.size == 1) {
        cert.natural_map = {0}; // empty product
        return cert;
    }

    const FcStructure st = fc_boolean_structure(a, max_size, exec);
    for (std::size_t ai = 0; ai < st.atoms.size(); ++ai) {
        const Partition& coatom =
            st.fc[static_cast<std::size_t>(st.complement[static_cast<std::size_t>(st.atoms[ai])])];
        cert.factor_congruences.push_back(coatom);
        QuotientResult q = quotient(a, coatom);
        q.quotient.name = a.name + "_f" + std::to_string(ai);
        cert.factors.push_back(std::move(q.quotient));
    }

    std::vector<int64_t> sizes;
    int64_t total = 1;
    for (const auto& f : cert.factors) {
        sizes.push_back(f.size);
        total *= f.size;
    }
    if (total != a.size) throw VerificationFailed("factor sizes do not multiply to |A|");

    std::vector<char> seen(static_cast<std::size_t>(total), 0);
    std::vector<int> digits(cert.factors.size());
    std::vector<std::vector<int>> block_index(cert.factors.size());
    for (std::size_t fi = 0; fi < cert.factors.size(); ++fi) {
        const Partition& th = cert.factor_congruences[fi];
        block_index[fi].assign(static_cast<std::size_t>(a.size), -1);
        int next = 0;
        for (int x = 0; x < a.size; ++x)
            if (th.rep(x) == x) block_index[fi][static_cast<std::size_t>(x)] = next++;
    }
    for (int x = 0; x < a.size; ++x) {
        for (std::size_t fi = 0; fi < cert.factors.size(); ++fi)
            digits[fi] = block_index[fi][static_cast<std::size_t>(
                cert.factor_congruences[fi].rep(x))];
        const int64_t code = pack_tuple(digits, sizes);
        if (seen[static_cast<std::size_t>(code)])
            throw VerificationFailed("natural map is not injective");
        seen[static_cast<std::size_t>(code)] = 1;
        cert.natural_map.push_back(code);
    }

    ProductResult prod = direct_product(cert.factors);
    Homomorphism nat;
    nat.source = a;
    nat.target = prod.product;
    nat.name = "natural";
    for (int64_t c : cert.natural_map) nat.map.push_back(static_cast<int>(c));
    if (!is_homomorphism(nat))
        throw VerificationFailed("natural map is not a homomorphism");

    for (const auto& f : cert.factors)
        if (!is_directly_indecomposable(f, max_size, exec))
            throw VerificationFailed("factor " + f.name + " is decomposable");
    return cert;
}

std::vector<FiniteAlgebra> pierce_stalks(const FiniteAlgebra& a, int max_size, Exec exec) {
    if (a.size == 1) return {};
    const FcStructure st = fc_boolean_structure(a, max_size, exec);

    std::vector<FiniteAlgebra> stalks;
    for (std::size_t ai = 0; ai < st.atoms.size(); ++ai) {
        const Partition& atom = st.fc[static_cast<std::size_t>(st.atoms[ai])];
        // maximal ideal at the atom: everything not above it
        UnionFind uf(a.size);
        for (const Partition& th : st.fc) {
            if (atom.refines(th)) continue;
            for (int x = 0; x < a.size; ++x) uf.unite(x, th.rep(x));
        }
        Partition u = uf.finalize();
        if (!is_congruence(a, u, exec))
            throw VerificationFailed("ideal union is not a congruence");
        QuotientResult q = quotient(a, u);
        q.quotient.name = a.name + "_stalk" + std::to_string(ai);
        stalks.push_back(std::move(q.quotient));
    }
    return stalks;
}

} // namespace ualg
