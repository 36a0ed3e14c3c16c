#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ualg/partition.hpp"
#include "ualg/signature.hpp"

namespace ualg {

/// Flat operation table. The index of (a1..ak) over universe size n is
/// sum a_j * n^(k-j): first argument most significant.
struct OpTable {
    std::string symbol;
    int arity = 0;
    std::vector<int> table;
    bool operator==(const OpTable&) const = default;
};

struct FiniteAlgebra {
    std::string name;
    int size = 0;
    Signature sig;
    std::vector<OpTable> ops; // one per signature symbol, same order

    int apply(int op_index, std::span<const int> args) const;
    const OpTable& op(std::string_view symbol) const;
    bool same_signature(const FiniteAlgebra& other) const { return sig == other.sig; }
    bool operator==(const FiniteAlgebra&) const = default;
};

/// Table lengths, entry ranges, signature/table agreement.
void validate(const FiniteAlgebra& a);

/// Checked n^k (throws SizeBoundExceeded on overflow / absurd sizes).
int64_t pow_size(int64_t base, int exp);

/// Mixed-radix codec, first digit most significant.
int64_t pack_tuple(std::span<const int> digits, std::span<const int64_t> radices);
std::vector<int> unpack_tuple(int64_t code, std::span<const int64_t> radices);

struct Homomorphism {
    FiniteAlgebra source;
    FiniteAlgebra target;
    std::vector<int> map; // source.size entries, each < target.size
    std::string name;

    int operator()(int a) const { return map[a]; }
};

struct ProductResult {
    FiniteAlgebra product;
    std::vector<Homomorphism> projections;
};

/// Direct product; element encoding is mixed-radix with factor 0 most
/// significant. Projections are returned as checked homomorphisms.
ProductResult direct_product(std::span<const FiniteAlgebra> factors);
ProductResult direct_product(std::initializer_list<FiniteAlgebra> factors);

struct QuotientResult {
    FiniteAlgebra quotient;
    Homomorphism canonical;
};

/// Quotient by a congruence (checked; throws NotACongruence). Universe =
/// blocks indexed by least member, in block order.
QuotientResult quotient(const FiniteAlgebra& a, const Partition& theta);

/// Least subuniverse containing the seed and all constants.
std::vector<int> subalgebra_generated(const FiniteAlgebra& a, std::span<const int> seed);

/// Restriction of the algebra to a closed subuniverse (ascending elements).
FiniteAlgebra induced_subalgebra(const FiniteAlgebra& a, std::span<const int> universe,
                                 std::string name);

} // namespace ualg
