#include "ualg/algebra.hpp"

#include <algorithm>
#include <limits>

#include "ualg/congruence.hpp"
#include "ualg/errors.hpp"
#include "ualg/hom.hpp"

namespace ualg {

namespace {
constexpr int64_t kTableLimit = 50'000'000;
}

int64_t pow_size(int64_t base, int exp) {
    int64_t out = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && out > std::numeric_limits<int64_t>::max() / base)
            throw SizeBoundExceeded("table size overflow");
        out *= base;
    }
    return out;
}

int64_t pack_tuple(std::span<const int> digits, std::span<const int64_t> radices) {
    int64_t code = 0;
    for (std::size_t i = 0; i < digits.size(); ++i) code = code * radices[i] + digits[i];
    return code;
}

std::vector<int> unpack_tuple(int64_t code, std::span<const int64_t> radices) {
    std::vector<int> out(radices.size());
    for (std::size_t i = radices.size(); i-- > 0;) {
        out[i] = static_cast<int>(code % radices[i]);
        code /= radices[i];
    }
    return out;
}

int FiniteAlgebra::apply(int op_index, std::span<const int> args) const {
    const OpTable& t = ops[static_cast<std::size_t>(op_index)];
    int64_t idx = 0;
    for (int a : args) idx = idx * size + a;
    return t.table[static_cast<std::size_t>(idx)];
}

const OpTable& FiniteAlgebra::op(std::string_view symbol) const {
    auto i = sig.index_of(symbol);
    if (!i) throw SyntaxError("unknown symbol: " + std::string(symbol));
    return ops[static_cast<std::size_t>(*i)];
}

void validate(const FiniteAlgebra& a) {
    if (a.size <= 0) throw Error("algebra must have a nonempty universe");
    validate(a.sig);
    if (a.ops.size() != a.sig.symbols.size())
        throw Error("operation count does not match signature");
    for (std::size_t i = 0; i < a.ops.size(); ++i) {
        const OpTable& t = a.ops[i];
        const SigSymbol& s = a.sig.symbols[i];
        if (t.symbol != s.name || t.arity != s.arity)
            throw Error("operation " + t.symbol + " disagrees with signature");
        int64_t want = pow_size(a.size, t.arity);
        if (want > kTableLimit) throw SizeBoundExceeded("table too large: " + t.symbol);
        if (static_cast<int64_t>(t.table.size()) != want)
            throw Error("table length for " + t.symbol + " must be size^arity");
        for (int v : t.table)
            if (v < 0 || v >= a.size) throw Error("table entry out of range in " + t.symbol);
    }
}

ProductResult direct_product(std::span<const FiniteAlgebra> factors) {
    if (factors.empty()) throw Error("empty product");
    for (const auto& f : factors)
        if (!f.same_signature(factors[0]))
            throw SignatureMismatch("product factors must share a signature");

    std::vector<int64_t> sizes;
    int64_t total = 1;
    std::string name;
    for (const auto& f : factors) {
        sizes.push_back(f.size);
        total *= f.size;
        if (total > kTableLimit) throw SizeBoundExceeded("product too large");
        if (!name.empty()) name += 'x';
        name += f.name;
    }

    FiniteAlgebra prod;
    prod.name = std::move(name);
    prod.size = static_cast<int>(total);
    prod.sig = factors[0].sig;
    const std::size_t k = factors.size();

    for (std::size_t oi = 0; oi < prod.sig.symbols.size(); ++oi) {
        const int arity = prod.sig.symbols[oi].arity;
        OpTable t{prod.sig.symbols[oi].name, arity, {}};
        const int64_t rows = pow_size(total, arity);
        if (rows > kTableLimit) throw SizeBoundExceeded("product table too large");
        t.table.resize(static_cast<std::size_t>(rows));
        std::vector<std::vector<int>> arg_digits(static_cast<std::size_t>(arity));
        std::vector<int> args(static_cast<std::size_t>(arity));
        std::vector<int> res(k);
        std::vector<int64_t> arg_radix(static_cast<std::size_t>(arity), total);
        for (int64_t row = 0; row < rows; ++row) {
            std::vector<int> tup = unpack_tuple(row, arg_radix);
            for (int j = 0; j < arity; ++j)
                arg_digits[static_cast<std::size_t>(j)] = unpack_tuple(tup[static_cast<std::size_t>(j)], sizes);
            for (std::size_t fi = 0; fi < k; ++fi) {
                for (int j = 0; j < arity; ++j)
                    args[static_cast<std::size_t>(j)] = arg_digits[static_cast<std::size_t>(j)][fi];
                res[fi] = factors[fi].apply(static_cast<int>(oi), args);
            }
            t.table[static_cast<std::size_t>(row)] = static_cast<int>(pack_tuple(res, sizes));
        }
        prod.ops.push_back(std::move(t));
    }

    ProductResult out{std::move(prod), {}};
    for (std::size_t fi = 0; fi < k; ++fi) {
        Homomorphism proj;
        proj.source = out.product;
        proj.target = factors[fi];
        proj.name = "p" + std::to_string(fi);
        proj.map.resize(static_cast<std::size_t>(out.product.size));
        for (int c = 0; c < out.product.size; ++c)
            proj.map[static_cast<std::size_t>(c)] = unpack_tuple(c, sizes)[fi];
        if (!is_homomorphism(proj)) throw VerificationFailed("projection is not a homomorphism");
        out.projections.push_back(std::move(proj));
    }
    return out;
}

ProductResult direct_product(std::initializer_list<FiniteAlgebra> factors) {
    std::vector<FiniteAlgebra> v(factors);
    return direct_product(std::span<const FiniteAlgebra>(v));
}

QuotientResult quotient(const FiniteAlgebra& a, const Partition& theta) {
    if (theta.size() != a.size) throw Error("partition size mismatch");
    if (!is_congruence(a, theta)) throw NotACongruence("quotient by a non-congruence");

    std::vector<int> reps;
    std::vector<int> block_index(static_cast<std::size_t>(a.size), -1);
    for (int i = 0; i < a.size; ++i)
        if (theta.rep(i) == i) {
            block_index[static_cast<std::size_t>(i)] = static_cast<int>(reps.size());
            reps.push_back(i);
        }

    FiniteAlgebra q;
    q.name = a.name + "/q";
    q.size = static_cast<int>(reps.size());
    q.sig = a.sig;
    for (std::size_t oi = 0; oi < a.ops.size(); ++oi) {
        const int arity = a.ops[oi].arity;
        OpTable t{a.ops[oi].symbol, arity, {}};
        const int64_t rows = pow_size(q.size, arity);
        t.table.resize(static_cast<std::size_t>(rows));
        std::vector<int64_t> radix(static_cast<std::size_t>(arity), q.size);
        std::vector<int> args(static_cast<std::size_t>(arity));
        for (int64_t row = 0; row < rows; ++row) {
            std::vector<int> tup = unpack_tuple(row, radix);
            for (int j = 0; j < arity; ++j)
                args[static_cast<std::size_t>(j)] = reps[static_cast<std::size_t>(tup[static_cast<std::size_t>(j)])];
            const int r = a.apply(static_cast<int>(oi), args);
            t.table[static_cast<std::size_t>(row)] =
                block_index[static_cast<std::size_t>(theta.rep(r))];
        }
        q.ops.push_back(std::move(t));
    }

    Homomorphism canonical;
    canonical.source = a;
    canonical.target = q;
    canonical.name = "nu";
    canonical.map.resize(static_cast<std::size_t>(a.size));
    for (int i = 0; i < a.size; ++i)
        canonical.map[static_cast<std::size_t>(i)] = block_index[static_cast<std::size_t>(theta.rep(i))];
    return {std::move(q), std::move(canonical)};
}

std::vector<int> subalgebra_generated(const FiniteAlgebra& a, std::span<const int> seed) {
    std::vector<char> in(static_cast<std::size_t>(a.size), 0);
    std::vector<int> members;
    auto add = [&](int e) {
        if (!in[static_cast<std::size_t>(e)]) {
            in[static_cast<std::size_t>(e)] = 1;
            members.push_back(e);
        }
    };
    for (int e : seed) {
        if (e < 0 || e >= a.size) throw Error("seed element out of range");
        add(e);
    }
    bool grew = true;
    while (grew) {
        grew = false;
        const std::size_t snapshot = members.size();
        for (std::size_t oi = 0; oi < a.ops.size(); ++oi) {
            const int arity = a.ops[oi].arity;
            std::vector<std::size_t> pick(static_cast<std::size_t>(arity), 0);
            std::vector<int> args(static_cast<std::size_t>(arity));
            for (;;) {
                bool in_range = true;
                for (int j = 0; j < arity; ++j) {
                    if (pick[static_cast<std::size_t>(j)] >= snapshot) { in_range = false; break; }
                    args[static_cast<std::size_t>(j)] = members[pick[static_cast<std::size_t>(j)]];
                }
                if (arity == 0 || in_range) {
                    const int r = a.apply(static_cast<int>(oi), args);
                    if (!in[static_cast<std::size_t>(r)]) {
                        add(r);
                        grew = true;
                    }
                }
                if (arity == 0) break;
                int j = arity - 1;
                while (j >= 0 && ++pick[static_cast<std::size_t>(j)] >= snapshot) {
                    pick[static_cast<std::size_t>(j)] = 0;
                    --j;
                }
                if (j < 0) break;
            }
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

FiniteAlgebra induced_subalgebra(const FiniteAlgebra& a, std::span<const int> universe,
                                 std::string name) {
    std::vector<int> index(static_cast<std::size_t>(a.size), -1);
    for (std::size_t i = 0; i < universe.size(); ++i)
        index[static_cast<std::size_t>(universe[i])] = static_cast<int>(i);

    FiniteAlgebra s;
    s.name = std::move(name);
    s.size = static_cast<int>(universe.size());
    s.sig = a.sig;
    for (std::size_t oi = 0; oi < a.ops.size(); ++oi) {
        const int arity = a.ops[oi].arity;
        OpTable t{a.ops[oi].symbol, arity, {}};
        const int64_t rows = pow_size(s.size, arity);
        t.table.resize(static_cast<std::size_t>(rows));
        std::vector<int64_t> radix(static_cast<std::size_t>(arity), s.size);
        std::vector<int> args(static_cast<std::size_t>(arity));
        for (int64_t row = 0; row < rows; ++row) {
            std::vector<int> tup = unpack_tuple(row, radix);
            for (int j = 0; j < arity; ++j)
                args[static_cast<std::size_t>(j)] = universe[static_cast<std::size_t>(tup[static_cast<std::size_t>(j)])];
            const int r = a.apply(static_cast<int>(oi), args);
            if (index[static_cast<std::size_t>(r)] == -1)
                throw Error("universe not closed under " + t.symbol);
            t.table[static_cast<std::size_t>(row)] = index[static_cast<std::size_t>(r)];
        }
        s.ops.push_back(std::move(t));
    }
    return s;
}

} // namespace ualg
