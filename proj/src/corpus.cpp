#include "ualg/corpus.hpp"

#include <algorithm>
#include <set>

#include "ualg/errors.hpp"
#include "ualg/hom.hpp"

namespace ualg::corpus {

namespace {

Signature lattice_sig() {
    return Signature{{{"join", 2}, {"meet", 2}, {"0", 0}, {"1", 0}}};
}

Signature implication_sig() {
    return Signature{{{"join", 2}, {"meet", 2}, {"imp", 2}, {"0", 0}, {"1", 0}}};
}

OpTable binary_table(const std::string& symbol, int n, int (*f)(int, int, int)) {
    OpTable t{symbol, 2, {}};
    t.table.reserve(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t.table.push_back(f(a, b, n));
    return t;
}

OpTable constant_table(const std::string& symbol, int value) {
    return OpTable{symbol, 0, {value}};
}

std::optional<int> parse_suffix(const std::string& key, const std::string& prefix) {
    if (key.size() <= prefix.size() || key.compare(0, prefix.size(), prefix) != 0)
        return std::nullopt;
    int v = 0;
    for (std::size_t i = prefix.size(); i < key.size(); ++i) {
        if (key[i] < '0' || key[i] > '9') return std::nullopt;
        v = v * 10 + (key[i] - '0');
        if (v > 4096) return std::nullopt;
    }
    return v;
}

} // namespace

FiniteAlgebra chain_lattice(int k) {
    if (k < 1) throw Error("chain needs at least one element");
    FiniteAlgebra a;
    a.name = "chain" + std::to_string(k);
    a.size = k;
    a.sig = lattice_sig();
    a.ops.push_back(binary_table("join", k, [](int x, int y, int) { return std::max(x, y); }));
    a.ops.push_back(binary_table("meet", k, [](int x, int y, int) { return std::min(x, y); }));
    a.ops.push_back(constant_table("0", 0));
    a.ops.push_back(constant_table("1", k - 1));
    validate(a);
    return a;
}

FiniteAlgebra c_k_implication(int k) {
    if (k < 2) throw Error("implication chain needs at least two elements");
    FiniteAlgebra a;
    a.name = "ck" + std::to_string(k);
    a.size = k;
    a.sig = implication_sig();
    a.ops.push_back(binary_table("join", k, [](int x, int y, int) { return std::max(x, y); }));
    a.ops.push_back(binary_table("meet", k, [](int x, int y, int) { return std::min(x, y); }));
    a.ops.push_back(binary_table("imp", k, [](int x, int y, int n) { return x <= y ? n - 1 : 0; }));
    a.ops.push_back(constant_table("0", 0));
    a.ops.push_back(constant_table("1", k - 1));
    validate(a);
    return a;
}

FiniteAlgebra g_k(int k, int max_arity) {
    if (k < 2) throw Error("g_k needs k >= 2");
    if (max_arity <= 0) max_arity = k;
    if (max_arity < 2) throw Error("g_k needs max_arity >= 2");
    FiniteAlgebra ck = c_k_implication(k);
    FiniteAlgebra a = direct_product({ck, ck}).product;
    a.name = "g" + std::to_string(k);
    if (max_arity != k) a.name += "_a" + std::to_string(max_arity);
    const int n = a.size; // k*k
    const int top = n - 1;
    for (int arity = 2; arity <= max_arity; ++arity) {
        const int64_t rows = pow_size(n, arity);
        if (rows > 1'000'000) throw SizeBoundExceeded("g_k table too large");
        OpTable t{"f" + std::to_string(arity), arity, {}};
        t.table.assign(static_cast<std::size_t>(rows), top);
        if (arity == k) {
            std::vector<int64_t> radix(static_cast<std::size_t>(arity), n);
            for (int64_t row = 0; row < rows; ++row) {
                std::vector<int> args = unpack_tuple(row, radix);
                bool all_distinct = true;
                for (std::size_t i = 0; i < args.size() && all_distinct; ++i)
                    for (std::size_t j = i + 1; j < args.size() && all_distinct; ++j)
                        if (args[i] == args[j]) all_distinct = false;
                if (all_distinct) t.table[static_cast<std::size_t>(row)] = 0;
            }
        }
        a.sig.symbols.push_back({t.symbol, arity});
        a.ops.push_back(std::move(t));
    }
    validate(a);
    return a;
}

FiniteAlgebra m3_lattice() {
    // element order [0, a, b, c, 1]
    FiniteAlgebra a;
    a.name = "m3";
    a.size = 5;
    a.sig = lattice_sig();
    auto leq = [](int x, int y) { return x == y || x == 0 || y == 4; };
    OpTable jn{"join", 2, {}}, mt{"meet", 2, {}};
    for (int x = 0; x < 5; ++x)
        for (int y = 0; y < 5; ++y) {
            jn.table.push_back(leq(x, y) ? y : (leq(y, x) ? x : 4));
            mt.table.push_back(leq(x, y) ? x : (leq(y, x) ? y : 0));
        }
    a.ops.push_back(std::move(jn));
    a.ops.push_back(std::move(mt));
    a.ops.push_back(constant_table("0", 0));
    a.ops.push_back(constant_table("1", 4));
    validate(a);
    return a;
}

FiniteAlgebra join_semilattice_cube(int n) {
    if (n < 0 || n > 10) throw Error("cube exponent out of range");
    FiniteAlgebra a;
    a.name = "slcube" + std::to_string(n);
    a.size = 1 << n;
    a.sig = Signature{{{"join", 2}, {"0", 0}, {"1", 0}}};
    a.ops.push_back(binary_table("join", a.size, [](int x, int y, int) { return x | y; }));
    a.ops.push_back(constant_table("0", 0));
    a.ops.push_back(constant_table("1", a.size - 1));
    validate(a);
    return a;
}

FiniteAlgebra z_n_ring(int n) {
    if (n < 1) throw Error("ring modulus must be positive");
    FiniteAlgebra a;
    a.name = "z" + std::to_string(n);
    a.size = n;
    a.sig = Signature{{{"add", 2}, {"mul", 2}, {"neg", 1}, {"0", 0}, {"1", 0}}};
    a.ops.push_back(binary_table("add", n, [](int x, int y, int m) { return (x + y) % m; }));
    a.ops.push_back(binary_table("mul", n, [](int x, int y, int m) { return (x * y) % m; }));
    OpTable neg{"neg", 1, {}};
    for (int x = 0; x < n; ++x) neg.table.push_back((n - x) % n);
    a.ops.push_back(std::move(neg));
    a.ops.push_back(constant_table("0", 0));
    a.ops.push_back(constant_table("1", 1 % n));
    validate(a);
    return a;
}

FiniteAlgebra discriminator_algebra(int k) {
    if (k < 2) throw Error("discriminator algebra needs at least two elements");
    FiniteAlgebra a;
    a.name = "disc" + std::to_string(k);
    a.size = k;
    a.sig = Signature{{{"t", 3}, {"0", 0}, {"1", 0}}};
    OpTable t{"t", 3, {}};
    t.table.reserve(static_cast<std::size_t>(k) * k * k);
    for (int x = 0; x < k; ++x)
        for (int y = 0; y < k; ++y)
            for (int z = 0; z < k; ++z) t.table.push_back(x == y ? z : x);
    a.ops.push_back(std::move(t));
    a.ops.push_back(constant_table("0", 0));
    a.ops.push_back(constant_table("1", k - 1));
    validate(a);
    return a;
}

namespace {

FiniteAlgebra lattice_product(std::initializer_list<int> chains, const std::string& name) {
    std::vector<FiniteAlgebra> fs;
    for (int k : chains) fs.push_back(chain_lattice(k));
    FiniteAlgebra a = direct_product(fs).product;
    a.name = name;
    return a;
}

} // namespace

Homomorphism alpha_hom() {
    Homomorphism h;
    h.source = join_semilattice_cube(2);
    h.target = join_semilattice_cube(3);
    h.map = {0, 6, 3, 7};
    h.name = "alpha";
    if (!is_homomorphism(h)) throw VerificationFailed("alpha is not a homomorphism");
    return h;
}

Homomorphism inclusion_c_into_d() {
    Homomorphism h;
    h.source = lattice_product({2, 2}, "lat2x2");
    h.target = m3_lattice();
    h.map = {0, 1, 2, 4}; // 0 -> 0, (0,1) -> a, (1,0) -> b, (1,1) -> 1
    h.name = "c_into_d";
    if (!is_homomorphism(h)) throw VerificationFailed("inclusion is not a homomorphism");
    return h;
}

PierceContext materialize(const ContextSpec& spec, const Signature& sig) {
    if (spec.n_witnesses < 1) throw Error("n_witnesses must be positive");
    if (static_cast<int>(spec.zeros.size()) != spec.n_witnesses ||
        static_cast<int>(spec.ones.size()) != spec.n_witnesses)
        throw Error("context constant count disagrees with n_witnesses");

    PierceContext ctx;
    ctx.base.n_witnesses = spec.n_witnesses;
    ctx.trusted_pierce = spec.trusted_pierce;
    auto parse_closed = [&](const std::string& s) {
        Term t = parse_term(s, sig);
        if (!free_vars(t).empty()) throw Error("context constant is not a closed term: " + s);
        return t;
    };
    for (const auto& s : spec.zeros) ctx.base.zeros.push_back(parse_closed(s));
    for (const auto& s : spec.ones) ctx.base.ones.push_back(parse_closed(s));

    std::set<std::string> allowed{"x", "y"};
    for (int i = 1; i <= spec.n_witnesses; ++i) allowed.insert("z" + std::to_string(i));
    std::set<std::string> allowed_u = allowed;
    for (int i = 1; i <= spec.n_witnesses; ++i) allowed_u.insert("w" + std::to_string(i));

    if (spec.decomposition_term) {
        Term t = parse_term(*spec.decomposition_term, sig);
        for (const auto& v : free_vars(t))
            if (!allowed_u.count(v))
                throw Error("decomposition term uses unexpected variable " + v);
        ctx.decomposition_term = std::move(t);
    }
    if (spec.short_term) {
        Term t = parse_term(*spec.short_term, sig);
        for (const auto& v : free_vars(t))
            if (!allowed.count(v)) throw Error("short term uses unexpected variable " + v);
        ctx.short_term = std::move(t);
    }
    return ctx;
}

ContextSpec l01_context() {
    ContextSpec c;
    c.n_witnesses = 1;
    c.zeros = {"(0)"};
    c.ones = {"(1)"};
    c.decomposition_term = "(meet (join x z1) (join y w1))";
    c.trusted_pierce = true;
    return c;
}

ContextSpec semilattice_context() {
    ContextSpec c;
    c.n_witnesses = 1;
    c.zeros = {"(0)"};
    c.ones = {"(1)"};
    return c;
}

ContextSpec ring_context() {
    ContextSpec c;
    c.n_witnesses = 1;
    c.zeros = {"(0)"};
    c.ones = {"(1)"};
    c.decomposition_term = "(add x (mul z1 (add y (neg x))))";
    c.short_term = "(add x (mul z1 (add y (neg x))))";
    c.trusted_pierce = true;
    return c;
}

std::vector<Entry> list_entries() {
    return {
        {"chain2", "algebra", "2-element bounded distributive lattice (parametric chainK)"},
        {"chain3", "algebra", "3-element bounded chain"},
        {"chain4", "algebra", "4-element bounded chain"},
        {"lat2x2", "algebra", "2x2 bounded lattice (product of chains)"},
        {"lat2x2x2", "algebra", "2x2x2 bounded lattice"},
        {"lat2x3", "algebra", "2x3 bounded lattice"},
        {"lat3x2", "algebra", "3x2 bounded lattice"},
        {"m3", "algebra", "M3: 0 < {a,b,c} < 1, antichain of three"},
        {"ck2", "algebra", "2-chain with implication (parametric ckK)"},
        {"ck3", "algebra", "3-chain with implication"},
        {"slcube1", "algebra", "2-element bounded join semilattice (parametric slcubeK)"},
        {"slcube2", "algebra", "2x2 bounded join semilattice"},
        {"slcube3", "algebra", "2x2x2 bounded join semilattice"},
        {"z2", "algebra", "ring Z/2 (parametric zK)"},
        {"z3", "algebra", "ring Z/3"},
        {"z4", "algebra", "ring Z/4"},
        {"z6", "algebra", "ring Z/6"},
        {"g2", "algebra", "truncated G_2 on C_2 x C_2 (parametric gK)"},
        {"disc2", "algebra", "2-element discriminator algebra (parametric discK)"},
        {"alpha", "hom", "bounded-semilattice hom 2^2 -> 2^3 breaking complementary pairs"},
        {"c_into_d", "hom", "bounded-lattice embedding lat2x2 -> m3"},
        {"ctx-l01", "context", "bounded-lattice Pierce context, U=(meet (join x z1) (join y w1))"},
        {"ctx-sem", "context", "bounded-semilattice context, constants only"},
        {"ctx-ring", "context", "unital-ring Church context, u=(add x (mul z1 (add y (neg x))))"},
    };
}

std::optional<FiniteAlgebra> find_algebra(const std::string& key) {
    if (key == "m3") return m3_lattice();
    if (key == "lat2x2") return lattice_product({2, 2}, "lat2x2");
    if (key == "lat2x2x2") return lattice_product({2, 2, 2}, "lat2x2x2");
    if (key == "lat2x3") return lattice_product({2, 3}, "lat2x3");
    if (key == "lat3x2") return lattice_product({3, 2}, "lat3x2");
    if (auto k = parse_suffix(key, "chain")) return chain_lattice(*k);
    if (auto k = parse_suffix(key, "ck")) return c_k_implication(*k);
    if (auto k = parse_suffix(key, "slcube")) return join_semilattice_cube(*k);
    if (auto k = parse_suffix(key, "z")) return z_n_ring(*k);
    if (auto k = parse_suffix(key, "g")) return g_k(*k);
    if (auto k = parse_suffix(key, "disc")) return discriminator_algebra(*k);
    return std::nullopt;
}

std::optional<Homomorphism> find_hom(const std::string& key) {
    if (key == "alpha") return alpha_hom();
    if (key == "c_into_d") return inclusion_c_into_d();
    return std::nullopt;
}

std::optional<ContextSpec> find_context(const std::string& key) {
    if (key == "ctx-l01") return l01_context();
    if (key == "ctx-sem") return semilattice_context();
    if (key == "ctx-ring") return ring_context();
    return std::nullopt;
}

} // namespace ualg::corpus
