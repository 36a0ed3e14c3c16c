#include "ualg/hom.hpp"

#include <algorithm>

#include "ualg/errors.hpp"

namespace ualg {

namespace {

// Checks every tuple over elements <= limit whose result is also <= limit.
// Used incrementally by the backtracking searches below.
bool partial_map_ok(const FiniteAlgebra& a, const FiniteAlgebra& b,
                    const std::vector<int>& map, int limit) {
    std::vector<int> args;
    std::vector<int> image;
    for (std::size_t oi = 0; oi < a.ops.size(); ++oi) {
        const int arity = a.ops[oi].arity;
        args.assign(static_cast<std::size_t>(arity), 0);
        image.assign(static_cast<std::size_t>(arity), 0);
        for (;;) {
            const int r = a.apply(static_cast<int>(oi), args);
            if (r <= limit) {
                for (int j = 0; j < arity; ++j)
                    image[static_cast<std::size_t>(j)] = map[static_cast<std::size_t>(args[static_cast<std::size_t>(j)])];
                if (b.apply(static_cast<int>(oi), image) != map[static_cast<std::size_t>(r)])
                    return false;
            }
            int j = arity - 1;
            while (j >= 0 && ++args[static_cast<std::size_t>(j)] > limit) {
                args[static_cast<std::size_t>(j)] = 0;
                --j;
            }
            if (j < 0) break;
        }
    }
    return true;
}

void search_homs(const FiniteAlgebra& a, const FiniteAlgebra& b, std::vector<int>& map,
                 std::vector<char>* used, int k, std::vector<std::vector<int>>& out,
                 bool stop_at_first) {
    if (k == a.size) {
        out.push_back(map);
        return;
    }
    for (int img = 0; img < b.size; ++img) {
        if (used && (*used)[static_cast<std::size_t>(img)]) continue;
        map[static_cast<std::size_t>(k)] = img;
        if (used) (*used)[static_cast<std::size_t>(img)] = 1;
        if (partial_map_ok(a, b, map, k)) {
            search_homs(a, b, map, used, k + 1, out, stop_at_first);
            if (stop_at_first && !out.empty()) {
                if (used) (*used)[static_cast<std::size_t>(img)] = 0;
                return;
            }
        }
        if (used) (*used)[static_cast<std::size_t>(img)] = 0;
    }
}

} // namespace

bool is_homomorphism(const Homomorphism& h) {
    if (!h.source.same_signature(h.target)) return false;
    if (static_cast<int>(h.map.size()) != h.source.size) return false;
    for (int v : h.map)
        if (v < 0 || v >= h.target.size) return false;
    return partial_map_ok(h.source, h.target, h.map, h.source.size - 1);
}

Homomorphism compose(const Homomorphism& second, const Homomorphism& first) {
    if (!(first.target == second.source))
        throw SignatureMismatch("composition through mismatched algebras");
    Homomorphism h;
    h.source = first.source;
    h.target = second.target;
    h.name = second.name + "." + first.name;
    h.map.resize(first.map.size());
    for (std::size_t i = 0; i < first.map.size(); ++i)
        h.map[i] = second.map[static_cast<std::size_t>(first.map[i])];
    return h;
}

std::optional<std::vector<int>> find_isomorphism(const FiniteAlgebra& a,
                                                 const FiniteAlgebra& b) {
    if (!a.same_signature(b)) throw SignatureMismatch("isomorphism over mixed signatures");
    if (a.size != b.size) return std::nullopt;
    std::vector<int> map(static_cast<std::size_t>(a.size), -1);
    std::vector<char> used(static_cast<std::size_t>(b.size), 0);
    std::vector<std::vector<int>> out;
    search_homs(a, b, map, &used, 0, out, true);
    if (out.empty()) return std::nullopt;
    return out.front();
}

bool isomorphic(const FiniteAlgebra& a, const FiniteAlgebra& b) {
    return find_isomorphism(a, b).has_value();
}

std::vector<Homomorphism> enumerate_homomorphisms(const FiniteAlgebra& a,
                                                  const FiniteAlgebra& b) {
    if (!a.same_signature(b)) throw SignatureMismatch("homomorphisms over mixed signatures");
    std::vector<int> map(static_cast<std::size_t>(a.size), -1);
    std::vector<std::vector<int>> maps;
    search_homs(a, b, map, nullptr, 0, maps, false);
    std::vector<Homomorphism> out;
    out.reserve(maps.size());
    for (std::size_t i = 0; i < maps.size(); ++i) {
        Homomorphism h;
        h.source = a;
        h.target = b;
        h.map = std::move(maps[i]);
        h.name = "h" + std::to_string(i);
        out.push_back(std::move(h));
    }
    return out;
}

} // namespace ualg
