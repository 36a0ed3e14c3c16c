#include "ualg/partition.hpp"

#include <algorithm>
#include <functional>

#include "ualg/errors.hpp"

namespace ualg {

Partition::Partition(std::vector<int> normalized_parent) : parent_(std::move(normalized_parent)) {
    const int n = size();
    for (int i = 0; i < n; ++i) {
        const int r = parent_[i];
        if (r < 0 || r > i || parent_[r] != r)
            throw Error("partition parent array not normalized");
    }
}

Partition Partition::identity(int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[i] = i;
    return Partition(std::move(p));
}

Partition Partition::universal(int n) {
    if (n <= 0) throw Error("partition over empty universe");
    return Partition(std::vector<int>(static_cast<std::size_t>(n), 0));
}

Partition Partition::from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
    std::vector<int> p(static_cast<std::size_t>(n), -1);
    for (const auto& block : blocks) {
        if (block.empty()) throw Error("empty block");
        int least = *std::min_element(block.begin(), block.end());
        for (int e : block) {
            if (e < 0 || e >= n) throw Error("block element out of range");
            if (p[e] != -1) throw Error("overlapping blocks");
            p[e] = least;
        }
    }
    for (int i = 0; i < n; ++i)
        if (p[i] == -1) throw Error("blocks do not cover the universe");
    return Partition(std::move(p));
}

bool Partition::is_identity() const {
    for (int i = 0; i < size(); ++i)
        if (parent_[i] != i) return false;
    return true;
}

bool Partition::is_universal() const {
    for (int i = 0; i < size(); ++i)
        if (parent_[i] != 0) return false;
    return size() > 0;
}

int Partition::block_count() const {
    int c = 0;
    for (int i = 0; i < size(); ++i)
        if (parent_[i] == i) ++c;
    return c;
}

std::vector<std::vector<int>> Partition::blocks() const {
    std::vector<std::vector<int>> out;
    std::vector<int> index(parent_.size(), -1);
    for (int i = 0; i < size(); ++i) {
        const int r = parent_[i];
        if (index[r] == -1) {
            index[r] = static_cast<int>(out.size());
            out.emplace_back();
        }
        out[index[r]].push_back(i);
    }
    return out; // reps are block minima, so this is sorted by least member
}

bool Partition::refines(const Partition& coarser) const {
    if (size() != coarser.size()) throw Error("partition size mismatch");
    for (int i = 0; i < size(); ++i)
        if (!coarser.same(i, parent_[i])) return false;
    return true;
}

std::vector<std::pair<int, int>> Partition::generator_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < size(); ++i)
        if (parent_[i] != i) out.emplace_back(parent_[i], i);
    return out;
}

Partition meet(const Partition& p, const Partition& q) {
    if (p.size() != q.size()) throw Error("partition size mismatch");
    const int n = p.size();
    // meet-block of i is keyed by (rep_p(i), rep_q(i)); rep = first occurrence
    std::vector<int> first(static_cast<std::size_t>(n) * n, -1);
    std::vector<int> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        int& slot = first[static_cast<std::size_t>(p.rep(i)) * n + q.rep(i)];
        if (slot == -1) slot = i;
        out[i] = slot;
    }
    return Partition(std::move(out));
}

std::size_t PartitionHash::operator()(const Partition& p) const {
    std::size_t h = 1469598103934665603ull;
    for (int v : p.parents()) {
        h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
        h *= 1099511628211ull;
    }
    return h;
}

Relation::Relation(int n)
    : n_(n), words_((n + 63) / 64), bits_(static_cast<std::size_t>(n) * words_, 0) {}

Relation Relation::of(const Partition& p) {
    Relation r(p.size());
    for (int a = 0; a < p.size(); ++a)
        for (int b = 0; b < p.size(); ++b)
            if (p.same(a, b)) r.set(a, b);
    return r;
}

bool Relation::get(int a, int b) const {
    return (bits_[static_cast<std::size_t>(a) * words_ + b / 64] >> (b % 64)) & 1u;
}

void Relation::set(int a, int b) {
    bits_[static_cast<std::size_t>(a) * words_ + b / 64] |= uint64_t{1} << (b % 64);
}

bool Relation::is_universal() const {
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            if (!get(a, b)) return false;
    return true;
}

Relation compose(const Partition& p, const Partition& q) {
    if (p.size() != q.size()) throw Error("partition size mismatch");
    const int n = p.size();
    // (a,c) related iff the p-block of a meets the q-block of c
    const int words = (n + 63) / 64;
    std::vector<uint64_t> pblock(static_cast<std::size_t>(n) * words, 0);
    std::vector<uint64_t> qblock(static_cast<std::size_t>(n) * words, 0);
    for (int i = 0; i < n; ++i) {
        pblock[static_cast<std::size_t>(p.rep(i)) * words + i / 64] |= uint64_t{1} << (i % 64);
        qblock[static_cast<std::size_t>(q.rep(i)) * words + i / 64] |= uint64_t{1} << (i % 64);
    }
    Relation r(n);
    for (int a = 0; a < n; ++a) {
        const uint64_t* pa = &pblock[static_cast<std::size_t>(p.rep(a)) * words];
        for (int c = 0; c < n; ++c) {
            const uint64_t* qc = &qblock[static_cast<std::size_t>(q.rep(c)) * words];
            bool hit = false;
            for (int w = 0; w < words && !hit; ++w) hit = (pa[w] & qc[w]) != 0;
            if (hit) r.set(a, c);
        }
    }
    return r;
}

bool permute(const Partition& p, const Partition& q) {
    return compose(p, q) == compose(q, p);
}

UnionFind::UnionFind(int n) : parent_(static_cast<std::size_t>(n)) {
    for (int i = 0; i < n; ++i) parent_[i] = i;
}

UnionFind::UnionFind(const Partition& p) : parent_(p.parents()) {}

int UnionFind::find(int a) {
    while (parent_[a] != a) {
        parent_[a] = parent_[parent_[a]];
        a = parent_[a];
    }
    return a;
}

bool UnionFind::unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a < b)
        parent_[b] = a;
    else
        parent_[a] = b;
    return true;
}

Partition UnionFind::finalize() {
    const int n = static_cast<int>(parent_.size());
    // unite() keeps the least element as root, so roots are block minima
    std::vector<int> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out[i] = find(i);
    return Partition(std::move(out));
}

} // namespace ualg
