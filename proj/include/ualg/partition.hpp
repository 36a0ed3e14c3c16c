#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace ualg {

/// Equivalence relation on {0..n-1}, stored as a normalized parent array:
/// parent[i] is the least element of i's block. Delta = all singletons,
/// Nabla = one block.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> normalized_parent);

    static Partition identity(int n);
    static Partition universal(int n);
    static Partition from_blocks(int n, const std::vector<std::vector<int>>& blocks);

    int size() const { return static_cast<int>(parent_.size()); }
    int rep(int a) const { return parent_[a]; }
    bool same(int a, int b) const { return parent_[a] == parent_[b]; }
    bool is_identity() const;
    bool is_universal() const;
    int block_count() const;
    /// Blocks sorted by least member, elements ascending.
    std::vector<std::vector<int>> blocks() const;
    const std::vector<int>& parents() const { return parent_; }
    /// True iff every block of *this lies inside a block of `coarser`.
    bool refines(const Partition& coarser) const;
    /// Pairs (i, rep(i)) for non-representative i; generates the relation.
    std::vector<std::pair<int, int>> generator_pairs() const;

    bool operator==(const Partition&) const = default;
    bool operator<(const Partition& other) const { return parent_ < other.parent_; }

private:
    std::vector<int> parent_;
};

/// Common refinement.
Partition meet(const Partition& p, const Partition& q);

struct PartitionHash {
    std::size_t operator()(const Partition& p) const;
};

/// Dense binary relation on {0..n-1}.
class Relation {
public:
    Relation() = default;
    explicit Relation(int n);
    static Relation of(const Partition& p);

    int size() const { return n_; }
    bool get(int a, int b) const;
    void set(int a, int b);
    bool is_universal() const;
    bool operator==(const Relation&) const = default;

private:
    int n_ = 0;
    int words_ = 0;
    std::vector<uint64_t> bits_;
};

/// Relational composition p∘q = {(a,c) : exists b with a p b and b q c}.
Relation compose(const Partition& p, const Partition& q);
bool permute(const Partition& p, const Partition& q);

/// Union-find with path halving; finalize() renumbers to least-member reps.
class UnionFind {
public:
    explicit UnionFind(int n);
    explicit UnionFind(const Partition& p);
    int find(int a);
    /// True when two distinct classes were merged.
    bool unite(int a, int b);
    Partition finalize();

private:
    std::vector<int> parent_;
};

} // namespace ualg
