#pragma once

#include <vector>

#include "ualg/partition.hpp"

namespace ualg::kernels::detail {

/// (block count descending, parent array ascending): Delta first, Nabla last.
void sort_congruences(std::vector<Partition>& v);
std::vector<Partition> dedup_sorted(std::vector<Partition> v);

/// Join of two congruences by plain union-find merge; the transitive closure
/// of a union of congruences is already compatible. Not valid for arbitrary
/// partitions.
Partition fast_congruence_join(const Partition& p, const Partition& q);

} // namespace ualg::kernels::detail
