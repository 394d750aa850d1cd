#pragma once

#include <bincover/core.hpp>

#include <cstddef>
#include <cstdint>
#include <vector>

namespace bincover {

/// Proposed bins witnessing a lower bound on the optimal covered count.
struct PartitionCertificate {
  std::vector<std::vector<ItemSize>> groups;
  std::size_t claimed_covered = 0;
};

struct OptExactOptions {
  std::uint64_t node_budget = 10'000'000;
};

/// Maximum number of groups with sum >= 1 over all partitions of the multiset.
/// Branch and bound: items sorted descending; the largest remaining item
/// either starts the next group or is discarded; a group grows by items that
/// keep it below 1 and is completed by the smallest item that reaches 1.
/// Pruned with covered + floor(remaining volume). Throws InstanceTooLarge when
/// the node budget runs out.
std::size_t opt_exact(const Sequence& multiset, const OptExactOptions& options = {});

/// Optimal count for l items of size 1-eps and s items of size eps.
/// Throws EpsTooLarge unless 0 < eps < 1/(l+s).
std::size_t opt_two_size(std::size_t large_count, std::size_t small_count, const Rational& eps);

/// Number of certificate groups with sum >= 1, after checking that the groups
/// use a sub-multiset of seq. Throws NotSubMultiset otherwise.
std::size_t verify_certificate(const Sequence& seq, const PartitionCertificate& cert);

/// floor(volume(seq)), an upper bound on the optimum.
std::size_t opt_volume_bound(const Sequence& seq);

}  // namespace bincover
