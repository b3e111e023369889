#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ribbonrep/boundary.hpp"
#include "ribbonrep/partition.hpp"

namespace ribbonrep {

/// An r-tuple of partitions; labels irreducible characters (and, as cycle
/// lengths per color, conjugacy classes) of wreath products.
class RPartitePartition {
 public:
  explicit RPartitePartition(std::vector<Partition> components);

  int arity() const { return static_cast<int>(components_.size()); }
  const Partition& component(int i) const { return components_[i]; }
  const std::vector<Partition>& components() const { return components_; }
  long long total_size() const;

  /// Text format: components separated by "|" inside brackets,
  /// e.g. [4,3|2|1,1]; "-" stands for an empty component.
  std::string str() const;
  static RPartitePartition parse(const std::string& text);

  bool operator==(const RPartitePartition&) const = default;

 private:
  std::vector<Partition> components_;
};

/// Thrown when an operation requires an empty r-core; carries the core.
class NonemptyCoreError : public std::invalid_argument {
 public:
  NonemptyCoreError(Partition core, int r);
  const Partition& core() const { return core_; }
  int r() const { return r_; }

 private:
  Partition core_;
  int r_;
};

/// Interlaces the r boundary sequences (padded to a common length and a
/// common anchor) into one; the resulting partition has size
/// r * total_size(t).
Partition phi_r(const RPartitePartition& t);

/// The unique phi_r-preimage of lambda. Requires an empty r-core;
/// otherwise throws NonemptyCoreError carrying the computed core.
RPartitePartition r_quotient(const Partition& lambda, int r);

/// Repeatedly peels length-r ribbons (smallest switch index first) until
/// none remains. The result is order-independent.
Partition r_core(const Partition& lambda, int r);

/// All partitions of r*n with an empty r-core, largest-lexicographic
/// first; equals the image of phi_r over the r-partite partitions of n.
std::vector<Partition> enumerate_par_r(int r, long long n);

/// All r-tuples of partitions with total size n, in the descending
/// component-major lexicographic order used for table labels.
std::vector<RPartitePartition> rpartite_partitions(int r, int n);

}  // namespace ribbonrep
