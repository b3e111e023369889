#pragma once

#include <optional>
#include <string>

#include "ribbonrep/partition.hpp"
#include "ribbonrep/quotient.hpp"

namespace ribbonrep {

/// Number of inversions of the length-k row-color sequence of lambda
/// mod r. Requires k >= num_parts.
long long inv_r(const Partition& lambda, int k, int r);

/// (-1)^(inv_r(lambda) - inv_r(empty)) at k = num_parts (k = 1 for the
/// empty partition); independent of k, which the implementation
/// re-checks at k+1. Requires an empty r-core.
int sign_r(const Partition& lambda, int r);

/// Minimal number of adjacent transpositions turning the row-color
/// sequence of lambda into that of the empty partition. Requires an
/// empty r-core.
long long d_r_distance(const Partition& lambda, int r);

/// (-1)^(odd parts / 2); the closed form of sign_r for r = 2. Requires an
/// empty 2-core.
int sign2_closed(const Partition& lambda);

/// Both computation routes for the sign, carried together so that a
/// discrepancy surfaces as data.
struct SignReport {
  Partition lambda;
  int r = 1;
  int k_used = 1;
  long long inv_count = 0;
  long long inv_count_empty = 0;
  long long d_r = 0;
  int sign = 1;
  std::optional<int> sign2_closed;  // present iff r == 2

  /// Single key=value line with the same fields as the JSON form.
  std::string str() const;
  /// {lambda, r, k, inv, inv_empty, d, sign, sign2_closed?}
  std::string to_json() const;
};

/// Full report; k_override, if given, must be >= num_parts.
SignReport sign_report(const Partition& lambda, int r,
                       std::optional<int> k_override = std::nullopt);

}  // namespace ribbonrep
