#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ribbonrep/boundary.hpp"
#include "ribbonrep/quotient.hpp"

namespace ribbonrep {

/// One ribbon peel on a boundary word: the 1-bit at switch_index is
/// exchanged with the 0-bit ribbon_length places to its right.
struct PeelStep {
  int switch_index = 0;   // 1-based position q
  int ribbon_length = 0;  // length in the ambient partition (r * mu_i)
  int height = 0;         // mod-r height used for the sign
  int component = 0;      // residue class of the peel under interlacing

  bool operator==(const PeelStep&) const = default;
};

/// A complete mu-peeling, steps in application order (last part of mu
/// first); sign = (-1)^(sum of heights).
struct PeelTrace {
  std::vector<PeelStep> steps;
  int sign = 1;

  /// One "q=.. len=.. ht=.." line per step, then "sign=..".
  std::string str() const;

  bool operator==(const PeelTrace&) const = default;
};

/// A ribbon removal from a single partition, located by the rows it spans.
struct RibbonRemoval {
  Partition rest;
  int row_lo = 0;  // topmost row of the ribbon, 1-based
  int row_hi = 0;  // bottom row; height = row_hi - row_lo
  int height = 0;
};

struct RPartiteTableauEntry {
  int component = 0;
  int row_lo = 0;
  int row_hi = 0;
  int length = 0;
  int height = 0;

  bool operator==(const RPartiteTableauEntry&) const = default;
};

/// An r-partite ribbon tableau, entries in tableau order (entry i is the
/// i-th ribbon added when building the shape up from empty).
struct RPartiteRibbonTableau {
  std::vector<RPartiteTableauEntry> entries;

  bool operator==(const RPartiteRibbonTableau&) const = default;
};

/// All 1-based q with bit q = 1 and bit q+length = 0, ascending.
std::vector<int> peel_candidates(const BoundarySequence& b, int length);

/// Swaps bits q and q+length; height = number of 0-bits strictly between
/// them. Requires q in peel_candidates(b, length). The word is not trimmed.
std::pair<BoundarySequence, int> peel(const BoundarySequence& b, int q,
                                      int length);

/// Same swap, but the height counts only 0-bits strictly between the
/// switched entries at positions congruent to q mod r. Requires r | length.
std::pair<BoundarySequence, int> peel_mod(const BoundarySequence& b, int q,
                                          int length, int r);

/// All complete mu-peelings of lambda with ribbon lengths r*mu_i, parts
/// peeled last-first, candidate indices ascending. Unsuccessful branches
/// are pruned. Requires size(lambda) = r * size(mu).
std::vector<PeelTrace> enumerate_mu_peelings(const Partition& lambda,
                                             const Composition& mu, int r);

/// All removable ribbons of the given length, by (row_lo, row_hi)
/// ascending. Works on the diagram directly, independent of the
/// boundary-word encoding.
std::vector<RibbonRemoval> ribbon_removals(const Partition& lambda,
                                           int length);

/// All r-partite ribbon tableaux of the given shape whose i-th ribbon has
/// length lengths_i. Requires total_size(shape) = size(lengths).
std::vector<RPartiteRibbonTableau> enumerate_rpartite_tableaux(
    const RPartitePartition& shape, const Composition& lengths);

}  // namespace ribbonrep
