#pragma once

#include <string>

#include "ribbonrep/partition.hpp"

namespace ribbonrep {

// Indexing convention, fixed once for the whole library: the bits of a
// boundary word are stored in reading order, bits()[0] being the first
// (southwestern) step. All positions named q in public interfaces are
// 1-based, so bit(q) == bits()[q-1]. The anchor is the gap with equally
// many 1s before it and 0s after it; anchor() counts the bits to its left.

/// A 0/1 word encoding the SE boundary of a partition: 1 = east step
/// (column), 0 = north step (row, bottom to top). Canonical words start
/// with 1 and end with 0 (or are empty); non-canonical words carry extra
/// leading 0s and/or trailing 1s.
class BoundarySequence {
 public:
  BoundarySequence() = default;
  explicit BoundarySequence(std::string bits);

  const std::string& bits() const { return bits_; }
  int length() const { return static_cast<int>(bits_.size()); }
  bool bit(int q) const { return bits_[q - 1] == '1'; }

  /// Bits to the left of the anchor gap. Equal to the number of 0-bits;
  /// prepending 0s and appending 1s moves it consistently with the word.
  int anchor() const { return anchor_; }

  bool is_canonical() const;
  /// Leading 0s and trailing 1s removed.
  BoundarySequence trimmed() const;

  /// The partition whose boundary this word encodes (trims internally).
  Partition to_partition() const;

  /// Raw bits, optionally with a "|" marking the anchor gap.
  std::string display(bool with_anchor = false) const;

  bool operator==(const BoundarySequence& o) const { return bits_ == o.bits_; }

 private:
  std::string bits_;
  int anchor_ = 0;
};

/// Canonical boundary word of lambda.
BoundarySequence boundary_sequence(const Partition& lambda);

/// Boundary word padded with leading 0s to exactly pad_rows 0-bits;
/// requires pad_rows >= num_parts.
BoundarySequence boundary_sequence(const Partition& lambda, int pad_rows);

/// Inverse of boundary_sequence after canonical trimming.
Partition partition_from_boundary(const BoundarySequence& b);

/// The unique index i with m_i = 0, where m_i counts the 1s weakly before
/// position i minus the 0s strictly after it. Requires a word containing
/// both a 0 and a 1.
int anchor_position(const std::string& word);

}  // namespace ribbonrep
