#pragma once

#include <string>
#include <vector>

#include "ribbonrep/bigint.hpp"

namespace ribbonrep {

/// A composition: a finite sequence of positive integers, in any order.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  long long size() const;

  /// Each part multiplied by r.
  Composition scaled(int r) const;

  /// Text format: comma-separated decimals, "-" for the empty composition.
  std::string str() const;
  static Composition parse(const std::string& text);

  bool operator==(const Composition&) const = default;

 private:
  std::vector<int> parts_;
};

/// A partition: weakly decreasing sequence of positive integers
/// (row lengths of a diagram in English convention).
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int num_parts() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  long long size() const;

  /// i-th part, 1-based; 0 beyond the last part.
  int part(int i) const;

  Partition conjugate() const;
  Composition as_composition() const { return Composition(parts_); }

  /// Text format: comma-separated decimals, "-" for the empty partition.
  std::string str() const;
  static Partition parse(const std::string& text);

  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

/// Row colors of a partition padded to k rows: beta-numbers reduced mod r.
struct RowColorSequence {
  std::vector<int> colors;
  int modulus = 1;

  int length() const { return static_cast<int>(colors.size()); }
  bool operator==(const RowColorSequence&) const = default;
};

/// (l_1 + k - 1, l_2 + k - 2, ..., l_k + 0); requires k >= num_parts.
std::vector<int> beta_numbers(const Partition& lambda, int k);

/// Beta-numbers mod r; requires k >= num_parts, r >= 1.
RowColorSequence row_color_sequence(const Partition& lambda, int k, int r);

/// Degree of the irreducible S_n character indexed by lambda
/// (hook-length formula). dimension(empty) = 1.
Int dimension(const Partition& lambda);

/// All partitions of n, largest-lexicographic first: (n), ..., (1^n).
std::vector<Partition> partitions_of(int n);

/// Lexicographic comparison on the parts vectors.
bool lex_less(const Partition& a, const Partition& b);

Int factorial(long long n);

}  // namespace ribbonrep
