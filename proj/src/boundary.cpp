#include "ribbonrep/boundary.hpp"

#include <algorithm>
#include <stdexcept>

namespace ribbonrep {

namespace {

// The m_i sequence increases by exactly 1 per position, so the anchor gap
// (the unique zero of m over the gaps 0..t) sits after as many bits as the
// word has 0s.
int count_zeros(const std::string& bits) {
  return static_cast<int>(std::count(bits.begin(), bits.end(), '0'));
}

}  // namespace

BoundarySequence::BoundarySequence(std::string bits) : bits_(std::move(bits)) {
  for (char c : bits_)
    if (c != '0' && c != '1')
      throw std::invalid_argument("boundary words contain only 0 and 1");
  anchor_ = count_zeros(bits_);
}

bool BoundarySequence::is_canonical() const {
  return bits_.empty() || (bits_.front() == '1' && bits_.back() == '0');
}

BoundarySequence BoundarySequence::trimmed() const {
  size_t lo = bits_.find('1');
  if (lo == std::string::npos) return BoundarySequence();
  size_t hi = bits_.find_last_of('0');
  if (hi == std::string::npos || hi < lo) return BoundarySequence();
  return BoundarySequence(bits_.substr(lo, hi - lo + 1));
}

Partition BoundarySequence::to_partition() const {
  BoundarySequence canon = trimmed();
  const std::string& w = canon.bits_;
  // The 0 for row i (rows bottom to top) sits at position l_i + k - i + 1.
  std::vector<int> parts;
  int ones = 0;
  for (char c : w) {
    if (c == '1')
      ++ones;
    else
      parts.push_back(ones);
  }
  std::reverse(parts.begin(), parts.end());
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return Partition(parts);
}

std::string BoundarySequence::display(bool with_anchor) const {
  if (!with_anchor) return bits_;
  std::string out = bits_;
  out.insert(out.begin() + anchor_, '|');
  return out;
}

BoundarySequence boundary_sequence(const Partition& lambda) {
  return boundary_sequence(lambda, lambda.num_parts());
}

BoundarySequence boundary_sequence(const Partition& lambda, int pad_rows) {
  if (pad_rows < lambda.num_parts())
    throw std::invalid_argument("pad_rows must cover every part");
  // Walk rows bottom to top: (l_i - l_{i+1}) east steps, then one north step.
  std::string bits;
  bits.reserve(lambda.part(1) + pad_rows);
  for (int i = pad_rows; i >= 1; --i) {
    for (int c = lambda.part(i + 1); c < lambda.part(i); ++c)
      bits.push_back('1');
    bits.push_back('0');
  }
  return BoundarySequence(std::move(bits));
}

Partition partition_from_boundary(const BoundarySequence& b) {
  return b.to_partition();
}

int anchor_position(const std::string& word) {
  bool has_one = word.find('1') != std::string::npos;
  bool has_zero = word.find('0') != std::string::npos;
  if (!has_one || !has_zero)
    throw std::invalid_argument("word must contain both a 0 and a 1");
  return BoundarySequence(word).anchor();
}

}  // namespace ribbonrep
