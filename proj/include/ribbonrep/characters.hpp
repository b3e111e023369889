#pragma once

#include <string>
#include <vector>

#include "ribbonrep/cyclotomic.hpp"
#include "ribbonrep/partition.hpp"
#include "ribbonrep/quotient.hpp"

namespace ribbonrep {

/// A finite abelian group presented as a product of cyclic groups.
/// Elements and irreducible characters are both indexed 0..r-1 by tuples
/// of residues in lexicographic order, identity / trivial character first.
class AbelianGroupSpec {
 public:
  explicit AbelianGroupSpec(std::vector<int> cyclic_orders);
  /// Grammar: x-separated cyclic orders ("2x2"); a bare integer is the
  /// cyclic group; "1" is the trivial group.
  static AbelianGroupSpec parse(const std::string& text);

  const std::vector<int>& cyclic_orders() const { return orders_; }
  int order() const { return order_; }       // r = |G|
  long exponent() const { return exponent_; }  // L = lcm of the orders

  /// theta_a(g) for character index a and element index g, as an exact
  /// root of unity of order exponent().
  CyclotomicInt theta(int char_index, int elem_index) const;

  std::string str() const;

  bool operator==(const AbelianGroupSpec&) const = default;

 private:
  std::vector<int> orders_;
  int order_ = 1;
  long exponent_ = 1;
};

/// A conjugacy class of G wr S_n: one partition of cycle lengths per
/// group element (color), colors in element-enumeration order.
class ColoredCycleType {
 public:
  explicit ColoredCycleType(std::vector<Partition> per_color);
  /// Class with all cycles colored by the identity.
  static ColoredCycleType zero_colored(const Composition& mu, int r);

  int arity() const { return static_cast<int>(per_color_.size()); }
  const Partition& color(int g) const { return per_color_[g]; }
  const std::vector<Partition>& per_color() const { return per_color_; }
  long long total_size() const;

  /// Same bracketed format as r-partite partitions.
  std::string str() const;
  static ColoredCycleType parse(const std::string& text);

  bool operator==(const ColoredCycleType&) const = default;

 private:
  std::vector<Partition> per_color_;
};

/// Irreducible S_n character value chi^lambda(mu), by recursive ribbon
/// peeling with memoization; independent of the ordering of mu.
/// Requires size(lambda) = size(mu).
Int chi_sn(const Partition& lambda, const Composition& mu);

/// Irreducible G wr S_n character value psi^shape at class c, exact in
/// Z[w_L]. Requires arity(shape) = |G| = arity(c) and equal total sizes.
CyclotomicInt psi_wreath(const RPartitePartition& shape,
                         const ColoredCycleType& c,
                         const AbelianGroupSpec& group);

/// psi at a zero-colored class, evaluated on the single boundary word of
/// lambda with the mod-r height rule. Requires an empty r-core and
/// size(lambda) = r * size(mu).
Int psi_zero_colored(const Partition& lambda, const Composition& mu, int r);

Int centralizer_order(const ColoredCycleType& c, const AbelianGroupSpec& group,
                      long long n);
Int class_size(const ColoredCycleType& c, const AbelianGroupSpec& group,
               long long n);

struct CharacterTable {
  AbelianGroupSpec group;
  int n = 0;
  std::vector<RPartitePartition> labels;   // rows
  std::vector<ColoredCycleType> classes;   // columns
  std::vector<Int> class_sizes;
  std::vector<std::vector<CyclotomicInt>> entries;

  std::string to_tsv() const;
  std::string to_json() const;  // schema ribbonrep.table/1
};

/// The full exact character table of G wr S_n, labels and classes in
/// descending lexicographic order.
CharacterTable character_table(const AbelianGroupSpec& group, int n);

}  // namespace ribbonrep
