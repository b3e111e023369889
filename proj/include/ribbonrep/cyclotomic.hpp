#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ribbonrep/bigint.hpp"

namespace ribbonrep {

/// An element of Z[w], w a primitive L-th root of unity, kept in the
/// canonical form: the remainder modulo the L-th cyclotomic polynomial,
/// coefficients in ascending powers, trailing zeros dropped. Two values of
/// equal order are equal iff their coefficient vectors are identical;
/// values of different orders are compared after lifting to the lcm order.
class CyclotomicInt {
 public:
  CyclotomicInt() = default;  // zero, order 1
  CyclotomicInt(long long value);
  CyclotomicInt(Int value);

  /// w_L^e, any integer exponent.
  static CyclotomicInt root(long order, long long exponent);

  long order() const { return order_; }
  const std::vector<Int>& coeffs() const { return coeffs_; }

  bool is_zero() const { return coeffs_.empty(); }
  /// The value as a rational integer, if it is one.
  std::optional<Int> as_integer() const;

  /// Same value expressed at a multiple of the current order.
  CyclotomicInt lifted(long order) const;
  /// Complex conjugate (w^j -> w^(L-j)).
  CyclotomicInt conj() const;

  CyclotomicInt operator+(const CyclotomicInt& o) const;
  CyclotomicInt operator-(const CyclotomicInt& o) const;
  CyclotomicInt operator*(const CyclotomicInt& o) const;
  CyclotomicInt operator-() const;
  CyclotomicInt& operator+=(const CyclotomicInt& o);

  bool operator==(const CyclotomicInt& o) const;

  /// "5" for integers; otherwise e.g. "2 - w + 3w^2 (order 6)".
  std::string str() const;

 private:
  CyclotomicInt(long order, std::vector<Int> raw);  // reduces raw

  long order_ = 1;
  std::vector<Int> coeffs_;
};

/// Coefficients of the L-th cyclotomic polynomial, ascending powers.
/// Cached per L; safe for concurrent use.
const std::vector<Int>& cyclotomic_polynomial(long L);

}  // namespace ribbonrep
