#include "ribbonrep/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace ribbonrep {

namespace {

// Quotient of num by a monic den with integer coefficients; the division
// must be exact.
std::vector<Int> poly_divide_exact(std::vector<Int> num,
                                   const std::vector<Int>& den) {
  const size_t dd = den.size() - 1;
  if (num.size() <= dd) throw std::logic_error("degree underflow in division");
  std::vector<Int> quot(num.size() - dd);
  for (size_t i = num.size(); i-- > dd;) {
    Int c = num[i];
    quot[i - dd] = c;
    if (c == 0) continue;
    for (size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  for (const Int& c : num)
    if (c != 0) throw std::logic_error("inexact cyclotomic division");
  return quot;
}

std::vector<Int> reduce_mod(std::vector<Int> v, const std::vector<Int>& phi) {
  const size_t deg = phi.size() - 1;
  for (size_t i = v.size(); i-- > deg;) {
    if (v[i] == 0) continue;
    Int c = v[i];
    for (size_t j = 0; j <= deg; ++j) v[i - deg + j] -= c * phi[j];
  }
  if (v.size() > deg) v.resize(deg);
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

}  // namespace

const std::vector<Int>& cyclotomic_polynomial(long L) {
  if (L < 1) throw std::invalid_argument("order must be positive");
  static std::mutex mutex;
  static std::map<long, std::vector<Int>> cache;
  std::scoped_lock lock(mutex);
  auto it = cache.find(L);
  if (it != cache.end()) return it->second;
  for (long d = 1; d <= L; ++d) {
    if (L % d != 0 || cache.count(d)) continue;
    std::vector<Int> p(d + 1);  // x^d - 1
    p[0] = -1;
    p[d] = 1;
    for (long e = 1; e < d; ++e)
      if (d % e == 0) p = poly_divide_exact(std::move(p), cache.at(e));
    cache.emplace(d, std::move(p));
  }
  return cache.at(L);
}

CyclotomicInt::CyclotomicInt(long long value) : CyclotomicInt(Int(value)) {}

CyclotomicInt::CyclotomicInt(Int value) {
  if (value != 0) coeffs_.push_back(std::move(value));
}

CyclotomicInt::CyclotomicInt(long order, std::vector<Int> raw)
    : order_(order),
      coeffs_(reduce_mod(std::move(raw), cyclotomic_polynomial(order))) {}

CyclotomicInt CyclotomicInt::root(long order, long long exponent) {
  if (order < 1) throw std::invalid_argument("order must be positive");
  long long e = ((exponent % order) + order) % order;
  std::vector<Int> raw(e + 1);
  raw[e] = 1;
  return CyclotomicInt(order, std::move(raw));
}

std::optional<Int> CyclotomicInt::as_integer() const {
  if (coeffs_.empty()) return Int(0);
  if (coeffs_.size() == 1) return coeffs_[0];
  return std::nullopt;
}

CyclotomicInt CyclotomicInt::lifted(long order) const {
  if (order == order_) return *this;
  if (order % order_ != 0)
    throw std::invalid_argument("can only lift to a multiple of the order");
  const long step = order / order_;
  std::vector<Int> raw;
  raw.resize(coeffs_.empty() ? 0 : (coeffs_.size() - 1) * step + 1);
  for (size_t i = 0; i < coeffs_.size(); ++i) raw[i * step] = coeffs_[i];
  return CyclotomicInt(order, std::move(raw));
}

CyclotomicInt CyclotomicInt::conj() const {
  std::vector<Int> raw(order_);
  for (size_t i = 0; i < coeffs_.size(); ++i)
    raw[(order_ - static_cast<long>(i)) % order_] += coeffs_[i];
  return CyclotomicInt(order_, std::move(raw));
}

CyclotomicInt CyclotomicInt::operator+(const CyclotomicInt& o) const {
  long L = std::lcm(order_, o.order_);
  CyclotomicInt a = lifted(L), b = o.lifted(L);
  std::vector<Int> raw = std::move(a.coeffs_);
  if (raw.size() < b.coeffs_.size()) raw.resize(b.coeffs_.size());
  for (size_t i = 0; i < b.coeffs_.size(); ++i) raw[i] += b.coeffs_[i];
  return CyclotomicInt(L, std::move(raw));
}

CyclotomicInt CyclotomicInt::operator-(const CyclotomicInt& o) const {
  return *this + (-o);
}

CyclotomicInt CyclotomicInt::operator*(const CyclotomicInt& o) const {
  long L = std::lcm(order_, o.order_);
  CyclotomicInt a = lifted(L), b = o.lifted(L);
  if (a.coeffs_.empty() || b.coeffs_.empty()) return CyclotomicInt(L, {});
  std::vector<Int> raw(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j)
      raw[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return CyclotomicInt(L, std::move(raw));
}

CyclotomicInt CyclotomicInt::operator-() const {
  CyclotomicInt out = *this;
  for (Int& c : out.coeffs_) c = -c;
  return out;
}

CyclotomicInt& CyclotomicInt::operator+=(const CyclotomicInt& o) {
  *this = *this + o;
  return *this;
}

bool CyclotomicInt::operator==(const CyclotomicInt& o) const {
  if (order_ == o.order_) return coeffs_ == o.coeffs_;
  long L = std::lcm(order_, o.order_);
  return lifted(L).coeffs_ == o.lifted(L).coeffs_;
}

std::string CyclotomicInt::str() const {
  if (auto n = as_integer()) return n->str();
  std::string out;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    const Int& c = coeffs_[i];
    if (c == 0) continue;
    Int mag = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) out += "-";
      first = false;
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (i == 0) {
      out += mag.str();
    } else {
      if (mag != 1) out += mag.str();
      out += "w";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  out += " (order " + std::to_string(order_) + ")";
  return out;
}

}  // namespace ribbonrep
