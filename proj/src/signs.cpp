#include "ribbonrep/signs.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace ribbonrep {

namespace {

long long inversions(const std::vector<int>& a) {
  long long count = 0;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = i + 1; j < a.size(); ++j)
      if (a[i] > a[j]) ++count;
  return count;
}

void require_empty_core(const Partition& lambda, int r) {
  Partition core = r_core(lambda, r);
  if (!core.empty()) throw NonemptyCoreError(std::move(core), r);
}

int default_k(const Partition& lambda) {
  return std::max(lambda.num_parts(), 1);
}

int sign_at_k(const Partition& lambda, int k, int r) {
  long long diff = inv_r(lambda, k, r) - inv_r(Partition(), k, r);
  return (diff % 2 == 0) ? 1 : -1;
}

long long distance_at_k(const Partition& lambda, int k, int r) {
  std::vector<int> from = row_color_sequence(lambda, k, r).colors;
  std::vector<int> to = row_color_sequence(Partition(), k, r).colors;
  // Match equal letters in order; the adjacent-transposition distance
  // between the words is the inversion count of the induced permutation.
  std::vector<std::vector<int>> positions(r);
  for (size_t j = 0; j < to.size(); ++j)
    positions[to[j]].push_back(static_cast<int>(j));
  std::vector<int> next(r, 0);
  std::vector<int> perm(from.size());
  for (size_t i = 0; i < from.size(); ++i) {
    int v = from[i];
    if (next[v] >= static_cast<int>(positions[v].size()))
      throw std::logic_error("row-color multisets differ");
    perm[i] = positions[v][next[v]++];
  }
  return inversions(perm);
}

}  // namespace

long long inv_r(const Partition& lambda, int k, int r) {
  return inversions(row_color_sequence(lambda, k, r).colors);
}

int sign_r(const Partition& lambda, int r) {
  if (r < 1) throw std::invalid_argument("r must be positive");
  require_empty_core(lambda, r);
  int k = default_k(lambda);
  int sign = sign_at_k(lambda, k, r);
  if (sign != sign_at_k(lambda, k + 1, r))
    throw std::logic_error("sign_r disagrees between k and k+1");
  return sign;
}

long long d_r_distance(const Partition& lambda, int r) {
  if (r < 1) throw std::invalid_argument("r must be positive");
  require_empty_core(lambda, r);
  return distance_at_k(lambda, default_k(lambda), r);
}

int sign2_closed(const Partition& lambda) {
  require_empty_core(lambda, 2);
  long long odd = 0;
  for (int p : lambda.parts())
    if (p % 2) ++odd;
  return (odd / 2) % 2 == 0 ? 1 : -1;
}

SignReport sign_report(const Partition& lambda, int r,
                       std::optional<int> k_override) {
  if (r < 1) throw std::invalid_argument("r must be positive");
  require_empty_core(lambda, r);
  int k = k_override.value_or(default_k(lambda));
  SignReport report;
  report.lambda = lambda;
  report.r = r;
  report.k_used = k;
  report.inv_count = inv_r(lambda, k, r);
  report.inv_count_empty = inv_r(Partition(), k, r);
  report.d_r = distance_at_k(lambda, k, r);
  report.sign = sign_r(lambda, r);
  if (r == 2) report.sign2_closed = sign2_closed(lambda);
  return report;
}

std::string SignReport::str() const {
  std::string out = "lambda=" + lambda.str() + " r=" + std::to_string(r) +
                    " k=" + std::to_string(k_used) +
                    " inv=" + std::to_string(inv_count) +
                    " inv_empty=" + std::to_string(inv_count_empty) +
                    " d=" + std::to_string(d_r) +
                    " sign=" + (sign > 0 ? std::string("+1") : "-1");
  if (sign2_closed)
    out += " sign2_closed=" + (*sign2_closed > 0 ? std::string("+1") : "-1");
  return out;
}

std::string SignReport::to_json() const {
  nlohmann::json doc;
  doc["schema"] = "ribbonrep.sign/1";
  doc["lambda"] = lambda.str();
  doc["r"] = r;
  doc["k"] = k_used;
  doc["inv"] = inv_count;
  doc["inv_empty"] = inv_count_empty;
  doc["d"] = d_r;
  doc["sign"] = sign;
  if (sign2_closed) doc["sign2_closed"] = *sign2_closed;
  return doc.dump();
}

}  // namespace ribbonrep
