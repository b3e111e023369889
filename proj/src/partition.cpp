#include "ribbonrep/partition.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace ribbonrep {

namespace {

std::string join_parts(const std::vector<int>& parts) {
  if (parts.empty()) return "-";
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(parts[i]);
  }
  return out;
}

std::vector<int> parse_parts(const std::string& text) {
  if (text == "-") return {};
  if (text.empty()) throw std::invalid_argument("empty partition literal");
  std::vector<int> parts;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string token = text.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (token.empty() || token.size() > 9 ||
        token.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad part token '" + token + "'");
    long v = std::stol(token);
    if (v <= 0) throw std::invalid_argument("bad part token '" + token + "'");
    parts.push_back(static_cast<int>(v));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return parts;
}

}  // namespace

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p <= 0) throw std::invalid_argument("composition parts must be positive");
}

long long Composition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

Composition Composition::scaled(int r) const {
  if (r <= 0) throw std::invalid_argument("scale factor must be positive");
  std::vector<int> out(parts_);
  for (int& p : out) {
    long long scaled = static_cast<long long>(p) * r;
    if (scaled > std::numeric_limits<int>::max())
      throw std::invalid_argument("scaled part overflows");
    p = static_cast<int>(scaled);
  }
  return Composition(out);
}

std::string Composition::str() const { return join_parts(parts_); }

Composition Composition::parse(const std::string& text) {
  return Composition(parse_parts(text));
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw std::invalid_argument("partition parts must be positive");
    if (i && parts_[i - 1] < parts_[i])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

long long Partition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

int Partition::part(int i) const {
  return (i >= 1 && i <= num_parts()) ? parts_[i - 1] : 0;
}

Partition Partition::conjugate() const {
  std::vector<int> out(parts_.empty() ? 0 : parts_[0], 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++out[j];
  return Partition(out);
}

std::string Partition::str() const { return join_parts(parts_); }

Partition Partition::parse(const std::string& text) {
  return Partition(parse_parts(text));
}

std::vector<int> beta_numbers(const Partition& lambda, int k) {
  if (k < lambda.num_parts())
    throw std::invalid_argument("k must be at least the number of parts");
  if (k < 1) throw std::invalid_argument("k must be positive");
  std::vector<int> beta(k);
  for (int i = 1; i <= k; ++i) beta[i - 1] = lambda.part(i) + k - i;
  return beta;
}

RowColorSequence row_color_sequence(const Partition& lambda, int k, int r) {
  if (r < 1) throw std::invalid_argument("modulus must be positive");
  RowColorSequence seq;
  seq.modulus = r;
  seq.colors = beta_numbers(lambda, k);
  for (int& c : seq.colors) c %= r;
  return seq;
}

Int factorial(long long n) {
  Int f = 1;
  for (long long i = 2; i <= n; ++i) f *= i;
  return f;
}

Int dimension(const Partition& lambda) {
  if (lambda.empty()) return 1;
  Partition conj = lambda.conjugate();
  Int hooks = 1;
  for (int i = 1; i <= lambda.num_parts(); ++i)
    for (int j = 1; j <= lambda.part(i); ++j)
      hooks *= lambda.part(i) - j + conj.part(j) - i + 1;
  return factorial(lambda.size()) / hooks;
}

namespace {

void gen_partitions(int n, int max_part, std::vector<int>& cur,
                    std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(Partition(cur));
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    gen_partitions(n - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> cur;
  gen_partitions(n, n, cur, out);
  return out;
}

bool lex_less(const Partition& a, const Partition& b) {
  return std::lexicographical_compare(a.parts().begin(), a.parts().end(),
                                      b.parts().begin(), b.parts().end());
}

}  // namespace ribbonrep
