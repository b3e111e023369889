#include "ribbonrep/quotient.hpp"

#include <algorithm>
#include <stdexcept>

namespace ribbonrep {

RPartitePartition::RPartitePartition(std::vector<Partition> components)
    : components_(std::move(components)) {
  if (components_.empty())
    throw std::invalid_argument("arity must be at least 1");
}

long long RPartitePartition::total_size() const {
  long long n = 0;
  for (const Partition& p : components_) n += p.size();
  return n;
}

std::string RPartitePartition::str() const {
  std::string out = "[";
  for (size_t i = 0; i < components_.size(); ++i) {
    if (i) out.push_back('|');
    out += components_[i].str();
  }
  out.push_back(']');
  return out;
}

RPartitePartition RPartitePartition::parse(const std::string& text) {
  if (text.size() < 2 || text.front() != '[' || text.back() != ']')
    throw std::invalid_argument("r-partite literal must be bracketed: " + text);
  std::string body = text.substr(1, text.size() - 2);
  std::vector<Partition> components;
  size_t pos = 0;
  while (true) {
    size_t bar = body.find('|', pos);
    std::string token = body.substr(
        pos, bar == std::string::npos ? std::string::npos : bar - pos);
    components.push_back(Partition::parse(token));
    if (bar == std::string::npos) break;
    pos = bar + 1;
  }
  return RPartitePartition(std::move(components));
}

NonemptyCoreError::NonemptyCoreError(Partition core, int r)
    : std::invalid_argument("partition has nonempty " + std::to_string(r) +
                            "-core " + core.str()),
      core_(std::move(core)),
      r_(r) {}

Partition phi_r(const RPartitePartition& t) {
  const int r = t.arity();
  std::vector<std::string> words;
  int anchor = 0, right = 0;
  for (int j = 0; j < r; ++j) {
    BoundarySequence b = boundary_sequence(t.component(j));
    anchor = std::max(anchor, b.anchor());
    right = std::max(right, b.length() - b.anchor());
    words.push_back(b.bits());
  }
  // Pad to common length and common anchor: leading 0s, trailing 1s.
  for (int j = 0; j < r; ++j) {
    BoundarySequence b(words[j]);
    words[j] = std::string(anchor - b.anchor(), '0') + words[j] +
               std::string(right - (b.length() - b.anchor()), '1');
  }
  const int t_len = anchor + right;
  std::string merged;
  merged.reserve(static_cast<size_t>(r) * t_len);
  for (int p = 0; p < r * t_len; ++p) merged.push_back(words[p % r][p / r]);
  return BoundarySequence(std::move(merged)).to_partition();
}

Partition r_core(const Partition& lambda, int r) {
  if (r < 1) throw std::invalid_argument("r must be positive");
  std::string w = boundary_sequence(lambda).bits();
  const int len = static_cast<int>(w.size());
  bool changed = true;
  while (changed) {
    changed = false;
    for (int q = 1; q + r <= len; ++q) {
      if (w[q - 1] == '1' && w[q + r - 1] == '0') {
        w[q - 1] = '0';
        w[q + r - 1] = '1';
        changed = true;
        break;
      }
    }
  }
  return BoundarySequence(std::move(w)).to_partition();
}

RPartitePartition r_quotient(const Partition& lambda, int r) {
  if (r < 1) throw std::invalid_argument("r must be positive");
  Partition core = r_core(lambda, r);
  if (!core.empty()) throw NonemptyCoreError(std::move(core), r);
  BoundarySequence b = boundary_sequence(lambda);
  // Align the anchor to a multiple of r, then read off every r-th bit.
  const int lead = (r - b.anchor() % r) % r;
  std::string w = std::string(lead, '0') + b.bits();
  w += std::string((r - w.size() % r) % r, '1');
  std::vector<Partition> components(r);
  for (int j = 0; j < r; ++j) {
    std::string comp;
    for (size_t p = j; p < w.size(); p += r) comp.push_back(w[p]);
    components[j] = BoundarySequence(std::move(comp)).to_partition();
  }
  return RPartitePartition(std::move(components));
}

std::vector<Partition> enumerate_par_r(int r, long long n) {
  if (r < 1 || n < 0) throw std::invalid_argument("need r >= 1 and n >= 0");
  std::vector<Partition> out;
  for (Partition& p : partitions_of(static_cast<int>(r * n)))
    if (r_core(p, r).empty()) out.push_back(std::move(p));
  return out;
}

namespace {

bool tuple_lex_less(const RPartitePartition& a, const RPartitePartition& b) {
  for (int j = 0; j < a.arity(); ++j) {
    if (a.component(j) == b.component(j)) continue;
    return lex_less(a.component(j), b.component(j));
  }
  return false;
}

void gen_tuples(int r, int remaining, std::vector<Partition>& cur,
                std::vector<RPartitePartition>& out) {
  if (static_cast<int>(cur.size()) == r - 1) {
    cur.push_back(Partition());
    for (const Partition& p : partitions_of(remaining)) {
      cur.back() = p;
      out.push_back(RPartitePartition(cur));
    }
    cur.pop_back();
    return;
  }
  for (int k = remaining; k >= 0; --k) {
    cur.push_back(Partition());
    for (const Partition& p : partitions_of(k)) {
      cur.back() = p;
      gen_tuples(r, remaining - k, cur, out);
    }
    cur.pop_back();
  }
}

}  // namespace

std::vector<RPartitePartition> rpartite_partitions(int r, int n) {
  if (r < 1 || n < 0) throw std::invalid_argument("need r >= 1 and n >= 0");
  std::vector<RPartitePartition> out;
  std::vector<Partition> cur;
  gen_tuples(r, n, cur, out);
  std::sort(out.begin(), out.end(),
            [](const RPartitePartition& a, const RPartitePartition& b) {
              return tuple_lex_less(b, a);
            });
  return out;
}

}  // namespace ribbonrep
