#include "ribbonrep/characters.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "json.hpp"

namespace ribbonrep {

AbelianGroupSpec::AbelianGroupSpec(std::vector<int> cyclic_orders) {
  for (int d : cyclic_orders) {
    if (d < 1) throw std::invalid_argument("cyclic orders must be positive");
    if (d == 1) continue;  // trivial factors drop out
    orders_.push_back(d);
    order_ *= d;
    exponent_ = std::lcm(exponent_, static_cast<long>(d));
  }
}

AbelianGroupSpec AbelianGroupSpec::parse(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty group spec");
  std::vector<int> orders;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t x = text.find('x', pos);
    std::string token = text.substr(
        pos, x == std::string::npos ? std::string::npos : x - pos);
    if (token.empty() || token.size() > 6 ||
        token.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad group spec token '" + token + "'");
    long v = std::stol(token);
    if (v < 1) throw std::invalid_argument("bad group spec token '" + token + "'");
    orders.push_back(static_cast<int>(v));
    if (x == std::string::npos) break;
    pos = x + 1;
  }
  return AbelianGroupSpec(std::move(orders));
}

CyclotomicInt AbelianGroupSpec::theta(int char_index, int elem_index) const {
  if (char_index < 0 || char_index >= order_ || elem_index < 0 ||
      elem_index >= order_)
    throw std::invalid_argument("index out of range for group");
  // Decode both indices into residue tuples (first factor most
  // significant, so index 0 is the identity / trivial character).
  long e = 0;
  int a = char_index, g = elem_index;
  for (size_t i = orders_.size(); i-- > 0;) {
    int d = orders_[i];
    e += (exponent_ / d) * static_cast<long>(a % d) * (g % d);
    a /= d;
    g /= d;
  }
  return CyclotomicInt::root(exponent_, e);
}

std::string AbelianGroupSpec::str() const {
  if (orders_.empty()) return "1";
  std::string out;
  for (size_t i = 0; i < orders_.size(); ++i) {
    if (i) out.push_back('x');
    out += std::to_string(orders_[i]);
  }
  return out;
}

ColoredCycleType::ColoredCycleType(std::vector<Partition> per_color)
    : per_color_(std::move(per_color)) {
  if (per_color_.empty())
    throw std::invalid_argument("a class needs at least one color");
}

ColoredCycleType ColoredCycleType::zero_colored(const Composition& mu, int r) {
  if (r < 1) throw std::invalid_argument("r must be positive");
  std::vector<int> parts = mu.parts();
  std::sort(parts.rbegin(), parts.rend());
  std::vector<Partition> per_color(r);
  per_color[0] = Partition(std::move(parts));
  return ColoredCycleType(std::move(per_color));
}

long long ColoredCycleType::total_size() const {
  long long n = 0;
  for (const Partition& p : per_color_) n += p.size();
  return n;
}

std::string ColoredCycleType::str() const {
  std::string out = "[";
  for (size_t i = 0; i < per_color_.size(); ++i) {
    if (i) out.push_back('|');
    out += per_color_[i].str();
  }
  out.push_back(']');
  return out;
}

ColoredCycleType ColoredCycleType::parse(const std::string& text) {
  return ColoredCycleType(RPartitePartition::parse(text).components());
}

namespace {

void trim_word(std::string& w) {
  size_t lo = w.find('1');
  if (lo == std::string::npos) {
    w.clear();
    return;
  }
  size_t hi = w.find_last_of('0');
  if (hi == std::string::npos || hi < lo) {
    w.clear();
    return;
  }
  w = w.substr(lo, hi - lo + 1);
}

// Recursive peel-and-sum on a single boundary word, heights counted at
// positions congruent to the switch index mod r. Memoized on the
// canonical word plus the number of parts still to peel.
struct BoundaryEvaluator {
  int r;
  std::vector<int> lengths;  // ribbon lengths, index t-1 peeled first
  std::unordered_map<std::string, Int> memo;

  Int eval(const std::string& word, int remaining) {
    if (remaining == 0) return Int(1);
    std::string key = word;
    key.push_back('#');
    key += std::to_string(remaining);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const int len = lengths[remaining - 1];
    const int L = static_cast<int>(word.size());
    Int total = 0;
    for (int q = 1; q + len <= L; ++q) {
      if (word[q - 1] != '1' || word[q + len - 1] != '0') continue;
      int ht = 0;
      for (int p = q + r; p < q + len; p += r)
        if (word[p - 1] == '0') ++ht;
      std::string next = word;
      next[q - 1] = '0';
      next[q + len - 1] = '1';
      trim_word(next);
      Int sub = eval(next, remaining - 1);
      if (ht & 1)
        total -= sub;
      else
        total += sub;
    }
    memo.emplace(std::move(key), total);
    return total;
  }
};

}  // namespace

Int chi_sn(const Partition& lambda, const Composition& mu) {
  if (lambda.size() != mu.size())
    throw std::invalid_argument("lambda and mu must have equal size");
  BoundaryEvaluator ev{1, mu.parts(), {}};
  return ev.eval(boundary_sequence(lambda).bits(), mu.length());
}

Int psi_zero_colored(const Partition& lambda, const Composition& mu, int r) {
  if (r < 1) throw std::invalid_argument("r must be positive");
  if (lambda.size() != r * mu.size())
    throw std::invalid_argument("size(lambda) must equal r * size(mu)");
  Partition core = r_core(lambda, r);
  if (!core.empty()) throw NonemptyCoreError(std::move(core), r);
  BoundaryEvaluator ev{r, mu.scaled(r).parts(), {}};
  return ev.eval(boundary_sequence(lambda).bits(), mu.length());
}

namespace {

// Same recursion over the r component words of a wreath label; each cycle
// can be peeled from any component f, contributing theta_f at its color.
struct WreathEvaluator {
  const AbelianGroupSpec& group;
  std::vector<std::pair<int, int>> cycles;  // (length, color), back first
  std::unordered_map<std::string, CyclotomicInt> memo;

  CyclotomicInt eval(std::vector<std::string>& words, int remaining) {
    if (remaining == 0) return CyclotomicInt(1);
    std::string key;
    for (const std::string& w : words) {
      key += w;
      key.push_back('/');
    }
    key += std::to_string(remaining);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const auto [len, color] = cycles[remaining - 1];
    CyclotomicInt total;
    for (int f = 0; f < static_cast<int>(words.size()); ++f) {
      const std::string word = words[f];
      const int L = static_cast<int>(word.size());
      for (int q = 1; q + len <= L; ++q) {
        if (word[q - 1] != '1' || word[q + len - 1] != '0') continue;
        int ht = 0;
        for (int p = q + 1; p < q + len; ++p)
          if (word[p - 1] == '0') ++ht;
        std::string next = word;
        next[q - 1] = '0';
        next[q + len - 1] = '1';
        trim_word(next);
        words[f] = std::move(next);
        CyclotomicInt factor = group.theta(f, color);
        if (ht & 1) factor = -factor;
        total += factor * eval(words, remaining - 1);
        words[f] = word;
      }
    }
    memo.emplace(std::move(key), total);
    return total;
  }
};

}  // namespace

CyclotomicInt psi_wreath(const RPartitePartition& shape,
                         const ColoredCycleType& c,
                         const AbelianGroupSpec& group) {
  if (shape.arity() != group.order() || c.arity() != group.order())
    throw std::invalid_argument("label and class arity must equal |G|");
  if (shape.total_size() != c.total_size())
    throw std::invalid_argument("label and class sizes must match");
  std::vector<std::pair<int, int>> cycles;
  for (int g = 0; g < c.arity(); ++g)
    for (int part : c.color(g).parts()) cycles.emplace_back(part, g);
  std::vector<std::string> words;
  for (const Partition& comp : shape.components())
    words.push_back(boundary_sequence(comp).bits());
  WreathEvaluator ev{group, std::move(cycles), {}};
  return ev.eval(words, static_cast<int>(ev.cycles.size()));
}

Int centralizer_order(const ColoredCycleType& c, const AbelianGroupSpec& group,
                      long long n) {
  if (c.arity() != group.order())
    throw std::invalid_argument("class arity must equal |G|");
  if (c.total_size() != n)
    throw std::invalid_argument("class size inconsistent with n");
  Int z = 1;
  for (int g = 0; g < c.arity(); ++g) {
    const std::vector<int>& parts = c.color(g).parts();
    size_t i = 0;
    while (i < parts.size()) {
      size_t j = i;
      while (j < parts.size() && parts[j] == parts[i]) ++j;
      long long mult = static_cast<long long>(j - i);
      for (long long m = 1; m <= mult; ++m)
        z *= Int(parts[i]) * m * group.order();
      i = j;
    }
  }
  return z;
}

Int class_size(const ColoredCycleType& c, const AbelianGroupSpec& group,
               long long n) {
  Int order = factorial(n);
  for (long long i = 0; i < n; ++i) order *= group.order();
  return order / centralizer_order(c, group, n);
}

CharacterTable character_table(const AbelianGroupSpec& group, int n) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  CharacterTable table{group, n, {}, {}, {}, {}};
  table.labels = rpartite_partitions(group.order(), n);
  for (const RPartitePartition& t : table.labels) {
    table.classes.push_back(ColoredCycleType(t.components()));
    table.class_sizes.push_back(class_size(table.classes.back(), group, n));
  }
  for (const RPartitePartition& label : table.labels) {
    std::vector<CyclotomicInt> row;
    row.reserve(table.classes.size());
    for (const ColoredCycleType& cls : table.classes)
      row.push_back(psi_wreath(label, cls, group));
    table.entries.push_back(std::move(row));
  }
  return table;
}

std::string CharacterTable::to_json() const {
  nlohmann::json doc;
  doc["schema"] = "ribbonrep.table/1";
  doc["group"] = group.str();
  doc["n"] = n;
  auto& jlabels = doc["labels"] = nlohmann::json::array();
  for (const RPartitePartition& t : labels) jlabels.push_back(t.str());
  auto& jclasses = doc["classes"] = nlohmann::json::array();
  for (const ColoredCycleType& c : classes) jclasses.push_back(c.str());
  auto& jsizes = doc["class_sizes"] = nlohmann::json::array();
  for (const Int& s : class_sizes) jsizes.push_back(s.str());
  auto& jentries = doc["entries"] = nlohmann::json::array();
  for (const auto& row : entries) {
    nlohmann::json jrow = nlohmann::json::array();
    for (const CyclotomicInt& v : row) jrow.push_back(v.str());
    jentries.push_back(std::move(jrow));
  }
  return doc.dump();
}

std::string CharacterTable::to_tsv() const {
  std::string out = "label";
  for (const ColoredCycleType& cls : classes) out += "\t" + cls.str();
  out += "\nclasssize";
  for (const Int& s : class_sizes) out += "\t" + s.str();
  out += "\n";
  for (size_t i = 0; i < labels.size(); ++i) {
    out += labels[i].str();
    for (const CyclotomicInt& v : entries[i]) out += "\t" + v.str();
    out += "\n";
  }
  return out;
}

}  // namespace ribbonrep
