#include "ribbonrep/ribbons.hpp"

#include <stdexcept>

namespace ribbonrep {

std::string PeelTrace::str() const {
  std::string out;
  for (const PeelStep& s : steps) {
    out += "q=" + std::to_string(s.switch_index) +
           " len=" + std::to_string(s.ribbon_length) +
           " ht=" + std::to_string(s.height) + "\n";
  }
  out += sign >= 0 ? "sign=+1\n" : "sign=-1\n";
  return out;
}

std::vector<int> peel_candidates(const BoundarySequence& b, int length) {
  if (length < 1) throw std::invalid_argument("ribbon length must be positive");
  std::vector<int> out;
  for (int q = 1; q + length <= b.length(); ++q)
    if (b.bit(q) && !b.bit(q + length)) out.push_back(q);
  return out;
}

namespace {

int zeros_between(const std::string& w, int q, int length, int step) {
  int count = 0;
  for (int p = q + step; p < q + length; p += step)
    if (w[p - 1] == '0') ++count;
  return count;
}

std::pair<BoundarySequence, int> peel_impl(const BoundarySequence& b, int q,
                                           int length, int step) {
  if (q < 1 || q + length > b.length() || !b.bit(q) || b.bit(q + length))
    throw std::invalid_argument("not a peelable switch index");
  std::string w = b.bits();
  int height = zeros_between(w, q, length, step);
  w[q - 1] = '0';
  w[q + length - 1] = '1';
  return {BoundarySequence(std::move(w)), height};
}

}  // namespace

std::pair<BoundarySequence, int> peel(const BoundarySequence& b, int q,
                                      int length) {
  return peel_impl(b, q, length, 1);
}

std::pair<BoundarySequence, int> peel_mod(const BoundarySequence& b, int q,
                                          int length, int r) {
  if (r < 1 || length % r != 0)
    throw std::invalid_argument("ribbon length must be a multiple of r");
  return peel_impl(b, q, length, r);
}

namespace {

struct TraceEnumerator {
  int r;
  int offset;  // aligns switch positions with quotient components
  const std::vector<int>& mu;
  std::string word;
  std::vector<PeelStep> steps;
  std::vector<PeelTrace> out;

  void run(int remaining) {
    if (remaining == 0) {
      int total = 0;
      for (const PeelStep& s : steps) total += s.height;
      out.push_back({steps, (total & 1) ? -1 : 1});
      return;
    }
    const int len = r * mu[remaining - 1];
    const int L = static_cast<int>(word.size());
    for (int q = 1; q + len <= L; ++q) {
      if (word[q - 1] != '1' || word[q + len - 1] != '0') continue;
      int ht = zeros_between(word, q, len, r);
      word[q - 1] = '0';
      word[q + len - 1] = '1';
      steps.push_back({q, len, ht, (q - 1 + offset) % r});
      run(remaining - 1);
      steps.pop_back();
      word[q - 1] = '1';
      word[q + len - 1] = '0';
    }
  }
};

}  // namespace

std::vector<PeelTrace> enumerate_mu_peelings(const Partition& lambda,
                                             const Composition& mu, int r) {
  if (r < 1) throw std::invalid_argument("r must be positive");
  if (lambda.empty() && !mu.empty()) return {};
  if (lambda.size() != r * mu.size())
    throw std::invalid_argument("size(lambda) must equal r * size(mu)");
  BoundarySequence b = boundary_sequence(lambda);
  TraceEnumerator e{r, (r - b.anchor() % r) % r, mu.parts(), b.bits(), {}, {}};
  e.run(mu.length());
  return std::move(e.out);
}

std::vector<RibbonRemoval> ribbon_removals(const Partition& lambda,
                                           int length) {
  if (length < 1) throw std::invalid_argument("ribbon length must be positive");
  std::vector<RibbonRemoval> out;
  const int k = lambda.num_parts();
  for (int i = 1; i <= k; ++i) {
    for (int j = i; j <= k; ++j) {
      // Removing a ribbon spanning rows i..j leaves l_{a+1} - 1 cells in
      // each row a < j and l_i - length + (j - i) cells in row j.
      int last = lambda.part(i) - length + (j - i);
      if (last < lambda.part(j + 1)) continue;
      if (j > i && last > lambda.part(j) - 1) continue;
      std::vector<int> rest;
      for (int a = 1; a < i; ++a) rest.push_back(lambda.part(a));
      for (int a = i; a < j; ++a) rest.push_back(lambda.part(a + 1) - 1);
      rest.push_back(last);
      for (int a = j + 1; a <= k; ++a) rest.push_back(lambda.part(a));
      while (!rest.empty() && rest.back() == 0) rest.pop_back();
      out.push_back({Partition(std::move(rest)), i, j, j - i});
    }
  }
  return out;
}

namespace {

struct TableauEnumerator {
  const std::vector<int>& lengths;
  std::vector<Partition> shapes;
  std::vector<RPartiteTableauEntry> entries;
  std::vector<RPartiteRibbonTableau> out;

  void run(int remaining) {
    if (remaining == 0) {
      out.push_back({entries});
      return;
    }
    const int len = lengths[remaining - 1];
    for (int f = 0; f < static_cast<int>(shapes.size()); ++f) {
      for (RibbonRemoval& rem : ribbon_removals(shapes[f], len)) {
        entries[remaining - 1] = {f, rem.row_lo, rem.row_hi, len, rem.height};
        std::swap(shapes[f], rem.rest);
        run(remaining - 1);
        std::swap(shapes[f], rem.rest);
      }
    }
  }
};

}  // namespace

std::vector<RPartiteRibbonTableau> enumerate_rpartite_tableaux(
    const RPartitePartition& shape, const Composition& lengths) {
  if (shape.total_size() != lengths.size())
    throw std::invalid_argument("total shape size must equal sum of lengths");
  TableauEnumerator e{lengths.parts(),
                      shape.components(),
                      std::vector<RPartiteTableauEntry>(lengths.length()),
                      {}};
  e.run(lengths.length());
  return std::move(e.out);
}

}  // namespace ribbonrep
