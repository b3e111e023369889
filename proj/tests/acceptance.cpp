// Acceptance suite: runs every release criterion at its pinned tolerance
// and prints one PASS/FAIL line per criterion. Exits nonzero if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "ribbonrep/characters.hpp"
#include "ribbonrep/ribbons.hpp"
#include "ribbonrep/signs.hpp"
#include "ribbonrep/verify.hpp"

using namespace ribbonrep;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int index, const std::string& name, bool ok,
            const std::string& detail = "") {
  std::printf("%s  %2d. %s%s%s\n", ok ? "PASS" : "FAIL", index, name.c_str(),
              detail.empty() ? "" : " -- ", detail.c_str());
  if (!ok) ++failures;
}

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

// 1. The interlacing example and its inverse, exact, under 1 ms.
void criterion_phi_example() {
  RPartitePartition tuple = RPartitePartition::parse("[4,3|2|1,1]");
  Partition expected = P({10, 6, 6, 6, 4, 1});
  bool exact = phi_r(tuple) == expected && r_quotient(expected, 3) == tuple &&
               tuple.total_size() == 11 && expected.size() == 33;
  const int reps = 1000;
  auto start = Clock::now();
  for (int i = 0; i < reps; ++i) {
    if (phi_r(tuple) != expected) exact = false;
    if (r_quotient(expected, 3) != tuple) exact = false;
  }
  double per_round = elapsed_ms(start) / reps;
  report(1, "phi_3([4,3|2|1,1]) = 10,6,6,6,4,1 and back, < 1 ms",
         exact && per_round < 1.0,
         std::to_string(per_round) + " ms per round trip");
}

// 2. Worked beta/color/distance/sign values for (5,5,4,3,1) at r = 3.
void criterion_sign_example() {
  Partition lambda = P({5, 5, 4, 3, 1});
  bool ok = beta_numbers(lambda, 5) == std::vector<int>{9, 8, 6, 4, 1};
  ok = ok && row_color_sequence(lambda, 5, 3).colors ==
                 std::vector<int>{0, 2, 0, 1, 1};
  ok = ok && d_r_distance(lambda, 3) == 4;
  ok = ok && sign_r(lambda, 3) == 1;
  report(2, "beta=(9,8,6,4,1), a=(0,2,0,1,1), d_3=4, sign_3=+1", ok);
}

// 3. The worked peeling of (10,6,6,6,4,1): mod-3 heights (0,1,1,1), sign -1.
void criterion_worked_peeling() {
  auto traces = enumerate_mu_peelings(P({10, 6, 6, 6, 4, 1}),
                                      Composition::parse("3,2,4,2"), 3);
  PeelTrace expected{{{5, 6, 0, 1}, {4, 12, 1, 0}, {3, 6, 1, 2}, {1, 9, 1, 0}},
                     -1};
  bool found = std::count(traces.begin(), traces.end(), expected) == 1;
  std::vector<int> heights;
  for (const PeelStep& s : expected.steps) heights.push_back(s.height);
  bool ok = found && heights == std::vector<int>{0, 1, 1, 1} &&
            expected.sign == -1;
  report(3, "worked peeling has heights (0,1,1,1) and contributes -1", ok);
}

// 4. Exhaustive identity sweep, zero failures, < 60 s single-threaded.
void criterion_identity_sweeps() {
  auto start = Clock::now();
  bool ok = true;
  long long pairs = 0;
  std::string first_fail;
  for (auto [r, n] : std::vector<std::pair<int, int>>{
           {2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 1}, {3, 2}, {3, 3}, {3, 4},
           {4, 1}, {4, 2}, {4, 3}, {4, 4}, {2, 5}, {2, 6}}) {
    VerificationReport result = verify_identity(r, n, 1);
    pairs += result.pairs_checked;
    if (!result.passed() && first_fail.empty()) {
      ok = false;
      first_fail = "first failure at r=" + std::to_string(r) +
                   " n=" + std::to_string(n);
    }
  }
  double total = elapsed_ms(start);
  ok = ok && total < 60000.0;
  report(4, "identity sweep {2,3,4}x{1..4} + (2,5),(2,6), zero failures",
         ok,
         std::to_string(pairs) + " pairs in " + std::to_string(total) +
             " ms" + (first_fail.empty() ? "" : "; " + first_fail));
}

// 5. The abelian reports depend only on |G|: Z_4 vs Z_2 x Z_2, n <= 3.
void criterion_group_structure_independence() {
  bool ok = true;
  for (int n = 1; n <= 3; ++n) {
    VerificationReport z4 = verify_identity_abelian(AbelianGroupSpec({4}), n);
    VerificationReport klein =
        verify_identity_abelian(AbelianGroupSpec({2, 2}), n);
    ok = ok && z4.passed() && klein.passed() && z4.same_profile(klein);
  }
  report(5, "Z_4 and Z_2xZ_2 reports coincide for n <= 3", ok);
}

// 6. The closed 2-sign formula on all of Par_2(2n), n <= 6.
void criterion_sign2_closed() {
  bool ok = true;
  long long checked = 0;
  for (int n = 1; n <= 6; ++n) {
    for (const Partition& lambda : enumerate_par_r(2, n)) {
      ++checked;
      if (sign2_closed(lambda) != sign_r(lambda, 2)) ok = false;
    }
  }
  report(6, "sign2_closed == sign_2 on Par_2(2n), n <= 6", ok,
         std::to_string(checked) + " partitions");
}

// 7. Boundary-peeling evaluator vs direct r-partite tableau enumeration.
void criterion_dual_path() {
  bool ok = true;
  long long checked = 0;
  for (int r = 1; r <= 3; ++r) {
    for (int n = 1; n <= 4; ++n) {
      for (const Partition& lambda : enumerate_par_r(r, n)) {
        RPartitePartition quotient = r_quotient(lambda, r);
        for (const Partition& mu : partitions_of(n)) {
          ++checked;
          long long direct = 0;
          for (const RPartiteRibbonTableau& t : enumerate_rpartite_tableaux(
                   quotient, mu.as_composition())) {
            int height = 0;
            for (const RPartiteTableauEntry& e : t.entries)
              height += e.height;
            direct += (height & 1) ? -1 : 1;
          }
          if (psi_zero_colored(lambda, mu.as_composition(), r) != direct)
            ok = false;
        }
      }
    }
  }
  report(7, "peeling evaluator == tableau enumeration, r <= 3, n <= 4", ok,
         std::to_string(checked) + " pairs");
}

// 8. Orthogonality of full tables, plus sums of squared degrees.
void criterion_orthogonality() {
  bool ok = true;
  for (auto [orders, max_n] : std::vector<std::pair<std::vector<int>, int>>{
           {{2}, 4}, {{3}, 3}, {{2, 2}, 2}}) {
    AbelianGroupSpec group(orders);
    for (int n = 1; n <= max_n; ++n) {
      CharacterTable table = character_table(group, n);
      Int group_order = factorial(n);
      for (int i = 0; i < n; ++i) group_order *= group.order();
      const size_t m = table.labels.size();
      size_t identity_col = m;
      for (size_t c = 0; c < m; ++c)
        if (table.classes[c].color(0).num_parts() == n) identity_col = c;
      Int degree_squares = 0;
      for (size_t a = 0; a < m; ++a) {
        auto degree = table.entries[a][identity_col].as_integer();
        if (!degree) {
          ok = false;
          continue;
        }
        degree_squares += *degree * *degree;
        for (size_t b = a; b < m; ++b) {
          CyclotomicInt sum(0);
          for (size_t c = 0; c < m; ++c)
            sum += CyclotomicInt(table.class_sizes[c]) * table.entries[a][c] *
                   table.entries[b][c].conj();
          if (sum != CyclotomicInt(a == b ? group_order : Int(0))) ok = false;
        }
      }
      if (degree_squares != group_order) ok = false;
    }
  }
  // S_n column orthogonality, exact, n <= 6
  AbelianGroupSpec trivial({1});
  for (int n = 1; n <= 6; ++n) {
    auto mus = partitions_of(n);
    for (size_t i = 0; i < mus.size(); ++i) {
      for (size_t j = i; j < mus.size(); ++j) {
        Int sum = 0;
        for (const Partition& lambda : mus)
          sum += chi_sn(lambda, mus[i].as_composition()) *
                 chi_sn(lambda, mus[j].as_composition());
        Int expected =
            i == j ? centralizer_order(
                         ColoredCycleType(std::vector<Partition>{mus[i]}),
                         trivial, n)
                   : Int(0);
        if (sum != expected) ok = false;
      }
    }
  }
  report(8, "row/column orthogonality and degree sums, exact", ok);
}

// 9. Degrees match |chi| at (2^n) with sign sign_2, n <= 5.
void criterion_degree_fact() {
  bool ok = true;
  long long checked = 0;
  for (int n = 1; n <= 5; ++n) {
    VerificationReport result = verify_degree_fact(n);
    checked += result.pairs_checked;
    if (!result.passed()) ok = false;
  }
  report(9, "wreath degrees = sign_2 * chi at (2^n), n <= 5", ok,
         std::to_string(checked) + " labels");
}

// 10. Single-peel sign ratios, exhaustive for size <= 15, r <= 3.
void criterion_step_law() {
  bool ok = true;
  long long checked = 0;
  for (int r = 1; r <= 3; ++r) {
    for (int size = r; size <= 15; size += r) {
      for (const Partition& lambda : enumerate_par_r(r, size / r)) {
        BoundarySequence b = boundary_sequence(lambda);
        int sign = sign_r(lambda, r);
        for (int m = 1; r * m <= size; ++m) {
          for (int q : peel_candidates(b, r * m)) {
            ++checked;
            auto [word, full_ht] = peel(b, q, r * m);
            auto [same_word, mod_ht] = peel_mod(b, q, r * m, r);
            int off_residue = full_ht - mod_ht;
            int ratio = sign * sign_r(word.to_partition(), r);
            if (ratio != (off_residue % 2 == 0 ? 1 : -1)) ok = false;
          }
        }
      }
    }
  }
  report(10, "single-peel sign ratio = sign_r(lambda)/sign_r(lambda')", ok,
         std::to_string(checked) + " peels");
}

}  // namespace

int main() {
  criterion_phi_example();
  criterion_sign_example();
  criterion_worked_peeling();
  criterion_identity_sweeps();
  criterion_group_structure_independence();
  criterion_sign2_closed();
  criterion_dual_path();
  criterion_orthogonality();
  criterion_degree_fact();
  criterion_step_law();
  if (failures) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
