#include "ribbonrep/verify.hpp"

#include <algorithm>
#include <chrono>
#include <thread>

#include "json.hpp"
#include "ribbonrep/signs.hpp"

namespace ribbonrep {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

std::string int_str(const Int& v) { return v.str(); }

// Deterministic sample of reorderings of a partition-shaped mu: the
// reversal and a first-adjacent swap, when they differ from mu.
std::vector<Composition> mu_variants(const Partition& mu,
                                     bool with_compositions) {
  std::vector<Composition> out{mu.as_composition()};
  if (!with_compositions) return out;
  std::vector<int> rev(mu.parts().rbegin(), mu.parts().rend());
  if (rev != mu.parts()) out.push_back(Composition(rev));
  std::vector<int> swapped = mu.parts();
  for (size_t i = 0; i + 1 < swapped.size(); ++i) {
    if (swapped[i] != swapped[i + 1]) {
      std::swap(swapped[i], swapped[i + 1]);
      if (swapped != rev) out.push_back(Composition(swapped));
      break;
    }
  }
  return out;
}

struct ShardResult {
  long long pairs = 0;
  std::vector<VerificationFailure> failures;
};

// Runs fn(lambda_index, shard_result) for every lambda, sharded over
// `jobs` threads; results merge in lambda order.
template <typename Fn>
ShardResult sharded_over(size_t count, int jobs, Fn fn) {
  jobs = std::max(1, jobs);
  std::vector<ShardResult> slots(count);
  auto worker = [&](size_t start) {
    for (size_t i = start; i < count; i += jobs) fn(i, slots[i]);
  };
  if (jobs == 1 || count <= 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    for (int t = 0; t < jobs; ++t) threads.emplace_back(worker, t);
    for (std::thread& t : threads) t.join();
  }
  ShardResult merged;
  for (ShardResult& s : slots) {
    merged.pairs += s.pairs;
    std::move(s.failures.begin(), s.failures.end(),
              std::back_inserter(merged.failures));
  }
  return merged;
}

}  // namespace

bool VerificationReport::passed() const {
  return failures.empty() && matches_cyclic.value_or(true);
}

bool VerificationReport::same_profile(const VerificationReport& o) const {
  return pairs_checked == o.pairs_checked && failures == o.failures;
}

std::string VerificationReport::str() const {
  std::string out = "verify kind=" + kind;
  out += group ? " group=" + *group : " r=" + std::to_string(r);
  out += " n=" + std::to_string(n) +
         " pairs=" + std::to_string(pairs_checked) +
         " failures=" + std::to_string(failures.size());
  if (matches_cyclic)
    out += std::string(" matches_cyclic=") + (*matches_cyclic ? "yes" : "no");
  out += " elapsed_ms=" + std::to_string(elapsed_ms);
  out += passed() ? " PASS" : " FAIL";
  for (const VerificationFailure& f : failures)
    out += "\n  lambda=" + f.lambda + " mu=" + f.mu + " psi=" + f.psi +
           " chi=" + f.chi + " sign=" + (f.sign > 0 ? "+1" : "-1");
  return out;
}

std::string VerificationReport::to_json() const {
  nlohmann::json doc;
  doc["schema"] = "ribbonrep.verify/1";
  if (group)
    doc["group"] = *group;
  else
    doc["r"] = r;
  doc["kind"] = kind;
  doc["n"] = n;
  doc["pairs_checked"] = pairs_checked;
  auto& jfail = doc["failures"] = nlohmann::json::array();
  for (const VerificationFailure& f : failures)
    jfail.push_back({{"lambda", f.lambda},
                     {"mu", f.mu},
                     {"psi", f.psi},
                     {"chi", f.chi},
                     {"sign", f.sign}});
  doc["elapsed_ms"] = elapsed_ms;
  if (matches_cyclic) doc["matches_cyclic"] = *matches_cyclic;
  return doc.dump();
}

VerificationReport verify_identity(int r, int n, int jobs,
                                   bool with_compositions) {
  if (r < 1 || n < 1) throw std::invalid_argument("need r >= 1 and n >= 1");
  auto start = Clock::now();
  const std::vector<Partition> lambdas = enumerate_par_r(r, n);
  const std::vector<Partition> mus = partitions_of(n);

  ShardResult result = sharded_over(
      lambdas.size(), jobs, [&](size_t i, ShardResult& slot) {
        const Partition& lambda = lambdas[i];
        const int sign = sign_r(lambda, r);
        for (const Partition& mu : mus) {
          for (const Composition& var : mu_variants(mu, with_compositions)) {
            ++slot.pairs;
            Int psi = psi_zero_colored(lambda, var, r);
            Int chi = chi_sn(lambda, var.scaled(r));
            if (psi != sign * chi)
              slot.failures.push_back({lambda.str(), var.str(), int_str(psi),
                                       int_str(chi), sign});
          }
        }
      });

  VerificationReport report;
  report.r = r;
  report.n = n;
  report.pairs_checked = result.pairs;
  report.failures = std::move(result.failures);
  report.elapsed_ms = ms_since(start);
  return report;
}

VerificationReport verify_identity_abelian(const AbelianGroupSpec& group,
                                           int n, int jobs) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  auto start = Clock::now();
  const int r = group.order();
  const std::vector<Partition> lambdas = enumerate_par_r(r, n);
  const std::vector<Partition> mus = partitions_of(n);

  ShardResult result = sharded_over(
      lambdas.size(), jobs, [&](size_t i, ShardResult& slot) {
        const Partition& lambda = lambdas[i];
        const int sign = sign_r(lambda, r);
        const RPartitePartition label = r_quotient(lambda, r);
        for (const Partition& mu : mus) {
          ++slot.pairs;
          CyclotomicInt psi = psi_wreath(
              label, ColoredCycleType::zero_colored(mu.as_composition(), r),
              group);
          Int chi = chi_sn(lambda, mu.as_composition().scaled(r));
          auto psi_int = psi.as_integer();
          if (!psi_int || *psi_int != sign * chi)
            slot.failures.push_back({lambda.str(), mu.str(), psi.str(),
                                     int_str(chi), sign});
        }
      });

  VerificationReport report;
  report.r = r;
  report.group = group.str();
  report.n = n;
  report.pairs_checked = result.pairs;
  report.failures = std::move(result.failures);
  report.matches_cyclic =
      report.same_profile(verify_identity(r, n, jobs, false));
  report.elapsed_ms = ms_since(start);
  return report;
}

VerificationReport verify_degree_fact(int n) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  auto start = Clock::now();
  const AbelianGroupSpec z2({2});
  const Composition ones(std::vector<int>(n, 1));
  const Composition twos(std::vector<int>(n, 2));
  const ColoredCycleType identity_class =
      ColoredCycleType::zero_colored(ones, 2);

  VerificationReport report;
  report.r = 2;
  report.kind = "degree";
  report.n = n;
  for (const Partition& lambda : enumerate_par_r(2, n)) {
    ++report.pairs_checked;
    const int sign = sign_r(lambda, 2);
    CyclotomicInt degree =
        psi_wreath(r_quotient(lambda, 2), identity_class, z2);
    Int chi = chi_sn(lambda, twos);
    auto deg_int = degree.as_integer();
    Int abs_chi = chi < 0 ? Int(-chi) : chi;
    if (!deg_int || *deg_int != abs_chi || *deg_int != sign * chi)
      report.failures.push_back(
          {lambda.str(), twos.str(), degree.str(), int_str(chi), sign});
  }
  report.elapsed_ms = ms_since(start);
  return report;
}

}  // namespace ribbonrep
