#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ribbonrep/characters.hpp"

namespace ribbonrep {

/// One violated instance, with full witness data.
struct VerificationFailure {
  std::string lambda;
  std::string mu;
  std::string psi;
  std::string chi;
  int sign = 1;

  bool operator==(const VerificationFailure&) const = default;
};

struct VerificationReport {
  int r = 1;
  std::optional<std::string> group;  // set by the abelian sweep
  std::string kind = "identity";     // "identity" or "degree"
  int n = 0;
  long long pairs_checked = 0;
  std::vector<VerificationFailure> failures;
  double elapsed_ms = 0.0;
  /// Abelian sweeps only: whether the profile coincides with the cyclic
  /// sweep at the same order.
  std::optional<bool> matches_cyclic;

  bool passed() const;
  /// Same pass/fail content, ignoring timing.
  bool same_profile(const VerificationReport& o) const;

  std::string str() const;
  std::string to_json() const;  // schema ribbonrep.verify/1
};

/// Checks psi_zero_colored(lambda, mu, r) = sign_r(lambda) * chi(lambda,
/// r*mu) for every lambda in Par_r(rn) and mu a partition of n; with
/// with_compositions, a deterministic sample of reordered compositions is
/// added. Work is sharded by lambda across `jobs` threads.
VerificationReport verify_identity(int r, int n, int jobs = 1,
                                   bool with_compositions = false);

/// Same sweep with psi computed by psi_wreath over G at zero-colored
/// classes, labels mapped through the r-quotient; also compares the
/// profile against verify_identity(|G|, n).
VerificationReport verify_identity_abelian(const AbelianGroupSpec& group,
                                           int n, int jobs = 1);

/// For every lambda in Par_2(2n): the degree of the wreath character
/// equals |chi^lambda| at cycle type (2^n), with sign sign_2(lambda).
VerificationReport verify_degree_fact(int n);

}  // namespace ribbonrep
