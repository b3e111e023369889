#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "ribbonrep/verify.hpp"

using namespace ribbonrep;

TEST_CASE("identity sweep on hand-checked instances") {
  VerificationReport small = verify_identity(2, 1);
  CHECK(small.pairs_checked == 2);
  CHECK(small.failures.empty());
  CHECK(small.passed());

  VerificationReport r3 = verify_identity(3, 2);
  CHECK(r3.pairs_checked == 18);
  CHECK(r3.failures.empty());

  VerificationReport trivial = verify_identity(1, 4);
  CHECK(trivial.pairs_checked == 25);  // p(4)^2
  CHECK(trivial.passed());
}

TEST_CASE("pairs counted = |Par_r(rn)| x p(n)") {
  for (int r = 2; r <= 3; ++r) {
    for (int n = 1; n <= 3; ++n) {
      VerificationReport report = verify_identity(r, n);
      long long expected =
          static_cast<long long>(enumerate_par_r(r, n).size()) *
          partitions_of(n).size();
      CHECK(report.pairs_checked == expected);
      CHECK(report.passed());
    }
  }
}

TEST_CASE("abelian sweep matches the cyclic sweep") {
  VerificationReport b2 = verify_identity_abelian(AbelianGroupSpec({2}), 2);
  CHECK(b2.pairs_checked == 10);
  CHECK(b2.failures.empty());
  REQUIRE(b2.matches_cyclic.has_value());
  CHECK(*b2.matches_cyclic);
  CHECK(b2.passed());

  VerificationReport klein =
      verify_identity_abelian(AbelianGroupSpec({2, 2}), 2);
  VerificationReport z4 = verify_identity_abelian(AbelianGroupSpec({4}), 2);
  CHECK(klein.same_profile(z4));
  CHECK(klein.passed());

  CHECK(verify_identity_abelian(AbelianGroupSpec({1}), 3).passed());
}

TEST_CASE("degree fact") {
  VerificationReport n1 = verify_degree_fact(1);
  CHECK(n1.pairs_checked == 2);
  CHECK(n1.passed());

  VerificationReport n2 = verify_degree_fact(2);
  CHECK(n2.pairs_checked == 5);
  CHECK(n2.passed());

  VerificationReport n4 = verify_degree_fact(4);
  CHECK(n4.pairs_checked == 20);
  CHECK(n4.passed());
}

TEST_CASE("reordered compositions also satisfy the identity") {
  VerificationReport plain = verify_identity(2, 4);
  VerificationReport extended = verify_identity(2, 4, 1, true);
  CHECK(extended.pairs_checked > plain.pairs_checked);
  CHECK(extended.passed());
}

TEST_CASE("sharded sweeps produce identical reports") {
  VerificationReport serial = verify_identity(2, 4, 1);
  VerificationReport parallel = verify_identity(2, 4, 4);
  CHECK(serial.same_profile(parallel));
  CHECK(serial.pairs_checked == parallel.pairs_checked);
}

TEST_CASE("report serialization") {
  VerificationReport report = verify_identity(2, 2);
  std::string json = report.to_json();
  CHECK(json.find("\"schema\":\"ribbonrep.verify/1\"") != std::string::npos);
  CHECK(json.find("\"r\":2") != std::string::npos);
  CHECK(json.find("\"pairs_checked\":10") != std::string::npos);
  CHECK(json.find("\"failures\":[]") != std::string::npos);
  CHECK(json.find("\"elapsed_ms\":") != std::string::npos);
  CHECK(report.str().find("PASS") != std::string::npos);

  VerificationReport abelian =
      verify_identity_abelian(AbelianGroupSpec({2, 2}), 1);
  CHECK(abelian.to_json().find("\"group\":\"2x2\"") != std::string::npos);
}
