#include <doctest.h>

#include "hookzeta/error.hpp"
#include "hookzeta/verify.hpp"

using namespace hookzeta;

TEST_CASE("verification passes for small n") {
  VerifyOptions o;
  o.n_max = 3;
  o.max_exp = 6;
  o.coeff_limit = 20;
  const auto report = run_verification(o);
  CHECK(report["passed"] == true);
  CHECK(report["failed"].empty());
  CHECK(report["erratum"]["sum_0_to_v_consistent"] == true);
  CHECK(report["erratum"]["sum_0_to_v_minus_1_consistent"] == false);
  for (const auto& c : report["checks"]) CHECK_MESSAGE(c["passed"] == true, c.dump());
}

TEST_CASE("verification is deterministic for a fixed seed") {
  VerifyOptions o;
  o.n_max = 2;
  o.max_exp = 4;
  o.coeff_limit = 10;
  o.seed = 99;
  CHECK(run_verification(o).dump() == run_verification(o).dump());
}

TEST_CASE("a sign error in the generators is caught") {
  VerifyOptions o;
  o.n_max = 3;
  o.max_exp = 4;
  o.coeff_limit = 10;
  o.inject_sign_error = true;
  const auto report = run_verification(o);
  CHECK(report["passed"] == false);
  bool named = false;
  for (const auto& f : report["failed"]) named = named || f == "Coxeter relations";
  CHECK(named);
}

TEST_CASE("verification rejects bad options") {
  VerifyOptions o;
  o.n_max = 1;
  CHECK_THROWS_AS(run_verification(o), Error);
}
