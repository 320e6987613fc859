#include <doctest.h>

#include <set>
#include <sstream>
#include <string>

#include "hetbell/errors.hpp"
#include "hetbell/grid.hpp"
#include "hetbell/identities.hpp"

using namespace hetbell;

TEST_CASE("tags round-trip and unknown tags are rejected") {
  std::set<std::string> seen;
  for (Identity id : all_identities()) {
    const std::string tag(identity_tag(id));
    CHECK(seen.insert(tag).second);
    CHECK(identity_from_tag(tag) == id);
  }
  CHECK(seen.size() == 18);
  CHECK_THROWS_AS(identity_from_tag("BOGUS"), UnknownIdentity);
  CHECK_THROWS_AS(identity_from_tag(""), UnknownIdentity);
}

TEST_CASE("bernoulli closed form example passes") {
  IdentityParams p;
  p.dist = Distribution::bernoulli(Rational(1, 3));
  p.lambda = Rational(1, 2);
  p.n = 4;
  const auto report = verify_identity(Identity::BernoulliClosedForm, p);
  CHECK(report.pass);
  CHECK(!report.left.empty());
  CHECK(report.left.size() == report.right.size());
}

TEST_CASE("poisson sum moment example gives 6 on both sides") {
  IdentityParams p;
  p.dist = Distribution::poisson(2);
  p.lambda = 1;
  p.n = 1;
  p.k = 3;
  const auto report = verify_identity(Identity::PoissonSumMoment, p);
  CHECK(report.pass);
  REQUIRE(report.left.size() == 1);
  CHECK(std::get<Rational>(report.left[0]) == 6);
  CHECK(std::get<Rational>(report.right[0]) == 6);
}

TEST_CASE("power sum example gives 15 on both sides") {
  IdentityParams p;
  p.lambda = 7;
  p.n = 1;
  p.k = 5;
  const auto report = verify_identity(Identity::PowerSum, p);
  CHECK(report.pass);
  REQUIRE(report.left.size() == 1);
  CHECK(std::get<Rational>(report.left[0]) == 15);
  CHECK(std::get<Rational>(report.right[0]) == 15);
}

TEST_CASE("checks reject missing or mismatched parameters") {
  IdentityParams p;
  p.n = 3;
  CHECK_THROWS_AS(verify_identity(Identity::StirlingTransform, p), std::invalid_argument);
  p.dist = Distribution::bernoulli(Rational(1, 2));
  CHECK_THROWS_AS(verify_identity(Identity::PoissonSumMoment, p), std::invalid_argument);
  CHECK_THROWS_AS(verify_identity(Identity::Addition, p), std::invalid_argument);
  p.dist = Distribution::moments({1, 1});
  CHECK_THROWS_AS(verify_identity(Identity::StirlingTransform, p), MomentUnavailable);
}

TEST_CASE("every identity enumerates a nonempty shipped grid") {
  const VerifyGrid& grid = VerifyGrid::shipped();
  for (Identity id : all_identities()) {
    CAPTURE(identity_tag(id));
    CHECK(!enumerate_grid(id, grid).empty());
  }
}

TEST_CASE("sampled identities use at least three points") {
  const VerifyGrid& grid = VerifyGrid::shipped();
  for (Identity id : {Identity::ShiftedRecurrence, Identity::Addition, Identity::PartialBellShifted,
                      Identity::PartialBellStirling}) {
    for (const auto& [_, params] : enumerate_grid(id, grid)) {
      std::set<Rational> distinct(params.samples.begin(), params.samples.end());
      CHECK(distinct.size() >= 3);
    }
  }
}

TEST_CASE("grid parsing") {
  std::istringstream in(
      "# comment\n"
      "version = 3\n"
      "n_max = 4   # trailing comment\n"
      "lambdas = 0, 1/2\n"
      "addition.n_max = 2\n"
      "distributions = const:1 ; bernoulli:1/2\n"
      "\n");
  const VerifyGrid grid = VerifyGrid::parse(in);
  CHECK(grid.version() == 3);
  CHECK(grid.integer(Identity::Addition, "n_max") == 2);
  CHECK(grid.integer(Identity::Recurrence, "n_max") == 4);
  CHECK(grid.rationals(Identity::Recurrence, "lambdas") == std::vector<Rational>{0, Rational(1, 2)});
  REQUIRE(grid.distributions(Identity::Recurrence).size() == 2);
  CHECK(grid.distributions(Identity::Recurrence)[1].str() == "bernoulli:1/2");
  CHECK_THROWS_AS(grid.integer(Identity::Recurrence, "k_max"), ParseError);

  std::istringstream bad("just words\n");
  CHECK_THROWS_AS(VerifyGrid::parse(bad), ParseError);
  std::istringstream bad_int("n_max = seven\n");
  const VerifyGrid g2 = VerifyGrid::parse(bad_int);
  CHECK_THROWS_AS(g2.integer(Identity::Recurrence, "n_max"), ParseError);
  CHECK_THROWS_AS(VerifyGrid::parse_file("/nonexistent/grid.conf"), ParseError);
}

TEST_CASE("shipped config file matches the embedded grid") {
  const VerifyGrid from_file = VerifyGrid::parse_file(HETBELL_SOURCE_DIR "/config/verify_grid.conf");
  CHECK(from_file.entries() == VerifyGrid::shipped().entries());
  CHECK(from_file.version() >= 1);
}

TEST_CASE("verification output order is deterministic") {
  const std::vector<Identity> ids{Identity::Limits, Identity::PowerSum, Identity::BernoulliClosedForm};
  const auto a = run_verification(ids, VerifyGrid::shipped());
  const auto b = run_verification(ids, VerifyGrid::shipped());
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].id == b[i].id);
    CHECK(a[i].params == b[i].params);
    CHECK(a[i].pass);
  }
  CHECK(a.front().id == Identity::Limits);
  CHECK(a.back().id == Identity::BernoulliClosedForm);
}
