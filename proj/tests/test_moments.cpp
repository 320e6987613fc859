#include <doctest.h>

#include <thread>
#include <vector>

#include "hetbell/coefficients.hpp"
#include "hetbell/distribution.hpp"
#include "hetbell/errors.hpp"
#include "hetbell/hetero.hpp"

using namespace hetbell;

namespace {

std::vector<Distribution> builtin_set() {
  return {Distribution::constant(1),
          Distribution::constant(Rational(-3, 2)),
          Distribution::bernoulli(Rational(1, 3)),
          Distribution::bernoulli(Rational(1, 2)),
          Distribution::poisson(1),
          Distribution::poisson(Rational(5, 2)),
          Distribution::finite({{0, Rational(1, 2)}, {2, Rational(1, 2)}}),
          Distribution::finite({{-1, Rational(1, 4)}, {0, Rational(1, 4)}, {2, Rational(1, 2)}})};
}

// E[S_{a+b}^n] from the moment sequences of S_a and S_b.
Rational convolved(const Distribution& d, std::size_t a, std::size_t b, std::size_t n) {
  Rational sum;
  for (std::size_t i = 0; i <= n; ++i) sum += binomial(n, i) * sum_raw_moment(d, a, i) * sum_raw_moment(d, b, n - i);
  return sum;
}

}  // namespace

TEST_CASE("raw moment examples") {
  const Rational p(2, 7);
  CHECK(raw_moment(Distribution::bernoulli(p), 3) == p);
  CHECK(raw_moment(Distribution::bernoulli(p), 0) == 1);
  const Rational alpha(3, 5);
  CHECK(raw_moment(Distribution::poisson(alpha), 2) == alpha + alpha * alpha);
  CHECK(raw_moment(Distribution::poisson(1), 5) == 52);
  CHECK(raw_moment(Distribution::constant(Rational(-4, 3)), 0) == 1);
  CHECK(raw_moment(Distribution::constant(Rational(-4, 3)), 3) == Rational(-64, 27));
  CHECK(raw_moment(Distribution::finite({{-1, Rational(1, 4)}, {3, Rational(3, 4)}}), 2) == 7);
}

TEST_CASE("moment list exhaustion") {
  const auto d = Distribution::parse("moments:1/2,1,5");
  CHECK(raw_moment(d, 0) == 1);
  CHECK(raw_moment(d, 3) == 5);
  CHECK(d.moment_depth() == 3);
  CHECK_THROWS_AS(raw_moment(d, 4), MomentUnavailable);
  CHECK_THROWS_AS(sum_raw_moment(d, 2, 4), MomentUnavailable);
  CHECK_THROWS_AS(prob_hetero_stirling(d, 4, 2, 1), MomentUnavailable);
  CHECK(sum_raw_moment(d, 2, 2) == 2 * Rational(1) + 2 * Rational(1, 4));
}

TEST_CASE("sum raw moment examples") {
  const Rational p(3, 8);
  CHECK(sum_raw_moment(Distribution::bernoulli(p), 2, 2) == 2 * p + 2 * p * p);
  for (const auto& d : builtin_set()) {
    CHECK(sum_raw_moment(d, 0, 3) == 0);
    CHECK(sum_raw_moment(d, 0, 0) == 1);
    CHECK(sum_raw_moment(d, 4, 0) == 1);
  }
  const Rational alpha(7, 3);
  CHECK(sum_raw_moment(Distribution::poisson(alpha), 2, 1) == 2 * alpha);
  // S_3 of Poisson(alpha) is Poisson(3 alpha).
  CHECK(sum_raw_moment(Distribution::poisson(alpha), 3, 4) == raw_moment(Distribution::poisson(3 * alpha), 4));
}

TEST_CASE("degenerate rising moment examples") {
  const Rational p(1, 5);
  for (const Rational lambda : {Rational(0), Rational(1, 2), Rational(3)}) {
    for (std::size_t n = 0; n <= 8; ++n) {
      CHECK(deg_rising_moment(Distribution::bernoulli(p), n, lambda) ==
            (n == 0 ? Rational(1) : deg_rising_factorial(1, n, lambda) * p));
      CHECK(deg_rising_moment(Distribution::constant(Rational(2, 3)), n, lambda) ==
            deg_rising_factorial(Rational(2, 3), n, lambda));
    }
    for (const auto& d : builtin_set()) CHECK(deg_rising_moment(d, 0, lambda) == 1);
  }
  CHECK(deg_rising_moment(Distribution::constant(1), 2, Rational(1, 2)) == Rational(3, 2));
}

TEST_CASE("sum degenerate rising moment examples") {
  const Rational alpha(3, 4);
  for (const Rational lambda : {Rational(0), Rational(2, 3)}) {
    for (std::size_t k = 0; k <= 4; ++k) {
      CHECK(sum_deg_rising_moment(Distribution::poisson(alpha), k, 1, lambda) == Rational(k) * alpha);
    }
    for (const auto& d : builtin_set()) {
      for (std::size_t n = 1; n <= 5; ++n) CHECK(sum_deg_rising_moment(d, 0, n, lambda) == 0);
    }
  }
  const Rational p(1, 4);
  const Rational lambda(1, 2);
  for (std::size_t k = 0; k <= 5; ++k) {
    for (std::size_t n = 0; n <= 6; ++n) {
      Rational rhs;
      for (std::size_t j = 0; j <= std::min(k, n); ++j) {
        rhs += binomial(k, j) * pow(p, j) * factorial(j) * hetero_stirling(n, j, lambda);
      }
      CHECK(sum_deg_rising_moment(Distribution::bernoulli(p), k, n, lambda) == rhs);
    }
  }
}

TEST_CASE("property: one-term partial sums are raw moments") {
  for (const auto& d : builtin_set()) {
    for (std::size_t n = 0; n <= 12; ++n) CHECK(sum_raw_moment(d, 1, n) == raw_moment(d, n));
  }
}

TEST_CASE("property: partial sums split by convolution") {
  for (const auto& d : builtin_set()) {
    for (std::size_t a = 0; a <= 6; ++a) {
      for (std::size_t b = 0; a + b <= 6; ++b) {
        for (std::size_t n = 0; n <= 8; ++n) CHECK(convolved(d, a, b, n) == sum_raw_moment(d, a + b, n));
      }
    }
  }
}

TEST_CASE("property: poisson rising moments are heterogeneous bell values") {
  for (const Rational alpha : {Rational(1), Rational(2), Rational(1, 2)}) {
    const auto d = Distribution::poisson(alpha);
    for (const Rational lambda : {Rational(0), Rational(1, 2), Rational(1)}) {
      for (std::size_t n = 0; n <= 10; ++n) {
        for (std::size_t k = 0; k <= 5; ++k) {
          CHECK(sum_deg_rising_moment(d, k, n, lambda) == hetero_bell_poly(n, lambda)(Rational(k) * alpha));
        }
      }
    }
  }
}

TEST_CASE("property: bernoulli rising moments match the closed form") {
  for (const Rational p : {Rational(1, 4), Rational(1, 3), Rational(1)}) {
    const auto d = Distribution::bernoulli(p);
    for (const Rational lambda : {Rational(0), Rational(1, 2), Rational(1), Rational(3)}) {
      for (std::size_t n = 0; n <= 12; ++n) {
        for (std::size_t k = 0; k <= 8; ++k) {
          Rational rhs;
          for (std::size_t j = 0; j <= n; ++j) {
            rhs += binomial(k, j) * pow(p, j) * factorial(j) * hetero_stirling(n, j, lambda);
          }
          CHECK(sum_deg_rising_moment(d, k, n, lambda) == rhs);
        }
      }
    }
  }
}

TEST_CASE("distribution validation") {
  CHECK_THROWS_AS(Distribution::bernoulli(Rational(3, 2)), InvalidDistribution);
  CHECK_THROWS_AS(Distribution::bernoulli(Rational(-1, 2)), InvalidDistribution);
  CHECK_THROWS_AS(Distribution::poisson(0), InvalidDistribution);
  CHECK_THROWS_AS(Distribution::finite({{1, Rational(1, 2)}}), InvalidDistribution);
  CHECK_THROWS_AS(Distribution::finite({{1, Rational(3, 2)}, {2, Rational(-1, 2)}}), InvalidDistribution);
  CHECK_THROWS_AS(Distribution::moments({2, 1}), InvalidDistribution);
  CHECK_NOTHROW(Distribution::bernoulli(0));
  CHECK_NOTHROW(Distribution::bernoulli(1));
}

TEST_CASE("distribution parse round-trips") {
  for (const char* spec : {"bernoulli:1/3", "poisson:2", "const:-5/2", "finite:-1:1/4,0:1/4,2:1/2", "moments:1,2,5"}) {
    CAPTURE(std::string(spec));
    const auto d = Distribution::parse(spec);
    CHECK(d.str() == spec);
    CHECK(Distribution::parse(d.str()).str() == d.str());
  }
  for (const char* bad : {"", "bernoulli", "bernoulli:", "gauss:1", "poisson:x", "finite:1", "finite:1:1/2,2",
                          "bernoulli:2", "moments:"}) {
    CAPTURE(std::string(bad));
    CHECK_THROWS_AS(Distribution::parse(bad), Error);
  }
}

TEST_CASE("support bounds") {
  CHECK(Distribution::bernoulli(Rational(1, 2)).support_bound() == Rational(1));
  CHECK(Distribution::constant(Rational(-7, 2)).support_bound() == Rational(7, 2));
  CHECK(Distribution::finite({{-3, Rational(1, 2)}, {2, Rational(1, 2)}}).support_bound() == Rational(3));
  CHECK(!Distribution::poisson(1).support_bound().has_value());
  CHECK(!Distribution::moments({1, 0, 1}).support_bound().has_value());
}

TEST_CASE("moment cache is safe under concurrent queries") {
  const auto d = Distribution::poisson(Rational(3, 2));
  std::vector<Rational> results(8);
  std::vector<std::thread> threads;
  for (std::size_t i = 0; i < results.size(); ++i) {
    threads.emplace_back([&, i] {
      for (std::size_t k = 0; k <= 6; ++k) (void)sum_raw_moment(d, 6 - k, 10 - i);
      results[i] = sum_raw_moment(d, 5, 9);
    });
  }
  for (auto& t : threads) t.join();
  for (const auto& r : results) CHECK(r == raw_moment(Distribution::poisson(Rational(15, 2)), 9));
}
