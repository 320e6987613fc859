#include <doctest.h>

#include <array>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <vector>

#include "hetbell/coefficients.hpp"
#include "hetbell/errors.hpp"
#include "hetbell/polynomial.hpp"
#include "hetbell/rational.hpp"
#include "support/random.hpp"

using hetbell::Polynomial;
using hetbell::Rational;

namespace {

bool canonical(const Rational& r) {
  return r.denominator() > 0 && gcd(r.numerator(), r.denominator()) == 1;
}

}  // namespace

TEST_SUITE("rational") {
  TEST_CASE("construction normalizes") {
    const Rational r(6, -4);
    CHECK(r.str() == "-3/2");
    CHECK(canonical(r));
    CHECK(Rational(0, -7).str() == "0");
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  }

  TEST_CASE("parse accepts integers and fractions") {
    CHECK(Rational::parse("5") == 5);
    CHECK(Rational::parse("-5") == -5);
    CHECK(Rational::parse("+5") == 5);
    CHECK(Rational::parse("10/4") == Rational(5, 2));
    CHECK(Rational::parse("-1/3") == Rational(-1, 3));
    CHECK(Rational::parse("  7/3\t") == Rational(7, 3));
    CHECK(Rational::parse("123456789012345678901234567890").str() == "123456789012345678901234567890");
  }

  TEST_CASE("parse rejects malformed text") {
    for (const char* bad : {"", "/", "1/", "/2", "1/0", "abc", "1.5", "1/2/3", "- 1", "1e3", "1 /2"}) {
      CAPTURE(std::string(bad));
      CHECK_THROWS_AS(Rational::parse(bad), hetbell::ParseError);
    }
  }

  TEST_CASE("arithmetic is exact") {
    const Rational a(1, 3);
    const Rational b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == b);
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == 2);
    CHECK_THROWS_AS(a / Rational(0), std::domain_error);
    CHECK(pow(Rational(-2, 3), 3) == Rational(-8, 27));
    CHECK(pow(Rational(5), 0) == 1);
    CHECK(abs(Rational(-7, 2)) == Rational(7, 2));
  }

  TEST_CASE("ordering and hashing") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(std::hash<Rational>{}(Rational(2, 4)) == std::hash<Rational>{}(Rational(1, 2)));
    std::ostringstream os;
    os << Rational(-9, 12);
    CHECK(os.str() == "-3/4");
  }

  TEST_CASE("property: field axioms and canonical form on random values") {
    testing_support::Gen gen;
    for (int i = 0; i < 500; ++i) {
      const Rational a = gen.rational();
      const Rational b = gen.rational();
      const Rational c = gen.rational();
      CHECK(a + b == b + a);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a - b) + b == a);
      if (!b.is_zero()) CHECK((a / b) * b == a);
      CHECK(canonical(a * b + c));
      CHECK(Rational::parse((a * b - c).str()) == a * b - c);
    }
  }
}

TEST_SUITE("polynomial") {
  TEST_CASE("normalization and degree") {
    CHECK(Polynomial{}.is_zero());
    CHECK(!Polynomial{}.degree().has_value());
    CHECK(Polynomial{0, 0, 0}.is_zero());
    const Polynomial p{1, 2, 0};
    CHECK(p.degree() == 1);
    CHECK(p.coefficients().size() == 2);
    CHECK(p.coefficient(5) == 0);
    CHECK((p - p).is_zero());
  }

  TEST_CASE("evaluation, derivative, composition") {
    const Polynomial p{1, -3, 0, 2};  // 2x^3 - 3x + 1
    CHECK(p(Rational(1, 2)) == Rational(-1, 4));
    CHECK(p.derivative() == Polynomial{-3, 0, 6});
    CHECK(p.derivative(3) == Polynomial{12});
    CHECK(p.derivative(4).is_zero());
    CHECK(p.compose(Polynomial{0, 2}) == p.scale_argument(2));
    CHECK(p.shift(1) == p.compose(Polynomial{1, 1}));
    CHECK(Polynomial::monomial(3, 5) == Polynomial{0, 0, 0, 5});
    CHECK(Polynomial{1, 2}.str() == "[1, 2]");
  }

  TEST_CASE("property: ring laws and evaluation homomorphism") {
    testing_support::Gen gen;
    auto random_poly = [&] {
      std::vector<Rational> c(gen.index(0, 5));
      for (auto& v : c) v = gen.rational(6, 4);
      return Polynomial(c);
    };
    for (int i = 0; i < 200; ++i) {
      const Polynomial a = random_poly();
      const Polynomial b = random_poly();
      const Polynomial c = random_poly();
      const Rational x = gen.rational(5, 3);
      CHECK((a * b)(x) == a(x) * b(x));
      CHECK((a + b)(x) == a(x) + b(x));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a.compose(b)(x) == a(b(x)));
      CHECK((a * b).derivative() == a.derivative() * b + a * b.derivative());
      CHECK(a.shift(x)(Rational(0)) == a(x));
    }
  }
}

TEST_SUITE("coefficients") {
  TEST_CASE("binomial examples") {
    CHECK(hetbell::binomial(5, 2) == 10);
    CHECK(hetbell::binomial(4, 0) == 1);
    CHECK(hetbell::binomial(3, 5) == 0);
    CHECK(hetbell::factorial(0) == 1);
    CHECK(hetbell::factorial(20) == Rational::parse("2432902008176640000"));
  }

  TEST_CASE("generalized binomial examples") {
    CHECK(hetbell::gen_binomial(Rational(1, 2), 2) == Rational(-1, 8));
    CHECK(hetbell::gen_binomial(Rational(7, 3), 0) == 1);
    CHECK(hetbell::gen_binomial(3, 2) == 3);
    CHECK(hetbell::gen_binomial(-1, 3) == -1);
  }

  TEST_CASE("multinomial examples") {
    const std::array<std::size_t, 2> a{1, 2};
    const std::array<std::size_t, 2> b{2, 2};
    CHECK(hetbell::multinomial(3, a) == 3);
    CHECK(hetbell::multinomial(4, b) == 6);
    CHECK(hetbell::multinomial(0, std::span<const std::size_t>{}) == 1);
    const std::array<std::size_t, 2> bad{1, 1};
    CHECK_THROWS_AS(hetbell::multinomial(3, bad), hetbell::PartsMismatch);
  }

  TEST_CASE("degenerate rising factorial examples") {
    CHECK(hetbell::deg_rising_factorial(1, 2, Rational(1, 2)) == Rational(3, 2));
    CHECK(hetbell::deg_rising_factorial(Rational(-4, 5), 0, 3) == 1);
    CHECK(hetbell::deg_rising_factorial(2, 3, 1) == 24);
    CHECK(hetbell::deg_rising_factorial(3, 4, 0) == 81);
  }

  TEST_CASE("degenerate rising polynomial examples") {
    const Rational lambda(2, 7);
    CHECK(hetbell::deg_rising_poly(2, lambda) == Polynomial{0, lambda, 1});
    CHECK(hetbell::deg_rising_poly(0, lambda) == Polynomial{1});
    CHECK(hetbell::deg_rising_poly(3, 0) == Polynomial{0, 0, 0, 1});
  }

  TEST_CASE("property: rising polynomial evaluates to the product") {
    testing_support::Gen gen;
    for (const Rational lambda : {Rational(0), Rational(1, 3), Rational(1), Rational(2)}) {
      for (std::size_t n = 0; n <= 12; ++n) {
        const Polynomial p = hetbell::deg_rising_poly(n, lambda);
        CHECK(p.degree() == n);
        for (int i = 0; i < 5; ++i) {
          const Rational x = gen.rational();
          CHECK(p(x) == hetbell::deg_rising_factorial(x, n, lambda));
        }
      }
    }
  }

  TEST_CASE("property: generalized and integer binomials agree") {
    for (long a = 0; a <= 20; ++a) {
      for (std::size_t m = 0; m <= static_cast<std::size_t>(a); ++m) {
        CHECK(hetbell::gen_binomial(a, m) == hetbell::binomial(a, m));
      }
    }
  }

  TEST_CASE("property: two-part multinomial is binomial") {
    for (std::size_t n = 0; n <= 15; ++n) {
      for (std::size_t k = 0; k <= n; ++k) {
        const std::array<std::size_t, 2> parts{k, n - k};
        CHECK(hetbell::multinomial(n, parts) == hetbell::binomial(n, k));
      }
    }
  }

  TEST_CASE("property: Pascal rule and canonical results") {
    for (std::size_t n = 1; n <= 40; ++n) {
      for (std::size_t k = 1; k <= n; ++k) {
        CHECK(hetbell::binomial(n, k) == hetbell::binomial(n - 1, k - 1) + hetbell::binomial(n - 1, k));
      }
    }
    testing_support::Gen gen;
    for (int i = 0; i < 100; ++i) {
      const Rational r = hetbell::gen_binomial(gen.rational(), gen.index(0, 8));
      CHECK(canonical(r));
    }
  }

  TEST_CASE("memo tables tolerate concurrent readers") {
    std::vector<std::thread> threads;
    std::vector<Polynomial> results(8);
    for (std::size_t i = 0; i < results.size(); ++i) {
      threads.emplace_back([&results, i] {
        for (std::size_t n = 0; n <= 30; ++n) (void)hetbell::factorial(n + i);
        results[i] = hetbell::deg_rising_poly(10, Rational(1, 5));
      });
    }
    for (auto& t : threads) t.join();
    for (const auto& r : results) CHECK(r == results.front());
  }
}
