#include "hetbell/hetero.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "hetbell/classical.hpp"
#include "hetbell/coefficients.hpp"
#include "hetbell/errors.hpp"
#include "hetbell/triangle.hpp"

namespace hetbell {

namespace {

const LambdaTriangles& hetero_tables() {
  static const LambdaTriangles tables(Family::Heterogeneous, [](const Rational& lambda) {
    return [lambda](std::size_t n, const std::vector<Triangle::Row>&) {
      std::vector<Rational> rising(n + 1);
      for (std::size_t j = 0; j <= n; ++j) rising[j] = deg_rising_factorial(Rational(j), n, lambda);
      Triangle::Row row(n + 1);
      for (std::size_t k = 0; k <= n; ++k) {
        Rational sum;
        for (std::size_t j = 0; j <= k; ++j) {
          Rational term = binomial(k, j) * rising[j];
          if ((k - j) % 2) term = -term;
          sum += term;
        }
        row[k] = sum / factorial(k);
      }
      return row;
    };
  });
  return tables;
}

// (1/k!) sum_j C(k,j) (-1)^(k-j) f(j)
template <typename F>
Rational alternating_difference(std::size_t k, F&& f) {
  Rational sum;
  for (std::size_t j = 0; j <= k; ++j) {
    Rational term = binomial(k, j) * f(j);
    if ((k - j) % 2) term = -term;
    sum += term;
  }
  return sum / factorial(k);
}

}  // namespace

std::string_view route_name(Route route) {
  switch (route) {
    case Route::Direct: return "direct";
    case Route::ViaStirlingTransform: return "stirling-transform";
    case Route::ViaPartialBell: return "partial-bell";
  }
  return "unknown";
}

Rational hetero_stirling(std::size_t n, std::size_t k, const Rational& lambda) {
  return hetero_tables().get(lambda).at(n, k);
}

Polynomial hetero_bell_poly(std::size_t n, const Rational& lambda) {
  return Polynomial(hetero_tables().get(lambda).row(n));
}

Rational prob_stirling2(const Distribution& d, std::size_t n, std::size_t k) {
  return alternating_difference(k, [&](std::size_t l) { return sum_raw_moment(d, l, n); });
}

Rational prob_lah(const Distribution& d, std::size_t n, std::size_t k) {
  return alternating_difference(k, [&](std::size_t l) { return sum_deg_rising_moment(d, l, n, Rational(1)); });
}

Rational prob_hetero_stirling(const Distribution& d, std::size_t n, std::size_t k, const Rational& lambda,
                              Route route) {
  switch (route) {
    case Route::Direct:
      return alternating_difference(k, [&](std::size_t j) { return sum_deg_rising_moment(d, j, n, lambda); });
    case Route::ViaStirlingTransform: {
      Rational sum;
      for (std::size_t l = k; l <= n; ++l) {
        sum += prob_stirling2(d, l, k) * stirling1u(n, l) * pow(lambda, n - l);
      }
      return sum;
    }
    case Route::ViaPartialBell: {
      if (k > n) return Rational(0);
      const std::size_t len = n - k + 1;
      std::vector<Rational> xs(len);
      for (std::size_t m = 1; m <= len; ++m) xs[m - 1] = deg_rising_moment(d, m, lambda);
      return partial_bell(n, k, xs);
    }
  }
  throw std::invalid_argument("unknown route");
}

Polynomial prob_hetero_bell_poly(const Distribution& d, std::size_t n, const Rational& lambda, Route route) {
  std::vector<Rational> coeffs(n + 1);
  for (std::size_t k = 0; k <= n; ++k) coeffs[k] = prob_hetero_stirling(d, n, k, lambda, route);
  return Polynomial(std::move(coeffs));
}

std::vector<Polynomial> prob_hetero_bell_recurrence(const Distribution& d, std::size_t n_max,
                                                    const Rational& lambda) {
  std::vector<Rational> rising(n_max + 1);
  for (std::size_t k = 0; k < n_max; ++k) rising[k] = deg_rising_moment(d, k + 1, lambda);

  const Polynomial x = Polynomial::monomial(1);
  std::vector<Polynomial> out{Polynomial::constant(Rational(1))};
  out.reserve(n_max + 1);
  for (std::size_t n = 0; n < n_max; ++n) {
    Polynomial acc;
    for (std::size_t k = 0; k <= n; ++k) acc += out[n - k] * (binomial(n, k) * rising[k]);
    out.push_back(x * acc);
  }
  return out;
}

Polynomial hetero_derivative(const Distribution& d, std::size_t n, const Rational& lambda, std::size_t k) {
  if (k < 1 || k > n) {
    throw std::invalid_argument("derivative order " + std::to_string(k) + " outside [1, " + std::to_string(n) +
                                "]");
  }
  Polynomial acc;
  for (std::size_t j = 0; j <= n - k; ++j) {
    acc += prob_hetero_bell_poly(d, j, lambda) * (binomial(n, j) * prob_hetero_stirling(d, n - j, k, lambda));
  }
  return acc * factorial(k);
}

Polynomial hetero_first_derivative_by_moments(const Distribution& d, std::size_t n, const Rational& lambda) {
  if (n < 1) throw std::invalid_argument("first derivative by moments needs n >= 1");
  Polynomial acc;
  for (std::size_t j = 0; j < n; ++j) {
    acc += prob_hetero_bell_poly(d, j, lambda) * (binomial(n, j) * deg_rising_moment(d, n - j, lambda));
  }
  return acc;
}

DobinskiResult dobinski_eval(const Distribution& d, std::size_t n, const Rational& lambda, const Rational& x,
                             double rel_tol) {
  const auto bound = d.support_bound();
  if (!bound) throw UnsupportedDistribution("Dobinski evaluation needs bounded support, got " + d.str());
  if (x.sign() <= 0) throw NonPositiveEvaluationPoint("Dobinski evaluation point must be positive, got " + x.str());
  if (!(rel_tol > 0)) throw std::invalid_argument("rel_tol must be positive");

  const double b = bound->to_double();
  const double c = static_cast<double>(n == 0 ? 0 : n - 1) * abs(lambda).to_double();
  const double xd = x.to_double();
  const double log_x = std::log(xd);

  // log of a_k = (kB + c)^n x^k / k!, the majorant of the k-th term.
  const auto log_majorant = [&](std::size_t k) {
    const double base = static_cast<double>(k) * b + c;
    if (n > 0 && base == 0) return -std::numeric_limits<double>::infinity();
    const double log_base = n == 0 ? 0.0 : static_cast<double>(n) * std::log(base);
    return log_base + static_cast<double>(k) * log_x - std::lgamma(static_cast<double>(k) + 1);
  };

  constexpr std::size_t kMaxTerms = 5000;
  Rational partial;
  Rational x_power(1);
  for (std::size_t k = 0; k < kMaxTerms; ++k) {
    if (k > 0) x_power *= x / Rational(k);
    partial += sum_deg_rising_moment(d, k, n, lambda) * x_power;

    // Tail sum_{j > k} a_j <= a_{k+1} / (1 - r), r = a_{k+2} / a_{k+1}; the
    // term ratio is nonincreasing in j, so r bounds every later ratio.
    const double la1 = log_majorant(k + 1);
    double tail = 0;
    if (std::isfinite(la1)) {
      const double ratio = std::exp(log_majorant(k + 2) - la1);
      if (ratio >= 1) continue;
      tail = std::exp(la1) / (1 - ratio);
    }
    const double magnitude = std::fabs(partial.to_double());
    if (tail == 0 || tail <= 0.5 * rel_tol * (magnitude - tail)) {
      const double scale = std::exp(-xd);
      DobinskiResult result;
      result.value = scale * partial.to_double();
      result.last_term = k;
      result.truncation_bound = scale * tail;
      result.rounding_bound =
          (4.0 + std::fabs(xd)) * std::numeric_limits<double>::epsilon() * std::fabs(result.value);
      return result;
    }
  }
  throw Error("Dobinski series did not reach the requested tolerance within " + std::to_string(kMaxTerms) +
              " terms");
}

}  // namespace hetbell
