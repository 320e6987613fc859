#include "hetbell/classical.hpp"

#include <string>
#include <vector>

#include "hetbell/coefficients.hpp"
#include "hetbell/errors.hpp"
#include "hetbell/triangle.hpp"

namespace hetbell {

namespace {

const Triangle& stirling2_table() {
  static const Triangle table(Family::Stirling2, [](std::size_t n, const std::vector<Triangle::Row>&) {
    Triangle::Row row(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
      Rational sum;
      for (std::size_t j = 0; j <= k; ++j) {
        Rational term = binomial(k, j) * pow(Rational(j), n);
        if ((k - j) % 2) term = -term;
        sum += term;
      }
      row[k] = sum / factorial(k);
    }
    return row;
  });
  return table;
}

const Triangle& stirling1u_table() {
  static const Triangle table(Family::Stirling1Unsigned,
                              [](std::size_t n, const std::vector<Triangle::Row>& below) {
                                Triangle::Row row(n + 1);
                                if (n == 0) {
                                  row[0] = 1;
                                  return row;
                                }
                                const auto& prev = below[n - 1];
                                // [n brack k] = [n-1 brack k-1] + (n-1) [n-1 brack k]
                                for (std::size_t k = 1; k <= n; ++k) {
                                  row[k] = prev[k - 1];
                                  if (k < n) row[k] += Rational(n - 1) * prev[k];
                                }
                                return row;
                              });
  return table;
}

const Triangle& lah_table() {
  static const Triangle table(Family::Lah, [](std::size_t n, const std::vector<Triangle::Row>&) {
    Triangle::Row row(n + 1);
    if (n == 0) {
      row[0] = 1;
      return row;
    }
    for (std::size_t k = 1; k <= n; ++k) row[k] = factorial(n) / factorial(k) * binomial(n - 1, k - 1);
    return row;
  });
  return table;
}

// Truncated power series product, degree <= limit.
std::vector<Rational> series_mul(const std::vector<Rational>& a, const std::vector<Rational>& b,
                                 std::size_t limit) {
  std::vector<Rational> out(limit + 1);
  for (std::size_t i = 0; i < a.size() && i <= limit; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size() && i + j <= limit; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

const LambdaTriangles& deg_stirling1_tables() {
  static const LambdaTriangles tables(Family::DegenerateStirling1, [](const Rational& lambda) {
    return [lambda](std::size_t n, const std::vector<Triangle::Row>&) {
      // g(t) = (1 - (1-t)^lambda) / lambda with the lambda factor cancelled
      // out of (-1)^(m+1) C(lambda, m) / lambda.
      std::vector<Rational> g(n + 1);
      Rational falling(1);
      for (std::size_t m = 1; m <= n; ++m) {
        if (m > 1) falling *= Rational(m - 1) - lambda;
        g[m] = falling / factorial(m);
      }
      Triangle::Row row(n + 1);
      std::vector<Rational> power{Rational(1)};
      for (std::size_t k = 0; k <= n; ++k) {
        if (k > 0) power = series_mul(power, g, n);
        row[k] = (n < power.size() ? power[n] : Rational(0)) * factorial(n) / factorial(k);
      }
      return row;
    };
  });
  return tables;
}

// Depth-first enumeration of (l_1, ..., l_m) with sum l_i = parts and
// sum i l_i = weight, descending from index m.
void partial_bell_dfs(std::size_t index, std::size_t parts, std::size_t weight,
                      const std::vector<Rational>& scaled, const Rational& acc, Rational& total) {
  if (index == 1) {
    if (parts != weight) return;
    total += acc * pow(scaled[0], parts) / factorial(parts);
    return;
  }
  // Every remaining part has size between 1 and index.
  if (weight < parts || weight > parts * index) return;
  const std::size_t max_l = std::min(parts, weight / index);
  Rational power(1);
  for (std::size_t l = 0; l <= max_l; ++l) {
    if (l > 0) power *= scaled[index - 1];
    const std::size_t rest_parts = parts - l;
    const std::size_t rest_weight = weight - l * index;
    if (rest_weight >= rest_parts && rest_weight <= rest_parts * (index - 1)) {
      partial_bell_dfs(index - 1, rest_parts, rest_weight, scaled, acc * power / factorial(l), total);
    }
  }
}

}  // namespace

Rational stirling2(std::size_t n, std::size_t k) { return stirling2_table().at(n, k); }

Rational stirling1u(std::size_t n, std::size_t k) { return stirling1u_table().at(n, k); }

Rational lah(std::size_t n, std::size_t k) { return lah_table().at(n, k); }

Rational deg_stirling1(std::size_t n, std::size_t k, const Rational& lambda) {
  return deg_stirling1_tables().get(lambda).at(n, k);
}

Rational partial_bell(std::size_t n, std::size_t k, std::span<const Rational> xs) {
  if (k > n) return Rational(0);
  if (k == 0) return Rational(n == 0 ? 1 : 0);
  const std::size_t m = n - k + 1;
  if (xs.size() < m) {
    throw InsufficientSequence("partial Bell B_{" + std::to_string(n) + "," + std::to_string(k) +
                               "} needs " + std::to_string(m) + " arguments, got " +
                               std::to_string(xs.size()));
  }
  std::vector<Rational> scaled(m);
  for (std::size_t i = 0; i < m; ++i) scaled[i] = xs[i] / factorial(i + 1);
  Rational total;
  partial_bell_dfs(m, k, n, scaled, factorial(n), total);
  return total;
}

Rational complete_bell(std::size_t n, std::span<const Rational> xs) {
  if (xs.size() < n) {
    throw InsufficientSequence("complete Bell B_" + std::to_string(n) + " needs " + std::to_string(n) +
                               " arguments, got " + std::to_string(xs.size()));
  }
  Rational sum;
  for (std::size_t k = 0; k <= n; ++k) sum += partial_bell(n, k, xs);
  return sum;
}

Polynomial bell_poly(std::size_t n) { return Polynomial(stirling2_table().row(n)); }

Polynomial lah_bell_poly(std::size_t n) { return Polynomial(lah_table().row(n)); }

Polynomial binomial_poly(std::size_t k) {
  std::vector<Rational> coeffs(k + 1);
  for (std::size_t l = 0; l <= k; ++l) {
    Rational c = stirling1u(k, l);
    if ((k - l) % 2) c = -c;
    coeffs[l] = c / factorial(k);
  }
  return Polynomial(std::move(coeffs));
}

}  // namespace hetbell
