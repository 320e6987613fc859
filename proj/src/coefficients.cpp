#include "hetbell/coefficients.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include "hetbell/errors.hpp"

namespace hetbell {

namespace {

class FactorialTable {
 public:
  mpz_class get(std::size_t n) {
    {
      std::shared_lock lock(mutex_);
      if (n < table_.size()) return table_[n];
    }
    std::unique_lock lock(mutex_);
    while (table_.size() <= n) table_.push_back(table_.back() * static_cast<unsigned long>(table_.size()));
    return table_[n];
  }

 private:
  std::shared_mutex mutex_;
  std::vector<mpz_class> table_{mpz_class(1)};
};

FactorialTable& factorials() {
  static FactorialTable table;
  return table;
}

class RisingPolyCache {
 public:
  Polynomial get(std::size_t n, const Rational& lambda) {
    const auto key = std::make_pair(n, lambda);
    {
      std::shared_lock lock(mutex_);
      if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    }
    // x (x + lambda) ... (x + (n-1) lambda)
    Polynomial p = Polynomial::constant(Rational(1));
    for (std::size_t i = 0; i < n; ++i) p *= Polynomial({lambda * Rational(i), Rational(1)});
    std::unique_lock lock(mutex_);
    return cache_.emplace(key, std::move(p)).first->second;
  }

 private:
  std::shared_mutex mutex_;
  std::map<std::pair<std::size_t, Rational>, Polynomial> cache_;
};

RisingPolyCache& rising_polys() {
  static RisingPolyCache cache;
  return cache;
}

}  // namespace

Rational factorial(std::size_t n) { return Rational(factorials().get(n)); }

Rational binomial(std::size_t n, std::size_t k) {
  if (k > n) return Rational(0);
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return Rational(out);
}

Rational gen_binomial(const Rational& a, std::size_t m) {
  Rational num(1);
  for (std::size_t i = 0; i < m; ++i) num *= a - Rational(i);
  return num / factorial(m);
}

Rational multinomial(std::size_t n, std::span<const std::size_t> parts) {
  const std::size_t total = std::accumulate(parts.begin(), parts.end(), std::size_t{0});
  if (total != n) {
    throw PartsMismatch("multinomial parts sum to " + std::to_string(total) + ", expected " +
                        std::to_string(n));
  }
  mpz_class denom(1);
  for (std::size_t part : parts) denom *= factorials().get(part);
  return Rational(factorials().get(n), denom);
}

Rational deg_rising_factorial(const Rational& x, std::size_t n, const Rational& lambda) {
  Rational out(1);
  for (std::size_t i = 0; i < n; ++i) out *= x + lambda * Rational(i);
  return out;
}

Polynomial deg_rising_poly(std::size_t n, const Rational& lambda) { return rising_polys().get(n, lambda); }

}  // namespace hetbell
