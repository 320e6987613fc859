#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "hetbell/rational.hpp"

namespace hetbell {

struct Bernoulli {
  Rational p;
};

struct Poisson {
  Rational alpha;
};

struct Constant {
  Rational c;
};

struct FiniteSupport {
  /// (value, probability) atoms.
  std::vector<std::pair<Rational, Rational>> atoms;
};

/// Raw moments supplied directly; mu[n] = E[Y^n], mu[0] = 1. Whether the
/// sequence actually belongs to a random variable with a moment generating
/// function is the caller's responsibility.
struct MomentList {
  std::vector<Rational> mu;
};

namespace detail {
class MomentCache;
}

/// A random variable Y known through its exact raw moments.
///
/// Values are immutable; copies share one internally synchronized cache of
/// raw and partial-sum moments.
class Distribution {
 public:
  using Variant = std::variant<Bernoulli, Poisson, Constant, FiniteSupport, MomentList>;

  /// Throw InvalidDistribution when the family constraints fail.
  static Distribution bernoulli(Rational p);
  static Distribution poisson(Rational alpha);
  static Distribution constant(Rational c);
  static Distribution finite(std::vector<std::pair<Rational, Rational>> atoms);
  static Distribution moments(std::vector<Rational> mu);

  /// Parses `bernoulli:<p>`, `poisson:<alpha>`, `const:<c>`,
  /// `finite:v1:p1,v2:p2,...` or `moments:m1,m2,...` where the moment list
  /// starts at E[Y] (E[Y^0] = 1 is implied). Throws ParseError or
  /// InvalidDistribution.
  static Distribution parse(std::string_view spec);

  /// Canonical spec string; parse(d.str()) describes the same distribution.
  std::string str() const;

  const Variant& variant() const { return variant_; }

  /// max |Y| for bounded families, nullopt otherwise.
  std::optional<Rational> support_bound() const;

  /// Highest available moment order, nullopt when unlimited.
  std::optional<std::size_t> moment_depth() const;

  detail::MomentCache& cache() const { return *cache_; }

 private:
  explicit Distribution(Variant v);

  Variant variant_;
  std::shared_ptr<detail::MomentCache> cache_;
};

/// E[Y^n]. Throws MomentUnavailable past the end of a moment list.
Rational raw_moment(const Distribution& d, std::size_t n);

/// E[S_k^n] for S_k = Y_1 + ... + Y_k (i.i.d.), S_0 = 0.
Rational sum_raw_moment(const Distribution& d, std::size_t k, std::size_t n);

/// E[<Y>_{n,lambda}].
Rational deg_rising_moment(const Distribution& d, std::size_t n, const Rational& lambda);

/// E[<S_k>_{n,lambda}].
Rational sum_deg_rising_moment(const Distribution& d, std::size_t k, std::size_t n, const Rational& lambda);

}  // namespace hetbell
