#include "hetbell/distribution.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "hetbell/classical.hpp"
#include "hetbell/coefficients.hpp"
#include "hetbell/errors.hpp"

namespace hetbell {

namespace detail {

/// Memo of E[Y^n] and E[S_k^n]. Row k of sums_ holds E[S_k^0..N] for some N.
class MomentCache {
 public:
  Rational raw(const Distribution& d, std::size_t n) {
    std::lock_guard lock(mutex_);
    return raw_locked(d, n);
  }

  Rational sum(const Distribution& d, std::size_t k, std::size_t n) {
    std::lock_guard lock(mutex_);
    return sum_row_locked(d, k, n)[n];
  }

 private:
  Rational raw_locked(const Distribution& d, std::size_t n) {
    while (raw_.size() <= n) raw_.push_back(compute_raw(d, raw_.size()));
    return raw_[n];
  }

  const std::vector<Rational>& sum_row_locked(const Distribution& d, std::size_t k, std::size_t n) {
    auto& row = sums_[k];
    if (row.size() > n) return row;
    std::vector<Rational> fresh(n + 1);
    if (k == 0) {
      fresh[0] = 1;
    } else {
      // E[S_k^m] = sum_i C(m,i) E[Y^i] E[S_{k-1}^{m-i}]
      const std::vector<Rational> prev = sum_row_locked(d, k - 1, n);
      for (std::size_t i = 0; i <= n; ++i) raw_locked(d, i);
      for (std::size_t m = 0; m <= n; ++m) {
        Rational acc;
        for (std::size_t i = 0; i <= m; ++i) acc += binomial(m, i) * raw_[i] * prev[m - i];
        fresh[m] = acc;
      }
    }
    auto& slot = sums_[k];
    slot = std::move(fresh);
    return slot;
  }

  static Rational compute_raw(const Distribution& d, std::size_t n) {
    return std::visit(
        [n](const auto& v) -> Rational {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, Bernoulli>) {
            return n == 0 ? Rational(1) : v.p;
          } else if constexpr (std::is_same_v<T, Poisson>) {
            Rational acc;
            for (std::size_t k = 0; k <= n; ++k) acc += stirling2(n, k) * pow(v.alpha, k);
            return acc;
          } else if constexpr (std::is_same_v<T, Constant>) {
            return pow(v.c, n);
          } else if constexpr (std::is_same_v<T, FiniteSupport>) {
            Rational acc;
            for (const auto& [value, prob] : v.atoms) acc += prob * pow(value, n);
            return acc;
          } else {
            if (n >= v.mu.size()) {
              throw MomentUnavailable("moment of order " + std::to_string(n) + " requested, only " +
                                      std::to_string(v.mu.size() - 1) + " supplied");
            }
            return v.mu[n];
          }
        },
        d.variant());
  }

  std::mutex mutex_;
  std::vector<Rational> raw_;
  std::map<std::size_t, std::vector<Rational>> sums_;
};

}  // namespace detail

namespace {

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.emplace_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

Distribution::Distribution(Variant v)
    : variant_(std::move(v)), cache_(std::make_shared<detail::MomentCache>()) {}

Distribution Distribution::bernoulli(Rational p) {
  if (p < Rational(0) || p > Rational(1)) throw InvalidDistribution("bernoulli p must lie in [0, 1], got " + p.str());
  return Distribution(Bernoulli{std::move(p)});
}

Distribution Distribution::poisson(Rational alpha) {
  if (alpha <= Rational(0)) throw InvalidDistribution("poisson alpha must be positive, got " + alpha.str());
  return Distribution(Poisson{std::move(alpha)});
}

Distribution Distribution::constant(Rational c) { return Distribution(Constant{std::move(c)}); }

Distribution Distribution::finite(std::vector<std::pair<Rational, Rational>> atoms) {
  if (atoms.empty()) throw InvalidDistribution("finite distribution needs at least one atom");
  Rational total;
  for (const auto& [value, prob] : atoms) {
    if (prob.sign() < 0) throw InvalidDistribution("negative probability " + prob.str());
    total += prob;
  }
  if (total != Rational(1)) throw InvalidDistribution("probabilities sum to " + total.str() + ", not 1");
  return Distribution(FiniteSupport{std::move(atoms)});
}

Distribution Distribution::moments(std::vector<Rational> mu) {
  if (mu.empty() || mu[0] != Rational(1)) throw InvalidDistribution("moment list must start with E[Y^0] = 1");
  return Distribution(MomentList{std::move(mu)});
}

Distribution Distribution::parse(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) {
    throw ParseError("distribution spec '" + std::string(spec) + "' has no ':'");
  }
  const std::string_view kind = spec.substr(0, colon);
  const std::string_view body = spec.substr(colon + 1);
  if (kind == "bernoulli") return bernoulli(Rational::parse(body));
  if (kind == "poisson") return poisson(Rational::parse(body));
  if (kind == "const") return constant(Rational::parse(body));
  if (kind == "finite") {
    std::vector<std::pair<Rational, Rational>> atoms;
    for (const auto& item : split(body, ',')) {
      const auto parts = split(item, ':');
      if (parts.size() != 2) throw ParseError("finite atom '" + item + "' is not value:prob");
      atoms.emplace_back(Rational::parse(parts[0]), Rational::parse(parts[1]));
    }
    return finite(std::move(atoms));
  }
  if (kind == "moments") {
    std::vector<Rational> mu{Rational(1)};
    for (const auto& item : split(body, ',')) mu.push_back(Rational::parse(item));
    return moments(std::move(mu));
  }
  throw ParseError("unknown distribution family '" + std::string(kind) + "'");
}

std::string Distribution::str() const {
  std::ostringstream os;
  std::visit(
      [&os](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Bernoulli>) {
          os << "bernoulli:" << v.p;
        } else if constexpr (std::is_same_v<T, Poisson>) {
          os << "poisson:" << v.alpha;
        } else if constexpr (std::is_same_v<T, Constant>) {
          os << "const:" << v.c;
        } else if constexpr (std::is_same_v<T, FiniteSupport>) {
          os << "finite:";
          for (std::size_t i = 0; i < v.atoms.size(); ++i) {
            if (i) os << ',';
            os << v.atoms[i].first << ':' << v.atoms[i].second;
          }
        } else {
          os << "moments:";
          for (std::size_t i = 1; i < v.mu.size(); ++i) {
            if (i > 1) os << ',';
            os << v.mu[i];
          }
        }
      },
      variant_);
  return os.str();
}

std::optional<Rational> Distribution::support_bound() const {
  return std::visit(
      [](const auto& v) -> std::optional<Rational> {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Bernoulli>) {
          return Rational(v.p.is_zero() ? 0 : 1);
        } else if constexpr (std::is_same_v<T, Constant>) {
          return abs(v.c);
        } else if constexpr (std::is_same_v<T, FiniteSupport>) {
          Rational bound;
          for (const auto& [value, prob] : v.atoms) {
            if (!prob.is_zero()) bound = std::max(bound, abs(value));
          }
          return bound;
        } else {
          return std::nullopt;
        }
      },
      variant_);
}

std::optional<std::size_t> Distribution::moment_depth() const {
  if (const auto* list = std::get_if<MomentList>(&variant_)) return list->mu.size() - 1;
  return std::nullopt;
}

Rational raw_moment(const Distribution& d, std::size_t n) { return d.cache().raw(d, n); }

Rational sum_raw_moment(const Distribution& d, std::size_t k, std::size_t n) {
  return d.cache().sum(d, k, n);
}

Rational deg_rising_moment(const Distribution& d, std::size_t n, const Rational& lambda) {
  const Polynomial p = deg_rising_poly(n, lambda);
  Rational acc;
  for (std::size_t l = 0; l < p.coefficients().size(); ++l) {
    if (!p.coefficients()[l].is_zero()) acc += p.coefficients()[l] * raw_moment(d, l);
  }
  return acc;
}

Rational sum_deg_rising_moment(const Distribution& d, std::size_t k, std::size_t n, const Rational& lambda) {
  const Polynomial p = deg_rising_poly(n, lambda);
  Rational acc;
  for (std::size_t l = 0; l < p.coefficients().size(); ++l) {
    if (!p.coefficients()[l].is_zero()) acc += p.coefficients()[l] * sum_raw_moment(d, k, l);
  }
  return acc;
}

}  // namespace hetbell
