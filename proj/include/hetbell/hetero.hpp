#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "hetbell/distribution.hpp"
#include "hetbell/polynomial.hpp"
#include "hetbell/rational.hpp"

namespace hetbell {

/// Heterogeneous Stirling numbers of the second kind,
/// H_lambda(n,k) = (1/k!) sum_j C(k,j) (-1)^(k-j) <j>_{n,lambda}.
/// lambda = 0 gives {n brace k}; lambda = 1 gives L(n,k).
Rational hetero_stirling(std::size_t n, std::size_t k, const Rational& lambda);

/// H_{n,lambda}(x) = sum_k H_lambda(n,k) x^k.
Polynomial hetero_bell_poly(std::size_t n, const Rational& lambda);

/// Probabilistic Stirling numbers of the second kind {n brace k}_Y.
Rational prob_stirling2(const Distribution& d, std::size_t n, std::size_t k);

/// Probabilistic Lah numbers L^Y(n,k).
Rational prob_lah(const Distribution& d, std::size_t n, std::size_t k);

/// The three independent ways of computing H_lambda^Y(n,k).
enum class Route {
  /// Alternating sum of E[<S_j>_{n,lambda}].
  Direct,
  /// sum_l {l brace k}_Y [n brack l] lambda^(n-l).
  ViaStirlingTransform,
  /// B_{n,k}(E[<Y>_{1,lambda}], E[<Y>_{2,lambda}], ...).
  ViaPartialBell,
};

std::string_view route_name(Route route);

/// Probabilistic heterogeneous Stirling numbers of the second kind
/// H_lambda^Y(n,k).
Rational prob_hetero_stirling(const Distribution& d, std::size_t n, std::size_t k, const Rational& lambda,
                              Route route = Route::Direct);

/// H_{n,lambda}^Y(x) = sum_k H_lambda^Y(n,k) x^k.
Polynomial prob_hetero_bell_poly(const Distribution& d, std::size_t n, const Rational& lambda,
                                 Route route = Route::Direct);

/// [H_0, ..., H_{n_max}] built only from
/// H_{n+1}(x) = x sum_k C(n,k) E[<Y>_{k+1,lambda}] H_{n-k}(x), H_0 = 1.
std::vector<Polynomial> prob_hetero_bell_recurrence(const Distribution& d, std::size_t n_max,
                                                    const Rational& lambda);

/// (d/dx)^k H_{n,lambda}^Y(x) as k! sum_j C(n,j) H_{j,lambda}^Y(x) H_lambda^Y(n-j,k).
/// Requires 1 <= k <= n (std::invalid_argument otherwise).
Polynomial hetero_derivative(const Distribution& d, std::size_t n, const Rational& lambda, std::size_t k);

/// First derivative as sum_j C(n,j) E[<Y>_{n-j,lambda}] H_{j,lambda}^Y(x). Requires n >= 1.
Polynomial hetero_first_derivative_by_moments(const Distribution& d, std::size_t n, const Rational& lambda);

struct DobinskiResult {
  double value = 0;
  /// Index of the last series term included.
  std::size_t last_term = 0;
  /// Bound on e^{-x} times the omitted tail.
  double truncation_bound = 0;
  /// Bound on floating-point error of the final conversion.
  double rounding_bound = 0;
};

/// e^{-x} sum_k E[<S_k>_{n,lambda}] x^k / k!, truncated once the tail bound
/// built from |Y| <= B, |<S_k>_{n,lambda}| <= (kB + (n-1)|lambda|)^n, drops
/// below rel_tol times the partial sum.
///
/// Throws UnsupportedDistribution for unbounded support and
/// NonPositiveEvaluationPoint when x <= 0.
DobinskiResult dobinski_eval(const Distribution& d, std::size_t n, const Rational& lambda, const Rational& x,
                             double rel_tol);

}  // namespace hetbell
