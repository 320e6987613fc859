#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "hetbell/distribution.hpp"
#include "hetbell/polynomial.hpp"
#include "hetbell/rational.hpp"

namespace hetbell {

enum class Identity {
  /// Direct route vs the Stirling transform of {l brace k}_Y.
  StirlingTransform,
  /// Direct route vs partial Bell polynomials in E[<Y>_{m,lambda}].
  PartialBellRoute,
  /// L^Y(n,k) vs sum_l {l brace k}_Y [n brack l].
  LahStirlingTransform,
  /// L^Y(n,k) vs sum_l H_lambda^Y(l,k) [n brack l]_lambda for several lambda.
  LahDegenerateTransform,
  /// Explicit polynomial vs the moment recurrence.
  Recurrence,
  /// Composition expansion of H_{n+m,lambda}^Y(t) through the i.i.d. engine.
  ShiftedRecurrence,
  /// H_{n,lambda}^Y(x) vs sum_k x^k B_{n,k}(E[<Y>_{1,lambda}], ...).
  BellPartialMoments,
  /// H_n(x + y) vs the binomial convolution.
  Addition,
  /// H_n(x) vs sum_k C(x,k) k! B_{n,k}(H_1, H_2, ...).
  BinomialBasis,
  /// sum_j C(n,k) k^j x^j H^Y(n-k,j) vs B_{n,k}(H_0(x), 2H_1(x), ...).
  PartialBellShifted,
  /// B_{n,k}(H_1(x), ...) vs sum_j {j brace k} H^Y(n,j) x^j.
  PartialBellStirling,
  /// k-th derivatives: convolution form, moment form, formal derivative.
  Derivative,
  /// Poisson: E[<S_k>_{n,lambda}] vs H_{n,lambda}(k alpha).
  PoissonSumMoment,
  /// Poisson: H_{n,lambda}^Y(x) vs sum_k phi_k(x) H_lambda(n,k) alpha^k.
  PoissonBellExpansion,
  /// Bernoulli: H_lambda^Y(n,k) = p^k H_lambda(n,k), H_{n,lambda}^Y(x) = H_{n,lambda}(px).
  BernoulliClosedForm,
  /// sum_{j=1}^k <j>_{n,lambda} vs sum_l H_lambda(n,l) l! C(k+1,l+1).
  PowerSum,
  /// Bernoulli: E[<S_k>_{n,lambda}] vs sum_j C(k,j) p^j j! H_lambda(n,j).
  BernoulliSumMoment,
  /// lambda = 0 and lambda = 1 against the classical and probabilistic families.
  Limits,
};

/// Stable tag used by the CLI and the grid config.
std::string_view identity_tag(Identity id);
/// Throws UnknownIdentity.
Identity identity_from_tag(std::string_view tag);
/// Every identity, in report order.
const std::vector<Identity>& all_identities();

/// Parameters for one identity check. Identities read only the fields they
/// need; Poisson and Bernoulli identities take their parameter from dist.
struct IdentityParams {
  std::optional<Distribution> dist;
  Rational lambda;
  /// Extra lambda values for the lambda-independence check.
  std::vector<Rational> lambdas;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t m = 0;
  /// Rational evaluation points (x, t, or the addition grid).
  std::vector<Rational> samples;
};

using IdentityValue = std::variant<Rational, Polynomial>;

std::string value_str(const IdentityValue& v);

struct IdentityReport {
  Identity id;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<IdentityValue> left;
  std::vector<IdentityValue> right;
  bool pass = false;
  std::string note;
};

/// Computes both sides independently and compares them exactly.
/// Throws std::invalid_argument when a required parameter is missing.
IdentityReport verify_identity(Identity id, const IdentityParams& params);

}  // namespace hetbell
