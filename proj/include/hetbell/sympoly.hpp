#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "hetbell/distribution.hpp"
#include "hetbell/polynomial.hpp"
#include "hetbell/rational.hpp"

namespace hetbell {

/// Polynomial in the i.i.d. symbols Y_1, ..., Y_arity. Terms map exponent
/// vectors to nonzero coefficients.
class SymPoly {
 public:
  using Exponents = std::vector<unsigned>;

  explicit SymPoly(std::size_t arity) : arity_(arity) {}

  static SymPoly constant(std::size_t arity, const Rational& c);
  /// Y_{index+1}.
  static SymPoly variable(std::size_t arity, std::size_t index);
  /// p(Y_{index+1}).
  static SymPoly univariate(std::size_t arity, std::size_t index, const Polynomial& p);

  std::size_t arity() const { return arity_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }

  /// Adds c * Y^exponents. Throws ArityMismatch on a wrong-length vector.
  void add_term(const Exponents& exponents, const Rational& c);

  /// Value after substituting values[i] for Y_{i+1}.
  Rational substitute(std::span<const Rational> values) const;

  SymPoly& operator+=(const SymPoly& rhs);
  SymPoly& operator*=(const SymPoly& rhs);
  SymPoly& operator*=(const Rational& c);

  friend SymPoly operator+(SymPoly lhs, const SymPoly& rhs) { return lhs += rhs; }
  friend SymPoly operator*(SymPoly lhs, const SymPoly& rhs) { return lhs *= rhs; }
  friend SymPoly operator*(SymPoly lhs, const Rational& c) { return lhs *= c; }

  friend bool operator==(const SymPoly&, const SymPoly&) = default;

 private:
  void check_arity(const SymPoly& other) const;

  std::size_t arity_;
  std::map<Exponents, Rational> terms_;
};

/// Expands <Y_1 + ... + Y_j + n lambda>_{m-k,lambda} * prod_i <Y_i>_{l_i,lambda}
/// with j = ls.size(). Throws ArityMismatch unless ls has j entries summing
/// to n, and std::invalid_argument when k > m.
SymPoly build_shifted_product_term(std::size_t j, std::size_t n, std::size_t m, std::size_t k,
                                   std::span<const std::size_t> ls, const Rational& lambda);

/// E[sp] for i.i.d. Y_i ~ d: each monomial factors into a product of raw
/// moments.
Rational expect(const SymPoly& sp, const Distribution& d);

/// The composition expansion of H_{n+m,lambda}^Y(t):
///   sum_{j<=n} sum_{k<=m} C(m,k) t^j/j!
///     sum_{l_1+...+l_j=n, l_i>=1} C(n; l_1..l_j)
///       E[<S_j + n lambda>_{m-k,lambda} prod_i <Y_i>_{l_i,lambda}] H_{k,lambda}^Y(t).
Rational shifted_recurrence_rhs(const Distribution& d, std::size_t n, std::size_t m, const Rational& t,
                                const Rational& lambda);

/// Strict compositions of n into exactly j positive parts, in lexicographic
/// order. The empty composition is returned for n = j = 0.
std::vector<std::vector<std::size_t>> strict_compositions(std::size_t n, std::size_t j);

}  // namespace hetbell
