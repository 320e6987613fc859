#pragma once

#include <cstddef>
#include <span>

#include "hetbell/polynomial.hpp"
#include "hetbell/rational.hpp"

namespace hetbell {

/// Stirling numbers of the second kind, {n brace k}, from the alternating
/// sum (1/k!) sum_j C(k,j) (-1)^(k-j) j^n.
Rational stirling2(std::size_t n, std::size_t k);

/// Unsigned Stirling numbers of the first kind, [n brack k].
Rational stirling1u(std::size_t n, std::size_t k);

/// Lah numbers n!/k! C(n-1, k-1); L(0,0) = 1.
Rational lah(std::size_t n, std::size_t k);

/// Degenerate unsigned Stirling numbers of the first kind [n brack k]_lambda:
/// n! [t^n] of (1/k!) ((1 - (1-t)^lambda) / lambda)^k.
///
/// The series of (1 - (1-t)^lambda) / lambda has t^m coefficient
/// (1 - lambda)(2 - lambda)...(m - 1 - lambda) / m!, so lambda = 0 is a
/// regular point and gives stirling1u.
Rational deg_stirling1(std::size_t n, std::size_t k, const Rational& lambda);

/// Partial Bell polynomial B_{n,k}(x_1, ..., x_{n-k+1}) where xs[i] is
/// x_{i+1}. Throws InsufficientSequence when xs is too short.
Rational partial_bell(std::size_t n, std::size_t k, std::span<const Rational> xs);

/// Complete Bell polynomial B_n(x_1, ..., x_n).
Rational complete_bell(std::size_t n, std::span<const Rational> xs);

/// Touchard polynomial phi_n(x) = sum_k {n brace k} x^k.
Polynomial bell_poly(std::size_t n);

/// LB_n(x) = sum_k L(n,k) x^k.
Polynomial lah_bell_poly(std::size_t n);

/// C(x, k) expanded in powers of x through signed Stirling numbers of the
/// first kind.
Polynomial binomial_poly(std::size_t k);

}  // namespace hetbell
