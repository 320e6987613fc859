#pragma once

#include <cstddef>
#include <span>

#include "hetbell/polynomial.hpp"
#include "hetbell/rational.hpp"

namespace hetbell {

/// n!, memoized for the whole process.
Rational factorial(std::size_t n);

/// C(n, k); zero when k > n.
Rational binomial(std::size_t n, std::size_t k);

/// a (a-1) ... (a-m+1) / m! for rational a.
Rational gen_binomial(const Rational& a, std::size_t m);

/// n! / (l_1! ... l_j!). Throws PartsMismatch unless the parts sum to n.
Rational multinomial(std::size_t n, std::span<const std::size_t> parts);

/// Degenerate rising factorial x (x + lambda) ... (x + (n-1) lambda).
/// lambda = 0 gives x^n, lambda = 1 the ordinary rising factorial.
Rational deg_rising_factorial(const Rational& x, std::size_t n, const Rational& lambda);

/// The degenerate rising factorial as a degree-n polynomial in x.
/// Cached per (n, lambda).
Polynomial deg_rising_poly(std::size_t n, const Rational& lambda);

}  // namespace hetbell
