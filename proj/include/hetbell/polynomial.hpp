#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hetbell/rational.hpp"

namespace hetbell {

/// Dense univariate polynomial over the rationals. coefficient(i) is the
/// coefficient of x^i. The zero polynomial has no stored coefficients and no
/// degree.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<Rational> coeffs);
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial constant(const Rational& c);
  /// The monomial c * x^power.
  static Polynomial monomial(std::size_t power, const Rational& c = Rational(1));

  /// nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const;
  bool is_zero() const { return coeffs_.empty(); }

  /// Zero beyond the stored range.
  Rational coefficient(std::size_t i) const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Rational operator()(const Rational& x) const;

  Polynomial derivative(std::size_t order = 1) const;
  /// p(q(x)).
  Polynomial compose(const Polynomial& inner) const;
  /// p(c * x).
  Polynomial scale_argument(const Rational& c) const;
  /// p(x + c).
  Polynomial shift(const Rational& c) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(Polynomial lhs, const Polynomial& rhs) { return lhs *= rhs; }
  friend Polynomial operator*(Polynomial lhs, const Rational& c) { return lhs *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial rhs) { return rhs *= c; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  std::string str() const;

 private:
  void normalize();

  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace hetbell
