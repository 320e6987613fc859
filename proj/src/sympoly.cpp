#include "hetbell/sympoly.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "hetbell/coefficients.hpp"
#include "hetbell/errors.hpp"
#include "hetbell/hetero.hpp"

namespace hetbell {

SymPoly SymPoly::constant(std::size_t arity, const Rational& c) {
  SymPoly out(arity);
  out.add_term(Exponents(arity, 0), c);
  return out;
}

SymPoly SymPoly::variable(std::size_t arity, std::size_t index) {
  if (index >= arity) throw ArityMismatch("variable index " + std::to_string(index) + " >= arity");
  SymPoly out(arity);
  Exponents e(arity, 0);
  e[index] = 1;
  out.add_term(e, Rational(1));
  return out;
}

SymPoly SymPoly::univariate(std::size_t arity, std::size_t index, const Polynomial& p) {
  if (index >= arity) throw ArityMismatch("variable index " + std::to_string(index) + " >= arity");
  SymPoly out(arity);
  for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
    Exponents e(arity, 0);
    e[index] = static_cast<unsigned>(i);
    out.add_term(e, p.coefficients()[i]);
  }
  return out;
}

void SymPoly::check_arity(const SymPoly& other) const {
  if (other.arity_ != arity_) {
    throw ArityMismatch("sympoly arity " + std::to_string(arity_) + " vs " + std::to_string(other.arity_));
  }
}

void SymPoly::add_term(const Exponents& exponents, const Rational& c) {
  if (exponents.size() != arity_) throw ArityMismatch("exponent vector length differs from arity");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponents, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rational SymPoly::substitute(std::span<const Rational> values) const {
  if (values.size() != arity_) throw ArityMismatch("substitution needs one value per variable");
  Rational acc;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < arity_; ++i) term *= pow(values[i], e[i]);
    acc += term;
  }
  return acc;
}

SymPoly& SymPoly::operator+=(const SymPoly& rhs) {
  check_arity(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

SymPoly& SymPoly::operator*=(const SymPoly& rhs) {
  check_arity(rhs);
  SymPoly out(arity_);
  Exponents e(arity_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      for (std::size_t i = 0; i < arity_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  terms_ = std::move(out.terms_);
  return *this;
}

SymPoly& SymPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

SymPoly build_shifted_product_term(std::size_t j, std::size_t n, std::size_t m, std::size_t k,
                                   std::span<const std::size_t> ls, const Rational& lambda) {
  if (ls.size() != j) {
    throw ArityMismatch("expected " + std::to_string(j) + " parts, got " + std::to_string(ls.size()));
  }
  if (std::accumulate(ls.begin(), ls.end(), std::size_t{0}) != n) {
    throw ArityMismatch("parts do not sum to " + std::to_string(n));
  }
  if (k > m) throw std::invalid_argument("k exceeds m in shifted product term");

  // Affine argument Y_1 + ... + Y_j + n lambda.
  SymPoly shifted = SymPoly::constant(j, lambda * Rational(n));
  for (std::size_t i = 0; i < j; ++i) shifted += SymPoly::variable(j, i);

  // <A>_{m-k,lambda} = sum_l coeff_l A^l
  const Polynomial rising = deg_rising_poly(m - k, lambda);
  SymPoly outer(j);
  SymPoly power = SymPoly::constant(j, Rational(1));
  for (std::size_t l = 0; l < rising.coefficients().size(); ++l) {
    if (l > 0) power *= shifted;
    outer += power * rising.coefficients()[l];
  }

  for (std::size_t i = 0; i < j; ++i) outer *= SymPoly::univariate(j, i, deg_rising_poly(ls[i], lambda));
  return outer;
}

Rational expect(const SymPoly& sp, const Distribution& d) {
  Rational acc;
  for (const auto& [e, c] : sp.terms()) {
    Rational term = c;
    for (unsigned a : e) term *= raw_moment(d, a);
    acc += term;
  }
  return acc;
}

std::vector<std::vector<std::size_t>> strict_compositions(std::size_t n, std::size_t j) {
  std::vector<std::vector<std::size_t>> out;
  if (j == 0) {
    if (n == 0) out.emplace_back();
    return out;
  }
  if (n < j) return out;
  std::vector<std::size_t> current;
  const auto recurse = [&](auto&& self, std::size_t remaining, std::size_t slots) -> void {
    if (slots == 1) {
      current.push_back(remaining);
      out.push_back(current);
      current.pop_back();
      return;
    }
    for (std::size_t first = 1; first + (slots - 1) <= remaining; ++first) {
      current.push_back(first);
      self(self, remaining - first, slots - 1);
      current.pop_back();
    }
  };
  recurse(recurse, n, j);
  return out;
}

Rational shifted_recurrence_rhs(const Distribution& d, std::size_t n, std::size_t m, const Rational& t,
                                const Rational& lambda) {
  std::vector<Rational> bell_at_t(m + 1);
  for (std::size_t k = 0; k <= m; ++k) bell_at_t[k] = prob_hetero_bell_poly(d, k, lambda)(t);

  Rational total;
  for (std::size_t j = 0; j <= n; ++j) {
    const Rational t_weight = pow(t, j) / factorial(j);
    for (const auto& ls : strict_compositions(n, j)) {
      const Rational weight = t_weight * multinomial(n, ls);
      for (std::size_t k = 0; k <= m; ++k) {
        const SymPoly term = build_shifted_product_term(j, n, m, k, ls, lambda);
        total += weight * binomial(m, k) * expect(term, d) * bell_at_t[k];
      }
    }
  }
  return total;
}

}  // namespace hetbell
