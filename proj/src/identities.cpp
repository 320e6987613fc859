#include "hetbell/identities.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

#include "hetbell/classical.hpp"
#include "hetbell/coefficients.hpp"
#include "hetbell/errors.hpp"
#include "hetbell/hetero.hpp"
#include "hetbell/sympoly.hpp"

namespace hetbell {

namespace {

struct TagEntry {
  Identity id;
  std::string_view tag;
};

constexpr std::array kTags{
    TagEntry{Identity::StirlingTransform, "stirling-transform"},
    TagEntry{Identity::PartialBellRoute, "partial-bell-route"},
    TagEntry{Identity::LahStirlingTransform, "lah-stirling-transform"},
    TagEntry{Identity::LahDegenerateTransform, "lah-degenerate-transform"},
    TagEntry{Identity::Recurrence, "recurrence"},
    TagEntry{Identity::ShiftedRecurrence, "shifted-recurrence"},
    TagEntry{Identity::BellPartialMoments, "bell-partial-moments"},
    TagEntry{Identity::Addition, "addition"},
    TagEntry{Identity::BinomialBasis, "binomial-basis"},
    TagEntry{Identity::PartialBellShifted, "partial-bell-shifted"},
    TagEntry{Identity::PartialBellStirling, "partial-bell-stirling"},
    TagEntry{Identity::Derivative, "derivative"},
    TagEntry{Identity::PoissonSumMoment, "poisson-sum-moment"},
    TagEntry{Identity::PoissonBellExpansion, "poisson-bell-expansion"},
    TagEntry{Identity::BernoulliClosedForm, "bernoulli-closed-form"},
    TagEntry{Identity::PowerSum, "power-sum"},
    TagEntry{Identity::BernoulliSumMoment, "bernoulli-sum-moment"},
    TagEntry{Identity::Limits, "limits"},
};

std::string join(const std::vector<Rational>& values) {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) os << ',';
    os << values[i];
  }
  return os.str();
}

class ReportBuilder {
 public:
  explicit ReportBuilder(Identity id) { report_.id = id; }

  ReportBuilder& param(std::string name, std::string value) {
    report_.params.emplace_back(std::move(name), std::move(value));
    return *this;
  }

  void compare(IdentityValue lhs, IdentityValue rhs) {
    report_.left.push_back(std::move(lhs));
    report_.right.push_back(std::move(rhs));
  }

  IdentityReport finish(std::string failure_note = {}) {
    bool pass = report_.left.size() == report_.right.size();
    for (std::size_t i = 0; pass && i < report_.left.size(); ++i) pass = report_.left[i] == report_.right[i];
    report_.pass = pass;
    if (!pass) report_.note = std::move(failure_note);
    return std::move(report_);
  }

 private:
  IdentityReport report_;
};

const Distribution& need_dist(const IdentityParams& p, Identity id) {
  if (!p.dist) throw std::invalid_argument(std::string(identity_tag(id)) + " needs a distribution");
  return *p.dist;
}

const Rational& poisson_alpha(const Distribution& d, Identity id) {
  if (const auto* v = std::get_if<Poisson>(&d.variant())) return v->alpha;
  throw std::invalid_argument(std::string(identity_tag(id)) + " needs a poisson distribution, got " + d.str());
}

const Rational& bernoulli_p(const Distribution& d, Identity id) {
  if (const auto* v = std::get_if<Bernoulli>(&d.variant())) return v->p;
  throw std::invalid_argument(std::string(identity_tag(id)) + " needs a bernoulli distribution, got " + d.str());
}

const std::vector<Rational>& need_samples(const IdentityParams& p, Identity id) {
  if (p.samples.empty()) throw std::invalid_argument(std::string(identity_tag(id)) + " needs sample points");
  return p.samples;
}

std::vector<Rational> rising_moments(const Distribution& d, std::size_t count, const Rational& lambda) {
  std::vector<Rational> xs(count);
  for (std::size_t m = 1; m <= count; ++m) xs[m - 1] = deg_rising_moment(d, m, lambda);
  return xs;
}

IdentityReport check_routes(Identity id, const IdentityParams& p, Route other) {
  const Distribution& d = need_dist(p, id);
  ReportBuilder b(id);
  b.param("dist", d.str()).param("lambda", p.lambda.str()).param("n", std::to_string(p.n));
  for (std::size_t k = 0; k <= p.n; ++k) {
    b.compare(prob_hetero_stirling(d, p.n, k, p.lambda, Route::Direct),
              prob_hetero_stirling(d, p.n, k, p.lambda, other));
  }
  return b.finish();
}

IdentityReport check_lah_stirling(const IdentityParams& p) {
  const Distribution& d = need_dist(p, Identity::LahStirlingTransform);
  ReportBuilder b(Identity::LahStirlingTransform);
  b.param("dist", d.str()).param("n", std::to_string(p.n));
  for (std::size_t k = 0; k <= p.n; ++k) {
    Rational rhs;
    for (std::size_t l = k; l <= p.n; ++l) rhs += prob_stirling2(d, l, k) * stirling1u(p.n, l);
    b.compare(prob_lah(d, p.n, k), rhs);
  }
  return b.finish();
}

IdentityReport check_lah_degenerate(const IdentityParams& p) {
  const Distribution& d = need_dist(p, Identity::LahDegenerateTransform);
  if (p.lambdas.size() < 2) throw std::invalid_argument("lah-degenerate-transform needs at least two lambdas");
  ReportBuilder b(Identity::LahDegenerateTransform);
  b.param("dist", d.str()).param("lambdas", join(p.lambdas)).param("n", std::to_string(p.n));
  for (std::size_t k = 0; k <= p.n; ++k) {
    const Rational lah_value = prob_lah(d, p.n, k);
    for (const Rational& lambda : p.lambdas) {
      Rational rhs;
      for (std::size_t l = k; l <= p.n; ++l) {
        rhs += prob_hetero_stirling(d, l, k, lambda) * deg_stirling1(p.n, l, lambda);
      }
      b.compare(lah_value, rhs);
    }
    Rational via_stirling;
    for (std::size_t l = k; l <= p.n; ++l) via_stirling += prob_stirling2(d, l, k) * stirling1u(p.n, l);
    b.compare(lah_value, via_stirling);
  }
  return b.finish();
}

IdentityReport check_recurrence(const IdentityParams& p) {
  const Distribution& d = need_dist(p, Identity::Recurrence);
  ReportBuilder b(Identity::Recurrence);
  b.param("dist", d.str()).param("lambda", p.lambda.str()).param("n", std::to_string(p.n));
  const auto built = prob_hetero_bell_recurrence(d, p.n, p.lambda);
  for (std::size_t i = 0; i <= p.n; ++i) b.compare(built[i], prob_hetero_bell_poly(d, i, p.lambda));
  return b.finish();
}

IdentityReport check_shifted_recurrence(const IdentityParams& p) {
  const Distribution& d = need_dist(p, Identity::ShiftedRecurrence);
  const auto& samples = need_samples(p, Identity::ShiftedRecurrence);
  ReportBuilder b(Identity::ShiftedRecurrence);
  b.param("dist", d.str())
      .param("lambda", p.lambda.str())
      .param("n", std::to_string(p.n))
      .param("m", std::to_string(p.m))
      .param("t", join(samples));
  const std::size_t order = p.n + p.m;
  const Polynomial explicit_poly = prob_hetero_bell_poly(d, order, p.lambda);
  // The lambda = 0 and lambda = 1 specializations are checked against the
  // probabilistic Bell and Lah-Bell polynomials built from their own numbers.
  std::optional<Polynomial> classical;
  if (p.lambda == Rational(0) || p.lambda == Rational(1)) {
    std::vector<Rational> coeffs(order + 1);
    for (std::size_t k = 0; k <= order; ++k) {
      coeffs[k] = p.lambda.is_zero() ? prob_stirling2(d, order, k) : prob_lah(d, order, k);
    }
    classical = Polynomial(std::move(coeffs));
  }
  for (const Rational& t : samples) {
    const Rational rhs = shifted_recurrence_rhs(d, p.n, p.m, t, p.lambda);
    b.compare(explicit_poly(t), rhs);
    if (classical) b.compare((*classical)(t), rhs);
  }
  return b.finish(
      "composition expansion disagrees with the explicit polynomial; recheck the shifted argument "
      "<S_j + n lambda> and the l_i >= 1 composition convention");
}

IdentityReport check_bell_partial_moments(const IdentityParams& p) {
  const Distribution& d = need_dist(p, Identity::BellPartialMoments);
  ReportBuilder b(Identity::BellPartialMoments);
  b.param("dist", d.str()).param("lambda", p.lambda.str()).param("n", std::to_string(p.n));
  const auto xs = rising_moments(d, p.n, p.lambda);
  std::vector<Rational> coeffs(p.n + 1);
  for (std::size_t k = 0; k <= p.n; ++k) coeffs[k] = partial_bell(p.n, k, xs);
  b.compare(prob_hetero_bell_poly(d, p.n, p.lambda), Polynomial(std::move(coeffs)));
  return b.finish();
}

IdentityReport check_addition(const IdentityParams& p) {
  const Distribution& d = need_dist(p, Identity::Addition);
  const auto& samples = need_samples(p, Identity::Addition);
  ReportBuilder b(Identity::Addition);
  b.param("dist", d.str())
      .param("lambda", p.lambda.str())
      .param("n", std::to_string(p.n))
      .param("samples", join(samples));
  std::vector<Polynomial> polys;
  for (std::size_t i = 0; i <= p.n; ++i) polys.push_back(prob_hetero_bell_poly(d, i, p.lambda));
  for (const Rational& x : samples) {
    for (const Rational& y : samples) {
      Rational rhs;
      for (std::size_t k = 0; k <= p.n; ++k) rhs += binomial(p.n, k) * polys[k](x) * polys[p.n - k](y);
      b.compare(polys[p.n](x + y), rhs);
    }
  }
  // Same identity as polynomials in x for each fixed y.
  for (const Rational& y : samples) {
    Polynomial rhs;
    for (std::size_t k = 0; k <= p.n; ++k) rhs += polys[k] * (binomial(p.n, k) * polys[p.n - k](y));
    b.compare(polys[p.n].shift(y), rhs);
  }
  return b.finish();
}

IdentityReport check_binomial_basis(const IdentityParams& p) {
  const Distribution& d = need_dist(p, Identity::BinomialBasis);
  ReportBuilder b(Identity::BinomialBasis);
  b.param("dist", d.str()).param("lambda", p.lambda.str()).param("n", std::to_string(p.n));
  std::vector<Rational> numbers(p.n);
  for (std::size_t j = 1; j <= p.n; ++j) numbers[j - 1] = prob_hetero_bell_poly(d, j, p.lambda)(Rational(1));
  Polynomial rhs;
  for (std::size_t k = 0; k <= p.n; ++k) rhs += binomial_poly(k) * (factorial(k) * partial_bell(p.n, k, numbers));
  b.compare(prob_hetero_bell_poly(d, p.n, p.lambda), rhs);
  return b.finish();
}

IdentityReport check_partial_bell_shifted(const IdentityParams& p) {
  const Distribution& d = need_dist(p, Identity::PartialBellShifted);
  const auto& samples = need_samples(p, Identity::PartialBellShifted);
  ReportBuilder b(Identity::PartialBellShifted);
  b.param("dist", d.str())
      .param("lambda", p.lambda.str())
      .param("n", std::to_string(p.n))
      .param("x", join(samples));
  std::vector<Polynomial> polys;
  for (std::size_t i = 0; i <= p.n; ++i) polys.push_back(prob_hetero_bell_poly(d, i, p.lambda));
  for (std::size_t k = 0; k <= p.n; ++k) {
    for (const Rational& x : samples) {
      Rational lhs;
      for (std::size_t j = 0; j <= p.n - k; ++j) {
        lhs += binomial(p.n, k) * pow(Rational(k), j) * pow(x, j) * prob_hetero_stirling(d, p.n - k, j, p.lambda);
      }
      std::vector<Rational> xs(p.n - k + 1);
      for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = Rational(i + 1) * polys[i](x);
      b.compare(lhs, partial_bell(p.n, k, xs));
    }
  }
  return b.finish();
}

IdentityReport check_partial_bell_stirling(const IdentityParams& p) {
  const Distribution& d = need_dist(p, Identity::PartialBellStirling);
  const auto& samples = need_samples(p, Identity::PartialBellStirling);
  ReportBuilder b(Identity::PartialBellStirling);
  b.param("dist", d.str())
      .param("lambda", p.lambda.str())
      .param("n", std::to_string(p.n))
      .param("x", join(samples));
  std::vector<Polynomial> polys;
  for (std::size_t i = 0; i <= p.n; ++i) polys.push_back(prob_hetero_bell_poly(d, i, p.lambda));
  for (std::size_t k = 0; k <= p.n; ++k) {
    for (const Rational& x : samples) {
      std::vector<Rational> xs(k == 0 ? 0 : p.n - k + 1);
      for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = polys[i + 1](x);
      Rational rhs;
      for (std::size_t j = k; j <= p.n; ++j) rhs += stirling2(j, k) * polys[p.n].coefficient(j) * pow(x, j);
      b.compare(partial_bell(p.n, k, xs), rhs);
    }
  }
  return b.finish();
}

IdentityReport check_derivative(const IdentityParams& p) {
  const Distribution& d = need_dist(p, Identity::Derivative);
  if (p.n < 1) throw std::invalid_argument("derivative needs n >= 1");
  ReportBuilder b(Identity::Derivative);
  b.param("dist", d.str()).param("lambda", p.lambda.str()).param("n", std::to_string(p.n));
  const Polynomial poly = prob_hetero_bell_poly(d, p.n, p.lambda);
  for (std::size_t k = 1; k <= p.n; ++k) b.compare(hetero_derivative(d, p.n, p.lambda, k), poly.derivative(k));
  b.compare(hetero_first_derivative_by_moments(d, p.n, p.lambda), poly.derivative(1));
  return b.finish();
}

IdentityReport check_poisson_sum_moment(const IdentityParams& p) {
  const Distribution& d = need_dist(p, Identity::PoissonSumMoment);
  const Rational& alpha = poisson_alpha(d, Identity::PoissonSumMoment);
  ReportBuilder b(Identity::PoissonSumMoment);
  b.param("dist", d.str())
      .param("lambda", p.lambda.str())
      .param("n", std::to_string(p.n))
      .param("k", std::to_string(p.k));
  b.compare(sum_deg_rising_moment(d, p.k, p.n, p.lambda), hetero_bell_poly(p.n, p.lambda)(Rational(p.k) * alpha));
  return b.finish();
}

IdentityReport check_poisson_bell_expansion(const IdentityParams& p) {
  const Distribution& d = need_dist(p, Identity::PoissonBellExpansion);
  const Rational& alpha = poisson_alpha(d, Identity::PoissonBellExpansion);
  ReportBuilder b(Identity::PoissonBellExpansion);
  b.param("dist", d.str()).param("lambda", p.lambda.str()).param("n", std::to_string(p.n));
  Polynomial rhs;
  for (std::size_t k = 0; k <= p.n; ++k) rhs += bell_poly(k) * (hetero_stirling(p.n, k, p.lambda) * pow(alpha, k));
  b.compare(prob_hetero_bell_poly(d, p.n, p.lambda), rhs);
  return b.finish();
}

IdentityReport check_bernoulli_closed_form(const IdentityParams& p) {
  const Distribution& d = need_dist(p, Identity::BernoulliClosedForm);
  const Rational& prob = bernoulli_p(d, Identity::BernoulliClosedForm);
  ReportBuilder b(Identity::BernoulliClosedForm);
  b.param("dist", d.str()).param("lambda", p.lambda.str()).param("n", std::to_string(p.n));
  for (std::size_t k = 0; k <= p.n; ++k) {
    b.compare(prob_hetero_stirling(d, p.n, k, p.lambda), pow(prob, k) * hetero_stirling(p.n, k, p.lambda));
  }
  b.compare(prob_hetero_bell_poly(d, p.n, p.lambda), hetero_bell_poly(p.n, p.lambda).scale_argument(prob));
  return b.finish();
}

IdentityReport check_power_sum(const IdentityParams& p) {
  if (p.n < 1) throw std::invalid_argument("power-sum needs n >= 1");
  ReportBuilder b(Identity::PowerSum);
  b.param("lambda", p.lambda.str()).param("n", std::to_string(p.n)).param("k", std::to_string(p.k));
  Rational lhs;
  for (std::size_t j = 1; j <= p.k; ++j) lhs += deg_rising_factorial(Rational(j), p.n, p.lambda);
  Rational rhs;
  for (std::size_t l = 1; l <= p.n; ++l) {
    rhs += hetero_stirling(p.n, l, p.lambda) * factorial(l) * binomial(p.k + 1, l + 1);
  }
  b.compare(lhs, rhs);
  return b.finish();
}

IdentityReport check_bernoulli_sum_moment(const IdentityParams& p) {
  const Distribution& d = need_dist(p, Identity::BernoulliSumMoment);
  const Rational& prob = bernoulli_p(d, Identity::BernoulliSumMoment);
  ReportBuilder b(Identity::BernoulliSumMoment);
  b.param("dist", d.str())
      .param("lambda", p.lambda.str())
      .param("n", std::to_string(p.n))
      .param("k", std::to_string(p.k));
  Rational rhs;
  for (std::size_t j = 0; j <= p.n; ++j) {
    rhs += binomial(p.k, j) * pow(prob, j) * factorial(j) * hetero_stirling(p.n, j, p.lambda);
  }
  b.compare(sum_deg_rising_moment(d, p.k, p.n, p.lambda), rhs);
  return b.finish();
}

IdentityReport check_limits(const IdentityParams& p) {
  ReportBuilder b(Identity::Limits);
  if (p.dist) b.param("dist", p.dist->str());
  b.param("n", std::to_string(p.n));
  const Rational zero(0);
  const Rational one(1);
  if (!p.dist) {
    for (std::size_t k = 0; k <= p.n; ++k) {
      b.compare(hetero_stirling(p.n, k, zero), stirling2(p.n, k));
      b.compare(hetero_stirling(p.n, k, one), lah(p.n, k));
    }
    b.compare(hetero_bell_poly(p.n, zero), bell_poly(p.n));
    b.compare(hetero_bell_poly(p.n, one), lah_bell_poly(p.n));
    return b.finish();
  }
  const Distribution& d = *p.dist;
  std::vector<Rational> phi(p.n + 1);
  std::vector<Rational> lah_bell(p.n + 1);
  for (std::size_t k = 0; k <= p.n; ++k) {
    phi[k] = prob_stirling2(d, p.n, k);
    lah_bell[k] = prob_lah(d, p.n, k);
    b.compare(prob_hetero_stirling(d, p.n, k, zero), phi[k]);
    b.compare(prob_hetero_stirling(d, p.n, k, one), lah_bell[k]);
  }
  b.compare(prob_hetero_bell_poly(d, p.n, zero), Polynomial(std::move(phi)));
  b.compare(prob_hetero_bell_poly(d, p.n, one), Polynomial(std::move(lah_bell)));
  return b.finish();
}

}  // namespace

std::string_view identity_tag(Identity id) {
  for (const auto& e : kTags) {
    if (e.id == id) return e.tag;
  }
  return "unknown";
}

Identity identity_from_tag(std::string_view tag) {
  for (const auto& e : kTags) {
    if (e.tag == tag) return e.id;
  }
  throw UnknownIdentity("unknown identity '" + std::string(tag) + "'");
}

const std::vector<Identity>& all_identities() {
  static const std::vector<Identity> ids = [] {
    std::vector<Identity> out;
    for (const auto& e : kTags) out.push_back(e.id);
    return out;
  }();
  return ids;
}

std::string value_str(const IdentityValue& v) {
  return std::visit([](const auto& x) { return x.str(); }, v);
}

IdentityReport verify_identity(Identity id, const IdentityParams& params) {
  switch (id) {
    case Identity::StirlingTransform: return check_routes(id, params, Route::ViaStirlingTransform);
    case Identity::PartialBellRoute: return check_routes(id, params, Route::ViaPartialBell);
    case Identity::LahStirlingTransform: return check_lah_stirling(params);
    case Identity::LahDegenerateTransform: return check_lah_degenerate(params);
    case Identity::Recurrence: return check_recurrence(params);
    case Identity::ShiftedRecurrence: return check_shifted_recurrence(params);
    case Identity::BellPartialMoments: return check_bell_partial_moments(params);
    case Identity::Addition: return check_addition(params);
    case Identity::BinomialBasis: return check_binomial_basis(params);
    case Identity::PartialBellShifted: return check_partial_bell_shifted(params);
    case Identity::PartialBellStirling: return check_partial_bell_stirling(params);
    case Identity::Derivative: return check_derivative(params);
    case Identity::PoissonSumMoment: return check_poisson_sum_moment(params);
    case Identity::PoissonBellExpansion: return check_poisson_bell_expansion(params);
    case Identity::BernoulliClosedForm: return check_bernoulli_closed_form(params);
    case Identity::PowerSum: return check_power_sum(params);
    case Identity::BernoulliSumMoment: return check_bernoulli_sum_moment(params);
    case Identity::Limits: return check_limits(params);
  }
  throw UnknownIdentity("unknown identity");
}

}  // namespace hetbell
