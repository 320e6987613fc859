#include "hetbell/grid.hpp"

#include <cctype>
#include <fstream>
#include <future>
#include <sstream>

#include "hetbell/errors.hpp"
#include "shipped_grid.hpp"

namespace hetbell {

namespace {

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

std::vector<std::string> split_trimmed(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    std::string item = trim(text.substr(start, pos - start));
    if (!item.empty()) out.push_back(std::move(item));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

VerifyGrid VerifyGrid::parse(std::istream& in) {
  VerifyGrid grid;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    const std::string body = trim(std::string_view(line).substr(0, hash));
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) throw ParseError("grid line " + std::to_string(line_no) + ": expected key = value");
    std::string key = trim(std::string_view(body).substr(0, eq));
    std::string value = trim(std::string_view(body).substr(eq + 1));
    if (key.empty()) throw ParseError("grid line " + std::to_string(line_no) + ": empty key");
    grid.entries_[std::move(key)] = std::move(value);
  }
  return grid;
}

VerifyGrid VerifyGrid::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open grid config '" + path + "'");
  return parse(in);
}

const VerifyGrid& VerifyGrid::shipped() {
  static const VerifyGrid grid = [] {
    std::istringstream in{std::string(kShippedGrid)};
    return parse(in);
  }();
  return grid;
}

const std::string& VerifyGrid::lookup(Identity id, std::string_view name) const {
  const std::string scoped = std::string(identity_tag(id)) + "." + std::string(name);
  if (auto it = entries_.find(scoped); it != entries_.end()) return it->second;
  if (auto it = entries_.find(std::string(name)); it != entries_.end()) return it->second;
  throw ParseError("grid has no value for '" + scoped + "' or '" + std::string(name) + "'");
}

int VerifyGrid::version() const {
  const auto it = entries_.find("version");
  if (it == entries_.end()) return 0;
  try {
    return std::stoi(it->second);
  } catch (const std::exception&) {
    throw ParseError("grid version '" + it->second + "' is not an integer");
  }
}

std::vector<Distribution> VerifyGrid::distributions(Identity id) const {
  std::vector<Distribution> out;
  for (const auto& spec : split_trimmed(lookup(id, "distributions"), ';')) out.push_back(Distribution::parse(spec));
  return out;
}

std::vector<Rational> VerifyGrid::rationals(Identity id, std::string_view name) const {
  std::vector<Rational> out;
  for (const auto& item : split_trimmed(lookup(id, name), ',')) out.push_back(Rational::parse(item));
  return out;
}

std::size_t VerifyGrid::integer(Identity id, std::string_view name) const {
  const std::string& text = lookup(id, name);
  const Rational value = Rational::parse(text);
  if (!value.is_integer() || value.sign() < 0) {
    throw ParseError("grid value for '" + std::string(name) + "' must be a nonnegative integer, got " + text);
  }
  return value.numerator().get_ui();
}

std::vector<std::pair<Identity, IdentityParams>> enumerate_grid(Identity id, const VerifyGrid& grid) {
  std::vector<std::pair<Identity, IdentityParams>> out;
  const auto emit = [&](IdentityParams p) { out.emplace_back(id, std::move(p)); };

  switch (id) {
    case Identity::StirlingTransform:
    case Identity::PartialBellRoute:
    case Identity::Recurrence:
    case Identity::BellPartialMoments:
    case Identity::BinomialBasis:
    case Identity::Addition:
    case Identity::PartialBellShifted:
    case Identity::PartialBellStirling:
    case Identity::Derivative:
    case Identity::PoissonBellExpansion:
    case Identity::BernoulliClosedForm: {
      const bool needs_samples = id == Identity::Addition || id == Identity::PartialBellShifted ||
                                 id == Identity::PartialBellStirling;
      const std::vector<Rational> samples = needs_samples ? grid.rationals(id, "samples") : std::vector<Rational>{};
      const std::size_t n_min = id == Identity::Derivative ? 1 : 0;
      for (const auto& d : grid.distributions(id)) {
        for (const auto& lambda : grid.rationals(id, "lambdas")) {
          for (std::size_t n = n_min; n <= grid.integer(id, "n_max"); ++n) {
            IdentityParams p;
            p.dist = d;
            p.lambda = lambda;
            p.n = n;
            p.samples = samples;
            emit(std::move(p));
          }
        }
      }
      break;
    }
    case Identity::LahStirlingTransform:
    case Identity::LahDegenerateTransform: {
      const auto lambdas = id == Identity::LahDegenerateTransform ? grid.rationals(id, "lambdas")
                                                                  : std::vector<Rational>{};
      for (const auto& d : grid.distributions(id)) {
        for (std::size_t n = 0; n <= grid.integer(id, "n_max"); ++n) {
          IdentityParams p;
          p.dist = d;
          p.lambdas = lambdas;
          p.n = n;
          emit(std::move(p));
        }
      }
      break;
    }
    case Identity::ShiftedRecurrence: {
      const auto samples = grid.rationals(id, "samples");
      const std::size_t order_max = grid.integer(id, "order_max");
      for (const auto& d : grid.distributions(id)) {
        for (const auto& lambda : grid.rationals(id, "lambdas")) {
          for (std::size_t order = 0; order <= order_max; ++order) {
            for (std::size_t n = 0; n <= order; ++n) {
              IdentityParams p;
              p.dist = d;
              p.lambda = lambda;
              p.n = n;
              p.m = order - n;
              p.samples = samples;
              emit(std::move(p));
            }
          }
        }
      }
      break;
    }
    case Identity::PoissonSumMoment:
    case Identity::BernoulliSumMoment: {
      for (const auto& d : grid.distributions(id)) {
        for (const auto& lambda : grid.rationals(id, "lambdas")) {
          for (std::size_t n = 0; n <= grid.integer(id, "n_max"); ++n) {
            for (std::size_t k = 0; k <= grid.integer(id, "k_max"); ++k) {
              IdentityParams p;
              p.dist = d;
              p.lambda = lambda;
              p.n = n;
              p.k = k;
              emit(std::move(p));
            }
          }
        }
      }
      break;
    }
    case Identity::PowerSum: {
      for (const auto& lambda : grid.rationals(id, "lambdas")) {
        for (std::size_t n = 1; n <= grid.integer(id, "n_max"); ++n) {
          for (std::size_t k = 0; k <= grid.integer(id, "k_max"); ++k) {
            IdentityParams p;
            p.lambda = lambda;
            p.n = n;
            p.k = k;
            emit(std::move(p));
          }
        }
      }
      break;
    }
    case Identity::Limits: {
      const std::size_t n_max = grid.integer(id, "n_max");
      for (std::size_t n = 0; n <= n_max; ++n) {
        IdentityParams p;
        p.n = n;
        emit(std::move(p));
      }
      for (const auto& d : grid.distributions(id)) {
        for (std::size_t n = 0; n <= n_max; ++n) {
          IdentityParams p;
          p.dist = d;
          p.n = n;
          emit(std::move(p));
        }
      }
      break;
    }
  }
  return out;
}

std::vector<IdentityReport> run_verification(std::span<const Identity> ids, const VerifyGrid& grid) {
  std::vector<std::future<std::vector<IdentityReport>>> jobs;
  jobs.reserve(ids.size());
  for (Identity id : ids) {
    // Enumerate eagerly so grid errors surface on the calling thread.
    auto points = enumerate_grid(id, grid);
    jobs.push_back(std::async(std::launch::async, [points = std::move(points)] {
      std::vector<IdentityReport> reports;
      reports.reserve(points.size());
      for (const auto& [pid, params] : points) reports.push_back(verify_identity(pid, params));
      return reports;
    }));
  }
  std::vector<IdentityReport> out;
  for (auto& job : jobs) {
    auto part = job.get();
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

}  // namespace hetbell
