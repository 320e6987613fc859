#pragma once

#include <cstddef>
#include <istream>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hetbell/distribution.hpp"
#include "hetbell/identities.hpp"
#include "hetbell/rational.hpp"

namespace hetbell {

/// Parameter grid for the verification suite, read from a `key = value`
/// file. A key `<identity-tag>.<name>` overrides `<name>` for that identity.
///
/// Recognised names: distributions (';'-separated specs), lambdas and
/// samples (','-separated rationals), n_max, k_max, order_max, version.
class VerifyGrid {
 public:
  /// Throws ParseError on malformed lines or values.
  static VerifyGrid parse(std::istream& in);
  static VerifyGrid parse_file(const std::string& path);
  /// The grid shipped in config/verify_grid.conf, compiled in.
  static const VerifyGrid& shipped();

  int version() const;
  std::vector<Distribution> distributions(Identity id) const;
  std::vector<Rational> rationals(Identity id, std::string_view name) const;
  std::size_t integer(Identity id, std::string_view name) const;

  const std::map<std::string, std::string>& entries() const { return entries_; }

 private:
  const std::string& lookup(Identity id, std::string_view name) const;

  std::map<std::string, std::string> entries_;
};

/// Every (identity, params) point of the grid, in deterministic order.
std::vector<std::pair<Identity, IdentityParams>> enumerate_grid(Identity id, const VerifyGrid& grid);

/// Runs every listed identity over its grid. Identities run concurrently;
/// the result is ordered by identity, then by grid point.
std::vector<IdentityReport> run_verification(std::span<const Identity> ids, const VerifyGrid& grid);

}  // namespace hetbell
