#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hetbell/identities.hpp"
#include "hetbell/rational.hpp"

namespace hetbell::cli {

struct DobinskiPayload {
  double value = 0;
  double rel_tol = 0;
  std::size_t last_term = 0;
  double truncation_bound = 0;
  double rounding_bound = 0;
  Rational exact;
  double relative_error = 0;
};

/// Everything one CLI command emits. Rationals travel as "num/den" strings
/// (integers without "/1"); only the Dobinski payload carries floats.
struct OutputRecord {
  std::string command;
  std::vector<std::pair<std::string, std::string>> params;
  /// Triangle rows, or a single row of polynomial coefficients.
  std::vector<std::vector<Rational>> rows;
  std::vector<IdentityReport> reports;
  std::optional<DobinskiPayload> dobinski;
  /// Only passing reports are dropped from the JSON when set.
  bool failures_only = false;
};

/// %.17g rendering, enough digits to round-trip a double.
std::string decimal(double value);

nlohmann::ordered_json to_json(const OutputRecord& record);
/// Reads back command, params and rows. Throws ParseError.
OutputRecord record_from_json(const nlohmann::ordered_json& j);

/// `# key=value` metadata lines (command first), then one line of
/// comma-separated rationals per row. Rows must be nonempty.
std::string to_csv(const OutputRecord& record);
/// Throws ParseError.
OutputRecord record_from_csv(std::string_view text);

}  // namespace hetbell::cli
