#include "hetbell/cli/output.hpp"

#include <cstdio>
#include <sstream>

#include "hetbell/errors.hpp"

namespace hetbell::cli {

using nlohmann::ordered_json;

namespace {

ordered_json value_json(const IdentityValue& v) {
  if (const auto* r = std::get_if<Rational>(&v)) return r->str();
  ordered_json arr = ordered_json::array();
  for (const auto& c : std::get<Polynomial>(v).coefficients()) arr.push_back(c.str());
  return arr;
}

ordered_json report_json(const IdentityReport& r) {
  ordered_json j;
  j["identity"] = std::string(identity_tag(r.id));
  ordered_json params = ordered_json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  j["params"] = std::move(params);
  ordered_json left = ordered_json::array();
  ordered_json right = ordered_json::array();
  for (const auto& v : r.left) left.push_back(value_json(v));
  for (const auto& v : r.right) right.push_back(value_json(v));
  j["left"] = std::move(left);
  j["right"] = std::move(right);
  j["pass"] = r.pass;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

}  // namespace

std::string decimal(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

ordered_json to_json(const OutputRecord& record) {
  ordered_json j;
  j["command"] = record.command;
  ordered_json params = ordered_json::object();
  for (const auto& [k, v] : record.params) params[k] = v;
  j["params"] = std::move(params);

  if (!record.rows.empty()) {
    ordered_json rows = ordered_json::array();
    for (const auto& row : record.rows) {
      ordered_json r = ordered_json::array();
      for (const auto& v : row) r.push_back(v.str());
      rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
  }

  if (record.command == "verify") {
    ordered_json reports = ordered_json::array();
    std::size_t passed = 0;
    ordered_json by_identity = ordered_json::object();
    for (const auto& r : record.reports) {
      const std::string tag(identity_tag(r.id));
      if (!by_identity.contains(tag)) by_identity[tag] = {{"total", 0}, {"passed", 0}};
      by_identity[tag]["total"] = by_identity[tag]["total"].get<std::size_t>() + 1;
      if (r.pass) {
        ++passed;
        by_identity[tag]["passed"] = by_identity[tag]["passed"].get<std::size_t>() + 1;
      }
      if (!r.pass || !record.failures_only) reports.push_back(report_json(r));
    }
    j["reports"] = std::move(reports);
    j["summary"] = {{"total", record.reports.size()},
                    {"passed", passed},
                    {"failed", record.reports.size() - passed},
                    {"by_identity", std::move(by_identity)}};
  }

  if (record.dobinski) {
    const auto& d = *record.dobinski;
    j["result"] = {{"value", decimal(d.value)},
                   {"rel_tol", decimal(d.rel_tol)},
                   {"last_term", d.last_term},
                   {"truncation_bound", decimal(d.truncation_bound)},
                   {"rounding_bound", decimal(d.rounding_bound)},
                   {"exact", d.exact.str()},
                   {"exact_decimal", decimal(d.exact.to_double())},
                   {"relative_error", decimal(d.relative_error)}};
  }
  return j;
}

OutputRecord record_from_json(const ordered_json& j) {
  OutputRecord record;
  try {
    record.command = j.at("command").get<std::string>();
    for (const auto& [k, v] : j.at("params").items()) record.params.emplace_back(k, v.get<std::string>());
    if (j.contains("rows")) {
      for (const auto& row : j.at("rows")) {
        std::vector<Rational> values;
        for (const auto& v : row) values.push_back(Rational::parse(v.get<std::string>()));
        record.rows.push_back(std::move(values));
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed output record: ") + e.what());
  }
  return record;
}

std::string to_csv(const OutputRecord& record) {
  std::ostringstream os;
  os << "# command=" << record.command << '\n';
  for (const auto& [k, v] : record.params) os << "# " << k << '=' << v << '\n';
  for (const auto& row : record.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ',';
      os << row[i];
    }
    os << '\n';
  }
  return os.str();
}

OutputRecord record_from_csv(std::string_view text) {
  OutputRecord record;
  bool have_command = false;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.rfind("# ", 0) == 0) {
      const auto eq = line.find('=');
      if (eq == std::string::npos) throw ParseError("csv metadata line without '=': " + line);
      std::string key = line.substr(2, eq - 2);
      std::string value = line.substr(eq + 1);
      if (!have_command && key == "command") {
        record.command = std::move(value);
        have_command = true;
      } else {
        record.params.emplace_back(std::move(key), std::move(value));
      }
      continue;
    }
    std::vector<Rational> row;
    std::size_t start = 0;
    while (true) {
      const auto comma = line.find(',', start);
      row.push_back(Rational::parse(std::string_view(line).substr(start, comma - start)));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    record.rows.push_back(std::move(row));
  }
  if (!have_command) throw ParseError("csv record has no command line");
  return record;
}

}  // namespace hetbell::cli
