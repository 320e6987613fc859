#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <shared_mutex>
#include <string_view>
#include <vector>

#include "hetbell/rational.hpp"

namespace hetbell {

enum class Family {
  Stirling2,
  Stirling1Unsigned,
  Lah,
  DegenerateStirling1,
  Heterogeneous,
};

std::string_view family_name(Family family);

/// Lower-triangular table (n, k) -> Rational, grown lazily row by row.
///
/// The row builder receives n and every row below it and must return row n
/// with exactly n + 1 entries. Rows are never rebuilt once stored, so values
/// handed out earlier stay valid. Safe for concurrent queries.
class Triangle {
 public:
  using Row = std::vector<Rational>;
  using RowBuilder = std::function<Row(std::size_t n, const std::vector<Row>& below)>;

  Triangle(Family family, RowBuilder builder);

  Triangle(const Triangle&) = delete;
  Triangle& operator=(const Triangle&) = delete;

  Family family() const { return family_; }

  /// Zero for k > n.
  Rational at(std::size_t n, std::size_t k) const;
  Row row(std::size_t n) const;

 private:
  void ensure(std::size_t n) const;

  Family family_;
  RowBuilder build_;
  mutable std::shared_mutex mutex_;
  mutable std::vector<Row> rows_;
};

/// One triangle per lambda value for the lambda-dependent families.
class LambdaTriangles {
 public:
  using Factory = std::function<Triangle::RowBuilder(const Rational& lambda)>;

  LambdaTriangles(Family family, Factory factory);

  const Triangle& get(const Rational& lambda) const;

 private:
  Family family_;
  Factory factory_;
  mutable std::shared_mutex mutex_;
  mutable std::map<Rational, std::unique_ptr<Triangle>> tables_;
};

}  // namespace hetbell
