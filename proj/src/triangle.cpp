#include "hetbell/triangle.hpp"

#include <mutex>
#include <stdexcept>

namespace hetbell {

std::string_view family_name(Family family) {
  switch (family) {
    case Family::Stirling2: return "stirling2";
    case Family::Stirling1Unsigned: return "stirling1u";
    case Family::Lah: return "lah";
    case Family::DegenerateStirling1: return "deg_stirling1";
    case Family::Heterogeneous: return "hetero";
  }
  return "unknown";
}

Triangle::Triangle(Family family, RowBuilder builder) : family_(family), build_(std::move(builder)) {}

void Triangle::ensure(std::size_t n) const {
  {
    std::shared_lock lock(mutex_);
    if (n < rows_.size()) return;
  }
  std::unique_lock lock(mutex_);
  while (rows_.size() <= n) {
    Row next = build_(rows_.size(), rows_);
    if (next.size() != rows_.size() + 1) throw std::logic_error("triangle row builder returned wrong width");
    rows_.push_back(std::move(next));
  }
}

Rational Triangle::at(std::size_t n, std::size_t k) const {
  if (k > n) return Rational(0);
  ensure(n);
  std::shared_lock lock(mutex_);
  return rows_[n][k];
}

Triangle::Row Triangle::row(std::size_t n) const {
  ensure(n);
  std::shared_lock lock(mutex_);
  return rows_[n];
}

LambdaTriangles::LambdaTriangles(Family family, Factory factory)
    : family_(family), factory_(std::move(factory)) {}

const Triangle& LambdaTriangles::get(const Rational& lambda) const {
  {
    std::shared_lock lock(mutex_);
    if (auto it = tables_.find(lambda); it != tables_.end()) return *it->second;
  }
  std::unique_lock lock(mutex_);
  auto& slot = tables_[lambda];
  if (!slot) slot = std::make_unique<Triangle>(family_, factory_(lambda));
  return *slot;
}

}  // namespace hetbell
