#pragma once

#include <span>
#include <vector>

namespace qgs {

/// Channel probabilities: entries in [0, 1] summing to 1 to within 1e-12.
class ProbabilityVector {
 public:
  /// Accepts entries whose sum is within `tolerance` of 1 and rescales them
  /// to an exact unit sum. Tiny negative dust (> -1e-12) is clamped to 0.
  /// Throws UnitarityViolation otherwise.
  static ProbabilityVector normalized(std::vector<double> values, double tolerance = 1e-8);

  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t j) const { return values_[j]; }

 private:
  explicit ProbabilityVector(std::vector<double> v) : values_(std::move(v)) {}
  std::vector<double> values_;
};

}  // namespace qgs
