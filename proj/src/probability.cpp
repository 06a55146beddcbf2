#include "qgs/probability.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "qgs/error.hpp"

namespace qgs {

ProbabilityVector ProbabilityVector::normalized(std::vector<double> values, double tolerance) {
  if (values.empty()) throw Error(ErrorCode::UnitarityViolation, "empty probability vector");
  for (double& p : values) {
    if (!std::isfinite(p) || p < -1e-12 || p > 1.0 + tolerance) {
      throw Error(ErrorCode::UnitarityViolation, "entry " + std::to_string(p) + " outside [0,1]");
    }
    if (p < 0.0) p = 0.0;
  }
  const double sum = std::accumulate(values.begin(), values.end(), 0.0);
  const double residual = sum - 1.0;
  if (std::abs(residual) > tolerance) {
    throw Error(ErrorCode::UnitarityViolation, "sum - 1 = " + std::to_string(residual));
  }
  for (double& p : values) p = std::min(p / sum, 1.0);
  return ProbabilityVector(std::move(values));
}

}  // namespace qgs
