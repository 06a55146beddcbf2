#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "qgs/execution.hpp"

namespace qgs {

/// Nodes and weights on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Newton iteration on the Legendre recurrence.
GaussLegendreRule gauss_legendre(int order);

struct QuadratureOptions {
  int order = 8;
  int initial_panels = 64;
  int max_panels = 1 << 16;
  double tol = 1e-6;
};

struct MeanEstimate {
  std::vector<double> values;  // one per integrand component
  double error_estimate;       // sum of panel indicators, max over components
  int panels;                  // final partition size
};

/// Fills `out` with every component at k.
using VectorIntegrand = std::function<void(double k, std::span<double> out)>;

/// (1/K) * integral over [start, start + K] of each component, by adaptive
/// composite Gauss-Legendre. Each panel is compared with its two halves;
/// panels whose indicator exceeds an equal share of tol are split until the
/// summed indicator is below tol. All components share one partition.
/// QuadratureStalled beyond max_panels. The partition and the reduction
/// order do not depend on the execution policy.
MeanEstimate interval_mean(const VectorIntegrand& f, std::size_t components, double start,
                           double period, const QuadratureOptions& options,
                           ExecutionPolicy exec = {});

MeanEstimate interval_mean(const std::function<double(double)>& f, double start, double period,
                           const QuadratureOptions& options, ExecutionPolicy exec = {});

}  // namespace qgs
