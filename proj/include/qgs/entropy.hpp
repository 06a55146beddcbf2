#pragma once

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "qgs/execution.hpp"
#include "qgs/graph.hpp"
#include "qgs/probability.hpp"
#include "qgs/quadrature.hpp"

namespace qgs {

/// Threshold below which a probability counts as zero for the alpha = 0 /
/// q = 0 (Hartley) limits.
inline constexpr double kZeroProbability = 1e-12;

/// Entropies in bits.
double shannon(const ProbabilityVector& p);
/// (1/(1-alpha)) log2 sum p^alpha, alpha >= 0, |alpha - 1| > 1e-9.
double renyi(double alpha, const ProbabilityVector& p);
/// (log2 e/(q-1)) (1 - sum p^q), q >= 0, |q - 1| > 1e-9.
double tsallis(double q, const ProbabilityVector& p);

enum class MeasureKind { Shannon, Renyi, Tsallis };

class EntropyMeasure {
 public:
  static EntropyMeasure shannon() { return EntropyMeasure(MeasureKind::Shannon, 1.0); }
  /// BadParameter outside [0, inf) or within 1e-9 of 1.
  static EntropyMeasure renyi(double alpha);
  static EntropyMeasure tsallis(double q);
  /// Renyi/Tsallis, falling back to Shannon when `parameter` is within 1e-9
  /// of 1.
  static EntropyMeasure with_limit(MeasureKind kind, double parameter);

  MeasureKind kind() const noexcept { return kind_; }
  double parameter() const noexcept { return parameter_; }
  /// shannon | renyi_<alpha> | tsallis_<q>
  std::string column_name() const;

  double operator()(const ProbabilityVector& p) const;

 private:
  EntropyMeasure(MeasureKind kind, double parameter) : kind_(kind), parameter_(parameter) {}
  MeasureKind kind_;
  double parameter_;
};

/// Period K of the channel probabilities in k.
struct PeriodSpec {
  enum class Source { Explicit, Inferred };
  double K;
  Source source;

  static PeriodSpec explicit_period(double K);
};

/// K = 2 pi / l0 with l0 the largest length dividing every edge length to
/// 1e-9 (rational reconstruction). NoPeriod for incommensurate lengths.
PeriodSpec infer_period(const MetricGraph& g);

/// Entrance-channel probabilities at k; on SingularSystem or
/// UnitarityViolation retries once at k + offset, then k - offset.
std::optional<ProbabilityVector> probabilities_near(const OpenGraph& og, double k, double offset);

/// H(k) for the graph's entrance channel.
double scattering_entropy(const OpenGraph& og, const EntropyMeasure& measure, double k);

struct AverageEntropy {
  std::vector<double> values;  // one per measure
  double error_estimate;
  int panels;
};

/// (1/K) integral_0^K H(k) dk for several measures on one shared adaptive
/// Gauss-Legendre partition (64 starting panels x 8 nodes). Nodes that hit a
/// singular k are replaced by samples offset 1e-9 K.
AverageEntropy average_entropies(const OpenGraph& og, std::span<const EntropyMeasure> measures,
                                 const PeriodSpec& period, double tol = 1e-6,
                                 ExecutionPolicy exec = {});

double average_entropy(const OpenGraph& og, const EntropyMeasure& measure,
                       const PeriodSpec& period, double tol = 1e-6, ExecutionPolicy exec = {});

}  // namespace qgs
