#include "qgs/entropy.hpp"

#include <cmath>
#include <numbers>

#include "qgs/csv.hpp"
#include "qgs/scattering.hpp"

namespace qgs {
namespace {

void check_parameter(double x, const char* name) {
  if (!(x >= 0.0) || !std::isfinite(x)) {
    throw Error(ErrorCode::BadParameter, std::string(name) + " must be >= 0");
  }
  if (std::abs(x - 1.0) <= 1e-9) {
    throw Error(ErrorCode::BadParameter, std::string(name) + " = 1 is the Shannon limit");
  }
}

std::size_t support_size(const ProbabilityVector& p) {
  std::size_t count = 0;
  for (double v : p.values()) count += v > kZeroProbability ? 1 : 0;
  return count;
}

// sum_j p_j^g - 1 for a normalized vector, as sum p (p^{g-1} - 1) so that it
// stays accurate when g is close to 1.
double power_sum_minus_one(double g, const ProbabilityVector& p) {
  double acc = 0.0;
  for (double v : p.values()) {
    if (v > 0.0) acc += v * std::expm1((g - 1.0) * std::log(v));
  }
  return acc;
}

}  // namespace

double shannon(const ProbabilityVector& p) {
  double h = 0.0;
  for (double v : p.values()) {
    if (v > 0.0) h -= v * std::log2(v);
  }
  return h;
}

double renyi(double alpha, const ProbabilityVector& p) {
  check_parameter(alpha, "alpha");
  if (alpha == 0.0) return std::log2(static_cast<double>(support_size(p)));
  return std::log1p(power_sum_minus_one(alpha, p)) / ((1.0 - alpha) * std::numbers::ln2);
}

double tsallis(double q, const ProbabilityVector& p) {
  check_parameter(q, "q");
  if (q == 0.0) return std::numbers::log2e * (static_cast<double>(support_size(p)) - 1.0);
  return -std::numbers::log2e * power_sum_minus_one(q, p) / (q - 1.0);
}

EntropyMeasure EntropyMeasure::renyi(double alpha) {
  check_parameter(alpha, "alpha");
  return EntropyMeasure(MeasureKind::Renyi, alpha);
}

EntropyMeasure EntropyMeasure::tsallis(double q) {
  check_parameter(q, "q");
  return EntropyMeasure(MeasureKind::Tsallis, q);
}

EntropyMeasure EntropyMeasure::with_limit(MeasureKind kind, double parameter) {
  if (kind == MeasureKind::Shannon || std::abs(parameter - 1.0) <= 1e-9) return shannon();
  return kind == MeasureKind::Renyi ? renyi(parameter) : tsallis(parameter);
}

std::string EntropyMeasure::column_name() const {
  switch (kind_) {
    case MeasureKind::Shannon: return "shannon";
    case MeasureKind::Renyi: return "renyi_" + format_number(parameter_);
    case MeasureKind::Tsallis: return "tsallis_" + format_number(parameter_);
  }
  return "?";
}

double EntropyMeasure::operator()(const ProbabilityVector& p) const {
  switch (kind_) {
    case MeasureKind::Shannon: return qgs::shannon(p);
    case MeasureKind::Renyi: return qgs::renyi(parameter_, p);
    case MeasureKind::Tsallis: return qgs::tsallis(parameter_, p);
  }
  return 0.0;
}

PeriodSpec PeriodSpec::explicit_period(double K) {
  if (!(K > 0.0) || !std::isfinite(K)) throw Error(ErrorCode::BadParameter, "period must be positive");
  return {K, Source::Explicit};
}

std::optional<ProbabilityVector> probabilities_near(const OpenGraph& og, double k, double offset) {
  for (double shift : {0.0, offset, -offset}) {
    const double kk = k + shift;
    if (!(kk > 0.0)) continue;
    try {
      return probabilities(scattering_matrix(og, kk), og.entrance_vertex());
    } catch (const Error& e) {
      if (e.code() != ErrorCode::SingularSystem && e.code() != ErrorCode::UnitarityViolation) throw;
    }
  }
  return std::nullopt;
}

double scattering_entropy(const OpenGraph& og, const EntropyMeasure& measure, double k) {
  return measure(probabilities(scattering_matrix(og, k), og.entrance_vertex()));
}

AverageEntropy average_entropies(const OpenGraph& og, std::span<const EntropyMeasure> measures,
                                 const PeriodSpec& period, double tol, ExecutionPolicy exec) {
  const double offset = 1e-9 * period.K;
  auto integrand = [&](double k, std::span<double> out) {
    const auto p = probabilities_near(og, k, offset);
    if (!p) {
      throw Error(ErrorCode::EngineFailure, "singular scattering at k = " + std::to_string(k));
    }
    for (std::size_t m = 0; m < measures.size(); ++m) out[m] = measures[m](*p);
  };
  QuadratureOptions options;
  options.tol = tol;
  MeanEstimate est = interval_mean(integrand, measures.size(), 0.0, period.K, options, exec);
  return {std::move(est.values), est.error_estimate, est.panels};
}

double average_entropy(const OpenGraph& og, const EntropyMeasure& measure,
                       const PeriodSpec& period, double tol, ExecutionPolicy exec) {
  return average_entropies(og, std::span(&measure, 1), period, tol, exec).values[0];
}

}  // namespace qgs
