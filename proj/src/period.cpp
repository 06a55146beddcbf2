#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>

#include "qgs/entropy.hpp"

namespace qgs {
namespace {

struct Fraction {
  std::int64_t num;
  std::int64_t den;
};

// Best rational approximation of x with denominator <= max_den, by
// continued fractions; nullopt when none is within rel_tol.
std::optional<Fraction> rationalize(double x, std::int64_t max_den, double rel_tol) {
  std::int64_t h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  double rest = x;
  for (int iter = 0; iter < 64; ++iter) {
    const double a = std::floor(rest);
    if (a > 1e12) break;
    const auto ai = static_cast<std::int64_t>(a);
    const std::int64_t h2 = ai * h1 + h0;
    const std::int64_t k2 = ai * k1 + k0;
    if (k2 > max_den) break;
    h0 = h1; h1 = h2; k0 = k1; k1 = k2;
    if (std::abs(static_cast<double>(h1) / static_cast<double>(k1) - x) <= rel_tol * x) {
      return Fraction{h1, k1};
    }
    const double frac = rest - a;
    if (frac < 1e-15) break;
    rest = 1.0 / frac;
  }
  return std::nullopt;
}

}  // namespace

PeriodSpec infer_period(const MetricGraph& g) {
  const auto edges = g.edges();
  if (edges.empty()) throw Error(ErrorCode::NoPeriod, "graph has no edges");
  const double base = edges[0].length;

  std::vector<Fraction> ratios;
  std::int64_t lcm_den = 1;
  for (const Edge& e : edges) {
    const auto f = rationalize(e.length / base, 10000, 1e-9);
    if (!f) throw Error(ErrorCode::NoPeriod, "edge lengths are incommensurate");
    ratios.push_back(*f);
    lcm_den = std::lcm(lcm_den, f->den);
    if (lcm_den > 1'000'000'000) throw Error(ErrorCode::NoPeriod, "common length too small");
  }
  std::int64_t gcd_num = 0;
  for (const Fraction& f : ratios) gcd_num = std::gcd(gcd_num, f.num * (lcm_den / f.den));

  const double unit = base * static_cast<double>(gcd_num) / static_cast<double>(lcm_den);
  for (const Edge& e : edges) {
    const double m = e.length / unit;
    if (std::abs(m - std::round(m)) > 1e-9 * std::max(1.0, m)) {
      throw Error(ErrorCode::NoPeriod, "edge lengths are incommensurate");
    }
  }
  return {2.0 * std::numbers::pi / unit, PeriodSpec::Source::Inferred};
}

}  // namespace qgs
