#include <doctest.h>

#include <random>

#include "qgs/closed_forms.hpp"
#include "qgs/entropy.hpp"
#include "qgs/graph_families.hpp"
#include "support.hpp"

using namespace qgs;

namespace {

ProbabilityVector pv(std::vector<double> v) { return ProbabilityVector::normalized(std::move(v)); }

const double kLog2e = std::numbers::log2e;

}  // namespace

TEST_SUITE("entropy") {

TEST_CASE("Shannon reference values") {
  CHECK(shannon(pv({0.5, 0.5})) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(shannon(pv({1.0, 0.0, 0.0})) == 0.0);
  CHECK(shannon(pv({0.25, 0.25, 0.25, 0.25})) == doctest::Approx(2.0).epsilon(1e-15));
  for (std::size_t l = 1; l <= 64; ++l) {
    const double u = shannon(pv(std::vector<double>(l, 1.0 / static_cast<double>(l))));
    CHECK(std::abs(u - std::log2(static_cast<double>(l))) < 1e-12);
  }
}

TEST_CASE("Renyi reference values") {
  CHECK(renyi(2.0, pv({0.5, 0.5})) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(renyi(0.0, pv({0.9, 0.1, 0.0})) == 1.0);
  CHECK(renyi(0.0, pv({0.5, 0.5 - 1e-13, 1e-13})) == 1.0);
}

TEST_CASE("Tsallis reference values") {
  CHECK(std::abs(tsallis(2.0, pv({0.5, 0.5})) - kLog2e / 2) < 1e-12);
  CHECK(std::abs(tsallis(0.5, pv({0.5, 0.5})) - 2 * (std::sqrt(2.0) - 1) * kLog2e) < 1e-12);
  CHECK(std::abs(tsallis(0.0, pv({0.2, 0.3, 0.5})) - 2 * kLog2e) < 1e-12);
}

TEST_CASE("parameter domain") {
  for (double bad : {-0.5, 1.0, 1.0 + 1e-10, std::nan("")}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(renyi(bad, pv({0.5, 0.5})), Error);
    CHECK_THROWS_AS(tsallis(bad, pv({0.5, 0.5})), Error);
    CHECK_THROWS_AS(EntropyMeasure::renyi(bad), Error);
  }
  CHECK(EntropyMeasure::with_limit(MeasureKind::Renyi, 1.0).kind() == MeasureKind::Shannon);
  CHECK(EntropyMeasure::with_limit(MeasureKind::Tsallis, 2.0).kind() == MeasureKind::Tsallis);
  CHECK(EntropyMeasure::renyi(0.5).column_name() == "renyi_0.5");
  CHECK(EntropyMeasure::tsallis(2).column_name() == "tsallis_2");
  CHECK(EntropyMeasure::shannon().column_name() == "shannon");
}

TEST_CASE("bounds, monotonicity, ordering and limits on the simplex") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<std::size_t> dim(2, 12);
  std::uniform_real_distribution<double> par(0.0, 6.0);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t l = dim(rng);
    const ProbabilityVector p = testing::random_simplex(rng, l);
    const double h = shannon(p);
    CHECK(h >= 0.0);
    CHECK(h <= std::log2(static_cast<double>(l)) + 1e-12);

    double a1 = par(rng), a2 = par(rng);
    if (std::abs(a1 - 1) < 1e-6 || std::abs(a2 - 1) < 1e-6) continue;
    if (a1 > a2) std::swap(a1, a2);
    CHECK(renyi(a1, p) >= renyi(a2, p) - 1e-12);

    const double q = a2;
    if (q > 1) CHECK(renyi(q, p) >= tsallis(q, p) - 1e-12);
    if (q < 1) CHECK(renyi(q, p) <= tsallis(q, p) + 1e-12);

    for (double eps : {1e-6, -1e-6}) {
      CHECK(std::abs(renyi(1 + eps, p) - h) <= 10 * std::abs(eps));
      CHECK(std::abs(tsallis(1 + eps, p) - h) <= 10 * std::abs(eps));
    }
  }
}

TEST_CASE("Tsallis pseudo-additivity in natural-log normalization") {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 200; ++i) {
    const ProbabilityVector a = testing::random_simplex(rng, 3), b = testing::random_simplex(rng, 4);
    std::vector<double> joint;
    for (double x : a.values()) {
      for (double y : b.values()) joint.push_back(x * y);
    }
    const double q = 0.3 + 0.4 * i / 200.0 + (i % 2 ? 1.0 : 0.0);
    auto s = [q](const ProbabilityVector& p) { return tsallis(q, p) / kLog2e; };
    const double sa = s(a), sb = s(b), sab = s(pv(joint));
    CHECK(std::abs(sab - (sa + sb + (1 - q) * sa * sb)) < 1e-12);
  }
}

TEST_CASE("scattering entropies on the families") {
  const OpenGraph c7 = cycle_graph(7);
  CHECK(scattering_entropy(c7, EntropyMeasure::shannon(), testing::kPi) < 1e-6);
  CHECK(scattering_entropy(c7, EntropyMeasure::shannon(), 3 * testing::kPi) < 1e-6);

  const OpenGraph k4 = complete_graph(4);
  for (const EntropyMeasure& m :
       {EntropyMeasure::shannon(), EntropyMeasure::renyi(0.5), EntropyMeasure::renyi(3.0)}) {
    CHECK(scattering_entropy(k4, m, 2 * testing::kPi + 1e-8) == doctest::Approx(2.0).epsilon(1e-6));
  }
  // near z = 1 from below
  CHECK(scattering_entropy(k4, EntropyMeasure::shannon(), 2 * testing::kPi - 1e-7) ==
        doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("probabilities_near retries past a singular point") {
  // total reflectors with a trapped mode at k = pi
  const OpenGraph og(MetricGraph(2, {{1, 2, 1.0}}, {Custom{-1.0, 0.0}, Custom{-1.0, 0.0}}), {1, 2});
  const auto p = probabilities_near(og, testing::kPi, 1e-9);
  REQUIRE(p.has_value());
  CHECK((*p)[0] == doctest::Approx(1.0));
}

TEST_CASE("averages: ordering and the two-channel oracle") {
  const OpenGraph w5 = wheel_graph(5);
  const PeriodSpec period = infer_period(w5.base());
  const double sh = average_entropy(w5, EntropyMeasure::shannon(), period);
  const double r2 = average_entropy(w5, EntropyMeasure::renyi(2.0), period);
  CHECK(r2 < sh);

  const OpenGraph k4 = complete_graph(4);
  const std::vector<EntropyMeasure> ts{EntropyMeasure::tsallis(0.25), EntropyMeasure::tsallis(0.5),
                                       EntropyMeasure::tsallis(2.0), EntropyMeasure::tsallis(4.0)};
  const AverageEntropy avg = average_entropies(k4, ts, infer_period(k4.base()));
  for (std::size_t i = 1; i < avg.values.size(); ++i) CHECK(avg.values[i] < avg.values[i - 1]);

  // K_2 is a single edge between two degree-2 vertices: transparent, so
  // every entropy vanishes; compare against a plain midpoint-rule average.
  const OpenGraph k2 = complete_graph(2);
  const double mean = average_entropy(k2, EntropyMeasure::shannon(), infer_period(k2.base()));
  double direct = 0.0;
  const auto grid = testing::midpoint_grid(4000);
  for (double k : grid) direct += scattering_entropy(k2, EntropyMeasure::shannon(), k);
  direct /= static_cast<double>(grid.size());
  CHECK(std::abs(mean - direct) < 1e-8);

  // The equal-length two-edge block against its closed form, averaged with
  // a fine midpoint rule that never touches the engine.
  const OpenGraph block = pvv_graph(1.0, 1.0);
  const double engine = average_entropy(block, EntropyMeasure::shannon(), infer_period(block.base()), 1e-9);
  double oracle = 0.0;
  const auto fine = testing::midpoint_grid(200000);
  for (double k : fine) {
    const TwoPort tp = pvv_equal(std::polar(1.0, k));
    oracle += shannon(ProbabilityVector::normalized({std::norm(tp.R), std::norm(tp.T)}));
  }
  oracle /= static_cast<double>(fine.size());
  CHECK(std::abs(engine - oracle) < 1e-8);
}

TEST_CASE("averages are the same in serial and parallel") {
  const OpenGraph c5 = cycle_graph(5);
  const std::vector<EntropyMeasure> m{EntropyMeasure::shannon(), EntropyMeasure::renyi(0.25)};
  const PeriodSpec period = infer_period(c5.base());
  const AverageEntropy s = average_entropies(c5, m, period, 1e-6, {Execution::Serial, 0});
  const AverageEntropy p = average_entropies(c5, m, period, 1e-6, {Execution::Parallel, 4});
  CHECK(s.values == p.values);
  CHECK(s.panels == p.panels);
}

}  // TEST_SUITE
