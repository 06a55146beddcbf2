#include <doctest.h>

#include <random>

#include "qgs/closed_forms.hpp"
#include "qgs/graph_families.hpp"
#include "qgs/scattering.hpp"
#include "support.hpp"

using namespace qgs;
using testing::kPi;

namespace {

double two_port_gap(const TwoPort& a, const TwoPort& b) {
  return std::max(std::abs(a.R - b.R), std::abs(a.T - b.T));
}

const VertexAmplitudes kTransparent{0.0, 1.0};
const VertexAmplitudes kDegree3{-1.0 / 3.0, 2.0 / 3.0};

}  // namespace

TEST_SUITE("closed_forms") {

TEST_CASE("series pair limits") {
  const cplx z = std::polar(1.0, 0.9);
  const TwoPort clear = series_pair(kTransparent, kTransparent, z);
  CHECK(std::abs(clear.R) < 1e-15);
  CHECK(std::abs(clear.T - z) < 1e-15);

  const TwoPort wall = series_pair(kTransparent, {-1.0, 0.0}, z);
  CHECK(std::abs(wall.R + z * z) < 1e-15);
  CHECK(std::abs(wall.R) == doctest::Approx(1.0));
}

TEST_CASE("series chain") {
  const cplx z = std::polar(1.0, 1.3);
  const std::vector<VertexAmplitudes> two{kDegree3, {cplx(0, 0.6), 0.8}};
  CHECK(two_port_gap(series_chain(two, z), series_pair(two[0], two[1], z)) < 1e-15);

  const std::vector<VertexAmplitudes> clear(6, kTransparent);
  const TwoPort tp = series_chain(clear, z);
  CHECK(std::abs(tp.R) < 1e-15);
  CHECK(std::abs(tp.T - std::pow(z, 5)) < 1e-14);

  // r1 r2 z^2 = 1 kills the first denominator
  const std::vector<VertexAmplitudes> trap{{1.0, 0.0}, {1.0, 0.0}};
  try {
    series_chain(trap, 1.0);
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DenominatorVanishes);
  }
}

TEST_CASE("series identical agrees with the chain") {
  for (int n = 2; n <= 8; ++n) {
    for (double theta : testing::midpoint_grid(96)) {
      const cplx z = std::polar(1.0, theta);
      const TwoPort block = pvv_equal(z);
      const std::vector<VertexAmplitudes> chain(static_cast<std::size_t>(n), {block.R, block.T});
      double gap = 0.0;
      try {
        gap = two_port_gap(series_identical(block, n, z), series_chain(chain, z));
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DegenerateBranch);
      }
      CHECK(gap < 1e-10);
    }
  }
  const TwoPort b{cplx(0.3, 0.1), cplx(0.2, 0.9)};
  CHECK(two_port_gap(series_identical(b, 1, 0.5), b) < 1e-15);
}

TEST_CASE("two-edge block") {
  const TwoPort at_one = pvv_equal(1.0);
  CHECK(std::abs(at_one.R) < 1e-15);
  CHECK(std::abs(at_one.T - 1.0) < 1e-15);

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> th(0.0, 2 * kPi);
  for (int i = 0; i < 100; ++i) {
    const cplx w = std::polar(1.0, th(rng)), w2 = std::polar(1.0, th(rng));
    const TwoPort eq = pvv_equal(w);
    CHECK(std::norm(eq.R) + std::norm(eq.T) == doctest::Approx(1.0).epsilon(1e-12));
    // z_j = e^{ik l_j / 2}: equal halves reduce to the full-edge form
    CHECK(two_port_gap(pvv_two_edge(w, w), pvv_equal(w * w)) < 1e-12);
    const TwoPort gen = pvv_two_edge(w, w2);
    CHECK(std::norm(gen.R) + std::norm(gen.T) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("diamond specializes to the two-edge block and is symmetric") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> th(0.0, 2 * kPi);
  for (int i = 0; i < 100; ++i) {
    const cplx z1 = std::polar(1.0, th(rng)), z2 = std::polar(1.0, th(rng));
    CHECK(two_port_gap(parallel_pair(kDegree3, kTransparent, kTransparent, z1, z2),
                       pvv_two_edge(z1, z2)) < 1e-10);
    const VertexAmplitudes a{cplx(0, std::sin(0.4)), std::cos(0.4)};
    const VertexAmplitudes b{cplx(0, std::sin(1.2)), std::cos(1.2)};
    CHECK(two_port_gap(parallel_pair(kDegree3, a, b, z1, z2), parallel_pair(kDegree3, b, a, z2, z1)) <
          1e-12);
  }
}

TEST_CASE("parallel bundle forms agree and are unitary") {
  for (int n = 1; n <= 8; ++n) {
    const VertexAmplitudes lateral{-(n - 1.0) / (n + 1.0), 2.0 / (n + 1.0)};
    for (double theta : testing::midpoint_grid(101)) {
      const cplx z = std::polar(1.0, theta);
      const TwoPort neu = parallel_identical(pvv_equal(z), n, z, NeumannEnds{});
      const TwoPort gen = parallel_identical(pvv_equal(z), n, z, lateral);
      CHECK(two_port_gap(neu, gen) < 1e-12);
      CHECK(std::norm(neu.R) + std::norm(neu.T) == doctest::Approx(1.0).epsilon(1e-10));
    }
  }
}

TEST_CASE("cycle: odd n at z = -1 reflects totally") {
  for (int n : {3, 5, 7}) {
    // beta vanishes at z^2 = 1, so approach z = -1 from just off the point.
    const cplx z = std::polar(1.0, kPi + 1e-7);
    CHECK(std::abs(cycle_amplitude(n, 1, z)) == doctest::Approx(1.0).epsilon(1e-6));
    for (int v = 2; v <= n; ++v) CHECK(std::abs(cycle_amplitude(n, v, z)) < 1e-6);
  }
}

TEST_CASE("cycle: mirror symmetry and unitarity") {
  for (int n = 3; n <= 8; ++n) {
    for (double theta : testing::midpoint_grid(66)) {
      const cplx z = std::polar(1.0, theta);
      double total = 0.0;
      for (int v = 1; v <= n; ++v) {
        const cplx s = cycle_amplitude(n, v, z);
        total += std::norm(s);
        if (v >= 2) CHECK(std::abs(s - cycle_amplitude(n, n - v + 2, z)) < 1e-12);
      }
      CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
    }
  }
}

TEST_CASE("cycle: branch-degenerate neighbourhood is refused") {
  try {
    cycle_amplitude(5, 2, 1.0);
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateBranch);
  }
  CHECK_THROWS_AS(cycle_amplitude(2, 1, 0.5), Error);
}

TEST_CASE("cycle: even transmission against the engine for every exit") {
  for (int n : {4, 6, 8}) {
    const OpenGraph g = cycle_graph(n);
    for (double k : testing::midpoint_grid(40)) {
      const ScatteringMatrix sm = scattering_matrix(g, k);
      for (int v = 2; v <= n; ++v) {
        CHECK(std::abs(sm.amplitudes()(v - 1, 0) - cycle_amplitude(n, v, std::polar(1.0, k))) < 1e-10);
      }
    }
  }
}

TEST_CASE("wheel and complete at z = 1 and unitarity on the circle") {
  const HubAmplitudes w5 = wheel_amplitudes(5, 1.0);
  CHECK(std::abs(w5.reflection + 0.6) < 1e-15);
  CHECK(std::abs(w5.transmission - 0.4) < 1e-15);
  const HubAmplitudes k4 = complete_amplitudes(4, 1.0);
  CHECK(std::abs(k4.reflection + 0.5) < 1e-15);
  CHECK(std::abs(k4.transmission - 0.5) < 1e-15);

  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> th(0.0, 2 * kPi);
  for (int i = 0; i < 100; ++i) {
    const cplx z = std::polar(1.0, th(rng));
    for (int n = 4; n <= 8; ++n) {
      const HubAmplitudes w = wheel_amplitudes(n, z);
      CHECK(std::norm(w.reflection) + (n - 1) * std::norm(w.transmission) ==
            doctest::Approx(1.0).epsilon(1e-10));
    }
    for (int n = 2; n <= 8; ++n) {
      const HubAmplitudes c = complete_amplitudes(n, z);
      CHECK(std::norm(c.reflection) + (n - 1) * std::norm(c.transmission) ==
            doctest::Approx(1.0).epsilon(1e-10));
    }
  }
}

TEST_CASE("every closed form is 2 pi periodic in k l") {
  for (double theta : testing::midpoint_grid(30)) {
    const cplx a = std::polar(1.0, theta), b = std::polar(1.0, theta + 2 * kPi);
    CHECK(std::abs(cycle_amplitude(7, 3, a) - cycle_amplitude(7, 3, b)) < 1e-10);
    CHECK(std::abs(wheel_amplitudes(5, a).transmission - wheel_amplitudes(5, b).transmission) < 1e-10);
    CHECK(two_port_gap(pvv_equal(a), pvv_equal(b)) < 1e-10);
  }
}

TEST_CASE("phase conventions") {
  CHECK(phase_convention(ClosedForm::PvvTwoEdge).variable == PhaseVariable::HalfEdge);
  CHECK(phase_convention(ClosedForm::Cycle).variable == PhaseVariable::FullEdge);
  CHECK(phase_convention(ClosedForm::ParallelPair).variable == PhaseVariable::FullEdge);
  const cplx half = phase_convention(ClosedForm::PvvTwoEdge).phase(2.0, 1.5);
  CHECK(std::abs(half - std::polar(1.0, 1.5)) < 1e-15);
  const cplx full = phase_convention(ClosedForm::Wheel).phase(2.0, 1.5);
  CHECK(std::abs(full - std::polar(1.0, 3.0)) < 1e-15);
}

}  // TEST_SUITE
