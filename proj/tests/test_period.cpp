#include <doctest.h>

#include "qgs/entropy.hpp"
#include "support.hpp"

using namespace qgs;
using testing::kPi;

TEST_SUITE("period") {

TEST_CASE("common length of commensurate edges") {
  CHECK(infer_period(MetricGraph(2, {{1, 2, 1.0}})).K == doctest::Approx(2 * kPi).epsilon(1e-15));
  CHECK(infer_period(MetricGraph(3, {{1, 2, 1.0}, {2, 3, 1.5}})).K ==
        doctest::Approx(4 * kPi).epsilon(1e-14));
  CHECK(infer_period(MetricGraph(3, {{1, 2, 0.3}, {2, 3, 0.7}, {1, 3, 1.1}})).K ==
        doctest::Approx(2 * kPi / 0.1).epsilon(1e-12));
  CHECK(infer_period(MetricGraph(2, {{1, 2, 2.0}, {1, 2, 4.0}})).K == doctest::Approx(kPi).epsilon(1e-15));
  CHECK(infer_period(MetricGraph(2, {{1, 2, 1.0}})).source == PeriodSpec::Source::Inferred);
}

TEST_CASE("incommensurate lengths have no period") {
  try {
    infer_period(MetricGraph(2, {{1, 2, 1.0}, {1, 2, std::sqrt(2.0)}}));
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoPeriod);
  }
  CHECK_THROWS_AS(infer_period(MetricGraph(1, {})), Error);
}

TEST_CASE("explicit periods") {
  CHECK(PeriodSpec::explicit_period(3.0).source == PeriodSpec::Source::Explicit);
  CHECK_THROWS_AS(PeriodSpec::explicit_period(0.0), Error);
}

}  // TEST_SUITE
