#include "qgs/validate.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <sstream>

#include "qgs/csv.hpp"
#include "qgs/scattering.hpp"

namespace qgs {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::vector<double> k_grid(int samples, double period = kTwoPi) {
  std::vector<double> k(static_cast<std::size_t>(samples));
  for (int j = 0; j < samples; ++j) k[static_cast<std::size_t>(j)] = period * (j + 0.5) / samples;
  return k;
}

bool skippable(const Error& e) {
  return e.code() == ErrorCode::DegenerateBranch || e.code() == ErrorCode::SingularSystem;
}

// Runs `delta(k)` over the grid and folds the result into one case.
template <class Delta>
ValidationCase compare(std::string family, std::string variant, int n,
                       const std::vector<double>& ks, double threshold, Delta&& delta) {
  ValidationCase c{std::move(family), std::move(variant), n, 0.0, 0, 0, true};
  for (double k : ks) {
    try {
      const double d = delta(k);
      c.max_delta = std::isnan(d) ? INFINITY : std::max(c.max_delta, d);
      ++c.samples;
    } catch (const Error& e) {
      if (!skippable(e)) throw;
      ++c.skipped;
    }
  }
  c.pass = c.samples > 0 && c.max_delta < threshold;
  return c;
}

double two_port_delta(const ScatteringMatrix& sm, const TwoPort& tp) {
  return std::max(std::abs(sm.amplitudes()(0, 0) - tp.R), std::abs(sm.amplitudes()(1, 0) - tp.T));
}

const VertexAmplitudes kDegreeThree{-1.0 / 3.0, 2.0 / 3.0};
const VertexAmplitudes kDegreeTwo{0.0, 1.0};

struct Range {
  int lo;
  int hi;
};

Range range_for(Family f, const ValidateOptions& o) {
  Range r{family_min_size(f), 8};
  if (f == Family::Wheel) r.hi = 7;
  if (f == Family::Complete) r.hi = 6;
  if (o.n_min) r.lo = std::max(*o.n_min, family_min_size(f));
  if (o.n_max) r.hi = *o.n_max;
  return r;
}

void validate_series(const ClosedFormTable& t, const ValidateOptions& o, ValidationReport& rep) {
  const auto ks = k_grid(o.k_samples);
  const Range range = range_for(Family::Series, o);
  for (int n = range.lo; n <= range.hi; ++n) {
    const OpenGraph g = series_bundle_graph(n);
    rep.cases.push_back(compare("series", "identical", n, ks, o.threshold, [&](double k) {
      const cplx z = std::polar(1.0, k);
      const ScatteringMatrix sm = scattering_matrix(g, k);
      const TwoPort block = t.pvv_equal(z);
      TwoPort tp;
      try {
        tp = t.series_identical(block, n, z);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::DegenerateBranch) throw;
        // Lambda+ = Lambda-: the power form is 0/0, the chain is not.
        const std::vector<VertexAmplitudes> chain(static_cast<std::size_t>(n), {block.R, block.T});
        tp = t.series_chain(chain, z);
      }
      return two_port_delta(sm, tp);
    }));
  }
}

void validate_parallel(const ClosedFormTable& t, const ValidateOptions& o, ValidationReport& rep) {
  const auto ks = k_grid(o.k_samples);
  const Range range = range_for(Family::Parallel, o);
  for (int n = range.lo; n <= range.hi; ++n) {
    const OpenGraph g = parallel_bundle_graph(n);
    const VertexAmplitudes lateral{-(n - 1.0) / (n + 1.0), 2.0 / (n + 1.0)};
    for (bool neumann_form : {true, false}) {
      rep.cases.push_back(compare("parallel", neumann_form ? "identical-neumann" : "identical-general",
                                  n, ks, o.threshold, [&](double k) {
        const cplx z = std::polar(1.0, k);
        const ScatteringMatrix sm = scattering_matrix(g, k);
        const EndVertices ends = neumann_form ? EndVertices{NeumannEnds{}} : EndVertices{lateral};
        return two_port_delta(sm, t.parallel_identical(t.pvv_equal(z), n, z, ends));
      }));
    }
  }

  // Diamond with two different arms. The last geometry uses generic unitary
  // vertex amplitudes instead of Neumann ones.
  struct Diamond {
    double arm1, arm2;
    bool custom;
  };
  const Diamond diamonds[] = {{1.0, 1.0, false}, {1.0, 1.5, false}, {1.0, 2.0, false}, {1.0, 1.5, true}};
  int index = 0;
  for (const Diamond& d : diamonds) {
    ++index;
    VertexAmplitudes ends = kDegreeThree, mid1 = kDegreeTwo, mid2 = kDegreeTwo;
    if (d.custom) {
      const cplx ea = std::polar(1.0, 0.7), eb = std::polar(1.0, 2.1);
      ends = {(ea + 2.0 * eb) / 3.0, (ea - eb) / 3.0};
      mid1 = {cplx(0, std::sin(0.4)) * std::polar(1.0, 1.1), std::cos(0.4) * std::polar(1.0, 1.1)};
      mid2 = {cplx(0, std::sin(1.3)) * std::polar(1.0, -0.5), std::cos(1.3) * std::polar(1.0, -0.5)};
    }
    const OpenGraph g = d.custom ? diamond_graph(d.arm1, d.arm2, Custom{ends.r, ends.t},
                                                 Custom{mid1.r, mid1.t}, Custom{mid2.r, mid2.t})
                                 : diamond_graph(d.arm1, d.arm2);
    // Lengths 1, 1.5 and 2 all repeat after 4 pi.
    const auto kd = k_grid(o.k_samples, 2.0 * kTwoPi);
    rep.cases.push_back(compare("parallel", d.custom ? "pair-custom" : "pair", index, kd, o.threshold,
                                [&](double k) {
      const ScatteringMatrix sm = scattering_matrix(g, k);
      return two_port_delta(sm, t.parallel_pair(ends, mid1, mid2, std::polar(1.0, k * d.arm1),
                                                std::polar(1.0, k * d.arm2)));
    }));
  }
}

void validate_pvv(const ClosedFormTable& t, const ValidateOptions& o, ValidationReport& rep) {
  const auto ks = k_grid(o.k_samples, 2.0 * kTwoPi);
  const std::pair<double, double> lengths[] = {{1.0, 1.0}, {1.0, 1.5}, {1.0, 2.0}, {0.5, 1.5}};
  int index = 0;
  for (const auto& [l1, l2] : lengths) {
    ++index;
    const OpenGraph g = pvv_graph(l1, l2);
    rep.cases.push_back(compare("pvv", "two-edge", index, ks, o.threshold, [&](double k) {
      return two_port_delta(scattering_matrix(g, k),
                            t.pvv_two_edge(std::polar(1.0, k * l1 / 2), std::polar(1.0, k * l2 / 2)));
    }));
  }
  const OpenGraph g = pvv_graph(1.0, 1.0);
  rep.cases.push_back(compare("pvv", "equal", 1, k_grid(o.k_samples), o.threshold, [&](double k) {
    return two_port_delta(scattering_matrix(g, k), t.pvv_equal(std::polar(1.0, k)));
  }));
}

void validate_cycle(const ClosedFormTable& t, const ValidateOptions& o, ValidationReport& rep) {
  const auto ks = k_grid(o.k_samples);
  const Range range = range_for(Family::Cycle, o);
  for (int n = range.lo; n <= range.hi; ++n) {
    const OpenGraph g = cycle_graph(n);
    rep.cases.push_back(compare("cycle", "all-exits", n, ks, o.threshold, [&](double k) {
      const cplx z = std::polar(1.0, k);
      const ScatteringMatrix sm = scattering_matrix(g, k);
      double d = 0.0;
      for (int v = 1; v <= n; ++v) {
        d = std::max(d, std::abs(sm.amplitudes()(v - 1, 0) - t.cycle(n, v, z)));
      }
      return d;
    }));
  }
}

void validate_hub(Family f, const ClosedFormTable& t, const ValidateOptions& o,
                  ValidationReport& rep) {
  const auto ks = k_grid(o.k_samples);
  const Range range = range_for(f, o);
  const auto& formula = f == Family::Wheel ? t.wheel : t.complete;
  for (int n = range.lo; n <= range.hi; ++n) {
    const OpenGraph g = family_graph(f, n);
    rep.cases.push_back(compare(std::string(to_string(f)), "hub", n, ks, o.threshold, [&](double k) {
      const ScatteringMatrix sm = scattering_matrix(g, k);
      const HubAmplitudes h = formula(n, std::polar(1.0, k));
      double d = std::abs(sm.amplitudes()(0, 0) - h.reflection);
      for (Eigen::Index j = 1; j < sm.amplitudes().rows(); ++j) {
        d = std::max(d, std::abs(sm.amplitudes()(j, 0) - h.transmission));
      }
      return d;
    }));
  }
}

}  // namespace

ClosedFormTable ClosedFormTable::standard() {
  ClosedFormTable t;
  t.series_identical = qgs::series_identical;
  t.series_chain = qgs::series_chain;
  t.parallel_identical = qgs::parallel_identical;
  t.parallel_pair = qgs::parallel_pair;
  t.pvv_two_edge = qgs::pvv_two_edge;
  t.pvv_equal = qgs::pvv_equal;
  t.cycle = qgs::cycle_amplitude;
  t.wheel = qgs::wheel_amplitudes;
  t.complete = qgs::complete_amplitudes;
  return t;
}

bool ValidationReport::all_pass() const {
  return std::all_of(cases.begin(), cases.end(), [](const ValidationCase& c) { return c.pass; });
}

ValidationReport run_validate(const ValidateOptions& options, const ClosedFormTable& table) {
  if (options.k_samples < 1) throw Error(ErrorCode::BadConfig, "k_samples must be positive");
  ValidationReport rep;
  const auto selected = [&](Family f) { return !options.family || *options.family == f; };
  if (selected(Family::Series)) validate_series(table, options, rep);
  if (selected(Family::Parallel)) validate_parallel(table, options, rep);
  if (selected(Family::Pvv)) validate_pvv(table, options, rep);
  if (selected(Family::Cycle)) validate_cycle(table, options, rep);
  if (selected(Family::Wheel)) validate_hub(Family::Wheel, table, options, rep);
  if (selected(Family::Complete)) validate_hub(Family::Complete, table, options, rep);
  return rep;
}

void print_report(std::ostream& out, const ValidationReport& report) {
  out << std::left << std::setw(10) << "family" << std::setw(20) << "variant" << std::setw(4) << "n"
      << std::setw(14) << "max|dsigma|" << std::setw(9) << "samples" << std::setw(9) << "skipped"
      << "status\n";
  for (const ValidationCase& c : report.cases) {
    std::ostringstream delta;
    delta << std::scientific << std::setprecision(3) << c.max_delta;
    out << std::setw(10) << c.family << std::setw(20) << c.variant << std::setw(4) << c.n
        << std::setw(14) << delta.str() << std::setw(9) << c.samples << std::setw(9) << c.skipped
        << (c.pass ? "ok" : "FAIL") << '\n';
  }
  out << (report.all_pass() ? "all cases within threshold\n" : "some cases exceed the threshold\n");
}

void write_closed_form_csv(std::ostream& out, Family family, int n, int samples) {
  if (samples < 1) throw Error(ErrorCode::BadConfig, "z-samples must be positive");
  if (family != Family::Pvv && n < family_min_size(family)) {
    throw Error(ErrorCode::BadConfig, "n is below the family's minimum size");
  }
  std::vector<std::string> names;
  if (family == Family::Cycle) {
    for (int v = 1; v <= n; ++v) names.push_back("sigma_" + std::to_string(v));
  } else if (family == Family::Wheel || family == Family::Complete) {
    names = {"reflection", "transmission"};
  } else {
    names = {"R", "T"};
  }
  out << "theta";
  for (const auto& name : names) out << ",re_" << name << ",im_" << name;
  out << '\n';

  const std::string na(kNotAvailable);
  for (double theta : k_grid(samples)) {
    const cplx z = std::polar(1.0, theta);
    std::vector<cplx> values;
    bool ok = true;
    try {
      switch (family) {
        case Family::Cycle:
          for (int v = 1; v <= n; ++v) values.push_back(cycle_amplitude(n, v, z));
          break;
        case Family::Wheel:
        case Family::Complete: {
          const HubAmplitudes h = family == Family::Wheel ? wheel_amplitudes(n, z) : complete_amplitudes(n, z);
          values = {h.reflection, h.transmission};
          break;
        }
        case Family::Pvv: {
          const TwoPort tp = pvv_equal(z);
          values = {tp.R, tp.T};
          break;
        }
        case Family::Series: {
          TwoPort tp;
          try {
            tp = series_identical(pvv_equal(z), n, z);
          } catch (const Error& e) {
            if (e.code() != ErrorCode::DegenerateBranch) throw;
            const TwoPort b = pvv_equal(z);
            const std::vector<VertexAmplitudes> chain(static_cast<std::size_t>(n), {b.R, b.T});
            tp = series_chain(chain, z);
          }
          values = {tp.R, tp.T};
          break;
        }
        case Family::Parallel: {
          const TwoPort tp = parallel_identical(pvv_equal(z), n, z, NeumannEnds{});
          values = {tp.R, tp.T};
          break;
        }
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DegenerateBranch && e.code() != ErrorCode::DenominatorVanishes) throw;
      ok = false;
    }
    out << format_number(theta);
    for (std::size_t j = 0; j < names.size(); ++j) {
      if (ok) {
        out << ',' << format_number(values[j].real()) << ',' << format_number(values[j].imag());
      } else {
        out << ',' << na << ',' << na;
      }
    }
    out << '\n';
  }
}

}  // namespace qgs
