#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qgs/closed_forms.hpp"
#include "qgs/graph_families.hpp"

namespace qgs {

/// The closed forms the harness checks the engine against. Tests swap an
/// entry for a broken one to make sure the harness notices.
struct ClosedFormTable {
  std::function<TwoPort(TwoPort, int, cplx)> series_identical;
  std::function<TwoPort(std::span<const VertexAmplitudes>, cplx)> series_chain;
  std::function<TwoPort(TwoPort, int, cplx, EndVertices)> parallel_identical;
  std::function<TwoPort(VertexAmplitudes, VertexAmplitudes, VertexAmplitudes, cplx, cplx)>
      parallel_pair;
  std::function<TwoPort(cplx, cplx)> pvv_two_edge;
  std::function<TwoPort(cplx)> pvv_equal;
  std::function<cplx(int, int, cplx)> cycle;
  std::function<HubAmplitudes(int, cplx)> wheel;
  std::function<HubAmplitudes(int, cplx)> complete;

  static ClosedFormTable standard();
};

struct ValidateOptions {
  std::optional<Family> family;  // nullopt: all families
  std::optional<int> n_min;      // override the family's default range
  std::optional<int> n_max;
  int k_samples = 512;
  double threshold = 1e-8;
};

struct ValidationCase {
  std::string family;
  std::string variant;  // which formula/geometry inside the family
  int n;
  double max_delta;
  int samples;
  int skipped;  // branch-degenerate or singular k
  bool pass;
};

struct ValidationReport {
  std::vector<ValidationCase> cases;
  bool all_pass() const;
};

/// Default size ranges: series/parallel 1..8, cycle 3..8, wheel 4..7,
/// complete 2..6; pvv runs a fixed set of length pairs. The k grid is
/// k_j = 2 pi (j + 1/2) / k_samples on unit edges.
ValidationReport run_validate(const ValidateOptions& options,
                              const ClosedFormTable& table = ClosedFormTable::standard());

void print_report(std::ostream& out, const ValidationReport& report);

/// Closed-form amplitudes of a family member on theta_j = 2 pi (j + 1/2) / samples,
/// z = e^{i theta}, as CSV. Columns: theta, then re_/im_ pairs (cycle:
/// sigma_1..sigma_n; wheel/complete: reflection, transmission; series,
/// parallel and pvv: R, T).
void write_closed_form_csv(std::ostream& out, Family family, int n, int samples);

}  // namespace qgs
