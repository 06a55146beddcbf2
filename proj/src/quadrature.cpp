#include "qgs/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <string>

#include "qgs/error.hpp"

namespace qgs {

GaussLegendreRule gauss_legendre(int order) {
  if (order < 1) throw Error(ErrorCode::BadParameter, "Gauss-Legendre order must be positive");
  const auto n = static_cast<std::size_t>(order);
  GaussLegendreRule rule{std::vector<double>(n), std::vector<double>(n)};
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (order + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= order; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = order * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

namespace {

// Evaluates every node of one refinement level into `buffer` (node-major).
void evaluate_nodes(const VectorIntegrand& f, std::size_t components,
                    const std::vector<double>& abscissae, std::vector<double>& buffer,
                    ExecutionPolicy exec) {
  buffer.assign(abscissae.size() * components, 0.0);
  const auto count = static_cast<long>(abscissae.size());
  if (exec.mode == Execution::Serial) {
    for (long j = 0; j < count; ++j) {
      f(abscissae[static_cast<std::size_t>(j)],
        std::span<double>(buffer).subspan(static_cast<std::size_t>(j) * components, components));
    }
    return;
  }
  std::exception_ptr failure;
  const int threads = exec.workers > 0 ? exec.workers : 0;
#pragma omp parallel for schedule(dynamic, 8) num_threads(threads) if (threads != 1)
  for (long j = 0; j < count; ++j) {
    try {
      f(abscissae[static_cast<std::size_t>(j)],
        std::span<double>(buffer).subspan(static_cast<std::size_t>(j) * components, components));
    } catch (...) {
#pragma omp critical(qgs_quadrature_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

// One panel of the adaptive partition: the rule on the whole panel and on
// its two halves. |left + right - whole| is the local error indicator.
struct Panel {
  double a;
  double b;
  std::vector<double> whole;
  std::vector<double> left;
  std::vector<double> right;
  double error = 0.0;
};

// Abscissae of the rule mapped onto [a, b], appended to `out`.
void append_nodes(const GaussLegendreRule& rule, double a, double b, std::vector<double>& out) {
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  for (double x : rule.nodes) out.push_back(mid + half * x);
}

// Weighted sum of one block of node values: the rule's estimate of the
// integral over a panel of width `width`.
std::vector<double> panel_sum(const GaussLegendreRule& rule, const double* values,
                              std::size_t components, double width) {
  std::vector<double> sum(components, 0.0);
  for (std::size_t q = 0; q < rule.weights.size(); ++q) {
    for (std::size_t c = 0; c < components; ++c) sum[c] += rule.weights[q] * values[q * components + c];
  }
  for (double& v : sum) v *= 0.5 * width;
  return sum;
}

}  // namespace

MeanEstimate interval_mean(const VectorIntegrand& f, std::size_t components, double start,
                           double period, const QuadratureOptions& options, ExecutionPolicy exec) {
  if (!(period > 0.0)) throw Error(ErrorCode::BadParameter, "period must be positive");
  if (!(options.tol > 0.0)) throw Error(ErrorCode::BadParameter, "tolerance must be positive");
  if (options.initial_panels < 1) throw Error(ErrorCode::BadParameter, "need at least one panel");
  const GaussLegendreRule rule = gauss_legendre(options.order);
  const std::size_t order = rule.nodes.size();
  const std::size_t block = order * components;
  const double min_width = period * 1e-12;

  // Fills left/right (and whole, when still empty) for panels whose bounds
  // are set. Nodes of all panels are evaluated in one batch; the reduction
  // is per panel, so the values never depend on the execution policy.
  std::vector<double> abscissae, buffer;
  auto evaluate = [&](std::vector<Panel>& fresh) {
    const bool with_whole = fresh.front().whole.empty();
    const std::size_t stride = with_whole ? 3 : 2;
    abscissae.clear();
    for (const Panel& p : fresh) {
      const double m = 0.5 * (p.a + p.b);
      if (with_whole) append_nodes(rule, p.a, p.b, abscissae);
      append_nodes(rule, p.a, m, abscissae);
      append_nodes(rule, m, p.b, abscissae);
    }
    evaluate_nodes(f, components, abscissae, buffer, exec);
    for (std::size_t i = 0; i < fresh.size(); ++i) {
      Panel& p = fresh[i];
      const double* base = buffer.data() + stride * i * block;
      if (with_whole) {
        p.whole = panel_sum(rule, base, components, p.b - p.a);
        base += block;
      }
      p.left = panel_sum(rule, base, components, 0.5 * (p.b - p.a));
      p.right = panel_sum(rule, base + block, components, 0.5 * (p.b - p.a));
      p.error = 0.0;
      for (std::size_t c = 0; c < components; ++c) {
        p.error = std::max(p.error, std::abs(p.left[c] + p.right[c] - p.whole[c]) / period);
      }
    }
  };

  std::vector<Panel> panels(static_cast<std::size_t>(options.initial_panels));
  const double h = period / options.initial_panels;
  for (std::size_t i = 0; i < panels.size(); ++i) {
    panels[i].a = start + static_cast<double>(i) * h;
    panels[i].b = i + 1 == panels.size() ? start + period : start + static_cast<double>(i + 1) * h;
  }
  evaluate(panels);

  for (;;) {
    double total = 0.0;
    for (const Panel& p : panels) total += p.error;
    if (total <= options.tol) {
      std::vector<double> mean(components, 0.0);
      for (const Panel& p : panels) {
        for (std::size_t c = 0; c < components; ++c) mean[c] += p.left[c] + p.right[c];
      }
      for (double& v : mean) v /= period;
      return {std::move(mean), total, static_cast<int>(panels.size())};
    }

    // Split every panel above its equal share of the budget; while the
    // total exceeds tol at least one panel qualifies.
    const double share = options.tol / static_cast<double>(panels.size());
    std::vector<Panel> next;
    std::vector<Panel> fresh;
    std::vector<std::size_t> slots;
    next.reserve(2 * panels.size());
    for (Panel& p : panels) {
      const double m = 0.5 * (p.a + p.b);
      if (p.error <= share || m - p.a < min_width) {
        next.push_back(std::move(p));
        continue;
      }
      slots.push_back(next.size());
      next.emplace_back();
      next.emplace_back();
      fresh.push_back(Panel{p.a, m, std::move(p.left), {}, {}, 0.0});
      fresh.push_back(Panel{m, p.b, std::move(p.right), {}, {}, 0.0});
    }
    if (fresh.empty() || next.size() > static_cast<std::size_t>(options.max_panels)) {
      throw Error(ErrorCode::QuadratureStalled,
                  "no convergence to " + std::to_string(options.tol) + " within " +
                      std::to_string(options.max_panels) + " panels");
    }
    evaluate(fresh);
    for (std::size_t s = 0; s < slots.size(); ++s) {
      next[slots[s]] = std::move(fresh[2 * s]);
      next[slots[s] + 1] = std::move(fresh[2 * s + 1]);
    }
    panels = std::move(next);
  }
}

MeanEstimate interval_mean(const std::function<double(double)>& f, double start, double period,
                           const QuadratureOptions& options, ExecutionPolicy exec) {
  return interval_mean([&f](double k, std::span<double> out) { out[0] = f(k); }, 1, start, period,
                       options, exec);
}

}  // namespace qgs
