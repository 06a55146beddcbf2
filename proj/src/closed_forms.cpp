#include "qgs/closed_forms.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qgs {
namespace {

cplx checked_div(cplx num, cplx den, const char* what) {
  if (std::abs(den) < 1e-12 * std::max(1.0, std::abs(num))) {
    throw Error(ErrorCode::DenominatorVanishes, what);
  }
  return num / den;
}

void require_n(int n, int min, const char* what) {
  if (n < min) {
    throw Error(ErrorCode::BadParameter, std::string(what) + " needs n >= " + std::to_string(min));
  }
}

}  // namespace

cplx PhaseConvention::phase(double k, double length) const {
  const double scale = variable == PhaseVariable::HalfEdge ? 0.5 : 1.0;
  return std::exp(cplx(0.0, k * length * scale));
}

PhaseConvention phase_convention(ClosedForm form) noexcept {
  return {form, form == ClosedForm::PvvTwoEdge ? PhaseVariable::HalfEdge : PhaseVariable::FullEdge};
}

TwoPort series_pair(VertexAmplitudes first, VertexAmplitudes second, cplx z) {
  const cplx z2 = z * z;
  const cplx den = 1.0 - first.r * second.r * z2;
  return {first.r + checked_div(first.t * first.t * second.r * z2, den, "series pair"),
          checked_div(first.t * second.t * z, den, "series pair")};
}

TwoPort series_chain(std::span<const VertexAmplitudes> elements, cplx z) {
  if (elements.size() < 2) throw Error(ErrorCode::BadParameter, "series chain needs n >= 2");
  TwoPort acc{elements[0].r, elements[0].t};
  for (std::size_t j = 1; j < elements.size(); ++j) {
    try {
      acc = series_pair({acc.R, acc.T}, elements[j], z);
    } catch (const Error&) {
      throw Error(ErrorCode::DenominatorVanishes, "series chain step " + std::to_string(j));
    }
  }
  return acc;
}

TwoPort series_identical(TwoPort block, int n, cplx z) {
  require_n(n, 1, "series_identical");
  if (n == 1) return block;
  const cplx R2 = block.R * block.R;
  const cplx T2 = block.T * block.T;
  const cplx z2 = z * z;
  const cplx disc = 1.0 - 2.0 * (R2 + T2) * z2 + (R2 - T2) * (R2 - T2) * z2 * z2;
  if (std::abs(disc) < 1e-12) {
    throw Error(ErrorCode::DegenerateBranch, "Lambda+ == Lambda- (use series_chain)");
  }
  const cplx root = std::sqrt(disc);
  const cplx lp = 1.0 + (T2 - R2) * z2 + root;
  const cplx lm = 1.0 + (T2 - R2) * z2 - root;
  const cplx lpn = std::pow(lp, n);
  const cplx lmn = std::pow(lm, n);
  const cplx den = (2.0 - lm) * lpn - (2.0 - lp) * lmn;
  const cplx R = checked_div(2.0 * (lpn - lmn) * block.R, den, "series identical");
  const cplx T = checked_div(std::pow(2.0, n) * (lp - lm) * std::pow(block.T, n) *
                                 std::pow(z, n - 1),
                             den, "series identical");
  return {R, T};
}

TwoPort parallel_pair(VertexAmplitudes ends, VertexAmplitudes first, VertexAmplitudes second,
                      cplx z1, cplx z2) {
  const cplx r = ends.r, t = ends.t;
  const cplx r1 = first.r, t1 = first.t, r2 = second.r, t2 = second.t;
  const cplx a = z1 * z1, b = z2 * z2;  // z_j^2
  const cplx ab = a * b;
  const cplx d1 = r1 * r1 - t1 * t1;
  const cplx d2 = r2 * r2 - t2 * t2;

  // C_{m,n} with (m, n) = (1, 2) and (2, 1).
  auto c_mn = [&](cplx rm, cplx dm, cplx rn, cplx dn, cplx zm2, cplx zn2) {
    return (rm - r * dm * zm2 + r * (r - t) * rm * dn * zn2 * zn2 +
            (2.0 * r * r - r * t - t * t) * dm * rn * zm2 * zn2) *
           zm2;
  };
  const cplx c12 = c_mn(r1, d1, r2, d2, a, b);
  const cplx c21 = c_mn(r2, d2, r1, d1, b, a);

  const cplx left = 1.0 - r * (r1 * a + r2 * b) + (r * r - t * t) * (r1 * r2 + t1 * t2) * ab;
  const cplx right = r * (t1 * a + t2 * b) - (r * r - t * t) * (r1 * t2 + t1 * r2) * ab;
  const cplx den = left * left - right * right;

  const cplx r_num = c12 + c21 + 2.0 * (t * t1 * t2 - (2.0 * r - t) * r1 * r2) * ab -
                     2.0 * (r + t) * (r - t) * (r - t) * d1 * d2 * ab * ab;
  const cplx t_num = t1 * a + t2 * b - 2.0 * (r - t) * (r1 * t2 + r2 * t1) * ab +
                     (r - t) * (r - t) * (d1 * t2 * a + t1 * d2 * b) * ab;
  return {r + checked_div(t * t * r_num, den, "parallel pair"),
          checked_div(t * t * t_num, den, "parallel pair")};
}

TwoPort pvv_two_edge(cplx z1, cplx z2) {
  const cplx a = z1 * z1, b = z2 * z2;
  const cplx den = (3.0 - a * b) * (3.0 - a * b) - (a + b) * (a + b);
  // Overall sign fixed against the path-family engine; reduces to pvv_equal.
  const cplx r_num = -(3.0 + (a - b) * (a - b) - 3.0 * (2.0 - a * b) * a * b);
  const cplx t_num = 4.0 * ((1.0 - b * b) * a + (1.0 - a * a) * b);
  return {checked_div(r_num, den, "pvv"), checked_div(t_num, den, "pvv")};
}

TwoPort pvv_equal(cplx z) {
  const cplx den = 9.0 - z * z;
  return {checked_div(-3.0 * (1.0 - z * z), den, "pvv equal"), checked_div(8.0 * z, den, "pvv equal")};
}

TwoPort parallel_identical(TwoPort block, int n, cplx z, EndVertices ends) {
  require_n(n, 1, "parallel_identical");
  const cplx R = block.R, T = block.T;
  const cplx z2 = z * z;
  const double nn = n;
  if (std::holds_alternative<NeumannEnds>(ends)) {
    const cplx den = (nn + 1.0 - (nn - 1.0) * R * z2) * (nn + 1.0 - (nn - 1.0) * R * z2) -
                     (nn - 1.0) * (nn - 1.0) * T * T * z2 * z2;
    const cplx r_num = (nn * nn - 1.0) * (1.0 + (R * R - T * T) * z2 * z2) -
                       2.0 * (nn * nn + 1.0) * R * z2;
    return {-checked_div(r_num, den, "parallel identical"),
            checked_div(4.0 * nn * T * z2, den, "parallel identical")};
  }
  const auto [r, t] = std::get<VertexAmplitudes>(ends);
  const cplx g = r + (nn - 1.0) * t;
  const cplx den = (1.0 - g * R * z2) * (1.0 - g * R * z2) - (g * T * z2) * (g * T * z2);
  return {r + checked_div(nn * t * t * (R - g * (R * R - T * T) * z2) * z2, den, "parallel identical"),
          checked_div(nn * t * t * T * z2, den, "parallel identical")};
}

cplx cycle_amplitude(int n, int v, cplx z) {
  require_n(n, 3, "cycle");
  if (v < 1 || v > n) {
    throw Error(ErrorCode::BadParameter, "cycle exit vertex " + std::to_string(v));
  }
  const cplx z2 = z * z;
  const cplx beta = std::sqrt(9.0 - 10.0 * z2 + z2 * z2);
  if (std::abs(beta) < kCycleBranchGuard) {
    throw Error(ErrorCode::DegenerateBranch, "beta ~ 0");
  }
  const cplx mp = 3.0 + z2 + beta;
  const cplx mm = 3.0 + z2 - beta;
  const cplx sp = std::sqrt(mp);
  const cplx sm = 4.0 * z / sp;
  // sqrt(mu+^a) and sqrt(mu-^b) on the consistent branch.
  auto P = [&](int a) { return std::pow(sp, a); };
  auto M = [&](int b) { return std::pow(sm, b); };
  const bool odd = n % 2 == 1;

  if (v == 1) {
    if (odd) {
      const cplx num = P(n) * M(1) * (mp + (2.0 + 3.0 * mm + 4.0 * z - 6.0 * z2) * z) -
                       P(1) * M(n) * (mm + (2.0 + 3.0 * mp + 4.0 * z - 6.0 * z2) * z);
      const cplx den = (3.0 - z) * (P(1) * M(n) * (mm + 4.0 * z) - P(n) * M(1) * (mp + 4.0 * z));
      return checked_div(num, den, "cycle reflection");
    }
    const cplx num = mp * M(n) * (3.0 * mm + (14.0 + 3.0 * mp - 6.0 * z2) * z2) -
                     mm * P(n) * (3.0 * mp + (14.0 + 3.0 * mm - 6.0 * z2) * z2);
    const cplx den = (9.0 - z2) * mp * mm * (P(n) - M(n));
    return checked_div(num, den, "cycle reflection");
  }

  if (odd) {
    const cplx num = std::pow(2.0, 2 * v - 3) * std::pow(z, v - 2) * (1.0 + z) *
                     std::pow(mp * mm, -v) *
                     ((4.0 * z - mp) * P(2 * v + 1) * M(n + 4) - (4.0 * z - mm) * P(n + 4) * M(2 * v + 1));
    const cplx den = (3.0 - z) * (P(1) * M(n) * (mm + 4.0 * z) - P(n) * M(1) * (mp + 4.0 * z));
    return checked_div(num, den, "cycle transmission");
  }
  const cplx num = std::pow(2.0, 2 * v - 1) * std::pow(z, v - 1) * beta * mp * mm *
                   (P(n + 2 - 2 * v) + M(n + 2 - 2 * v));
  const cplx den = (9.0 - z2) * mp * mm * (P(n) - M(n));
  return checked_div(num, den, "cycle transmission");
}

HubAmplitudes wheel_amplitudes(int n, cplx z) {
  require_n(n, 4, "wheel");
  const double nn = n;
  const cplx w = z * z - z * z * z;
  const cplx den = 2.0 * nn + (nn - 2.0) * w;
  return {checked_div(4.0 - nn * (2.0 + w), den, "wheel"),
          checked_div(2.0 * z * (1.0 + z), den, "wheel")};
}

HubAmplitudes complete_amplitudes(int n, cplx z) {
  require_n(n, 2, "complete");
  const double nn = n;
  const cplx w = z * z - z * z * z;
  const cplx den = nn * nn - nn * (nn - 4.0) * z + (nn - 2.0) * (nn - 2.0) * w;
  return {checked_div((nn - 2.0) * ((nn - 4.0) * z - nn * (1.0 + w)), den, "complete"),
          checked_div(4.0 * z * (1.0 + z), den, "complete")};
}

}  // namespace qgs
