#pragma once

#include <span>
#include <string_view>
#include <variant>

#include "qgs/graph.hpp"

namespace qgs {

/// Reflection/transmission pair of a subgraph seen as one scatterer.
struct TwoPort {
  cplx R;
  cplx T;
};

/// Amplitudes of a symmetric family with one entrance: the reflection and
/// the transmission shared by every exit channel.
struct HubAmplitudes {
  cplx reflection;
  cplx transmission;
};

/// Closed-form formulas, used to pick the phase convention each one expects.
enum class ClosedForm {
  SeriesPair,
  SeriesChain,
  SeriesIdentical,
  ParallelPair,
  PvvTwoEdge,
  PvvEqual,
  ParallelIdentical,
  Cycle,
  Wheel,
  Complete,
};

enum class PhaseVariable {
  FullEdge,  // z = e^{ik l}
  HalfEdge,  // z = e^{ik l / 2}
};

/// The phase variable of one formula. For ParallelPair the length is one
/// arm (v_i -> v_j), for PvvTwoEdge it is a full edge of the block, and for
/// every other formula it is the common edge length.
struct PhaseConvention {
  ClosedForm form;
  PhaseVariable variable;

  cplx phase(double k, double length) const;
};

PhaseConvention phase_convention(ClosedForm form) noexcept;

/// |beta| below this makes the cycle formulas branch-degenerate.
inline constexpr double kCycleBranchGuard = 1e-4;

/// Two scatterers joined by an edge of phase z:
///   R = r1 + t1^2 r2 z^2 / (1 - r1 r2 z^2),  T = t1 t2 z / (1 - r1 r2 z^2).
TwoPort series_pair(VertexAmplitudes first, VertexAmplitudes second, cplx z);

/// Left fold of series_pair. DenominatorVanishes names the failing step.
TwoPort series_chain(std::span<const VertexAmplitudes> elements, cplx z);

/// n identical blocks in series through the Lambda_{+-} closed form.
/// DegenerateBranch when the discriminant modulus is below 1e-12; callers
/// then fall back to series_chain.
TwoPort series_identical(TwoPort block, int n, cplx z);

/// Diamond: end vertices (r, t), middle vertices (r1, t1) and (r2, t2), arm
/// phases z1 = e^{ik l1}, z2 = e^{ik l2}.
TwoPort parallel_pair(VertexAmplitudes ends, VertexAmplitudes first, VertexAmplitudes second,
                      cplx z1, cplx z2);

/// Two vertices joined by two edges, z_j = e^{ik l_j / 2}.
TwoPort pvv_two_edge(cplx z1, cplx z2);
/// Equal-length block, z = e^{ik l}: R = -3(1 - z^2)/(9 - z^2), T = 8z/(9 - z^2).
TwoPort pvv_equal(cplx z);

struct NeumannEnds {};
using EndVertices = std::variant<VertexAmplitudes, NeumannEnds>;

/// n identical blocks between two lateral vertices, each block attached to
/// both by an edge of phase z. NeumannEnds uses the lateral amplitudes
/// r = -(n-1)/(n+1), t = 2/(n+1) through the dedicated formula.
TwoPort parallel_identical(TwoPort block, int n, cplx z, EndVertices ends);

/// sigma^{(v,1)} on the cycle C_n with a lead on every vertex; v = 1 is the
/// reflection. Uses the odd/even closed forms with sqrt(mu-) := 4z/sqrt(mu+)
/// (mu+ mu- = 16 z^2), which makes every half-integer power consistent.
/// The even-n transmission prefactor is 2^{2v-1}.
cplx cycle_amplitude(int n, int v, cplx z);

/// Wheel W_n, hub entrance.
HubAmplitudes wheel_amplitudes(int n, cplx z);

/// Complete K_n, any entrance.
HubAmplitudes complete_amplitudes(int n, cplx z);

}  // namespace qgs
