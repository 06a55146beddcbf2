#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "qgs/graph.hpp"

namespace qgs {

/// Graph families with closed-form amplitudes. `Series`/`Parallel` are
/// bundles of n two-edge P(v,v) blocks; `Pvv` is a single block.
enum class Family { Series, Parallel, Pvv, Cycle, Wheel, Complete };

std::string_view to_string(Family f) noexcept;
std::optional<Family> parse_family(std::string_view name);
/// Smallest size the family is defined for.
int family_min_size(Family f) noexcept;

// All builders use Neumann vertices unless stated and attach the leads
// listed in the comment; the entrance is channel 0.

/// Cycle C_n, leads on every vertex (vertex j is channel j-1).
OpenGraph cycle_graph(int n, double length = 1.0);
/// Wheel W_n: hub 1 plus rim 2..n, leads on every vertex, hub entrance.
OpenGraph wheel_graph(int n, double length = 1.0);
/// Complete K_n, leads on every vertex.
OpenGraph complete_graph(int n, double length = 1.0);
/// Two vertices joined by two edges, a lead on each vertex.
OpenGraph pvv_graph(double length1, double length2);
/// v_i(1) and v_f(4) with leads, joined through v_1(2) by two edges of
/// `arm1` and through v_2(3) by two edges of `arm2`.
OpenGraph diamond_graph(double arm1, double arm2, Boundary ends = Neumann{},
                        Boundary middle1 = Neumann{}, Boundary middle2 = Neumann{});
/// n P(v,v) blocks in a chain; consecutive blocks joined by one edge.
/// Leads on the outer vertices.
OpenGraph series_bundle_graph(int n, double length = 1.0);
/// n P(v,v) blocks between two lateral vertices (1 and 2), each block
/// attached to both laterals by one edge. Leads on the laterals.
OpenGraph parallel_bundle_graph(int n, double length = 1.0);
/// Path of custom two-way scatterers joined by edges of `length`; leads on
/// the first and last vertex.
OpenGraph series_path_graph(const std::vector<Custom>& elements, double length = 1.0);

/// Unit-length member of a family; `n` is ignored for Pvv.
OpenGraph family_graph(Family f, int n);

}  // namespace qgs
