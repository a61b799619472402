#pragma once

#include "g2flag/flow.hpp"

namespace g2flag {

enum class ChartId { Kappa1, U1, U2, U3 };

std::string to_string(ChartId id);
ChartId chart_from_string(const std::string& s);

/// The polynomial system of the chart, derived symbolically from poly_field:
///   kappa1 — blow-up substitution x = r1*x1, y = r1, z = z1 followed by
///            division of the field by r1 (desingularization);
///   U1/U2/U3 — compactification z3^3 * (-z1*P^a + P^b, -z2*P^a + P^c,
///              -z3*P^a) with the a-th variable sent to infinity.
/// Variables are (x1, r1, z1) for kappa1 and (z1, z2, z3) for the U charts.
const std::array<PolyQ, 3>& chart_field(ChartId id);

/// Equilibria of the chart system with exact eigen-data.  One-parameter
/// families are reported at a representative parameter value 1 with
/// family = true.  Real eigenvector entries are exact QF13 scalars evaluated
/// to double; the kappa1 p+ point carries a generalized eigenvector (see
/// note).
std::vector<Equilibrium> chart_equilibria(ChartId id);

/// Projection onto the Poincare ball, x / (1 + |x|^2)^(1/2).
std::array<double, 3> disk_projection(const std::array<double, 3>& x);

}  // namespace g2flag
