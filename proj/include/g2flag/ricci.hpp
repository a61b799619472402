#pragma once

#include "g2flag/metrics.hpp"

namespace g2flag {

/// Normalized Ricci components of the diagonal invariant metric
/// (mu1, mu2, mu3) on the flag of type a2, one value per isotropy module.
/// Closed-form evaluation.
std::array<QF13, 3> ricci_closed(const std::array<QF13, 3>& mu);

/// Same components computed independently from the structure constants via
/// the curvature formula for a compact homogeneous space:
///   Ric(v,v) = -1/2 sum_i |[v,v_i]_m|^2 + 1/2 (v,v)
///              + 1/2 sum_{i<j} g([v_i,v_j]_m, v)^2
/// over a g-orthonormal tangent basis, with the mean-curvature term absent
/// because the group is unimodular (checked via u_bilinear in the tests).
std::array<QF13, 3> ricci_besse(const std::array<QF13, 3>& mu);

/// The symmetric bilinear map U defined by
///   2 g(U(X,Y), W) = g([W,X]_m, Y) + g(X, [W,Y]_m)  for all tangent W,
/// returned in flat generator coordinates.
DynVecQ u_bilinear(const FlagData& f, const MetricParams& p, const DynVecQ& x,
                   const DynVecQ& y);

}  // namespace g2flag
