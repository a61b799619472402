#pragma once

#include "g2flag/algebra.hpp"
#include "g2flag/charts.hpp"
#include "g2flag/darboux.hpp"

namespace g2flag {

/// One expected bracket relation between two basis vectors, with the result
/// expanded in the same basis.
struct BracketRelation {
  int i = 0;
  int j = 0;
  KVec expected;
};

/// Hand-typed expected values, kept independent from the derivation code so
/// they can serve as cross-checks.  Basis index order is (X1,X2,X3,Y1,Y2,Y3)
/// for the xy tables and (W1,W2,W3,Z1,Z2,Z3) for the wz tables.
std::vector<BracketRelation> reference_brackets_xy();
std::vector<BracketRelation> reference_brackets_wz();

/// Expected -B Gram matrix in xy coordinates.
KMat reference_killing_xy();

/// Columns are the expected W1..Z3 in xy coordinates.
KMat reference_wz_in_xy();

/// The polynomial flow system in (x,y,z), hand-typed.
std::array<PolyQ, 3> reference_xyz_system();

/// The four chart systems, hand-typed in chart coordinates.
std::array<PolyQ, 3> reference_chart_system(ChartId id);

/// All degree <= 2 invariant-surface pairs of the xyz system: z^2, x^2, y^2,
/// xy, xz, yz plus the three linear ones x, y, z.
std::vector<DarbouxPair> reference_darboux_pairs();

}  // namespace g2flag
