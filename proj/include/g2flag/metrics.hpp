#pragma once

#include "g2flag/flags.hpp"

namespace g2flag {

using DynMatQ = Eigen::Matrix<QF13, Eigen::Dynamic, Eigen::Dynamic>;
using DynVecQ = Eigen::Matrix<QF13, Eigen::Dynamic, 1>;

/// Parameters of an invariant metric, as the symmetric endomorphism acting
/// on the flat generator basis of the tangent modules.
///
///   empty : mu has 6 entries, a has 3 (one coupling per equivalent pair)
///   a1    : mu has 3 entries, a has 1
///   a2    : mu has 3 entries, a is empty
struct MetricParams {
  FlagId id = FlagId::Empty;
  std::vector<QF13> mu;
  std::vector<QF13> a;
};

struct MetricValidity {
  bool ok = true;
  std::string reason;
};

/// Positive-definiteness conditions: every mu positive and each coupling
/// bounded by the geometric mean of the two block entries it joins.
MetricValidity metric_is_valid(const MetricParams& p);

/// The endomorphism in flat generator coordinates.
DynMatQ metric_matrix(const MetricParams& p);

/// g(u, v) for tangent vectors in flat generator coordinates.
QF13 metric_inner(const FlagData& f, const MetricParams& p, const DynVecQ& x,
                  const DynVecQ& y);

/// Closed-form geodesic-orbit classification.
bool is_go_closed_form(const MetricParams& p);

/// Geodesic-vector witness: Z in the isotropy subalgebra with
/// [Z + X, A X] = 0, if one exists.  X is given in flat coordinates, Z is
/// returned in wz coordinates.
std::optional<KVec> go_witness(const MetricParams& p, const FlagData& f, const DynVecQ& x);

/// The coefficient of Z along the (single) isotropy generator, for flags
/// with one-dimensional isotropy.  Throws for the trivial-isotropy flag.
std::optional<QF13> go_witness_coefficient(const MetricParams& p, const FlagData& f,
                                           const DynVecQ& x);

/// Closed-form equigeodesic classification of a tangent vector.
bool is_equigeodesic_closed_form(const FlagData& f, const DynVecQ& x);

/// Independent check: [X, L X]_m = 0 for a spanning set of invariant metric
/// endomorphisms L (module projections and symmetrized couplings).
bool equigeodesic_oracle(const FlagData& f, const DynVecQ& x);

}  // namespace g2flag
