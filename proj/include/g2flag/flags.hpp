#pragma once

#include "g2flag/algebra.hpp"

namespace g2flag {

/// One irreducible isotropy module, given by pairwise-orthogonal generators
/// in wz coordinates.  Generators are kept unnormalized so every entry stays
/// in the field; they share the squared norm stored in norm2.
struct IsotropyModule {
  std::vector<KVec> gens;
  QF13 norm2;
};

/// Equivalence between modules `i` and `j`: the intertwining map sends the
/// a-th generator of module i to sum_b map(b,a) times the b-th generator of
/// module j.
struct ModulePair {
  int i = 0;
  int j = 0;
  Eigen::Matrix<QF13, Eigen::Dynamic, Eigen::Dynamic> map;
};

/// Full isotropy data of one real flag manifold: the isotropy subalgebra
/// inside the compact part, the decomposition of its orthogonal complement
/// into irreducible modules, and the equivalences among them.
struct FlagData {
  FlagId id = FlagId::Empty;
  std::vector<KVec> isotropy;  // wz coordinates
  std::vector<IsotropyModule> modules;
  std::vector<ModulePair> equivalences;

  int tangent_dim() const;
  /// All module generators concatenated in module order.
  std::vector<KVec> tangent_basis() const;
  /// Module index and squared norm of the k-th generator in the flat order.
  int module_of(int flat_index) const;
  QF13 gen_norm2(int flat_index) const;

  /// Coordinates of v in the flat generator basis; throws std::domain_error
  /// when v has a component along the isotropy subalgebra.
  Eigen::Matrix<QF13, Eigen::Dynamic, 1> tangent_coords(const KVec& v) const;
  KVec from_tangent_coords(const Eigen::Matrix<QF13, Eigen::Dynamic, 1>& x) const;
  /// Orthogonal projection onto the tangent part (drops the isotropy part).
  KVec project_tangent(const KVec& v) const;
};

FlagData flag_data(FlagId id);

/// Each bracket of an isotropy generator with a module generator lands back
/// in the same module.
bool module_invariance_check(const FlagData& f);

/// Every stored intertwining map commutes with the isotropy action.
bool equivariance_check(const FlagData& f);

}  // namespace g2flag
