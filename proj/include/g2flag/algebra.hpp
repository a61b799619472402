#pragma once

#include "g2flag/scalar.hpp"

#include <Eigen/Dense>

#include <array>
#include <string>
#include <vector>

namespace g2flag {

using Vec3 = Eigen::Matrix<QF13, 3, 1>;
using Mat3 = Eigen::Matrix<QF13, 3, 3>;
using KVec = Eigen::Matrix<QF13, 6, 1>;
using KMat = Eigen::Matrix<QF13, 6, 6>;

/// Element of sl(3) + R^3 + (R^3)*, the ambient 14-dimensional algebra.
struct G2Element {
  Mat3 mat = Mat3::Zero();  // traceless 3x3 block
  Vec3 vec = Vec3::Zero();  // R^3 component
  Vec3 cov = Vec3::Zero();  // dual component, coefficients of eps_1..eps_3

  bool is_zero() const;
  QF13 trace() const { return mat(0, 0) + mat(1, 1) + mat(2, 2); }

  G2Element operator+(const G2Element& o) const;
  G2Element operator-(const G2Element& o) const;
  G2Element operator*(const QF13& c) const;
  bool operator==(const G2Element& o) const;
};

/// det[u v w] as a functional of w, i.e. the covector T(u ^ v).
Vec3 wedge_covector(const Vec3& u, const Vec3& v);

/// The vector S(a ^ b) defined by a ^ b ^ c = c(S(a^b)) * eps_1^eps_2^eps_3.
Vec3 wedge_vector(const Vec3& a, const Vec3& b);

/// Lie bracket of the ambient algebra.
G2Element bracket(const G2Element& u, const G2Element& v);

/// The 14 standard basis elements: E_ij (i != j), two Cartan generators,
/// e_1..e_3, eps_1..eps_3.
std::vector<G2Element> standard_basis();

/// Roots as integer functionals on diag(a1,a2,a3).
struct Root {
  Eigen::Vector3i coeffs;
  G2Element space;  // basis vector of the root space
  QF13 apply(const Vec3& diag) const;
};

struct RootDatum {
  std::vector<Root> roots;            // all 12
  std::vector<Root> positive_roots;   // the chosen 6
  std::array<Eigen::Vector3i, 2> simple_roots;  // l1-l2 and l2
  std::array<G2Element, 2> cartan;    // diag(1,-1,0), diag(0,1,-1)
};

RootDatum root_datum();

enum class FlagId { Empty, Alpha1, Alpha2 };

std::string to_string(FlagId id);
FlagId flag_from_string(const std::string& s);

/// Generators of the parabolic subalgebra for the given flag type.
std::vector<G2Element> parabolic_subalgebra(FlagId theta);

/// Exact rank of the span of elements inside the 14-dim ambient algebra.
int span_rank(const std::vector<G2Element>& elems);
bool in_span(const std::vector<G2Element>& elems, const G2Element& v);

/// The 6-dimensional maximal compact part with all derived exact data.
/// Basis conventions: "xy" coordinates refer to (X1,X2,X3,Y1,Y2,Y3) and
/// "wz" coordinates to the orthonormalized (W1,W2,W3,Z1,Z2,Z3).
class CompactAlgebra {
public:
  static const CompactAlgebra& get();

  const std::array<G2Element, 6>& xy_basis() const { return xy_; }

  /// Structure constants in xy coordinates: [b_i, b_j] expanded in the basis.
  const KVec& bracket_table_xy(int i, int j) const { return table_xy_[i][j]; }

  /// Killing form Gram matrix in xy coordinates; (u,v) = -B(u,v).
  const KMat& killing_gram() const { return killing_; }
  QF13 killing(const KVec& u_xy, const KVec& v_xy) const;

  /// Columns are W1,W2,W3,Z1,Z2,Z3 expressed in xy coordinates.
  const KMat& wz_in_xy() const { return wz_in_xy_; }
  KVec wz_vector_in_xy(int k) const { return wz_in_xy_.col(k); }

  /// Bracket with inputs and output in wz coordinates.
  KVec bracket_wz(const KVec& u, const KVec& v) const;

  /// (u,v) for wz-coordinate vectors; the basis is orthonormal so this is
  /// the plain dot product.
  QF13 inner_wz(const KVec& u, const KVec& v) const;

  /// Express a compact-part element in xy coordinates (throws if not in k).
  KVec to_xy(const G2Element& w) const;
  G2Element from_xy(const KVec& c) const;
  KVec xy_to_wz(const KVec& xy) const;
  KVec wz_to_xy(const KVec& wz) const;

private:
  CompactAlgebra();

  std::array<G2Element, 6> xy_;
  std::array<std::array<KVec, 6>, 6> table_xy_;
  std::array<std::array<KVec, 6>, 6> table_wz_;
  KMat killing_ = KMat::Zero();
  KMat wz_in_xy_ = KMat::Zero();
  KMat xy_in_wz_ = KMat::Zero();
};

/// Solves M x = rhs exactly; returns nullopt when inconsistent.  When the
/// system is underdetermined any one solution is returned.
std::optional<Eigen::Matrix<QF13, Eigen::Dynamic, 1>> solve_exact(
    Eigen::Matrix<QF13, Eigen::Dynamic, Eigen::Dynamic> m,
    Eigen::Matrix<QF13, Eigen::Dynamic, 1> rhs);

int rank_exact(Eigen::Matrix<QF13, Eigen::Dynamic, Eigen::Dynamic> m);

}  // namespace g2flag
