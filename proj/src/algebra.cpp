#include "g2flag/algebra.hpp"

#include <stdexcept>

namespace g2flag {

namespace {

using DynMat = Eigen::Matrix<QF13, Eigen::Dynamic, Eigen::Dynamic>;
using DynVec = Eigen::Matrix<QF13, Eigen::Dynamic, 1>;

Mat3 unit_matrix(int i, int j) {
  Mat3 m = Mat3::Zero();
  m(i, j) = QF13(1);
  return m;
}

Vec3 unit_vec(int i) {
  Vec3 v = Vec3::Zero();
  v(i) = QF13(1);
  return v;
}

}  // namespace

bool G2Element::is_zero() const {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (!mat(i, j).is_zero()) return false;
  for (int i = 0; i < 3; ++i)
    if (!vec(i).is_zero() || !cov(i).is_zero()) return false;
  return true;
}

G2Element G2Element::operator+(const G2Element& o) const {
  return {mat + o.mat, vec + o.vec, cov + o.cov};
}

G2Element G2Element::operator-(const G2Element& o) const {
  return {mat - o.mat, vec - o.vec, cov - o.cov};
}

G2Element G2Element::operator*(const QF13& c) const {
  return {mat * c, vec * c, cov * c};
}

bool G2Element::operator==(const G2Element& o) const { return (*this - o).is_zero(); }

Vec3 wedge_covector(const Vec3& u, const Vec3& v) {
  Vec3 c;
  c(0) = u(1) * v(2) - u(2) * v(1);
  c(1) = u(2) * v(0) - u(0) * v(2);
  c(2) = u(0) * v(1) - u(1) * v(0);
  return c;
}

Vec3 wedge_vector(const Vec3& a, const Vec3& b) {
  // Same coefficient formula as wedge_covector, read in the dual bases.
  return wedge_covector(a, b);
}

G2Element bracket(const G2Element& u, const G2Element& v) {
  G2Element r;
  const QF13 four_thirds = qf(4, 3);
  const QF13 four_ninths = qf(4, 9);

  // sl(3) output: matrix commutator plus the [vector, covector] rule.  The
  // 4/3 factor here balances the 4/3 wedge factors below: the mixed Jacobi
  // identity on (v, w, phi) forces (wedge)*(wedge) = (4/3)*(this factor).
  r.mat = u.mat * v.mat - v.mat * u.mat;
  QF13 tr_uv = u.vec.dot(v.cov);
  QF13 tr_vu = v.vec.dot(u.cov);
  r.mat += (u.vec * v.cov.transpose() - v.vec * u.cov.transpose()) * four_thirds;
  for (int i = 0; i < 3; ++i) r.mat(i, i) -= four_ninths * (tr_uv - tr_vu);

  // R^3 output: matrix action plus the covector wedge rule.
  r.vec = u.mat * v.vec - v.mat * u.vec + wedge_vector(u.cov, v.cov) * four_thirds;

  // dual output: -a(X .) terms plus the vector wedge rule.
  r.cov = v.mat.transpose() * u.cov - u.mat.transpose() * v.cov -
          wedge_covector(u.vec, v.vec) * four_thirds;
  return r;
}

std::vector<G2Element> standard_basis() {
  std::vector<G2Element> basis;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) basis.push_back({unit_matrix(i, j), Vec3::Zero(), Vec3::Zero()});
  Mat3 h1 = Mat3::Zero(), h2 = Mat3::Zero();
  h1(0, 0) = QF13(1);
  h1(1, 1) = QF13(-1);
  h2(1, 1) = QF13(1);
  h2(2, 2) = QF13(-1);
  basis.push_back({h1, Vec3::Zero(), Vec3::Zero()});
  basis.push_back({h2, Vec3::Zero(), Vec3::Zero()});
  for (int i = 0; i < 3; ++i) basis.push_back({Mat3::Zero(), unit_vec(i), Vec3::Zero()});
  for (int i = 0; i < 3; ++i) basis.push_back({Mat3::Zero(), Vec3::Zero(), unit_vec(i)});
  return basis;
}

QF13 Root::apply(const Vec3& diag) const {
  QF13 r(0);
  for (int i = 0; i < 3; ++i) r += QF13(coeffs(i)) * diag(i);
  return r;
}

RootDatum root_datum() {
  RootDatum d;
  auto mat_elem = [](int i, int j) {
    return G2Element{unit_matrix(i, j), Vec3::Zero(), Vec3::Zero()};
  };
  auto vec_elem = [](int i) { return G2Element{Mat3::Zero(), unit_vec(i), Vec3::Zero()}; };
  auto cov_elem = [](int i) { return G2Element{Mat3::Zero(), Vec3::Zero(), unit_vec(i)}; };

  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) {
        Eigen::Vector3i c = Eigen::Vector3i::Zero();
        c(i) = 1;
        c(j) = -1;
        d.roots.push_back({c, mat_elem(i, j)});
      }
  for (int i = 0; i < 3; ++i) {
    Eigen::Vector3i c = Eigen::Vector3i::Zero();
    c(i) = 1;
    d.roots.push_back({c, vec_elem(i)});
    d.roots.push_back({-c, cov_elem(i)});
  }
  // Positive system: l_i - l_j for i<j together with l_1, l_2, -l_3.
  auto is_positive = [](const Eigen::Vector3i& c) {
    if (c == Eigen::Vector3i(1, -1, 0) || c == Eigen::Vector3i(1, 0, -1) ||
        c == Eigen::Vector3i(0, 1, -1))
      return true;
    return c == Eigen::Vector3i(1, 0, 0) || c == Eigen::Vector3i(0, 1, 0) ||
           c == Eigen::Vector3i(0, 0, -1);
  };
  for (const auto& r : d.roots)
    if (is_positive(r.coeffs)) d.positive_roots.push_back(r);

  d.simple_roots = {Eigen::Vector3i(1, -1, 0), Eigen::Vector3i(0, 1, 0)};
  Mat3 h1 = Mat3::Zero(), h2 = Mat3::Zero();
  h1(0, 0) = QF13(1);
  h1(1, 1) = QF13(-1);
  h2(1, 1) = QF13(1);
  h2(2, 2) = QF13(-1);
  d.cartan = {G2Element{h1, Vec3::Zero(), Vec3::Zero()},
              G2Element{h2, Vec3::Zero(), Vec3::Zero()}};
  return d;
}

std::string to_string(FlagId id) {
  switch (id) {
    case FlagId::Empty:
      return "empty";
    case FlagId::Alpha1:
      return "a1";
    case FlagId::Alpha2:
      return "a2";
  }
  return "?";
}

FlagId flag_from_string(const std::string& s) {
  if (s == "empty" || s == "0") return FlagId::Empty;
  if (s == "a1" || s == "alpha1") return FlagId::Alpha1;
  if (s == "a2" || s == "alpha2") return FlagId::Alpha2;
  throw std::invalid_argument("unknown flag id '" + s + "'");
}

std::vector<G2Element> parabolic_subalgebra(FlagId theta) {
  RootDatum d = root_datum();
  std::vector<G2Element> gens = {d.cartan[0], d.cartan[1]};
  for (const auto& r : d.positive_roots) gens.push_back(r.space);
  if (theta == FlagId::Alpha1) {
    // <{l1 - l2}>^- = {l2 - l1}, root space E_21.
    gens.push_back({unit_matrix(1, 0), Vec3::Zero(), Vec3::Zero()});
  } else if (theta == FlagId::Alpha2) {
    // <{l2}>^- = {-l2}, root space eps_2.
    gens.push_back({Mat3::Zero(), Vec3::Zero(), unit_vec(1)});
  }
  return gens;
}

namespace {

DynVec flatten(const G2Element& e) {
  DynVec v(15);
  int k = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) v(k++) = e.mat(i, j);
  for (int i = 0; i < 3; ++i) v(k++) = e.vec(i);
  for (int i = 0; i < 3; ++i) v(k++) = e.cov(i);
  return v;
}

}  // namespace

int rank_exact(DynMat m) {
  int rows = static_cast<int>(m.rows());
  int cols = static_cast<int>(m.cols());
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (!m(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    m.row(pivot).swap(m.row(rank));
    for (int r = rank + 1; r < rows; ++r) {
      if (m(r, col).is_zero()) continue;
      QF13 f = m(r, col) / m(rank, col);
      for (int c = col; c < cols; ++c) m(r, c) -= f * m(rank, c);
    }
    ++rank;
  }
  return rank;
}

std::optional<DynVec> solve_exact(DynMat m, DynVec rhs) {
  int rows = static_cast<int>(m.rows());
  int cols = static_cast<int>(m.cols());
  std::vector<int> pivot_col;
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (!m(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    m.row(pivot).swap(m.row(rank));
    std::swap(rhs(pivot), rhs(rank));
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m(r, col).is_zero()) continue;
      QF13 f = m(r, col) / m(rank, col);
      for (int c = col; c < cols; ++c) m(r, c) -= f * m(rank, c);
      rhs(r) -= f * rhs(rank);
    }
    pivot_col.push_back(col);
    ++rank;
  }
  for (int r = rank; r < rows; ++r)
    if (!rhs(r).is_zero()) return std::nullopt;
  DynVec x = DynVec::Zero(cols);
  for (int r = 0; r < rank; ++r) x(pivot_col[r]) = rhs(r) / m(r, pivot_col[r]);
  return x;
}

int span_rank(const std::vector<G2Element>& elems) {
  DynMat m(static_cast<int>(elems.size()), 15);
  for (int i = 0; i < static_cast<int>(elems.size()); ++i)
    m.row(i) = flatten(elems[i]).transpose();
  return rank_exact(m);
}

bool in_span(const std::vector<G2Element>& elems, const G2Element& v) {
  DynMat m(15, static_cast<int>(elems.size()));
  for (int i = 0; i < static_cast<int>(elems.size()); ++i) m.col(i) = flatten(elems[i]);
  return solve_exact(m, flatten(v)).has_value();
}

const CompactAlgebra& CompactAlgebra::get() {
  static const CompactAlgebra instance;
  return instance;
}

KVec CompactAlgebra::to_xy(const G2Element& w) const {
  // The vector component belongs to the Y part alone; once that is removed
  // the X coefficients sit in the lower-triangular matrix entries.
  const QF13 a = QF13::sqrt13() * qf(1, 4);
  KVec c;
  for (int i = 0; i < 3; ++i) c(3 + i) = w.vec(i) / a;
  G2Element rest = w;
  for (int i = 0; i < 3; ++i) rest = rest - xy_[3 + i] * c(3 + i);
  c(0) = rest.mat(1, 0);
  c(1) = rest.mat(2, 0);
  c(2) = rest.mat(2, 1);
  if (!(from_xy(c) == w)) throw std::domain_error("element not in the compact part");
  return c;
}

G2Element CompactAlgebra::from_xy(const KVec& c) const {
  G2Element e;
  for (int i = 0; i < 6; ++i) e = e + xy_[i] * c(i);
  return e;
}

QF13 CompactAlgebra::killing(const KVec& u, const KVec& v) const {
  return u.dot(killing_ * v);
}

KVec CompactAlgebra::xy_to_wz(const KVec& xy) const { return xy_in_wz_ * xy; }
KVec CompactAlgebra::wz_to_xy(const KVec& wz) const { return wz_in_xy_ * wz; }

KVec CompactAlgebra::bracket_wz(const KVec& u, const KVec& v) const {
  KVec r = KVec::Zero();
  for (int i = 0; i < 6; ++i) {
    if (u(i).is_zero()) continue;
    for (int j = 0; j < 6; ++j) {
      if (v(j).is_zero()) continue;
      r += table_wz_[i][j] * (u(i) * v(j));
    }
  }
  return r;
}

QF13 CompactAlgebra::inner_wz(const KVec& u, const KVec& v) const { return u.dot(v); }

CompactAlgebra::CompactAlgebra() {
  auto make = [](Mat3 m, Vec3 v, Vec3 c) { return G2Element{m, v, c}; };
  xy_[0] = make(unit_matrix(1, 0) - unit_matrix(0, 1), Vec3::Zero(), Vec3::Zero());
  xy_[1] = make(unit_matrix(2, 0) - unit_matrix(0, 2), Vec3::Zero(), Vec3::Zero());
  xy_[2] = make(unit_matrix(2, 1) - unit_matrix(1, 2), Vec3::Zero(), Vec3::Zero());
  // Y_i = a (e_i - eps_i) + (-1)^(i+1) e X_{4-i} with a = sqrt13/4 and
  // e = (4 - sqrt13)/6: the unique (up to the Galois conjugate) combination
  // whose brackets close on the compact part with the required constants.
  const QF13 a = QF13::sqrt13() * qf(1, 4);
  const QF13 e = (QF13(4) - QF13::sqrt13()) * qf(1, 6);
  const std::array<int, 3> partner = {2, 1, 0};  // X3, X2, X1
  const std::array<long, 3> sign = {1, -1, 1};
  for (int i = 0; i < 3; ++i)
    xy_[3 + i] = make(xy_[partner[i]].mat * (e * QF13(sign[i])), unit_vec(i) * a,
                      unit_vec(i) * (-a));

  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) table_xy_[i][j] = to_xy(bracket(xy_[i], xy_[j]));

  // (u,v) = -tr(ad u ad v) from the structure constants above.
  std::array<KMat, 6> ad;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) ad[i].col(j) = table_xy_[i][j];
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      KMat prod = ad[i] * ad[j];
      QF13 tr(0);
      for (int k = 0; k < 6; ++k) tr += prod(k, k);
      killing_(i, j) = -tr;
    }

  // Gram-Schmidt over (X1,X2,X3,Y1,Y2,Y3), positive leading coefficient.
  for (int k = 0; k < 6; ++k) {
    KVec u = KVec::Zero();
    u(k) = QF13(1);
    for (int p = 0; p < k; ++p) {
      KVec prev = wz_in_xy_.col(p);
      u -= prev * killing(prev, u);
    }
    QF13 norm2 = killing(u, u);
    auto norm = norm2.sqrt_exact();
    if (!norm) throw std::logic_error("orthonormalization left the field");
    u /= *norm;
    if (u(k).sign() < 0) u = -u;
    wz_in_xy_.col(k) = u;
  }
  xy_in_wz_ = wz_in_xy_.transpose() * killing_;

  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      KVec acc = KVec::Zero();
      const KVec wi = wz_in_xy_.col(i);
      const KVec wj = wz_in_xy_.col(j);
      for (int a = 0; a < 6; ++a) {
        if (wi(a).is_zero()) continue;
        for (int b = 0; b < 6; ++b) {
          if (wj(b).is_zero()) continue;
          acc += table_xy_[a][b] * (wi(a) * wj(b));
        }
      }
      table_wz_[i][j] = xy_in_wz_ * acc;
    }
}

}  // namespace g2flag
