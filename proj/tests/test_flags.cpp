#include "g2flag/flags.hpp"
#include "g2flag/rng.hpp"

#include <doctest.h>

using namespace g2flag;

namespace {

std::vector<int> module_dims(const FlagData& f) {
  std::vector<int> d;
  for (const auto& m : f.modules) d.push_back(static_cast<int>(m.gens.size()));
  return d;
}

template <class M>
bool same(const M& a, const M& b) {
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

bool kvec_is_zero(const KVec& v) {
  for (int i = 0; i < 6; ++i)
    if (!v(i).is_zero()) return false;
  return true;
}

}  // namespace

TEST_CASE("module dimensions per flag type") {
  CHECK(module_dims(flag_data(FlagId::Empty)) == std::vector<int>{1, 1, 1, 1, 1, 1});
  CHECK(module_dims(flag_data(FlagId::Alpha1)) == std::vector<int>{1, 2, 2});
  CHECK(module_dims(flag_data(FlagId::Alpha2)) == std::vector<int>{1, 2, 2});
  CHECK(flag_data(FlagId::Empty).isotropy.empty());
  CHECK(flag_data(FlagId::Alpha1).isotropy.size() == 1);
  CHECK(flag_data(FlagId::Alpha2).isotropy.size() == 1);
}

TEST_CASE("tangent and isotropy parts are orthogonal and fill the space") {
  const auto& k = CompactAlgebra::get();
  for (FlagId id : {FlagId::Empty, FlagId::Alpha1, FlagId::Alpha2}) {
    auto f = flag_data(id);
    CHECK(f.tangent_dim() + static_cast<int>(f.isotropy.size()) == 6);
    auto basis = f.tangent_basis();
    for (const auto& iso : f.isotropy)
      for (const auto& g : basis) CHECK(k.inner_wz(iso, g) == QF13(0));
    // Generators are pairwise orthogonal with the stated squared norm.
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < basis.size(); ++j) {
        QF13 expected = i == j ? f.gen_norm2(static_cast<int>(i)) : QF13(0);
        CHECK(k.inner_wz(basis[i], basis[j]) == expected);
      }
  }
}

TEST_CASE("isotropy subalgebras close under bracket") {
  const auto& k = CompactAlgebra::get();
  for (FlagId id : {FlagId::Empty, FlagId::Alpha1, FlagId::Alpha2}) {
    auto f = flag_data(id);
    for (const auto& a : f.isotropy)
      for (const auto& b : f.isotropy) CHECK(kvec_is_zero(k.bracket_wz(a, b)));
  }
}

TEST_CASE("modules are invariant under the isotropy action") {
  for (FlagId id : {FlagId::Empty, FlagId::Alpha1, FlagId::Alpha2})
    CHECK(module_invariance_check(flag_data(id)));
}

TEST_CASE("stored equivalences are equivariant isometries") {
  for (FlagId id : {FlagId::Empty, FlagId::Alpha1, FlagId::Alpha2})
    CHECK(equivariance_check(flag_data(id)));
}

TEST_CASE("equivalence lists match the block structure") {
  CHECK(flag_data(FlagId::Empty).equivalences.size() == 3);
  CHECK(flag_data(FlagId::Alpha1).equivalences.size() == 1);
  CHECK(flag_data(FlagId::Alpha2).equivalences.empty());
}

TEST_CASE("tangent coordinates round-trip and reject isotropy components") {
  SmallRationalRng rng(0x514A);
  for (FlagId id : {FlagId::Empty, FlagId::Alpha1, FlagId::Alpha2}) {
    auto f = flag_data(id);
    int n = f.tangent_dim();
    for (int trial = 0; trial < 30; ++trial) {
      Eigen::Matrix<QF13, Eigen::Dynamic, 1> x(n);
      for (int i = 0; i < n; ++i) x(i) = rng.next_rational();
      CHECK(same(f.tangent_coords(f.from_tangent_coords(x)), x));
      KVec v = f.from_tangent_coords(x);
      CHECK(kvec_is_zero(f.project_tangent(v) - v));
    }
    if (!f.isotropy.empty()) {
      KVec v = f.tangent_basis()[0] + f.isotropy[0];
      CHECK_THROWS_AS(f.tangent_coords(v), std::domain_error);
      CHECK(kvec_is_zero(f.project_tangent(f.isotropy[0])));
    }
  }
}
