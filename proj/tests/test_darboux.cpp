#include "g2flag/darboux.hpp"
#include "g2flag/flow.hpp"
#include "g2flag/reference.hpp"

#include <doctest.h>

using namespace g2flag;

namespace {

bool same_pair(const DarbouxPair& a, const DarbouxPair& b) {
  return a.f == b.f && a.k == b.k;
}

}  // namespace

TEST_CASE("every expected invariant-surface pair verifies exactly") {
  const auto& field = poly_field();
  for (const auto& pair : reference_darboux_pairs()) CHECK(darboux_verify(pair, field));
}

TEST_CASE("verification rejects a non-invariant polynomial") {
  const auto& field = poly_field();
  DarbouxPair bad;
  bad.f = PolyQ::var(0) + PolyQ::var(1);
  bad.k = PolyQ(QF13(1));
  CHECK(!darboux_verify(bad, field));
  // x alone with the wrong cofactor must also fail.
  DarbouxPair wrong;
  wrong.f = PolyQ::var(0);
  wrong.k = PolyQ(QF13(1));
  CHECK(!darboux_verify(wrong, field));
}

TEST_CASE("the search reproduces the expected list and nothing else") {
  const auto& field = poly_field();
  auto found = darboux_search(field, 2);
  auto expected = reference_darboux_pairs();
  REQUIRE(found.size() == expected.size());
  // Order-insensitive exact matching.
  std::vector<bool> used(expected.size(), false);
  for (const auto& f : found) {
    bool matched = false;
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (used[i] || !same_pair(f, expected[i])) continue;
      used[i] = true;
      matched = true;
      break;
    }
    CHECK(matched);
  }
  // Six quadratic and three linear polynomials.
  int deg2 = 0, deg1 = 0;
  for (const auto& f : found) {
    if (f.f.total_degree() == 2) ++deg2;
    if (f.f.total_degree() == 1) ++deg1;
  }
  CHECK(deg2 == 6);
  CHECK(deg1 == 3);
}

TEST_CASE("degree-one search is a sublist of the full search") {
  const auto& field = poly_field();
  auto lin = darboux_search(field, 1);
  REQUIRE(lin.size() == 3);
  for (const auto& pair : lin) {
    CHECK(pair.f.total_degree() == 1);
    CHECK(darboux_verify(pair, field));
  }
}

TEST_CASE("search is deterministic") {
  const auto& field = poly_field();
  auto a = darboux_search(field, 2);
  auto b = darboux_search(field, 2);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(same_pair(a[i], b[i]));
}
