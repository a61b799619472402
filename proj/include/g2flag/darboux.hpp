#pragma once

#include "g2flag/poly.hpp"

#include <array>
#include <vector>

namespace g2flag {

/// Invariant-surface pair: (grad f) . X = k f as an exact identity.
struct DarbouxPair {
  PolyQ f;
  PolyQ k;
};

/// Exact polynomial check of the defining identity against the field.
bool darboux_verify(const DarbouxPair& pair, const std::array<PolyQ, 3>& field);

/// Complete search for Darboux polynomials of the given field up to the
/// requested degree (1 or 2), cofactor degree <= 2.  For every monic leading
/// monomial the cofactor is eliminated by parametric division and the
/// remainder equations on the lower coefficients are solved exactly over the
/// field; the solver throws on any system shape it cannot finish, so a
/// normal return certifies completeness of the result list (within the
/// scalar field).
std::vector<DarbouxPair> darboux_search(const std::array<PolyQ, 3>& field, int max_degree);

}  // namespace g2flag
