#pragma once

#include <vector>

#include "trotterlat/fermion.hpp"
#include "trotterlat/pauli.hpp"

namespace trotterlat {

/// Jordan-Wigner image of a single fermionic factor as a two-term Pauli sum.
///
/// create/annihilate map to (-1)^site (prod_{k<site} Z_k) (X_site +- i Y_site)/2,
/// number to (I + Z_site)/2 and one_minus_number to (I - Z_site)/2. The sign
/// (-1)^site comes from writing the parity string over occupation phases; it
/// makes the result match the direct occupation-basis matrices exactly.
/// In 2D the row-major ordering turns the double-sum string into the same
/// linear-index string, so one code path serves both dimensions.
std::vector<HamTerm> jw_transform_op(const FermionOp& op, const JWOrdering& ordering);

/// Fully multiplied-out Jordan-Wigner image of an ordered fermionic monomial.
/// Adjacent Z-strings cancel through the Pauli product; like terms are merged
/// and zero terms dropped. Output is sorted by (x_mask, z_mask).
std::vector<HamTerm> jw_transform_monomial(const FermionMonomial& monomial,
                                           const JWOrdering& ordering);

/// Transform of a sum of monomials, merged into one canonical term list.
/// This is the unit at which like Pauli terms are combined (e.g. a hopping
/// term and its Hermitian partner).
std::vector<HamTerm> jw_transform_sum(const std::vector<FermionMonomial>& monomials,
                                      const JWOrdering& ordering);

/// Dense check of the canonical anticommutation relations for all site pairs
/// under the given ordering: {c_a, c+_b} = delta_ab I and {c_a, c_b} = 0 to
/// 1e-12. Requires n_sites <= max_sites <= 6.
bool verify_car(const JWOrdering& ordering, std::uint32_t max_sites);

}  // namespace trotterlat
