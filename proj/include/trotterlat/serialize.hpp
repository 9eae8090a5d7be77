#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "trotterlat/bounds.hpp"
#include "trotterlat/models.hpp"

namespace trotterlat {

using Json = nlohmann::ordered_json;

/// Polynomial as a list of {a, b, c, num, den} entries (exponents of t, U, J
/// and the exact rational weight).
Json coefficient_to_json(const Coefficient& coeff);

Json bound_to_json(const BoundResult& result);
std::string bound_to_json_string(const BoundResult& result);

/// Sparse Pauli rendering over lattice sites, e.g. "x[1,3] z[1,4]"; "id" for
/// the identity string.
std::string pauli_site_spec(const PauliString& pauli, const JWOrdering& ordering);

/// CSV schema: site_row,site_col,delta,coefficient,pauli (LF line endings,
/// exact coefficient strings).
std::string decomposition_to_csv(const std::vector<SiteTermGroup>& groups,
                                 const JWOrdering& ordering);
Json decomposition_to_json(const std::vector<SiteTermGroup>& groups,
                           const JWOrdering& ordering);

/// CSV schema: first column the swept value, one column per named curve.
std::string sweep_to_csv(const std::string& x_name,
                         const std::vector<std::string>& curve_names,
                         const std::vector<std::vector<SweepPoint>>& curves);

/// CSV schema: index,eigenvalue.
std::string spectrum_to_csv(const std::vector<double>& levels);

/// Full-precision decimal rendering used in all CSV output (12 significant
/// digits).
std::string format_number(double value);

}  // namespace trotterlat
