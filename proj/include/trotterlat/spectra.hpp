#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "trotterlat/lattice.hpp"
#include "trotterlat/models.hpp"

namespace trotterlat {

using DenseOperator = Eigen::MatrixXcd;

/// Dense matrix of a Pauli term list with coefficients evaluated at the given
/// parameters. Basis convention: bit q of the index is 0 when qubit q is in
/// the Z=+1 state, i.e. when site q is occupied (n = (I+Z)/2).
DenseOperator terms_to_dense(const std::vector<HamTerm>& terms, std::uint32_t n_qubits,
                             const ModelParams& params = {1.0, 1.0, 1.0, false});

/// Dense Hamiltonian of a full build. Guarded at 14 qubits.
DenseOperator to_dense(const std::vector<SiteTermGroup>& groups, const ModelParams& params,
                       std::uint32_t n_qubits);

/// Dense total number operator sum_k n_k.
DenseOperator number_operator_dense(std::uint32_t n_qubits);

/// Restriction of the eigenproblem to a symmetry sector. Spin pairs list the
/// (up, down) qubit pairs of each spinful site for the double-occupancy test.
struct SectorFilter {
  std::optional<int> particle_number;
  bool exclude_double_occupancy = false;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> spin_pairs;

  static SectorFilter none() { return {}; }
  static SectorFilter for_lattice(const LatticeSpec& lattice,
                                  std::optional<int> particles,
                                  bool exclude_double_occ);
  bool admits(std::uint64_t basis_state, std::uint32_t n_qubits) const;
};

/// Ascending eigenvalues of a Hermitian operator restricted to the filtered
/// subspace. Throws on non-Hermitian input.
std::vector<double> eigenvalues(const DenseOperator& op, const SectorFilter& filter);

struct OverlapReport {
  int levels_compared = 0;
  double max_abs_deviation = 0.0;  // after aligning ground-state energies
  double deviation_in_j = 0.0;     // same, in units of the exchange energy
};

/// Compares the lowest |tj_levels| entries of the Hubbard spectrum against the
/// t-J spectrum after subtracting both ground-state energies.
OverlapReport spectrum_overlap(const std::vector<double>& hubbard_levels,
                               const std::vector<double>& tj_levels, double j_energy);

}  // namespace trotterlat
