#include "trotterlat/spectra.hpp"

#include <Eigen/Eigenvalues>
#include <bit>
#include <cmath>
#include <complex>

namespace trotterlat {

namespace {

constexpr std::uint32_t kMaxDenseQubits = 14;

void check_qubits(std::uint32_t n_qubits) {
  if (n_qubits > kMaxDenseQubits)
    throw std::invalid_argument("dense construction limited to 14 qubits");
}

}  // namespace

namespace {

void add_terms_into(DenseOperator& out, const std::vector<HamTerm>& terms,
                    const ModelParams& params) {
  static const std::complex<double> ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const std::uint64_t dim = static_cast<std::uint64_t>(out.rows());
  for (const HamTerm& term : terms) {
    const double value = term.coeff.eval(params.t, params.u, params.j);
    if (value == 0.0) continue;
    const std::uint64_t x = term.pauli.x_mask().empty() ? 0 : term.pauli.x_mask()[0];
    const std::uint64_t z = term.pauli.z_mask().empty() ? 0 : term.pauli.z_mask()[0];
    // i^phase * X^x Z^z with the per-qubit Y = iXZ conversion folded in.
    const int conv = (term.pauli.phase_power() + std::popcount(x & z)) & 3;
    const std::complex<double> amp = value * ipow[conv];
    for (std::uint64_t s = 0; s < dim; ++s) {
      const double sign = (std::popcount(s & z) & 1) ? -1.0 : 1.0;
      out(s ^ x, s) += amp * sign;
    }
  }
}

}  // namespace

DenseOperator terms_to_dense(const std::vector<HamTerm>& terms, std::uint32_t n_qubits,
                             const ModelParams& params) {
  check_qubits(n_qubits);
  const std::uint64_t dim = std::uint64_t(1) << n_qubits;
  DenseOperator out = DenseOperator::Zero(dim, dim);
  add_terms_into(out, terms, params);
  return out;
}

DenseOperator to_dense(const std::vector<SiteTermGroup>& groups, const ModelParams& params,
                       std::uint32_t n_qubits) {
  check_qubits(n_qubits);
  const std::uint64_t dim = std::uint64_t(1) << n_qubits;
  DenseOperator out = DenseOperator::Zero(dim, dim);
  for (const SiteTermGroup& g : groups) add_terms_into(out, g.terms, params);
  return out;
}

DenseOperator number_operator_dense(std::uint32_t n_qubits) {
  check_qubits(n_qubits);
  const std::uint64_t dim = std::uint64_t(1) << n_qubits;
  const std::uint64_t mask = dim - 1;
  DenseOperator out = DenseOperator::Zero(dim, dim);
  // Occupied qubits are those in the Z=+1 state, i.e. index bits equal to 0.
  for (std::uint64_t s = 0; s < dim; ++s)
    out(s, s) = static_cast<double>(std::popcount(~s & mask));
  return out;
}

SectorFilter SectorFilter::for_lattice(const LatticeSpec& lattice,
                                       std::optional<int> particles,
                                       bool exclude_double_occ) {
  lattice.validate();
  SectorFilter filter;
  filter.particle_number = particles;
  filter.exclude_double_occupancy = exclude_double_occ;
  const JWOrdering ord = lattice.ordering();
  for (int i = 1; i <= lattice.n_y; ++i)
    for (int j = 1; j <= lattice.n_x; ++j)
      filter.spin_pairs.emplace_back(ord.linear(i, 2 * j - 1), ord.linear(i, 2 * j));
  return filter;
}

bool SectorFilter::admits(std::uint64_t basis_state, std::uint32_t n_qubits) const {
  const std::uint64_t mask = (std::uint64_t(1) << n_qubits) - 1;
  const std::uint64_t occupied = ~basis_state & mask;
  if (particle_number && std::popcount(occupied) != *particle_number) return false;
  if (exclude_double_occupancy) {
    for (const auto& [up, dn] : spin_pairs)
      if (((occupied >> up) & 1) && ((occupied >> dn) & 1)) return false;
  }
  return true;
}

std::vector<double> eigenvalues(const DenseOperator& op, const SectorFilter& filter) {
  const double scale = std::max(1.0, op.cwiseAbs().maxCoeff());
  if ((op - op.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw std::invalid_argument("eigenvalues: operator is not Hermitian");
  const std::uint64_t dim = static_cast<std::uint64_t>(op.rows());
  std::uint32_t n_qubits = 0;
  while ((std::uint64_t(1) << n_qubits) < dim) ++n_qubits;

  std::vector<std::uint64_t> kept;
  for (std::uint64_t s = 0; s < dim; ++s)
    if (filter.admits(s, n_qubits)) kept.push_back(s);

  DenseOperator sub(kept.size(), kept.size());
  for (std::size_t r = 0; r < kept.size(); ++r)
    for (std::size_t c = 0; c < kept.size(); ++c) sub(r, c) = op(kept[r], kept[c]);

  Eigen::SelfAdjointEigenSolver<DenseOperator> solver(sub,
                                                      Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigenvalues: eigensolver failed");
  const auto& vals = solver.eigenvalues();
  return std::vector<double>(vals.data(), vals.data() + vals.size());
}

OverlapReport spectrum_overlap(const std::vector<double>& hubbard_levels,
                               const std::vector<double>& tj_levels, double j_energy) {
  if (hubbard_levels.empty() || tj_levels.empty())
    throw std::invalid_argument("spectrum_overlap: empty spectrum");
  if (tj_levels.size() > hubbard_levels.size())
    throw std::invalid_argument(
        "spectrum_overlap: more levels requested than the available low band");
  if (j_energy <= 0)
    throw std::invalid_argument("spectrum_overlap: exchange energy must be > 0");
  OverlapReport report;
  report.levels_compared = static_cast<int>(tj_levels.size());
  for (std::size_t k = 0; k < tj_levels.size(); ++k) {
    const double dev = std::abs((hubbard_levels[k] - hubbard_levels[0]) -
                                (tj_levels[k] - tj_levels[0]));
    report.max_abs_deviation = std::max(report.max_abs_deviation, dev);
  }
  report.deviation_in_j = report.max_abs_deviation / j_energy;
  return report;
}

}  // namespace trotterlat
