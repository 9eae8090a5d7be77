#pragma once

// Independent dense-matrix oracles for the tests. These deliberately avoid
// the library's symplectic fast paths: Pauli matrices are built entry by
// entry from the 2x2 tables, and fermionic operators directly in the
// occupation basis, so agreement with the library is a real cross-check.

#include <Eigen/Dense>
#include <bit>
#include <complex>
#include <vector>

#include "trotterlat/lattice.hpp"
#include "trotterlat/pauli.hpp"

namespace oracle {

using Cx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

// sigma[p][row][col], p in {I, X, Y, Z}.
inline const Cx kSigma[4][2][2] = {
    {{1, 0}, {0, 1}},
    {{0, 1}, {1, 0}},
    {{0, Cx(0, -1)}, {Cx(0, 1), 0}},
    {{1, 0}, {0, -1}},
};

/// Dense matrix of a PauliString via explicit per-qubit matrix elements.
/// Basis: bit q of the index is qubit q's state, |0> first.
inline Matrix pauli_dense(const trotterlat::PauliString& p) {
  const std::uint32_t n = p.n_qubits();
  const std::size_t dim = std::size_t(1) << n;
  static const Cx ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  Matrix out(dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      Cx amp = ipow[p.phase_power() & 3];
      for (std::uint32_t q = 0; q < n && amp != Cx(0, 0); ++q)
        amp *= kSigma[p.pauli_at(q)][(r >> q) & 1][(c >> q) & 1];
      out(r, c) = amp;
    }
  }
  return out;
}

/// Dense matrix of a term list evaluated at (t, u, j).
inline Matrix terms_dense(const std::vector<trotterlat::HamTerm>& terms, std::uint32_t n,
                          double t = 1.0, double u = 1.0, double j = 1.0) {
  const std::size_t dim = std::size_t(1) << n;
  Matrix out = Matrix::Zero(dim, dim);
  for (const auto& term : terms) out += term.coeff.eval(t, u, j) * pauli_dense(term.pauli);
  return out;
}

/// Occupied means bit 0 of the basis index (the Z = +1 state).
inline bool occupied(std::size_t state, std::uint32_t site) {
  return ((state >> site) & 1) == 0;
}

inline int parity_below(std::size_t state, std::uint32_t site) {
  const std::size_t below = (std::size_t(1) << site) - 1;
  return std::popcount(~state & below) & 1;
}

/// Fermionic operators directly in the occupation basis.
inline Matrix fermion_dense(trotterlat::FermionKind kind, std::uint32_t site,
                            std::uint32_t n) {
  const std::size_t dim = std::size_t(1) << n;
  Matrix out = Matrix::Zero(dim, dim);
  for (std::size_t s = 0; s < dim; ++s) {
    const double sign = parity_below(s, site) ? -1.0 : 1.0;
    switch (kind) {
      case trotterlat::FermionKind::create:
        if (!occupied(s, site)) out(s ^ (std::size_t(1) << site), s) = sign;
        break;
      case trotterlat::FermionKind::annihilate:
        if (occupied(s, site)) out(s ^ (std::size_t(1) << site), s) = sign;
        break;
      case trotterlat::FermionKind::number:
        out(s, s) = occupied(s, site) ? 1.0 : 0.0;
        break;
      case trotterlat::FermionKind::one_minus_number:
        out(s, s) = occupied(s, site) ? 0.0 : 1.0;
        break;
    }
  }
  return out;
}

inline Matrix creator(std::uint32_t site, std::uint32_t n) {
  return fermion_dense(trotterlat::FermionKind::create, site, n);
}
inline Matrix annihilator(std::uint32_t site, std::uint32_t n) {
  return fermion_dense(trotterlat::FermionKind::annihilate, site, n);
}
inline Matrix number_op(std::uint32_t site, std::uint32_t n) {
  return fermion_dense(trotterlat::FermionKind::number, site, n);
}
inline Matrix hole_op(std::uint32_t site, std::uint32_t n) {
  return fermion_dense(trotterlat::FermionKind::one_minus_number, site, n);
}

struct Bond {
  std::uint32_t up_a, up_b, dn_a, dn_b;  // spinless sites of the two ends
};

inline std::vector<Bond> lattice_bonds(const trotterlat::LatticeSpec& lattice) {
  const trotterlat::JWOrdering ord = lattice.ordering();
  std::vector<Bond> bonds;
  for (int i = 1; i <= lattice.n_y; ++i) {
    for (int j = 1; j <= lattice.n_x; ++j) {
      if (lattice.dimension == 2 && i < lattice.n_y)
        bonds.push_back({ord.linear(i, 2 * j - 1), ord.linear(i + 1, 2 * j - 1),
                         ord.linear(i, 2 * j), ord.linear(i + 1, 2 * j)});
      if (j < lattice.n_x)
        bonds.push_back({ord.linear(i, 2 * j - 1), ord.linear(i, 2 * j + 1),
                         ord.linear(i, 2 * j), ord.linear(i, 2 * j + 2)});
    }
  }
  return bonds;
}

/// Direct fermionic Hubbard Hamiltonian (open boundaries).
inline Matrix hubbard_dense(const trotterlat::LatticeSpec& lattice, double t, double u) {
  const std::uint32_t n = lattice.n_qubits();
  const std::size_t dim = std::size_t(1) << n;
  Matrix h = Matrix::Zero(dim, dim);
  for (const Bond& b : lattice_bonds(lattice)) {
    for (auto [a, c] : {std::pair{b.up_a, b.up_b}, std::pair{b.dn_a, b.dn_b}})
      h -= t * (creator(a, n) * annihilator(c, n) + creator(c, n) * annihilator(a, n));
  }
  const trotterlat::JWOrdering ord = lattice.ordering();
  for (int i = 1; i <= lattice.n_y; ++i)
    for (int j = 1; j <= lattice.n_x; ++j)
      h += u * number_op(ord.linear(i, 2 * j - 1), n) * number_op(ord.linear(i, 2 * j), n);
  return h;
}

/// Direct fermionic t-J Hamiltonian with locally projected hopping (open
/// boundaries).
inline Matrix tj_dense(const trotterlat::LatticeSpec& lattice, double t, double j) {
  const std::uint32_t n = lattice.n_qubits();
  const std::size_t dim = std::size_t(1) << n;
  Matrix h = Matrix::Zero(dim, dim);
  for (const Bond& b : lattice_bonds(lattice)) {
    const Matrix up_hop = creator(b.up_a, n) * annihilator(b.up_b, n) +
                          creator(b.up_b, n) * annihilator(b.up_a, n);
    const Matrix dn_hop = creator(b.dn_a, n) * annihilator(b.dn_b, n) +
                          creator(b.dn_b, n) * annihilator(b.dn_a, n);
    h -= t * hole_op(b.dn_a, n) * up_hop * hole_op(b.dn_b, n);
    h -= t * hole_op(b.up_a, n) * dn_hop * hole_op(b.up_b, n);
    h += 0.5 * j *
         (creator(b.up_a, n) * annihilator(b.dn_a, n) * creator(b.dn_b, n) *
              annihilator(b.up_b, n) +
          creator(b.dn_a, n) * annihilator(b.up_a, n) * creator(b.up_b, n) *
              annihilator(b.dn_b, n));
    h -= 0.5 * j * hole_op(b.dn_a, n) * number_op(b.up_a, n) * number_op(b.dn_b, n) *
         hole_op(b.up_b, n);
    h -= 0.5 * j * hole_op(b.up_a, n) * number_op(b.dn_a, n) * number_op(b.up_b, n) *
         hole_op(b.dn_b, n);
  }
  return h;
}

}  // namespace oracle
