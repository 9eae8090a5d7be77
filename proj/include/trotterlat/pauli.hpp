#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "trotterlat/coefficient.hpp"

namespace trotterlat {

/// n-qubit Pauli product in symplectic form: operator = i^phase * prod_q s_q
/// with s_q = I, X, Z, Y for (x_q, z_q) = (0,0), (1,0), (0,1), (1,1).
/// The phase is a power of i in {0,1,2,3}; Y counts as the proper Pauli Y.
/// Masks are packed 64 qubits per word, qubit q at bit q%64 of word q/64.
class PauliString {
 public:
  explicit PauliString(std::uint32_t n_qubits);

  /// Parse a label such as "XIZY" or "+iXZ"; character k acts on qubit k.
  /// '_' is accepted as an alias for 'I'.
  static PauliString from_label(const std::string& label);
  static PauliString identity(std::uint32_t n_qubits) { return PauliString(n_qubits); }

  std::uint32_t n_qubits() const { return n_; }
  /// Power of i of the global phase, in {0,1,2,3}.
  int phase_power() const { return phase_; }
  bool has_real_phase() const { return phase_ == 0 || phase_ == 2; }

  bool x_bit(std::uint32_t q) const { return bit(x_, q); }
  bool z_bit(std::uint32_t q) const { return bit(z_, q); }
  /// 0 = I, 1 = X, 2 = Y, 3 = Z at qubit q.
  int pauli_at(std::uint32_t q) const;
  void set_pauli(std::uint32_t q, int pauli);
  void multiply_phase_by_i(int power) { phase_ = (phase_ + power) & 3; }

  bool is_identity() const;
  /// Number of non-identity tensor factors.
  std::uint32_t weight() const;

  /// True iff [*this, other] = 0 (even symplectic inner product).
  bool commutes_with(const PauliString& other) const;

  friend PauliString operator*(const PauliString& a, const PauliString& b);

  /// Masks-only lexicographic order (phase ignored), used for canonical
  /// sorting of term lists.
  static bool mask_less(const PauliString& a, const PauliString& b);
  friend bool operator==(const PauliString& a, const PauliString& b);
  friend bool operator!=(const PauliString& a, const PauliString& b) { return !(a == b); }
  bool same_masks(const PauliString& o) const { return x_ == o.x_ && z_ == o.z_; }

  std::string str() const;

  const std::vector<std::uint64_t>& x_mask() const { return x_; }
  const std::vector<std::uint64_t>& z_mask() const { return z_; }

 private:
  static bool bit(const std::vector<std::uint64_t>& m, std::uint32_t q) {
    return (m[q >> 6] >> (q & 63)) & 1;
  }
  static void set_bit(std::vector<std::uint64_t>& m, std::uint32_t q, bool v) {
    if (v) m[q >> 6] |= std::uint64_t(1) << (q & 63);
    else m[q >> 6] &= ~(std::uint64_t(1) << (q & 63));
  }

  std::uint32_t n_ = 0;
  int phase_ = 0;
  std::vector<std::uint64_t> x_, z_;
};

PauliString multiply(const PauliString& p, const PauliString& q);
bool commutes(const PauliString& p, const PauliString& q);

/// One elementary Hamiltonian term: coefficient polynomial times a Pauli
/// string. Canonical form folds a +-1 phase into the coefficient sign; a +-i
/// phase marks a non-Hermitian intermediate and survives only during
/// expansion.
struct HamTerm {
  Coefficient coeff;
  PauliString pauli;

  HamTerm(Coefficient c, PauliString p) : coeff(std::move(c)), pauli(std::move(p)) {
    canonicalize();
  }

  void canonicalize() {
    if (pauli.phase_power() == 2) {
      coeff = -coeff;
      pauli.multiply_phase_by_i(2);
    } else if (pauli.phase_power() == 3) {
      coeff = -coeff;
      pauli.multiply_phase_by_i(2);
    }
  }
  bool is_hermitian() const { return pauli.phase_power() == 0; }
  std::string str() const { return "(" + coeff.str() + ") " + pauli.str(); }
};

/// Spectral norm of [a, b]: zero when the Pauli strings commute, otherwise
/// 2 |coeff_a| |coeff_b| (unit-norm Pauli products, anticommutation doubles).
Coefficient commutator_norm(const HamTerm& a, const HamTerm& b);

}  // namespace trotterlat
