#include "trotterlat/pauli.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace trotterlat {

namespace {

std::uint32_t popcount_and(const std::vector<std::uint64_t>& a,
                           const std::vector<std::uint64_t>& b) {
  std::uint32_t total = 0;
  for (std::size_t w = 0; w < a.size(); ++w) total += std::popcount(a[w] & b[w]);
  return total;
}

}  // namespace

PauliString::PauliString(std::uint32_t n_qubits)
    : n_(n_qubits), x_((n_qubits + 63) / 64, 0), z_((n_qubits + 63) / 64, 0) {}

PauliString PauliString::from_label(const std::string& label) {
  std::size_t pos = 0;
  int phase = 0;
  if (pos < label.size() && (label[pos] == '+' || label[pos] == '-')) {
    if (label[pos] == '-') phase = 2;
    ++pos;
  }
  if (pos < label.size() && label[pos] == 'i') {
    phase = (phase + 1) & 3;
    ++pos;
  }
  std::string body = label.substr(pos);
  PauliString p(static_cast<std::uint32_t>(body.size()));
  p.phase_ = phase;
  for (std::uint32_t q = 0; q < body.size(); ++q) {
    switch (body[q]) {
      case 'I': case '_': break;
      case 'X': p.set_pauli(q, 1); break;
      case 'Y': p.set_pauli(q, 2); break;
      case 'Z': p.set_pauli(q, 3); break;
      default: throw std::invalid_argument("PauliString: bad label character");
    }
  }
  return p;
}

int PauliString::pauli_at(std::uint32_t q) const {
  bool x = x_bit(q), z = z_bit(q);
  if (x && z) return 2;
  if (x) return 1;
  if (z) return 3;
  return 0;
}

void PauliString::set_pauli(std::uint32_t q, int pauli) {
  if (q >= n_) throw std::out_of_range("PauliString: qubit index out of range");
  set_bit(x_, q, pauli == 1 || pauli == 2);
  set_bit(z_, q, pauli == 2 || pauli == 3);
}

bool PauliString::is_identity() const {
  for (std::size_t w = 0; w < x_.size(); ++w)
    if (x_[w] != 0 || z_[w] != 0) return false;
  return true;
}

std::uint32_t PauliString::weight() const {
  std::uint32_t total = 0;
  for (std::size_t w = 0; w < x_.size(); ++w) total += std::popcount(x_[w] | z_[w]);
  return total;
}

bool PauliString::commutes_with(const PauliString& other) const {
  if (n_ != other.n_)
    throw std::invalid_argument("commutes: qubit count mismatch");
  return ((popcount_and(x_, other.z_) + popcount_and(z_, other.x_)) & 1) == 0;
}

PauliString operator*(const PauliString& a, const PauliString& b) {
  if (a.n_ != b.n_)
    throw std::invalid_argument("multiply: qubit count mismatch");
  PauliString out(a.n_);
  // With Y = i X Z per qubit: i^p (XZ-form) multiplication accumulates
  // i^{|x&z|} conversion factors and (-1)^{|z1&x2|} reordering swaps.
  int phase = a.phase_ + b.phase_;
  phase += popcount_and(a.x_, a.z_);
  phase += popcount_and(b.x_, b.z_);
  phase += 2 * popcount_and(a.z_, b.x_);
  for (std::size_t w = 0; w < out.x_.size(); ++w) {
    out.x_[w] = a.x_[w] ^ b.x_[w];
    out.z_[w] = a.z_[w] ^ b.z_[w];
  }
  phase -= popcount_and(out.x_, out.z_);
  out.phase_ = ((phase % 4) + 4) & 3;
  return out;
}

PauliString multiply(const PauliString& p, const PauliString& q) { return p * q; }

bool commutes(const PauliString& p, const PauliString& q) {
  return p.commutes_with(q);
}

bool PauliString::mask_less(const PauliString& a, const PauliString& b) {
  if (a.x_ != b.x_) return a.x_ < b.x_;
  return a.z_ < b.z_;
}

bool operator==(const PauliString& a, const PauliString& b) {
  return a.n_ == b.n_ && a.phase_ == b.phase_ && a.x_ == b.x_ && a.z_ == b.z_;
}

std::string PauliString::str() const {
  static const char* prefix[4] = {"+", "+i", "-", "-i"};
  std::ostringstream os;
  os << prefix[phase_];
  static const char symbol[4] = {'I', 'X', 'Y', 'Z'};
  for (std::uint32_t q = 0; q < n_; ++q) os << symbol[pauli_at(q)];
  return os.str();
}

Coefficient commutator_norm(const HamTerm& a, const HamTerm& b) {
  if (a.pauli.n_qubits() != b.pauli.n_qubits())
    throw std::invalid_argument("commutator_norm: qubit count mismatch");
  if (a.pauli.commutes_with(b.pauli)) return Coefficient::zero();
  return (a.coeff.abs() * b.coeff.abs()) * Rational(2);
}

}  // namespace trotterlat
