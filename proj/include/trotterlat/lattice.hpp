#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "trotterlat/fermion.hpp"

namespace trotterlat {

enum class Model { hubbard, tj };
enum class Boundary { open, periodic };

std::string to_string(Model m);
std::string to_string(Boundary b);

/// Spinful rectangular lattice: n_x sites per row, n_y rows. The spin degree
/// of freedom doubles the columns of the underlying spinless grid (up on odd
/// columns 2j-1, down on even columns 2j).
struct LatticeSpec {
  int n_x = 1;
  int n_y = 1;
  int dimension = 1;
  Boundary boundary = Boundary::open;

  void validate() const {
    if (n_x < 1 || n_y < 1) throw std::invalid_argument("LatticeSpec: sizes must be >= 1");
    if (dimension != 1 && dimension != 2)
      throw std::invalid_argument("LatticeSpec: dimension must be 1 or 2");
    if (dimension == 1 && n_y != 1)
      throw std::invalid_argument("LatticeSpec: 1D lattice requires n_y == 1");
    if (boundary == Boundary::periodic) {
      if (n_x < 2 || (dimension == 2 && n_y < 2))
        throw std::invalid_argument(
            "LatticeSpec: periodic boundary needs >= 2 sites per wrapped dimension");
    }
  }

  int n_sites() const { return n_x * n_y; }
  int spinless_cols() const { return 2 * n_x; }
  std::uint32_t n_qubits() const { return static_cast<std::uint32_t>(2 * n_x * n_y); }

  JWOrdering ordering() const {
    return JWOrdering{dimension, static_cast<std::uint32_t>(n_y),
                      static_cast<std::uint32_t>(spinless_cols())};
  }

  friend bool operator==(const LatticeSpec&, const LatticeSpec&) = default;
};

/// Numeric model parameters. Symbolic builds never need these; they enter at
/// matrix construction and bound evaluation.
struct ModelParams {
  double t = 1.0;
  double u = 0.0;
  double j = 0.0;
  bool j_derived = false;  // j tied to 4 t^2 / u

  static ModelParams hubbard_params(double t, double u) { return {t, u, 0.0, false}; }
  static ModelParams tj_params(double t, double j) { return {t, 0.0, j, false}; }
  static ModelParams derived_j(double t, double u) {
    if (u == 0.0) throw std::invalid_argument("ModelParams: derived j needs u != 0");
    return {t, u, 4.0 * t * t / u, true};
  }

  void validate() const {
    if (t < 0 || u < 0 || j < 0)
      throw std::invalid_argument("ModelParams: parameters must be >= 0");
    if (j_derived && u > 0 && j != 4.0 * t * t / u)
      throw std::invalid_argument("ModelParams: j_derived requires j == 4 t^2 / u");
  }
};

/// Dimensionless evolution time and allowed first-order product-formula error.
struct SimParams {
  double tau = 1.0;
  double epsilon = 1.0;

  void validate() const {
    if (tau <= 0 || epsilon <= 0)
      throw std::invalid_argument("SimParams: tau and epsilon must be > 0");
  }
};

}  // namespace trotterlat
