#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "trotterlat/coefficient.hpp"

namespace trotterlat {

enum class FermionKind { create, annihilate, number, one_minus_number };

/// One fermionic factor acting on a spinless lattice site (0-based linear
/// index under the row-major ordering).
struct FermionOp {
  FermionKind kind;
  std::uint32_t site;
};

/// Ordered product of fermionic factors with a symbolic scalar. Factor order
/// is significant; no anticommutation is applied implicitly.
struct FermionMonomial {
  std::vector<FermionOp> factors;
  Coefficient scalar;
};

/// Row-major ordering of a spinless grid: linear index runs along each row,
/// then row by row. Rows and columns are 1-based, linear indices 0-based.
struct JWOrdering {
  int dimension = 1;        // 1 or 2
  std::uint32_t n_rows = 1;
  std::uint32_t n_cols = 0; // spinless columns per row

  std::uint32_t n_sites() const { return n_rows * n_cols; }

  std::uint32_t linear(std::uint32_t row, std::uint32_t col) const {
    if (row < 1 || row > n_rows || col < 1 || col > n_cols)
      throw std::out_of_range("JWOrdering: site out of range");
    return (row - 1) * n_cols + (col - 1);
  }
  std::uint32_t row_of(std::uint32_t site) const { return site / n_cols + 1; }
  std::uint32_t col_of(std::uint32_t site) const { return site % n_cols + 1; }

  void check_site(std::uint32_t site) const {
    if (site >= n_sites()) throw std::out_of_range("JWOrdering: site out of range");
  }
};

}  // namespace trotterlat
