#pragma once

#include <string>
#include <vector>

#include "trotterlat/lattice.hpp"
#include "trotterlat/pauli.hpp"

namespace trotterlat {

/// All elementary Pauli terms originating from one spinful site: its hopping
/// sectors (toward the right and downward neighbours), and its on-site or
/// exchange sectors. Like terms are merged within a physical sector only, so
/// interior 2D groups carry exactly 12 (Hubbard) or 64 (t-J) terms.
struct SiteTermGroup {
  int row = 1;  // i, 1-based
  int col = 1;  // j, 1-based (spinful column)
  std::vector<HamTerm> terms;
};

/// Hooks for structural tests; defaults build the models as defined.
struct BuildOptions {
  bool project_hopping = true;   // t-J only: keep the (1-n) factors on hops
  bool include_exchange = true;  // t-J only: emit the J sectors
};

/// Per-site decomposition of the model Hamiltonian on the given lattice.
/// Open boundaries drop sectors whose neighbour leaves the lattice; periodic
/// boundaries wrap them as translates of the interior bond pattern.
std::vector<SiteTermGroup> build_hubbard(const LatticeSpec& lattice);
std::vector<SiteTermGroup> build_tj(const LatticeSpec& lattice,
                                    const BuildOptions& options = {});
std::vector<SiteTermGroup> build_model(Model model, const LatticeSpec& lattice,
                                       const BuildOptions& options = {});

/// Maximum Pauli weight over all terms of all groups. Errors on empty input.
std::uint32_t pauli_depth(const std::vector<SiteTermGroup>& groups);

/// Groups with every site carrying the full interior-site decomposition,
/// realized as a window into a one-site-larger open lattice so that edge
/// sites keep their outward hopping sectors. This is the decomposition the
/// translation-invariant bound bookkeeping assumes; physical open-boundary
/// builds lose boundary sectors and bound sums over them fall below the
/// closed forms by a fixed boundary deficit.
struct BulkGroups {
  LatticeSpec target;
  LatticeSpec embedding;                // open lattice actually built
  std::vector<SiteTermGroup> window;    // one full-template group per target site
  std::uint32_t n_qubits = 0;           // embedding register size
};
BulkGroups build_bulk(Model model, const LatticeSpec& lattice);

/// Bulk groups for periodic pair sums: the target window at the centre of a
/// 3x3 tiling (3x1 in 1D) plus the full-template groups of every image tile.
struct TiledBulkGroups {
  LatticeSpec target;
  LatticeSpec embedding;
  std::vector<SiteTermGroup> window;  // centre tile
  // image_groups[k] holds the centre tile translated by one of the image
  // shifts (including the zero shift, stored first).
  std::vector<std::vector<SiteTermGroup>> image_tiles;
};
TiledBulkGroups build_bulk_tiled(Model model, const LatticeSpec& lattice);

/// Result of comparing a generated interior-site decomposition against the
/// stored table transcription as a (pauli, |coefficient|) multiset.
struct GoldenCheckResult {
  bool ok = false;
  int matched = 0;
  int expected = 0;
  std::vector<std::string> diff;  // missing/extra entries, human-readable
};

/// Checks the generated interior-site decomposition against the table
/// fixture shipped in data/. The reference instance is the interior site
/// (2,2) of a 3x3 open lattice.
GoldenCheckResult table_golden_check(Model model, const std::string& fixture_path);

/// Fixture parsing, exposed for fault-injection tests: one line per term,
/// `delta | coefficient | factors`.
std::vector<HamTerm> load_table_fixture(const std::string& path, const LatticeSpec& lattice,
                                        int site_row, int site_col);
GoldenCheckResult compare_term_multisets(const std::vector<HamTerm>& generated,
                                         const std::vector<HamTerm>& expected);

}  // namespace trotterlat
