#include <doctest.h>

#include <algorithm>
#include <map>

#include "oracles.hpp"
#include "trotterlat/models.hpp"

using namespace trotterlat;

namespace {

const std::string kDataDir = TROTTERLAT_DATA_DIR;

const SiteTermGroup& group_at(const std::vector<SiteTermGroup>& groups, int row, int col) {
  for (const SiteTermGroup& g : groups)
    if (g.row == row && g.col == col) return g;
  throw std::logic_error("missing group");
}

std::map<std::string, int> coefficient_tally(const SiteTermGroup& group) {
  std::map<std::string, int> tally;
  for (const HamTerm& term : group.terms) ++tally[term.coeff.abs().str()];
  return tally;
}

std::vector<HamTerm> all_terms(const std::vector<SiteTermGroup>& groups) {
  std::vector<HamTerm> terms;
  for (const SiteTermGroup& g : groups)
    for (const HamTerm& t : g.terms) terms.push_back(t);
  return terms;
}

/// Shifts every qubit index by delta (row-major order, no wrap); valid when
/// all supports stay inside the register.
PauliString shift_linear(const PauliString& p, int delta) {
  PauliString out(p.n_qubits());
  out.multiply_phase_by_i(p.phase_power());
  for (std::uint32_t q = 0; q < p.n_qubits(); ++q) {
    const int target = static_cast<int>(q) + delta;
    if (p.pauli_at(q) != 0) out.set_pauli(static_cast<std::uint32_t>(target), p.pauli_at(q));
  }
  return out;
}

bool same_multiset(std::vector<HamTerm> a, std::vector<HamTerm> b) {
  auto result = compare_term_multisets(a, b);
  return result.ok;
}

bool dense_equal(const oracle::Matrix& x, const oracle::Matrix& y, double tol = 1e-12) {
  return (x - y).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace

TEST_CASE("interior site decompositions have the tabulated shapes") {
  const LatticeSpec lattice{3, 3, 2, Boundary::open};

  SUBCASE("hubbard: 12 terms, 8 at t/2, 3 + identity at U/4") {
    const auto groups = build_hubbard(lattice);
    const SiteTermGroup& interior = group_at(groups, 2, 2);
    REQUIRE(interior.terms.size() == 12);
    auto tally = coefficient_tally(interior);
    CHECK(tally["1/2*t"] == 8);
    CHECK(tally["1/4*U"] == 4);
    int identities = 0;
    for (const HamTerm& t : interior.terms) identities += t.pauli.is_identity();
    CHECK(identities == 1);
    for (const HamTerm& t : interior.terms) CHECK(t.pauli.phase_power() == 0);
  }

  SUBCASE("tj: 64 terms split 32/32 with two identity strings") {
    const auto groups = build_tj(lattice);
    const SiteTermGroup& interior = group_at(groups, 2, 2);
    REQUIRE(interior.terms.size() == 64);
    auto tally = coefficient_tally(interior);
    CHECK(tally["1/8*t"] == 32);
    CHECK(tally["1/16*J"] == 32);
    int identities = 0;
    for (const HamTerm& t : interior.terms) identities += t.pauli.is_identity();
    CHECK(identities == 2);
  }

  SUBCASE("open boundaries drop out-of-range sectors") {
    const auto groups = build_hubbard(lattice);
    CHECK(group_at(groups, 3, 3).terms.size() == 4);   // interaction only
    CHECK(group_at(groups, 1, 3).terms.size() == 8);   // down hop + interaction
    CHECK(group_at(groups, 3, 1).terms.size() == 8);   // right hop + interaction
  }
}

TEST_CASE("single site lattice keeps only the interaction") {
  const auto groups = build_hubbard({1, 1, 1, Boundary::open});
  REQUIRE(groups.size() == 1);
  CHECK(groups[0].terms.size() == 4);
  for (const HamTerm& t : groups[0].terms)
    CHECK(t.coeff.abs() == Coefficient(Rational(1, 4), Monomial{0, 1, 0}));
}

TEST_CASE("1d chains: term counts and pauli depth") {
  const LatticeSpec chain{4, 1, 1, Boundary::open};
  const auto hub = build_hubbard(chain);
  CHECK(group_at(hub, 1, 2).terms.size() == 8);
  CHECK(pauli_depth(hub) == 3);

  const auto tj = build_tj(chain);
  CHECK(group_at(tj, 1, 2).terms.size() == 32);
  CHECK(pauli_depth(tj) == 4);

  CHECK_THROWS_AS(pauli_depth({}), std::invalid_argument);
}

TEST_CASE("2d strings span the lattice width") {
  const LatticeSpec lattice{4, 2, 2, Boundary::open};
  CHECK(pauli_depth(build_hubbard(lattice)) == 2u * 4 + 1);
  CHECK(pauli_depth(build_tj(lattice)) == 2u * 4 + 2);
}

TEST_CASE("dropping the exchange sector leaves the 32 hopping terms") {
  BuildOptions no_exchange;
  no_exchange.include_exchange = false;
  const auto groups = build_tj({3, 3, 2, Boundary::open}, no_exchange);
  CHECK(group_at(groups, 2, 2).terms.size() == 32);
  for (const HamTerm& t : group_at(groups, 2, 2).terms)
    CHECK(t.coeff.abs() == Coefficient(Rational(1, 8), Monomial{1, 0, 0}));
}

TEST_CASE("unprojected hopping reproduces the hubbard t sector termwise") {
  const LatticeSpec lattice{3, 2, 2, Boundary::open};
  BuildOptions plain;
  plain.project_hopping = false;
  plain.include_exchange = false;
  const auto tj = build_tj(lattice, plain);
  const auto hub = build_hubbard(lattice);
  REQUIRE(tj.size() == hub.size());
  for (std::size_t g = 0; g < tj.size(); ++g) {
    // The hubbard group lists its hopping sectors first, then the on-site
    // sector (4 terms).
    REQUIRE(hub[g].terms.size() == tj[g].terms.size() + 4);
    for (std::size_t k = 0; k < tj[g].terms.size(); ++k) {
      CHECK(tj[g].terms[k].coeff == hub[g].terms[k].coeff);
      CHECK(tj[g].terms[k].pauli == hub[g].terms[k].pauli);
    }
  }
}

TEST_CASE("interior groups are linear-shift translates of each other") {
  const LatticeSpec lattice{4, 4, 2, Boundary::open};
  for (Model model : {Model::hubbard, Model::tj}) {
    const auto groups = build_model(model, lattice);
    const SiteTermGroup& base = group_at(groups, 2, 2);

    SiteTermGroup shifted_right{2, 3, {}};
    for (const HamTerm& t : base.terms)
      shifted_right.terms.emplace_back(t.coeff, shift_linear(t.pauli, 2));
    CHECK(same_multiset(shifted_right.terms, group_at(groups, 2, 3).terms));

    SiteTermGroup shifted_down{3, 2, {}};
    for (const HamTerm& t : base.terms)
      shifted_down.terms.emplace_back(t.coeff, shift_linear(t.pauli, 2 * 4));
    CHECK(same_multiset(shifted_down.terms, group_at(groups, 3, 2).terms));
  }
}

TEST_CASE("total term counts follow the bond bookkeeping") {
  for (int nx : {2, 3, 4}) {
    for (int ny : {1, 2, 3}) {
      const LatticeSpec lattice{nx, ny, ny == 1 ? 1 : 2, Boundary::open};
      const long vertical_bonds = ny > 1 ? static_cast<long>(nx) * (ny - 1) : 0;
      const long horizontal_bonds = static_cast<long>(ny) * (nx - 1);
      const long bonds = vertical_bonds + horizontal_bonds;
      CHECK(all_terms(build_hubbard(lattice)).size() ==
            static_cast<std::size_t>(4 * bonds + 4 * nx * ny));
      CHECK(all_terms(build_tj(lattice)).size() == static_cast<std::size_t>(32 * bonds));
    }
  }
}

TEST_CASE("periodic wrapping translates the interior bond pattern") {
  SUBCASE("1d ring") {
    const LatticeSpec ring{3, 1, 1, Boundary::periodic};
    const auto groups = build_hubbard(ring);
    for (const SiteTermGroup& g : groups) CHECK(g.terms.size() == 8);
    // Site 3's up-spin hop wraps: X(1,5) Z(1,6) X(1,1).
    const SiteTermGroup& wrapped = group_at(groups, 1, 3);
    bool found = false;
    for (const HamTerm& t : wrapped.terms) {
      if (t.pauli.pauli_at(4) == 1 && t.pauli.pauli_at(5) == 3 && t.pauli.pauli_at(0) == 1 &&
          t.pauli.weight() == 3)
        found = true;
    }
    CHECK(found);
  }
  SUBCASE("2d torus groups stay full sized") {
    const LatticeSpec torus{3, 3, 2, Boundary::periodic};
    for (const SiteTermGroup& g : build_hubbard(torus)) CHECK(g.terms.size() == 12);
    for (const SiteTermGroup& g : build_tj(torus)) CHECK(g.terms.size() == 64);
  }
  SUBCASE("wrap needs at least two sites") {
    CHECK_THROWS_AS(build_hubbard({1, 1, 1, Boundary::periodic}), std::invalid_argument);
    CHECK_THROWS_AS(build_hubbard({3, 1, 2, Boundary::periodic}), std::invalid_argument);
  }
}

TEST_CASE("jordan-wigner builds equal the direct fermionic Hamiltonians") {
  const double t = 0.7, u = 1.9, j = 0.35;
  SUBCASE("hubbard, 4-site chain") {
    const LatticeSpec chain{4, 1, 1, Boundary::open};
    CHECK(dense_equal(oracle::terms_dense(all_terms(build_hubbard(chain)), 8, t, u, j),
                      oracle::hubbard_dense(chain, t, u)));
  }
  SUBCASE("hubbard, 2x2") {
    const LatticeSpec square{2, 2, 2, Boundary::open};
    CHECK(dense_equal(oracle::terms_dense(all_terms(build_hubbard(square)), 8, t, u, j),
                      oracle::hubbard_dense(square, t, u)));
  }
  SUBCASE("tj, 4-site chain") {
    const LatticeSpec chain{4, 1, 1, Boundary::open};
    CHECK(dense_equal(oracle::terms_dense(all_terms(build_tj(chain)), 8, t, u, j),
                      oracle::tj_dense(chain, t, j)));
  }
  SUBCASE("tj, 2x2") {
    const LatticeSpec square{2, 2, 2, Boundary::open};
    CHECK(dense_equal(oracle::terms_dense(all_terms(build_tj(square)), 8, t, u, j),
                      oracle::tj_dense(square, t, j)));
  }
}

TEST_CASE("bulk windows carry full templates everywhere") {
  const LatticeSpec lattice{3, 3, 2, Boundary::open};
  const BulkGroups bulk = build_bulk(Model::hubbard, lattice);
  CHECK(bulk.window.size() == 9);
  for (const SiteTermGroup& g : bulk.window) CHECK(g.terms.size() == 12);
  CHECK(bulk.embedding.n_x == 4);
  CHECK(bulk.embedding.n_y == 4);

  const TiledBulkGroups tiled = build_bulk_tiled(Model::hubbard, {2, 2, 2, Boundary::periodic});
  CHECK(tiled.window.size() == 4);
  CHECK(tiled.image_tiles.size() == 9);
  for (const auto& tile : tiled.image_tiles) {
    CHECK(tile.size() == 4);
    for (const SiteTermGroup& g : tile) CHECK(g.terms.size() == 12);
  }

  const TiledBulkGroups chain_tiles =
      build_bulk_tiled(Model::hubbard, {3, 1, 1, Boundary::periodic});
  CHECK(chain_tiles.image_tiles.size() == 3);
}

TEST_CASE("golden tables match the generated decompositions") {
  const GoldenCheckResult hub =
      table_golden_check(Model::hubbard, kDataDir + "/hubbard_single_site.table");
  CHECK(hub.ok);
  CHECK(hub.matched == 12);
  CHECK(hub.expected == 12);

  const GoldenCheckResult tj =
      table_golden_check(Model::tj, kDataDir + "/tj_single_site.table");
  CHECK(tj.ok);
  CHECK(tj.matched == 64);
  CHECK(tj.expected == 64);
}

TEST_CASE("a corrupted fixture entry is named in the diff") {
  const LatticeSpec reference{3, 3, 2, Boundary::open};
  auto expected = load_table_fixture(kDataDir + "/tj_single_site.table", reference, 2, 2);
  REQUIRE(expected.size() == 64);
  expected[10].coeff = expected[10].coeff * Rational(2);  // inject a defect

  const auto groups = build_tj(reference);
  const SiteTermGroup& interior = group_at(groups, 2, 2);
  const GoldenCheckResult result = compare_term_multisets(interior.terms, expected);
  CHECK_FALSE(result.ok);
  CHECK(result.matched == 63);
  REQUIRE(!result.diff.empty());
  bool mentions_quarter_t = false;
  for (const std::string& line : result.diff)
    if (line.find("1/4*t") != std::string::npos) mentions_quarter_t = true;
  CHECK(mentions_quarter_t);
}
