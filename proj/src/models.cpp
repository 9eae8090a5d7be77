#include "trotterlat/models.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "trotterlat/jw.hpp"

namespace trotterlat {

std::string to_string(Model m) { return m == Model::hubbard ? "hubbard" : "tj"; }
std::string to_string(Boundary b) { return b == Boundary::open ? "open" : "periodic"; }

namespace {

Coefficient minus_t() { return Coefficient(Rational(-1), Monomial{1, 0, 0}); }
Coefficient plain_u() { return Coefficient(Rational(1), Monomial{0, 1, 0}); }
Coefficient half_j() { return Coefficient(Rational(1, 2), Monomial{0, 0, 1}); }
Coefficient minus_half_j() { return Coefficient(Rational(-1, 2), Monomial{0, 0, 1}); }

FermionOp cr(std::uint32_t s) { return {FermionKind::create, s}; }
FermionOp an(std::uint32_t s) { return {FermionKind::annihilate, s}; }
FermionOp nu(std::uint32_t s) { return {FermionKind::number, s}; }
FermionOp hole(std::uint32_t s) { return {FermionKind::one_minus_number, s}; }

struct SiteMap {
  JWOrdering ord;
  std::uint32_t up(int i, int j) const { return ord.linear(i, 2 * j - 1); }
  std::uint32_t dn(int i, int j) const { return ord.linear(i, 2 * j); }
};

std::vector<HamTerm> hubbard_hop_sector(const SiteMap& map, std::uint32_t a,
                                        std::uint32_t b) {
  return jw_transform_sum({{{cr(a), an(b)}, minus_t()}, {{cr(b), an(a)}, minus_t()}},
                          map.ord);
}

std::vector<HamTerm> hubbard_onsite_sector(const SiteMap& map, int i, int j) {
  return jw_transform_sum({{{nu(map.up(i, j)), nu(map.dn(i, j))}, plain_u()}}, map.ord);
}

std::vector<HamTerm> tj_hop_sector(const SiteMap& map, std::uint32_t a, std::uint32_t b,
                                   std::uint32_t pa, std::uint32_t pb, bool projected) {
  if (!projected) return hubbard_hop_sector(map, a, b);
  return jw_transform_sum(
      {{{hole(pa), cr(a), an(b), hole(pb)}, minus_t()},
       {{hole(pa), cr(b), an(a), hole(pb)}, minus_t()}},
      map.ord);
}

std::vector<HamTerm> tj_flip_sector(const SiteMap& map, int oi, int oj, int di, int dj) {
  std::uint32_t ou = map.up(oi, oj), od = map.dn(oi, oj);
  std::uint32_t du = map.up(di, dj), dd = map.dn(di, dj);
  return jw_transform_sum(
      {{{cr(ou), an(od), cr(dd), an(du)}, half_j()},
       {{cr(od), an(ou), cr(du), an(dd)}, half_j()}},
      map.ord);
}

std::vector<HamTerm> tj_density_sector(const SiteMap& map, int oi, int oj, int di,
                                       int dj) {
  std::uint32_t ou = map.up(oi, oj), od = map.dn(oi, oj);
  std::uint32_t du = map.up(di, dj), dd = map.dn(di, dj);
  return jw_transform_sum(
      {{{hole(od), nu(ou), nu(dd), hole(du)}, minus_half_j()},
       {{hole(ou), nu(od), nu(du), hole(dd)}, minus_half_j()}},
      map.ord);
}

/// Relabels every term's qubits by the torus translation (dr rows, dc spinless
/// columns); used to realize wrapped boundary bonds as translates of the
/// interior bond pattern.
std::vector<HamTerm> translate_terms(const std::vector<HamTerm>& terms, int dr, int dc,
                                     const JWOrdering& ord) {
  auto wrap = [](int v, int period) { return ((v - 1 + period) % period) + 1; };
  std::vector<HamTerm> out;
  out.reserve(terms.size());
  for (const HamTerm& term : terms) {
    PauliString moved(term.pauli.n_qubits());
    moved.multiply_phase_by_i(term.pauli.phase_power());
    for (std::uint32_t q = 0; q < term.pauli.n_qubits(); ++q) {
      int p = term.pauli.pauli_at(q);
      if (p == 0) continue;
      int r = static_cast<int>(ord.row_of(q));
      int c = static_cast<int>(ord.col_of(q));
      moved.set_pauli(
          ord.linear(wrap(r + dr, static_cast<int>(ord.n_rows)),
                     wrap(c + dc, static_cast<int>(ord.n_cols))),
          p);
    }
    out.emplace_back(term.coeff, std::move(moved));
  }
  return out;
}

void append(std::vector<HamTerm>& dst, std::vector<HamTerm>&& src) {
  for (HamTerm& t : src) dst.push_back(std::move(t));
}

/// Sectors of the bond leaving site (i,j) in the given direction; interior
/// bonds transform directly, wrapped bonds translate the nearest interior
/// bond's pattern.
enum class BondDir { vertical, horizontal };

std::vector<HamTerm> bond_sectors(Model model, const LatticeSpec& lattice,
                                  const SiteMap& map, int i, int j, BondDir dir,
                                  const BuildOptions& opt) {
  const bool wrapped = (dir == BondDir::vertical) ? (i == lattice.n_y) : (j == lattice.n_x);
  int oi = i, oj = j;
  if (wrapped) {
    if (dir == BondDir::vertical) --oi;
    else --oj;
  }
  const int di = oi + (dir == BondDir::vertical ? 1 : 0);
  const int dj = oj + (dir == BondDir::horizontal ? 1 : 0);

  std::vector<HamTerm> sectors;
  if (model == Model::hubbard) {
    append(sectors, hubbard_hop_sector(map, map.up(oi, oj), map.up(di, dj)));
    append(sectors, hubbard_hop_sector(map, map.dn(oi, oj), map.dn(di, dj)));
  } else {
    append(sectors, tj_hop_sector(map, map.up(oi, oj), map.up(di, dj), map.dn(oi, oj),
                                  map.dn(di, dj), opt.project_hopping));
    append(sectors, tj_hop_sector(map, map.dn(oi, oj), map.dn(di, dj), map.up(oi, oj),
                                  map.up(di, dj), opt.project_hopping));
    if (opt.include_exchange) {
      append(sectors, tj_flip_sector(map, oi, oj, di, dj));
      append(sectors, tj_density_sector(map, oi, oj, di, dj));
    }
  }
  if (wrapped) {
    const int dr = (dir == BondDir::vertical) ? 1 : 0;
    const int dc = (dir == BondDir::horizontal) ? 2 : 0;
    sectors = translate_terms(sectors, dr, dc, map.ord);
  }
  return sectors;
}

}  // namespace

std::vector<SiteTermGroup> build_model(Model model, const LatticeSpec& lattice,
                                       const BuildOptions& options) {
  lattice.validate();
  const SiteMap map{lattice.ordering()};
  std::vector<SiteTermGroup> groups;
  groups.reserve(static_cast<std::size_t>(lattice.n_sites()));
  for (int i = 1; i <= lattice.n_y; ++i) {
    for (int j = 1; j <= lattice.n_x; ++j) {
      SiteTermGroup group{i, j, {}};
      const bool has_vertical =
          lattice.dimension == 2 &&
          (i < lattice.n_y || lattice.boundary == Boundary::periodic);
      const bool has_horizontal =
          j < lattice.n_x || lattice.boundary == Boundary::periodic;
      if (has_vertical)
        append(group.terms, bond_sectors(model, lattice, map, i, j, BondDir::vertical,
                                         options));
      if (has_horizontal)
        append(group.terms, bond_sectors(model, lattice, map, i, j, BondDir::horizontal,
                                         options));
      if (model == Model::hubbard) append(group.terms, hubbard_onsite_sector(map, i, j));
      groups.push_back(std::move(group));
    }
  }
  return groups;
}

std::vector<SiteTermGroup> build_hubbard(const LatticeSpec& lattice) {
  return build_model(Model::hubbard, lattice);
}

std::vector<SiteTermGroup> build_tj(const LatticeSpec& lattice, const BuildOptions& options) {
  return build_model(Model::tj, lattice, options);
}

std::uint32_t pauli_depth(const std::vector<SiteTermGroup>& groups) {
  if (groups.empty()) throw std::invalid_argument("pauli_depth: no groups");
  std::uint32_t depth = 0;
  for (const SiteTermGroup& g : groups)
    for (const HamTerm& term : g.terms) depth = std::max(depth, term.pauli.weight());
  return depth;
}

BulkGroups build_bulk(Model model, const LatticeSpec& lattice) {
  lattice.validate();
  LatticeSpec embedding{lattice.n_x + 1, lattice.dimension == 2 ? lattice.n_y + 1 : 1,
                        lattice.dimension, Boundary::open};
  BulkGroups bulk{lattice, embedding, {}, embedding.n_qubits()};
  std::vector<SiteTermGroup> all = build_model(model, embedding);
  for (SiteTermGroup& g : all)
    if (g.row <= lattice.n_y && g.col <= lattice.n_x) bulk.window.push_back(std::move(g));
  return bulk;
}

TiledBulkGroups build_bulk_tiled(Model model, const LatticeSpec& lattice) {
  lattice.validate();
  LatticeSpec embedding{3 * lattice.n_x + 1,
                        lattice.dimension == 2 ? 3 * lattice.n_y + 1 : 1,
                        lattice.dimension, Boundary::open};
  TiledBulkGroups tiled{lattice, embedding, {}, {}};
  std::vector<SiteTermGroup> all = build_model(model, embedding);
  const int row_offset = lattice.dimension == 2 ? lattice.n_y : 0;
  auto tile = [&](int ky, int kx) {
    std::vector<SiteTermGroup> t;
    for (const SiteTermGroup& g : all) {
      const int r = g.row - row_offset - ky * lattice.n_y;
      const int c = g.col - lattice.n_x - kx * lattice.n_x;
      if (r >= 1 && r <= lattice.n_y && c >= 1 && c <= lattice.n_x) t.push_back(g);
    }
    return t;
  };
  tiled.window = tile(0, 0);
  tiled.image_tiles.push_back(tiled.window);
  const int ky_lo = lattice.dimension == 2 ? -1 : 0;
  const int ky_hi = lattice.dimension == 2 ? 1 : 0;
  for (int ky = ky_lo; ky <= ky_hi; ++ky)
    for (int kx = -1; kx <= 1; ++kx) {
      if (ky == 0 && kx == 0) continue;
      tiled.image_tiles.push_back(tile(ky, kx));
    }
  return tiled;
}

namespace {

Coefficient parse_fixture_coefficient(std::string text) {
  auto strip = [](std::string s) {
    const char* ws = " \t";
    auto b = s.find_first_not_of(ws);
    auto e = s.find_last_not_of(ws);
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  text = strip(text);
  Rational sign(1);
  if (!text.empty() && text[0] == '-') {
    sign = Rational(-1);
    text = text.substr(1);
  }
  auto slash = text.find('/');
  std::string sym = slash == std::string::npos ? text : text.substr(0, slash);
  std::int64_t den = slash == std::string::npos ? 1 : std::stoll(text.substr(slash + 1));
  Monomial m;
  if (sym == "t") m = Monomial{1, 0, 0};
  else if (sym == "U") m = Monomial{0, 1, 0};
  else if (sym == "J") m = Monomial{0, 0, 1};
  else throw std::invalid_argument("fixture: unknown coefficient symbol " + sym);
  return Coefficient(sign * Rational(1, den), m);
}

int parse_fixture_row(const std::string& token, int i) {
  if (token == "i") return i;
  if (token == "i+1") return i + 1;
  throw std::invalid_argument("fixture: bad row expression " + token);
}

int parse_fixture_col(const std::string& token, int j) {
  if (token.rfind("2j", 0) != 0)
    throw std::invalid_argument("fixture: bad column expression " + token);
  int base = 2 * j;
  std::string rest = token.substr(2);
  if (rest.empty()) return base;
  return base + std::stoi(rest);
}

}  // namespace

std::vector<HamTerm> load_table_fixture(const std::string& path, const LatticeSpec& lattice,
                                        int site_row, int site_col) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("fixture: cannot open " + path);
  const JWOrdering ord = lattice.ordering();
  const int i = site_row, j = site_col;
  const int width = lattice.spinless_cols();
  std::vector<HamTerm> terms;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream fields(line);
    std::string delta, coeff_text, factors;
    if (!std::getline(fields, delta, '|')) continue;
    if (delta.find_first_not_of(" \t") == std::string::npos) continue;
    if (!std::getline(fields, coeff_text, '|') || !std::getline(fields, factors))
      throw std::invalid_argument("fixture: malformed line: " + line);

    Coefficient coeff = parse_fixture_coefficient(coeff_text);
    PauliString pauli(lattice.n_qubits());
    std::istringstream toks(factors);
    std::string tok;
    while (toks >> tok) {
      if (tok == "id") continue;
      if (tok == "vstring") {
        for (int b = 2 * j + 1; b <= width; ++b) pauli.set_pauli(ord.linear(i, b), 3);
        for (int b = 1; b <= 2 * j - 2; ++b) pauli.set_pauli(ord.linear(i + 1, b), 3);
        continue;
      }
      int kind;
      if (tok[0] == 'x') kind = 1;
      else if (tok[0] == 'y') kind = 2;
      else if (tok[0] == 'z') kind = 3;
      else throw std::invalid_argument("fixture: bad factor " + tok);
      auto open = tok.find('['), comma = tok.find(','), close = tok.find(']');
      if (open == std::string::npos || comma == std::string::npos || close == std::string::npos)
        throw std::invalid_argument("fixture: bad factor " + tok);
      int r = parse_fixture_row(tok.substr(open + 1, comma - open - 1), i);
      int c = parse_fixture_col(tok.substr(comma + 1, close - comma - 1), j);
      pauli.set_pauli(ord.linear(r, c), kind);
    }
    terms.emplace_back(std::move(coeff), std::move(pauli));
  }
  return terms;
}

namespace {

std::string render_term(const PauliString& pauli, const Coefficient& abs_coeff,
                        const JWOrdering& ord) {
  std::ostringstream os;
  os << abs_coeff.str() << " *";
  bool any = false;
  static const char symbol[4] = {'I', 'X', 'Y', 'Z'};
  for (std::uint32_t q = 0; q < pauli.n_qubits(); ++q) {
    int p = pauli.pauli_at(q);
    if (p == 0) continue;
    os << " " << symbol[p] << "(" << ord.row_of(q) << "," << ord.col_of(q) << ")";
    any = true;
  }
  if (!any) os << " I";
  return os.str();
}

}  // namespace

GoldenCheckResult compare_term_multisets(const std::vector<HamTerm>& generated,
                                         const std::vector<HamTerm>& expected) {
  using Key = std::tuple<std::vector<std::uint64_t>, std::vector<std::uint64_t>, std::string>;
  auto key_of = [](const HamTerm& t) {
    return Key{t.pauli.x_mask(), t.pauli.z_mask(), t.coeff.abs().str()};
  };
  std::map<Key, int> want, have;
  std::map<Key, const HamTerm*> sample;
  for (const HamTerm& t : expected) {
    ++want[key_of(t)];
    sample[key_of(t)] = &t;
  }
  for (const HamTerm& t : generated) {
    ++have[key_of(t)];
    sample[key_of(t)] = &t;
  }

  GoldenCheckResult result;
  result.expected = static_cast<int>(expected.size());
  JWOrdering render_ord{2, 1, 1};
  if (!expected.empty()) {
    // Render with the register geometry implied by the term width; callers use
    // the 3x3 reference lattice (18 qubits, 6 columns).
    std::uint32_t n = expected.front().pauli.n_qubits();
    render_ord = JWOrdering{2, n / 6 == 0 ? 1 : n / 6, 6};
  }
  for (const auto& [key, count] : want) {
    int got = have.count(key) ? have.at(key) : 0;
    result.matched += std::min(count, got);
    if (got < count)
      result.diff.push_back("missing x" + std::to_string(count - got) + ": " +
                            render_term(sample[key]->pauli, sample[key]->coeff.abs(),
                                        render_ord));
  }
  for (const auto& [key, count] : have) {
    int wanted = want.count(key) ? want.at(key) : 0;
    if (count > wanted)
      result.diff.push_back("extra x" + std::to_string(count - wanted) + ": " +
                            render_term(sample[key]->pauli, sample[key]->coeff.abs(),
                                        render_ord));
  }
  result.ok = result.diff.empty() && generated.size() == expected.size();
  return result;
}

GoldenCheckResult table_golden_check(Model model, const std::string& fixture_path) {
  const LatticeSpec reference{3, 3, 2, Boundary::open};
  std::vector<HamTerm> expected =
      load_table_fixture(fixture_path, reference, 2, 2);
  std::vector<SiteTermGroup> groups = build_model(model, reference);
  for (const SiteTermGroup& g : groups)
    if (g.row == 2 && g.col == 2) return compare_term_multisets(g.terms, expected);
  throw std::logic_error("table_golden_check: reference site missing");
}

}  // namespace trotterlat
