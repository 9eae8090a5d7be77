#include "trotterlat/bounds.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace trotterlat {

std::string to_string(BoundMethod m) {
  switch (m) {
    case BoundMethod::brute: return "brute";
    case BoundMethod::expanded: return "expanded";
    case BoundMethod::nearest: return "nearest";
    case BoundMethod::closed: return "closed";
    case BoundMethod::one_norm: return "one_norm";
  }
  return "?";
}

namespace {

/// Contiguous single-monomial view of a group's terms: per term the x words
/// followed by the z words, plus |coefficient| split into monomial and
/// rational weight. Every builder term has exactly one monomial, which keeps
/// the pair sums cheap and exact.
struct FlatGroup {
  std::size_t n_terms = 0;
  std::size_t n_words = 0;
  std::vector<std::uint64_t> words;  // 2 * n_words per term
  std::vector<Monomial> mono;
  std::vector<Rational> weight;

  const std::uint64_t* x_of(std::size_t k) const { return words.data() + 2 * n_words * k; }
  const std::uint64_t* z_of(std::size_t k) const {
    return words.data() + 2 * n_words * k + n_words;
  }
};

FlatGroup flatten(const SiteTermGroup& group) {
  FlatGroup flat;
  flat.n_terms = group.terms.size();
  if (flat.n_terms == 0) return flat;
  flat.n_words = group.terms.front().pauli.x_mask().size();
  flat.words.reserve(2 * flat.n_words * flat.n_terms);
  for (const HamTerm& term : group.terms) {
    const auto& entries = term.coeff.terms();
    if (entries.size() != 1)
      throw std::logic_error("bounds: expected single-monomial term coefficients");
    flat.mono.push_back(entries.begin()->first);
    flat.weight.push_back(entries.begin()->second.abs());
    flat.words.insert(flat.words.end(), term.pauli.x_mask().begin(),
                      term.pauli.x_mask().end());
    flat.words.insert(flat.words.end(), term.pauli.z_mask().begin(),
                      term.pauli.z_mask().end());
  }
  return flat;
}

void accumulate_pairs(const FlatGroup& a, const FlatGroup& b,
                      std::map<Monomial, Rational>& sums,
                      std::map<Monomial, long>* counts, long* nonzero) {
  if (a.n_terms && b.n_terms && a.n_words != b.n_words)
    throw std::invalid_argument("bounds: groups live on different registers");
  const std::size_t w = a.n_words;
  for (std::size_t i = 0; i < a.n_terms; ++i) {
    const std::uint64_t* xa = a.x_of(i);
    const std::uint64_t* za = a.z_of(i);
    for (std::size_t k = 0; k < b.n_terms; ++k) {
      const std::uint64_t* xb = b.x_of(k);
      const std::uint64_t* zb = b.z_of(k);
      std::uint32_t parity = 0;
      for (std::size_t word = 0; word < w; ++word)
        parity += std::popcount(xa[word] & zb[word]) + std::popcount(za[word] & xb[word]);
      if ((parity & 1) == 0) continue;
      Monomial m = a.mono[i] * b.mono[k];
      sums[m] += a.weight[i] * b.weight[k];
      if (counts) ++(*counts)[m];
      if (nonzero) ++(*nonzero);
    }
  }
}

Coefficient sums_to_poly(const std::map<Monomial, Rational>& sums) {
  // Each noncommuting unit-Pauli pair contributes twice the coefficient
  // product to the commutator norm.
  Coefficient poly;
  for (const auto& [m, r] : sums) poly += Coefficient(r * Rational(2), m);
  return poly;
}

BoundResult finish(BoundMethod method, Model model, const LatticeSpec& lattice,
                   const ModelParams& params, const SimParams& sim, Coefficient poly) {
  params.validate();
  sim.validate();
  BoundResult result{method, model, lattice, params, sim, std::move(poly), 0, 0};
  result.scaled_value = result.polynomial.eval(params.t, params.u, params.j);
  result.numeric_r = result.scaled_value * sim.tau * sim.tau / sim.epsilon;
  return result;
}

}  // namespace

AResult compute_a(const SiteTermGroup& group1, const SiteTermGroup& group2) {
  AResult result;
  result.total_pairs =
      static_cast<long>(group1.terms.size()) * static_cast<long>(group2.terms.size());
  std::map<Monomial, Rational> sums;
  accumulate_pairs(flatten(group1), flatten(group2), sums, &result.counts,
                   &result.nonzero_pairs);
  result.poly = sums_to_poly(sums);
  return result;
}

ATable compute_atable(Model model, const LatticeSpec& lattice) {
  lattice.validate();
  // A reference window of full-template groups large enough to host every
  // displacement class.
  LatticeSpec reference = lattice;
  reference.boundary = Boundary::open;
  reference.n_x = std::max(lattice.n_x, 2);
  if (lattice.dimension == 2) reference.n_y = std::max(lattice.n_y, 2);
  BulkGroups bulk = build_bulk(model, reference);
  auto at = [&](int i, int j) -> const SiteTermGroup& {
    return bulk.window[static_cast<std::size_t>((i - 1) * reference.n_x + (j - 1))];
  };
  ATable table{model, {}, {}, {}, {}, {}};
  table.self = compute_a(at(1, 1), at(1, 1));
  table.horizontal = compute_a(at(1, 1), at(1, 2));
  if (lattice.dimension == 2) {
    table.vertical = compute_a(at(1, 1), at(2, 1));
    table.diagonal = compute_a(at(1, 1), at(2, 2));
    table.antidiagonal = compute_a(at(1, 2), at(2, 1));
  }
  return table;
}

BoundResult bound_brute(const std::vector<SiteTermGroup>& groups, Model model,
                        const LatticeSpec& lattice, const ModelParams& params,
                        const SimParams& sim) {
  std::vector<FlatGroup> flat;
  flat.reserve(groups.size());
  for (const SiteTermGroup& g : groups) flat.push_back(flatten(g));
  std::map<Monomial, Rational> sums;
  for (const auto& a : flat)
    for (const auto& b : flat) accumulate_pairs(a, b, sums, nullptr, nullptr);
  return finish(BoundMethod::brute, model, lattice, params, sim, sums_to_poly(sums));
}

BoundResult bound_brute_lattice(Model model, const LatticeSpec& lattice,
                                const ModelParams& params, const SimParams& sim) {
  lattice.validate();
  if (lattice.boundary == Boundary::open) {
    BulkGroups bulk = build_bulk(model, lattice);
    return bound_brute(bulk.window, model, lattice, params, sim);
  }
  // Periodic pair sums run over the window against every periodic image of
  // the window (shifts of one lattice period in each wrapped direction).
  TiledBulkGroups tiled = build_bulk_tiled(model, lattice);
  std::vector<FlatGroup> window;
  for (const SiteTermGroup& g : tiled.window) window.push_back(flatten(g));
  std::map<Monomial, Rational> sums;
  for (const auto& tile : tiled.image_tiles) {
    std::vector<FlatGroup> partners;
    for (const SiteTermGroup& g : tile) partners.push_back(flatten(g));
    for (const auto& a : window)
      for (const auto& b : partners) accumulate_pairs(a, b, sums, nullptr, nullptr);
  }
  BoundResult result =
      finish(BoundMethod::brute, model, lattice, params, sim, sums_to_poly(sums));
  return result;
}

std::pair<long, long> expanded_pair_accounting(const LatticeSpec& lattice) {
  const long nx = lattice.n_x, ny = lattice.n_y;
  long accounted = nx * ny;
  for (long p = 1; p < nx; ++p) accounted += 2 * ny * (nx - p);
  for (long q = 1; q < ny; ++q) accounted += 2 * nx * (ny - q);
  for (long p = 1; p < nx; ++p)
    for (long q = 1; q < ny; ++q) accounted += 2 * 2 * (nx - p) * (ny - q);
  return {accounted, nx * nx * ny * ny};
}

BoundResult bound_expanded(const ATable& table, const LatticeSpec& lattice,
                           const ModelParams& params, const SimParams& sim) {
  lattice.validate();
  const long nx = lattice.n_x, ny = lattice.n_y;
  Coefficient poly;
  if (lattice.boundary == Boundary::open) {
    // Displacement multiplicities over the full range; entries beyond the
    // table's reach are zero for these models (asserted by tests).
    poly += table.self.poly * Rational(nx * ny);
    for (long p = 1; p < nx; ++p) {
      Rational mult(2 * ny * (nx - p));
      if (p == 1) poly += table.horizontal.poly * mult;
    }
    for (long q = 1; q < ny; ++q) {
      Rational mult(2 * nx * (ny - q));
      if (q == 1) poly += table.vertical.poly * mult;
    }
    for (long p = 1; p < nx; ++p) {
      for (long q = 1; q < ny; ++q) {
        Rational mult(2 * (nx - p) * (ny - q));
        if (p == 1 && q == 1) {
          poly += table.diagonal.poly * mult;
          poly += table.antidiagonal.poly * mult;
        }
      }
    }
    auto [accounted, expected] = expanded_pair_accounting(lattice);
    if (accounted != expected)
      throw std::logic_error("bound_expanded: pair accounting failed");
  } else {
    Coefficient per_site = table.self.poly;
    per_site += table.horizontal.poly * Rational(2);
    if (lattice.dimension == 2) {
      per_site += table.vertical.poly * Rational(2);
      per_site += table.diagonal.poly * Rational(2);
      per_site += table.antidiagonal.poly * Rational(2);
    }
    poly = per_site * Rational(nx * ny);
  }
  return finish(BoundMethod::expanded, table.model, lattice, params, sim, std::move(poly));
}

BoundResult bound_nearest(const ATable& table, const LatticeSpec& lattice,
                          const ModelParams& params, const SimParams& sim) {
  lattice.validate();
  if (lattice.boundary == Boundary::open && !table.diagonal.poly.is_zero())
    throw std::logic_error("bound_nearest: diagonal A must vanish");
  const long nx = lattice.n_x, ny = lattice.n_y;
  Coefficient poly;
  if (lattice.boundary == Boundary::open) {
    poly += table.self.poly * Rational(nx * ny);
    poly += table.horizontal.poly * Rational(2 * ny * (nx - 1));
    poly += table.vertical.poly * Rational(2 * nx * (ny - 1));
    poly += table.antidiagonal.poly * Rational(2 * (nx - 1) * (ny - 1));
  } else {
    Coefficient per_site = table.self.poly;
    per_site += table.horizontal.poly * Rational(2);
    if (lattice.dimension == 2) {
      per_site += table.vertical.poly * Rational(2);
      per_site += table.diagonal.poly * Rational(2);
      per_site += table.antidiagonal.poly * Rational(2);
    }
    poly = per_site * Rational(nx * ny);
  }
  return finish(BoundMethod::nearest, table.model, lattice, params, sim, std::move(poly));
}

namespace {

Coefficient term(std::int64_t num, std::int64_t den, int t_exp, int u_exp, int j_exp) {
  return Coefficient(Rational(num, den), Monomial{t_exp, u_exp, j_exp});
}

Coefficient hubbard_a_self() { return term(4, 1, 2, 0, 0) + term(8, 1, 1, 1, 0); }
Coefficient hubbard_a_neighbor() { return term(4, 1, 2, 0, 0) + term(2, 1, 1, 1, 0); }
Coefficient hubbard_a_antidiag() { return term(2, 1, 2, 0, 0); }
Coefficient hubbard_a_self_1d() { return term(4, 1, 1, 1, 0); }
Coefficient hubbard_a_neighbor_1d() { return term(2, 1, 2, 0, 0) + term(2, 1, 1, 1, 0); }

Coefficient tj_a_self() {
  return term(12, 1, 2, 0, 0) + term(16, 1, 1, 0, 1) + term(3, 2, 0, 0, 2);
}
Coefficient tj_a_neighbor() {
  return term(8, 1, 2, 0, 0) + term(8, 1, 1, 0, 1) + term(3, 2, 0, 0, 2);
}
Coefficient tj_a_antidiag() {
  return term(4, 1, 2, 0, 0) + term(4, 1, 1, 0, 1) + term(3, 4, 0, 0, 2);
}
Coefficient tj_a_self_1d() { return term(2, 1, 2, 0, 0) + term(4, 1, 1, 0, 1); }
Coefficient tj_a_neighbor_1d() {
  return term(4, 1, 2, 0, 0) + term(4, 1, 1, 0, 1) + term(3, 4, 0, 0, 2);
}

}  // namespace

BoundResult bound_closed(Model model, const LatticeSpec& lattice,
                         const ModelParams& params, const SimParams& sim) {
  lattice.validate();
  const long nx = lattice.n_x, ny = lattice.n_y;
  const bool periodic = lattice.boundary == Boundary::periodic;
  Coefficient a0, a1, ad;
  if (lattice.dimension == 1) {
    a0 = model == Model::hubbard ? hubbard_a_self_1d() : tj_a_self_1d();
    a1 = model == Model::hubbard ? hubbard_a_neighbor_1d() : tj_a_neighbor_1d();
    Coefficient poly = a0 * Rational(nx);
    poly += a1 * Rational(2 * (periodic ? nx : nx - 1));
    return finish(BoundMethod::closed, model, lattice, params, sim, std::move(poly));
  }
  a0 = model == Model::hubbard ? hubbard_a_self() : tj_a_self();
  a1 = model == Model::hubbard ? hubbard_a_neighbor() : tj_a_neighbor();
  ad = model == Model::hubbard ? hubbard_a_antidiag() : tj_a_antidiag();
  Coefficient poly = a0 * Rational(nx * ny);
  poly += a1 * Rational(2 * ny * (periodic ? nx : nx - 1));
  poly += a1 * Rational(2 * nx * (periodic ? ny : ny - 1));
  poly += ad * Rational(2 * (periodic ? nx : nx - 1) * (periodic ? ny : ny - 1));
  return finish(BoundMethod::closed, model, lattice, params, sim, std::move(poly));
}

BoundResult bound_one_norm(Model model, const LatticeSpec& lattice,
                           const ModelParams& params, const SimParams& sim) {
  lattice.validate();
  if (lattice.dimension != 2)
    throw std::invalid_argument("bound_one_norm: closed form is 2D only");
  const long n = lattice.n_sites();
  Coefficient square;
  if (model == Model::hubbard) {
    // (4t + 3U/4)^2
    square = term(16, 1, 2, 0, 0) + term(6, 1, 1, 1, 0) + term(9, 16, 0, 2, 0);
  } else {
    // (2t + 15J/8)^2
    square = term(4, 1, 2, 0, 0) + term(15, 2, 1, 0, 1) + term(225, 64, 0, 0, 2);
  }
  return finish(BoundMethod::one_norm, model, lattice, params, sim,
                square * Rational(n * n));
}

BoundResult bound_one_norm_generic(const std::vector<SiteTermGroup>& groups, Model model,
                                   const LatticeSpec& lattice, const ModelParams& params,
                                   const SimParams& sim) {
  Coefficient norm_sum;
  for (const SiteTermGroup& g : groups)
    for (const HamTerm& t : g.terms)
      if (!t.pauli.is_identity()) norm_sum += t.coeff.abs();
  return finish(BoundMethod::one_norm, model, lattice, params, sim,
                norm_sum * norm_sum);
}

double omega_ratio(Model model, const LatticeSpec& lattice, const ModelParams& params) {
  SimParams unit{1.0, 1.0};
  BoundResult com = bound_closed(model, lattice, params, unit);
  if (com.scaled_value == 0.0)
    throw std::domain_error("omega_ratio: commuting Hamiltonian, zero commutator bound");
  BoundResult one = bound_one_norm(model, lattice, params, unit);
  return one.scaled_value / com.scaled_value;
}

namespace {

double evaluate_method(Model model, const LatticeSpec& lattice, const ModelParams& params,
                       BoundMethod method, const std::optional<ATable>& table) {
  SimParams unit{1.0, 1.0};
  switch (method) {
    case BoundMethod::closed: return bound_closed(model, lattice, params, unit).scaled_value;
    case BoundMethod::one_norm:
      return bound_one_norm(model, lattice, params, unit).scaled_value;
    case BoundMethod::brute:
      return bound_brute_lattice(model, lattice, params, unit).scaled_value;
    case BoundMethod::expanded:
      return bound_expanded(*table, lattice, params, unit).scaled_value;
    case BoundMethod::nearest:
      return bound_nearest(*table, lattice, params, unit).scaled_value;
  }
  throw std::logic_error("sweep: unknown method");
}

}  // namespace

std::vector<SweepPoint> sweep(Model model, const LatticeSpec& lattice,
                              const SweepSpec& spec) {
  lattice.validate();
  if (spec.grid.empty()) throw std::invalid_argument("sweep: empty grid");
  std::optional<ATable> table;
  if (spec.method == BoundMethod::expanded || spec.method == BoundMethod::nearest)
    table = compute_atable(model, lattice);

  std::vector<SweepPoint> points;
  points.reserve(spec.grid.size());
  for (double x : spec.grid) {
    ModelParams params = spec.base;
    LatticeSpec shape = lattice;
    switch (spec.vary) {
      case SweepParameter::t:
        if (x < 0) throw std::invalid_argument("sweep: t must be >= 0");
        params.t = x;
        break;
      case SweepParameter::u:
        if (x < 0) throw std::invalid_argument("sweep: u must be >= 0");
        params.u = x;
        if (spec.fixed_u_over_t) params.t = x / *spec.fixed_u_over_t;
        break;
      case SweepParameter::j:
        if (x < 0) throw std::invalid_argument("sweep: j must be >= 0");
        params.j = x;
        break;
      case SweepParameter::u_over_t:
        if (x <= 0) throw std::invalid_argument("sweep: u/t must be > 0");
        params.u = x * params.t;
        break;
      case SweepParameter::n: {
        double sites = x / lattice.n_y;
        if (x < 1 || sites != std::floor(sites))
          throw std::invalid_argument("sweep: N must be a positive multiple of n_y");
        shape.n_x = static_cast<int>(sites);
        break;
      }
    }
    if (spec.j_derived) {
      if (params.u <= 0) throw std::invalid_argument("sweep: derived j needs u > 0");
      params.j = 4.0 * params.t * params.t / params.u;
      params.j_derived = true;
    }
    std::optional<ATable> shape_table = table;
    if (spec.vary == SweepParameter::n && table) shape_table = compute_atable(model, shape);
    points.push_back({x, evaluate_method(model, shape, params, spec.method, shape_table)});
  }
  return points;
}

}  // namespace trotterlat
