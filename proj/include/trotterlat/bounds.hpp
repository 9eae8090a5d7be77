#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "trotterlat/lattice.hpp"
#include "trotterlat/models.hpp"

namespace trotterlat {

enum class BoundMethod { brute, expanded, nearest, closed, one_norm };
std::string to_string(BoundMethod m);

/// Summed commutator norms between two site groups, with the per-monomial
/// tally of noncommuting pairs. The sum is directed: one factor from each
/// group (both orderings are counted only when the groups coincide).
struct AResult {
  Coefficient poly;
  std::map<Monomial, long> counts;
  long total_pairs = 0;
  long nonzero_pairs = 0;
};

AResult compute_a(const SiteTermGroup& group1, const SiteTermGroup& group2);

/// Interior A values by relative displacement (rows, columns): (0,0) self,
/// (0,1) horizontal, (1,0) vertical, (1,1) diagonal, (1,-1) anti-diagonal.
/// Every displacement beyond this reach vanishes for both models.
struct ATable {
  Model model;
  AResult self, horizontal, vertical, diagonal, antidiagonal;
};

/// A values computed from full-template (bulk) groups at the given lattice's
/// geometry. They are width-independent in practice; the cross-method
/// equality tests pin that down.
ATable compute_atable(Model model, const LatticeSpec& lattice);

struct BoundResult {
  BoundMethod method = BoundMethod::closed;
  Model model = Model::hubbard;
  LatticeSpec lattice;
  ModelParams params;
  SimParams sim;
  Coefficient polynomial;   // the bracketed sum, i.e. r * epsilon / tau^2
  double scaled_value = 0;  // polynomial at the given parameters
  double numeric_r = 0;     // scaled_value * tau^2 / epsilon
};

/// Commutator-norm double sum over all ordered pairs of elementary terms in
/// the given groups, self-pairs included. Pure enumeration: reflects exactly
/// the decomposition it is handed.
BoundResult bound_brute(const std::vector<SiteTermGroup>& groups, Model model,
                        const LatticeSpec& lattice, const ModelParams& params,
                        const SimParams& sim);

/// Brute-force oracle over the translation-uniform decomposition: bulk window
/// groups for open boundaries, periodic-image pair sums (shifts of +-one
/// lattice period) for periodic ones.
BoundResult bound_brute_lattice(Model model, const LatticeSpec& lattice,
                                const ModelParams& params, const SimParams& sim);

/// Translation-invariant expansion: displacement multiplicities times table
/// values, summed over the full displacement range for open boundaries (with
/// the N_x^2 N_y^2 pair-accounting identity asserted) or over the periodic
/// image channels for wrapped ones.
BoundResult bound_expanded(const ATable& table, const LatticeSpec& lattice,
                           const ModelParams& params, const SimParams& sim);

/// Nearest-neighbour shortcut: only the five table entries enter, with the
/// open/periodic multiplicity factors. Requires the diagonal entry to vanish
/// for open boundaries, which both models satisfy.
BoundResult bound_nearest(const ATable& table, const LatticeSpec& lattice,
                          const ModelParams& params, const SimParams& sim);

/// Closed-form polynomial for the commutator bound.
BoundResult bound_closed(Model model, const LatticeSpec& lattice,
                         const ModelParams& params, const SimParams& sim);

/// Closed-form 1-norm bound (squared sum of term norms, identity terms
/// excluded), 2D only.
BoundResult bound_one_norm(Model model, const LatticeSpec& lattice,
                           const ModelParams& params, const SimParams& sim);

/// 1-norm bound computed directly from a term list: the squared sum of
/// |coefficients| over non-identity terms.
BoundResult bound_one_norm_generic(const std::vector<SiteTermGroup>& groups, Model model,
                                   const LatticeSpec& lattice, const ModelParams& params,
                                   const SimParams& sim);

/// Pair accounting of the expanded form: (accounted pairs, N_x^2 N_y^2).
std::pair<long, long> expanded_pair_accounting(const LatticeSpec& lattice);

/// r_1-norm / r_commutator at the given parameters; independent of tau and
/// epsilon. Throws when the commutator bound vanishes.
double omega_ratio(Model model, const LatticeSpec& lattice, const ModelParams& params);

enum class SweepParameter { t, u, j, n, u_over_t };

struct SweepSpec {
  SweepParameter vary = SweepParameter::t;
  std::vector<double> grid;
  ModelParams base;
  bool j_derived = false;                // recompute j = 4 t^2 / u at each point
  std::optional<double> fixed_u_over_t;  // ties t = u / ratio when varying u
  BoundMethod method = BoundMethod::closed;
};

struct SweepPoint {
  double x = 0;
  double value = 0;  // r * epsilon / tau^2
};

std::vector<SweepPoint> sweep(Model model, const LatticeSpec& lattice,
                              const SweepSpec& spec);

}  // namespace trotterlat
