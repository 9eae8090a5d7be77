#include "trotterlat/jw.hpp"

#include <algorithm>
#include <complex>
#include <map>
#include <tuple>

#include "trotterlat/spectra.hpp"

namespace trotterlat {

namespace {

PauliString parity_string_with(const JWOrdering& ordering, std::uint32_t site,
                               int end_pauli) {
  PauliString p(ordering.n_sites());
  for (std::uint32_t k = 0; k < site; ++k) p.set_pauli(k, 3);
  p.set_pauli(site, end_pauli);
  return p;
}

Rational gauge_sign(std::uint32_t site) {
  return (site % 2 == 0) ? Rational(1) : Rational(-1);
}

}  // namespace

std::vector<HamTerm> jw_transform_op(const FermionOp& op, const JWOrdering& ordering) {
  ordering.check_site(op.site);
  const std::uint32_t n = ordering.n_sites();
  switch (op.kind) {
    case FermionKind::create:
    case FermionKind::annihilate: {
      Rational half = gauge_sign(op.site) * Rational(1, 2);
      HamTerm x_part(Coefficient(half), parity_string_with(ordering, op.site, 1));
      PauliString y_string = parity_string_with(ordering, op.site, 2);
      // sigma+- = (X +- iY)/2; the i rides on the Pauli phase.
      y_string.multiply_phase_by_i(op.kind == FermionKind::create ? 1 : 3);
      HamTerm y_part(Coefficient(half), y_string);
      return {std::move(x_part), std::move(y_part)};
    }
    case FermionKind::number:
    case FermionKind::one_minus_number: {
      Rational half(1, 2);
      HamTerm id_part(Coefficient(half), PauliString::identity(n));
      PauliString z(n);
      z.set_pauli(op.site, 3);
      Rational zw = (op.kind == FermionKind::number) ? half : -half;
      HamTerm z_part(Coefficient(zw), z);
      return {std::move(id_part), std::move(z_part)};
    }
  }
  throw std::logic_error("jw_transform_op: unknown kind");
}

namespace {

using MergeKey = std::tuple<std::vector<std::uint64_t>, std::vector<std::uint64_t>, int>;

void merge_into(std::map<MergeKey, std::pair<Coefficient, PauliString>>& acc,
                const HamTerm& term) {
  if (term.coeff.is_zero()) return;
  MergeKey key{term.pauli.x_mask(), term.pauli.z_mask(), term.pauli.phase_power()};
  auto it = acc.find(key);
  if (it == acc.end()) {
    acc.emplace(std::move(key), std::make_pair(term.coeff, term.pauli));
  } else {
    it->second.first += term.coeff;
  }
}

std::vector<HamTerm> collect(std::map<MergeKey, std::pair<Coefficient, PauliString>>& acc) {
  std::vector<HamTerm> out;
  out.reserve(acc.size());
  for (auto& [key, entry] : acc) {
    if (entry.first.is_zero()) continue;
    out.emplace_back(std::move(entry.first), std::move(entry.second));
  }
  std::sort(out.begin(), out.end(), [](const HamTerm& a, const HamTerm& b) {
    if (!a.pauli.same_masks(b.pauli)) return PauliString::mask_less(a.pauli, b.pauli);
    return a.pauli.phase_power() < b.pauli.phase_power();
  });
  return out;
}

}  // namespace

std::vector<HamTerm> jw_transform_monomial(const FermionMonomial& monomial,
                                           const JWOrdering& ordering) {
  return jw_transform_sum({monomial}, ordering);
}

std::vector<HamTerm> jw_transform_sum(const std::vector<FermionMonomial>& monomials,
                                      const JWOrdering& ordering) {
  const std::uint32_t n = ordering.n_sites();
  std::map<MergeKey, std::pair<Coefficient, PauliString>> acc;
  for (const FermionMonomial& monomial : monomials) {
    std::vector<HamTerm> expanded;
    expanded.emplace_back(monomial.scalar, PauliString::identity(n));
    for (const FermionOp& op : monomial.factors) {
      std::vector<HamTerm> factor_terms = jw_transform_op(op, ordering);
      std::vector<HamTerm> next;
      next.reserve(expanded.size() * factor_terms.size());
      for (const HamTerm& lhs : expanded)
        for (const HamTerm& rhs : factor_terms)
          next.emplace_back(lhs.coeff * rhs.coeff, lhs.pauli * rhs.pauli);
      expanded = std::move(next);
    }
    for (const HamTerm& term : expanded) merge_into(acc, term);
  }
  return collect(acc);
}

bool verify_car(const JWOrdering& ordering, std::uint32_t max_sites) {
  if (max_sites > 6)
    throw std::invalid_argument("verify_car: dense check limited to 6 sites");
  const std::uint32_t n = ordering.n_sites();
  if (n > max_sites)
    throw std::invalid_argument("verify_car: ordering exceeds max_sites");

  const std::size_t dim = std::size_t(1) << n;
  std::vector<Eigen::MatrixXcd> annihilators, creators;
  for (std::uint32_t s = 0; s < n; ++s) {
    annihilators.push_back(
        terms_to_dense(jw_transform_op({FermionKind::annihilate, s}, ordering), n));
    creators.push_back(
        terms_to_dense(jw_transform_op({FermionKind::create, s}, ordering), n));
  }
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(dim, dim);
  constexpr double tol = 1e-12;
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      Eigen::MatrixXcd mixed =
          annihilators[a] * creators[b] + creators[b] * annihilators[a];
      if (a == b) mixed -= id;
      if (mixed.cwiseAbs().maxCoeff() > tol) return false;
      Eigen::MatrixXcd same =
          annihilators[a] * annihilators[b] + annihilators[b] * annihilators[a];
      if (same.cwiseAbs().maxCoeff() > tol) return false;
    }
  }
  return true;
}

}  // namespace trotterlat
