#include "trotterlat/serialize.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace trotterlat {

std::string format_number(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

Json coefficient_to_json(const Coefficient& coeff) {
  Json list = Json::array();
  for (const auto& [m, r] : coeff.terms()) {
    Json entry;
    entry["a"] = m.t_exp;
    entry["b"] = m.u_exp;
    entry["c"] = m.j_exp;
    entry["num"] = r.num();
    entry["den"] = r.den();
    list.push_back(std::move(entry));
  }
  return list;
}

Json bound_to_json(const BoundResult& result) {
  Json out;
  out["model"] = to_string(result.model);
  out["method"] = to_string(result.method);
  out["lattice"] = {{"n_x", result.lattice.n_x},
                    {"n_y", result.lattice.n_y},
                    {"dimension", result.lattice.dimension},
                    {"boundary", to_string(result.lattice.boundary)}};
  out["params"] = {{"t", result.params.t},
                   {"u", result.params.u},
                   {"j", result.params.j},
                   {"j_derived", result.params.j_derived}};
  out["sim"] = {{"tau", result.sim.tau}, {"epsilon", result.sim.epsilon}};
  out["polynomial"] = coefficient_to_json(result.polynomial);
  out["polynomial_pretty"] = result.polynomial.str();
  out["r_eps_over_tau2"] = result.scaled_value;
  out["numeric_r"] = result.numeric_r;
  return out;
}

std::string bound_to_json_string(const BoundResult& result) {
  return bound_to_json(result).dump(2) + "\n";
}

std::string pauli_site_spec(const PauliString& pauli, const JWOrdering& ordering) {
  std::ostringstream os;
  static const char symbol[4] = {'i', 'x', 'y', 'z'};
  bool any = false;
  for (std::uint32_t q = 0; q < pauli.n_qubits(); ++q) {
    int p = pauli.pauli_at(q);
    if (p == 0) continue;
    if (any) os << " ";
    os << symbol[p] << "[" << ordering.row_of(q) << "," << ordering.col_of(q) << "]";
    any = true;
  }
  if (!any) return "id";
  return os.str();
}

std::string decomposition_to_csv(const std::vector<SiteTermGroup>& groups,
                                 const JWOrdering& ordering) {
  std::ostringstream os;
  os << "site_row,site_col,delta,coefficient,pauli\n";
  for (const SiteTermGroup& g : groups) {
    int delta = 1;
    for (const HamTerm& term : g.terms) {
      os << g.row << "," << g.col << "," << delta++ << "," << term.coeff.str() << ","
         << pauli_site_spec(term.pauli, ordering) << "\n";
    }
  }
  return os.str();
}

Json decomposition_to_json(const std::vector<SiteTermGroup>& groups,
                           const JWOrdering& ordering) {
  Json out = Json::array();
  for (const SiteTermGroup& g : groups) {
    Json site;
    site["row"] = g.row;
    site["col"] = g.col;
    Json terms = Json::array();
    int delta = 1;
    for (const HamTerm& term : g.terms) {
      Json t;
      t["delta"] = delta++;
      t["coefficient"] = coefficient_to_json(term.coeff);
      t["coefficient_pretty"] = term.coeff.str();
      t["pauli"] = pauli_site_spec(term.pauli, ordering);
      terms.push_back(std::move(t));
    }
    site["terms"] = std::move(terms);
    out.push_back(std::move(site));
  }
  return out;
}

std::string sweep_to_csv(const std::string& x_name,
                         const std::vector<std::string>& curve_names,
                         const std::vector<std::vector<SweepPoint>>& curves) {
  if (curve_names.size() != curves.size())
    throw std::invalid_argument("sweep_to_csv: name/curve count mismatch");
  std::ostringstream os;
  os << x_name;
  for (const std::string& name : curve_names) os << "," << name;
  os << "\n";
  if (curves.empty()) return os.str();
  const std::size_t rows = curves.front().size();
  for (const auto& curve : curves)
    if (curve.size() != rows)
      throw std::invalid_argument("sweep_to_csv: curves have unequal lengths");
  for (std::size_t r = 0; r < rows; ++r) {
    os << format_number(curves.front()[r].x);
    for (const auto& curve : curves) os << "," << format_number(curve[r].value);
    os << "\n";
  }
  return os.str();
}

std::string spectrum_to_csv(const std::vector<double>& levels) {
  std::ostringstream os;
  os << "index,eigenvalue\n";
  for (std::size_t k = 0; k < levels.size(); ++k)
    os << k << "," << format_number(levels[k]) << "\n";
  return os.str();
}

}  // namespace trotterlat
