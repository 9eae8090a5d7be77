#pragma once

#include <map>
#include <string>

#include "trotterlat/rational.hpp"

namespace trotterlat {

/// Exponents (a, b, c) of the parameter monomial t^a U^b J^c.
struct Monomial {
  int t_exp = 0;
  int u_exp = 0;
  int j_exp = 0;

  friend bool operator<(const Monomial& x, const Monomial& y) {
    if (x.t_exp != y.t_exp) return x.t_exp < y.t_exp;
    if (x.u_exp != y.u_exp) return x.u_exp < y.u_exp;
    return x.j_exp < y.j_exp;
  }
  friend bool operator==(const Monomial& x, const Monomial& y) {
    return x.t_exp == y.t_exp && x.u_exp == y.u_exp && x.j_exp == y.j_exp;
  }
  Monomial operator*(const Monomial& o) const {
    return Monomial{t_exp + o.t_exp, u_exp + o.u_exp, j_exp + o.j_exp};
  }
  std::string str() const;
};

/// Sum of parameter monomials with exact rational weights. Zero-valued entries
/// are never stored, so equality of maps is equality of polynomials.
class Coefficient {
 public:
  Coefficient() = default;
  /// Single term r * t^a U^b J^c.
  Coefficient(Rational r, Monomial m = {});
  static Coefficient zero() { return Coefficient(); }
  static Coefficient one() { return Coefficient(Rational(1)); }

  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  Coefficient& operator+=(const Coefficient& o);
  Coefficient& operator-=(const Coefficient& o);
  friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
  friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
  friend Coefficient operator*(const Coefficient& a, const Coefficient& b);
  Coefficient operator-() const;
  Coefficient operator*(const Rational& r) const;

  friend bool operator==(const Coefficient& a, const Coefficient& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const Coefficient& a, const Coefficient& b) { return !(a == b); }

  /// Monomial-wise absolute value: |r| t^a U^b J^c for each stored term.
  Coefficient abs() const;

  /// Highest exponent of the given parameter appearing with nonzero weight.
  int degree_t() const;
  int degree_u() const;
  int degree_j() const;

  double eval(double t, double u, double j) const;

  /// Human-readable form, e.g. "4*t^2 + 8*t*U".
  std::string str() const;

 private:
  void prune(const Monomial& m);
  std::map<Monomial, Rational> terms_;
};

}  // namespace trotterlat
