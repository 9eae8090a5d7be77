#include "trotterlat/coefficient.hpp"

#include <cmath>
#include <sstream>

namespace trotterlat {

std::string Monomial::str() const {
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const char* name, int e) {
    if (e == 0) return;
    if (!first) os << "*";
    os << name;
    if (e > 1) os << "^" << e;
    first = false;
  };
  emit("t", t_exp);
  emit("U", u_exp);
  emit("J", j_exp);
  if (first) os << "1";
  return os.str();
}

Coefficient::Coefficient(Rational r, Monomial m) {
  if (!r.is_zero()) terms_[m] = r;
}

void Coefficient::prune(const Monomial& m) {
  auto it = terms_.find(m);
  if (it != terms_.end() && it->second.is_zero()) terms_.erase(it);
}

Coefficient& Coefficient::operator+=(const Coefficient& o) {
  for (const auto& [m, r] : o.terms_) {
    terms_[m] += r;
    prune(m);
  }
  return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& o) {
  for (const auto& [m, r] : o.terms_) {
    terms_[m] -= r;
    prune(m);
  }
  return *this;
}

Coefficient operator*(const Coefficient& a, const Coefficient& b) {
  Coefficient out;
  for (const auto& [ma, ra] : a.terms_)
    for (const auto& [mb, rb] : b.terms_) {
      Monomial m = ma * mb;
      out.terms_[m] += ra * rb;
      out.prune(m);
    }
  return out;
}

Coefficient Coefficient::operator-() const {
  Coefficient out;
  for (const auto& [m, r] : terms_) out.terms_[m] = -r;
  return out;
}

Coefficient Coefficient::operator*(const Rational& r) const {
  Coefficient out;
  if (r.is_zero()) return out;
  for (const auto& [m, w] : terms_) out.terms_[m] = w * r;
  return out;
}

Coefficient Coefficient::abs() const {
  Coefficient out;
  for (const auto& [m, r] : terms_) out.terms_[m] = r.abs();
  return out;
}

int Coefficient::degree_t() const {
  int d = 0;
  for (const auto& [m, r] : terms_) d = std::max(d, m.t_exp);
  return d;
}
int Coefficient::degree_u() const {
  int d = 0;
  for (const auto& [m, r] : terms_) d = std::max(d, m.u_exp);
  return d;
}
int Coefficient::degree_j() const {
  int d = 0;
  for (const auto& [m, r] : terms_) d = std::max(d, m.j_exp);
  return d;
}

double Coefficient::eval(double t, double u, double j) const {
  double total = 0.0;
  for (const auto& [m, r] : terms_)
    total += r.to_double() * std::pow(t, m.t_exp) * std::pow(u, m.u_exp) *
             std::pow(j, m.j_exp);
  return total;
}

std::string Coefficient::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest powers of t first, matching the usual way the bounds are written.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, r] = *it;
    if (!first) os << (r.is_negative() ? " - " : " + ");
    else if (r.is_negative()) os << "-";
    Rational a = r.abs();
    std::string mono = m.str();
    if (mono == "1") os << a.str();
    else if (a == Rational(1)) os << mono;
    else os << a.str() << "*" << mono;
    first = false;
  }
  return os.str();
}

}  // namespace trotterlat
