#include "contalg/format.hpp"

namespace contalg {

namespace {

bool plain_number(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

std::string monomial_part(const Monoid& m, const MonoidElem& e) {
  if (m.kind() == Monoid::Kind::Finite) return "X^" + m.elem_name(e);
  if (m.arity() == 1)
    return e[0] == 1 ? "X" : "X^" + std::to_string(e[0]);
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += "X" + std::to_string(i + 1);
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s;
}

bool is_identity(const Monoid& m, const MonoidElem& e) {
  return e == m.identity();
}

}  // namespace

std::string coeff_token(const FiniteRing& r, std::uint32_t elem) {
  const std::string& n = r.name(elem);
  return plain_number(n) ? n : "(" + n + ")";
}

std::string poly_to_string(const MRElem& f) {
  if (f.is_zero()) return "0";
  std::string s;
  for (auto it = f.terms.rbegin(); it != f.terms.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!s.empty()) s += "+";
    if (is_identity(*f.monoid, e)) {
      s += coeff_token(*f.ring, c);
    } else {
      std::string mon = monomial_part(*f.monoid, e);
      if (c == f.ring->one())
        s += mon;
      else
        s += coeff_token(*f.ring, c) + "*" + mon;
    }
  }
  return s;
}

}  // namespace contalg
