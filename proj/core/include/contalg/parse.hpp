#ifndef CONTALG_PARSE_HPP
#define CONTALG_PARSE_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "contalg/common.hpp"
#include "contalg/monoid.hpp"
#include "contalg/mr.hpp"
#include "contalg/ring.hpp"

namespace contalg {

/// Ring expression AST. Grammar (whitespace insensitive, product
/// left-associative, "x" or the multiplication sign as separator):
///   ringexpr := atom { ("x" | "×") atom }
///   atom     := "Z" nat
///             | "Z" nat "[" var "]" "/(" upoly ")"
///             | "Z" nat "[" var {"," var} "]@" nat ["/(" monomial {"," monomial} ")"]
///             | "(" ringexpr ")"
struct RingExpr {
  RingKind kind = RingKind::Zn;
  std::uint32_t n = 0;  // modulus for the scalar part
  // UnivarQuot
  std::string var;
  std::vector<std::uint32_t> monic;  // ascending, leading coefficient 1
  // TruncLocal
  std::vector<std::string> vars;
  std::uint32_t trunc = 0;
  std::vector<std::vector<std::uint32_t>> extra;
  // Product
  std::shared_ptr<RingExpr> left, right;

  friend bool operator==(const RingExpr& a, const RingExpr& b);
};

RingExpr parse_ring_expr(const std::string& text);
/// Canonical text; parse_ring_expr(print_ring_expr(e)) == e.
std::string print_ring_expr(const RingExpr& e);
RingPtr build_ring(const RingExpr& e, const Limits& limits = limits_from_env());
/// parse + build in one step.
RingPtr ring_from_text(const std::string& text,
                       const Limits& limits = limits_from_env());

/// Polynomial literal over R[monoid]: term {"+" term},
/// term := coeff ["*" monomial] | monomial, coeff := digits or a
/// parenthesized ring-element name. Monomials: "X"/"X^e" (one free
/// variable), "X1^2*X3" (several), "X^name" (table monoid).
/// m == nullptr picks the one-variable free monoid.
MRElem parse_poly_literal(const std::string& text, const RingPtr& r,
                          MonoidPtr m = nullptr);

/// Ring element literal: canonical name, optionally parenthesized.
std::uint32_t parse_element(const std::string& text, const FiniteRing& r);

}  // namespace contalg

#endif
