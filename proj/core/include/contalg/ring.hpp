#ifndef CONTALG_RING_HPP
#define CONTALG_RING_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "contalg/common.hpp"
#include "contalg/elemset.hpp"

namespace contalg {

enum class RingKind { Zn, UnivarQuot, TruncLocal, Product };

/// Records how a ring was built, including the canonical expression text
/// that reparses to the same ring.
struct Construction {
  RingKind kind;
  std::string text;
};

/// A finite commutative ring with identity, given by full operation tables.
/// Immutable after construction; safe to share across threads.
class FiniteRing {
 public:
  FiniteRing(std::uint32_t order, std::vector<std::uint32_t> add_table,
             std::vector<std::uint32_t> mul_table, std::uint32_t zero,
             std::uint32_t one, std::vector<std::string> names,
             Construction construction);

  std::uint32_t order() const { return order_; }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    return add_[std::size_t{a} * order_ + b];
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return mul_[std::size_t{a} * order_ + b];
  }
  std::uint32_t neg(std::uint32_t a) const { return neg_[a]; }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return add(a, neg(b));
  }
  std::uint32_t zero() const { return zero_; }
  std::uint32_t one() const { return one_; }

  const std::string& name(std::uint32_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  /// Element-literal lookup; names are canonical and unique.
  std::optional<std::uint32_t> index_of(const std::string& name) const;

  const Construction& construction() const { return construction_; }

 private:
  std::uint32_t order_;
  std::vector<std::uint32_t> add_, mul_;
  std::uint32_t zero_, one_;
  std::vector<std::string> names_;
  std::vector<std::uint32_t> neg_;
  Construction construction_;
  std::unordered_map<std::string, std::uint32_t> name_index_;
};

using RingPtr = std::shared_ptr<const FiniteRing>;

RingPtr make_zn(std::uint32_t n);

/// Z_n[var]/(f) with f monic given by ascending coefficients
/// (f = coeffs[0] + coeffs[1]*var + ... + var^deg, coeffs.back() == 1).
RingPtr make_univariate_quotient(std::uint32_t n, const std::string& var,
                                 const std::vector<std::uint32_t>& monic_coeffs);

/// Z_n[vars]/((vars)^m + extra monomial relations). Each extra relation is an
/// exponent vector over vars; any monomial it divides is killed.
RingPtr make_trunc_local(std::uint32_t n, const std::vector<std::string>& vars,
                         std::uint32_t trunc_degree,
                         const std::vector<std::vector<std::uint32_t>>& extra,
                         const Limits& limits = limits_from_env());

RingPtr make_product(const RingPtr& a, const RingPtr& b,
                     const Limits& limits = limits_from_env());

/// Wraps raw tables without validating them; check_axioms is the validator.
RingPtr make_from_tables(std::uint32_t order, std::vector<std::uint32_t> add_table,
                         std::vector<std::uint32_t> mul_table, std::uint32_t zero,
                         std::uint32_t one, std::vector<std::string> names,
                         Construction construction);

/// Exhaustive O(order^3) axiom check; failures carry witness elements.
struct AxiomReport {
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};
AxiomReport check_axioms(const FiniteRing& r);

/// Z(R): elements with a nonzero annihilating partner. Includes 0 whenever
/// order > 1; the zero ring gets the empty-set convention.
ElemSet zero_divisors(const FiniteRing& r);

struct UnitsRegulars {
  ElemSet units;
  ElemSet regulars;
};
UnitsRegulars units_and_regulars(const FiniteRing& r);

}  // namespace contalg

#endif
