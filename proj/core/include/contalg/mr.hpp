#ifndef CONTALG_MR_HPP
#define CONTALG_MR_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "contalg/ideal.hpp"
#include "contalg/monoid.hpp"
#include "contalg/ring.hpp"

namespace contalg {

/// Element of the monoid ring R[S]: a sparse map monoid element -> nonzero
/// ring element. The map's lexicographic key order is the canonical term
/// order (ascending degree for R[X]).
struct MRElem {
  RingPtr ring;
  MonoidPtr monoid;
  std::map<MonoidElem, std::uint32_t> terms;

  bool is_zero() const { return terms.empty(); }
  std::size_t term_count() const { return terms.size(); }
  friend bool operator==(const MRElem& a, const MRElem& b) {
    return a.ring.get() == b.ring.get() && a.monoid.get() == b.monoid.get() &&
           a.terms == b.terms;
  }
};

MRElem mr_zero(RingPtr r, MonoidPtr m);
MRElem mr_one(RingPtr r, MonoidPtr m);
MRElem mr_term(RingPtr r, MonoidPtr m, std::uint32_t coeff, MonoidElem e);
/// Constant polynomial r.
MRElem mr_const(RingPtr r, MonoidPtr m, std::uint32_t coeff);

MRElem mr_add(const MRElem& f, const MRElem& g);
MRElem mr_neg(const MRElem& f);
MRElem mr_sub(const MRElem& f, const MRElem& g);
/// Convolution product, computed exactly (no truncation).
MRElem mr_mul(const MRElem& f, const MRElem& g);
MRElem mr_scalar_mul(std::uint32_t r, const MRElem& f);

/// c(f): the ideal generated by the coefficients; c(0) = (0).
Ideal content(const MRElem& f);

std::vector<MonoidElem> support(const MRElem& f);

/// Stateless index-based enumeration of every element with support in a
/// fixed monomial window: total degree <= max_degree for free monoids, the
/// whole carrier for table monoids. at(0) is the zero element.
class PolyEnum {
 public:
  PolyEnum(RingPtr r, MonoidPtr m, std::uint32_t max_degree,
           const Limits& limits = limits_from_env());

  std::size_t count() const { return count_; }  // includes the zero element
  MRElem at(std::size_t index) const;
  const std::vector<MonoidElem>& monomials() const { return monomials_; }

 private:
  RingPtr ring_;
  MonoidPtr monoid_;
  std::vector<MonoidElem> monomials_;
  std::size_t count_;
};

}  // namespace contalg

#endif
