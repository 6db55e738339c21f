#ifndef CONTALG_IDEAL_HPP
#define CONTALG_IDEAL_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "contalg/common.hpp"
#include "contalg/elemset.hpp"
#include "contalg/ring.hpp"

namespace contalg {

/// An ideal of a finite ring, stored as a bitset over element indices.
struct Ideal {
  const FiniteRing* ring = nullptr;
  ElemSet members;

  bool contains(std::uint32_t i) const { return members.test(i); }
  std::size_t size() const { return members.count(); }
  bool is_zero() const { return size() == 1; }
  bool is_whole() const { return size() == ring->order(); }
  bool subset_of(const Ideal& o) const { return members.subset_of(o.members); }
  friend bool operator==(const Ideal& a, const Ideal& b) {
    return a.ring == b.ring && a.members == b.members;
  }
  /// Generator names, comma separated; for report text.
  std::string describe() const;
};

Ideal zero_ideal(const FiniteRing& r);
Ideal whole_ring(const FiniteRing& r);

/// Least ideal containing gens: closure fixpoint under + and ambient *.
Ideal ideal_generated(const FiniteRing& r, const std::vector<std::uint32_t>& gens);
Ideal ideal_generated(const FiniteRing& r, const ElemSet& gens);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_power(const Ideal& a, std::uint32_t k);  // k = 0 gives the whole ring
Ideal ideal_intersection(const Ideal& a, const Ideal& b);
/// I : J = { r : rJ subseteq I }
Ideal ideal_colon(const Ideal& i, const Ideal& j);
Ideal ideal_colon_elem(const Ideal& i, std::uint32_t r);
Ideal annihilator(const Ideal& i);
/// { r : r^t in I for some 1 <= t <= order }
Ideal radical(const Ideal& i);
Ideal nilradical(const FiniteRing& r);

/// All ideals, sorted by (cardinality, bitset value).
std::vector<Ideal> enumerate_ideals(const FiniteRing& r,
                                    const Limits& limits = limits_from_env());

bool is_prime(const Ideal& i);
bool is_maximal(const Ideal& i);

std::vector<Ideal> minimal_primes(const FiniteRing& r,
                                  const Limits& limits = limits_from_env());
/// Prime annihilators of nonzero elements, duplicate-free.
std::vector<Ideal> associated_primes(const FiniteRing& r);

bool has_property_A(const FiniteRing& r, const Limits& limits = limits_from_env());

/// Maximal primes inside Z(R) together with their count; nullopt when their
/// union misses Z(R) (never happens for a finite ring).
struct ZdDegree {
  std::uint32_t degree = 0;
  std::vector<Ideal> maximal_primes;
};
std::optional<ZdDegree> zd_degree(const FiniteRing& r,
                                  const Limits& limits = limits_from_env());

/// Z(R) covered by the Ass primes it contains.
bool very_few_zd(const FiniteRing& r);

/// S(I): elements not prime to I, i.e. r with I:(r) != I.
ElemSet s_of_ideal(const Ideal& i);
bool is_primal_ideal(const Ideal& i);

struct PrimalityResult {
  bool primal = false;
  /// When not primal: a,b in Z(R) with a+b a non-zero-divisor.
  std::optional<std::pair<std::uint32_t, std::uint32_t>> closure_witness;
};
PrimalityResult primality(const FiniteRing& r);
bool is_primal(const FiniteRing& r);

/// Least index i with I subseteq primes[i], or nullopt.
std::optional<std::size_t> prime_cover_locate(const Ideal& i,
                                              std::span<const Ideal> primes);

}  // namespace contalg

#endif
