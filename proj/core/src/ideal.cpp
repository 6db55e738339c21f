#include "contalg/ideal.hpp"

#include <algorithm>
#include <set>

namespace contalg {

namespace {

struct SetOrder {
  bool operator()(const ElemSet& a, const ElemSet& b) const {
    return a.ordered_before(b);
  }
};

void require_same_ring(const Ideal& a, const Ideal& b) {
  if (a.ring != b.ring)
    throw InvalidParameter("ideal operands have different ambient rings");
}

}  // namespace

std::string Ideal::describe() const {
  // Greedy generating set: smallest-index elements that grow the span.
  Ideal span = zero_ideal(*ring);
  std::vector<std::uint32_t> gens;
  members.for_each([&](std::uint32_t i) {
    if (!span.contains(i)) {
      gens.push_back(i);
      std::vector<std::uint32_t> g = gens;
      span = ideal_generated(*ring, g);
    }
  });
  std::string s = "(";
  if (gens.empty()) {
    s += ring->name(ring->zero());
  } else {
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (i) s += ",";
      s += ring->name(gens[i]);
    }
  }
  return s + ")";
}

Ideal zero_ideal(const FiniteRing& r) {
  Ideal i{&r, ElemSet(r.order())};
  i.members.set(r.zero());
  return i;
}

Ideal whole_ring(const FiniteRing& r) {
  Ideal i{&r, ElemSet(r.order())};
  for (std::uint32_t e = 0; e < r.order(); ++e) i.members.set(e);
  return i;
}

Ideal ideal_generated(const FiniteRing& r, const ElemSet& gens) {
  return ideal_generated(r, gens.to_indices());
}

Ideal ideal_generated(const FiniteRing& r,
                      const std::vector<std::uint32_t>& gens) {
  const std::uint32_t n = r.order();
  Ideal out{&r, ElemSet(n)};
  std::vector<std::uint32_t> memv, work;
  auto push = [&](std::uint32_t x) {
    if (!out.members.test(x)) {
      out.members.set(x);
      memv.push_back(x);
      work.push_back(x);
    }
  };
  push(r.zero());
  for (auto g : gens) push(g);
  while (!work.empty()) {
    std::uint32_t x = work.back();
    work.pop_back();
    for (std::uint32_t e = 0; e < n; ++e) push(r.mul(x, e));
    // memv may grow during iteration; index loop keeps it safe
    for (std::size_t i = 0; i < memv.size(); ++i) push(r.add(x, memv[i]));
  }
  return out;
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  const FiniteRing& r = *a.ring;
  Ideal out{&r, ElemSet(r.order())};
  auto av = a.members.to_indices();
  auto bv = b.members.to_indices();
  for (auto x : av)
    for (auto y : bv) out.members.set(r.add(x, y));
  return out;
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  const FiniteRing& r = *a.ring;
  ElemSet prods(r.order());
  auto av = a.members.to_indices();
  auto bv = b.members.to_indices();
  for (auto x : av)
    for (auto y : bv) prods.set(r.mul(x, y));
  return ideal_generated(r, prods);
}

Ideal ideal_power(const Ideal& a, std::uint32_t k) {
  if (k == 0) return whole_ring(*a.ring);
  Ideal out = a;
  for (std::uint32_t i = 1; i < k; ++i) out = ideal_product(out, a);
  return out;
}

Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  Ideal out = a;
  out.members &= b.members;
  return out;
}

Ideal ideal_colon(const Ideal& i, const Ideal& j) {
  require_same_ring(i, j);
  const FiniteRing& r = *i.ring;
  Ideal out{&r, ElemSet(r.order())};
  auto jv = j.members.to_indices();
  for (std::uint32_t c = 0; c < r.order(); ++c) {
    bool all = true;
    for (auto y : jv)
      if (!i.contains(r.mul(c, y))) {
        all = false;
        break;
      }
    if (all) out.members.set(c);
  }
  return out;
}

Ideal ideal_colon_elem(const Ideal& i, std::uint32_t e) {
  const FiniteRing& r = *i.ring;
  Ideal out{&r, ElemSet(r.order())};
  for (std::uint32_t c = 0; c < r.order(); ++c)
    if (i.contains(r.mul(c, e))) out.members.set(c);
  return out;
}

Ideal annihilator(const Ideal& i) { return ideal_colon(zero_ideal(*i.ring), i); }

Ideal radical(const Ideal& i) {
  const FiniteRing& r = *i.ring;
  Ideal out{&r, ElemSet(r.order())};
  for (std::uint32_t e = 0; e < r.order(); ++e) {
    std::uint32_t p = e;
    for (std::uint32_t t = 1; t <= r.order(); ++t) {
      if (i.contains(p)) {
        out.members.set(e);
        break;
      }
      p = r.mul(p, e);
    }
  }
  return out;
}

Ideal nilradical(const FiniteRing& r) { return radical(zero_ideal(r)); }

std::vector<Ideal> enumerate_ideals(const FiniteRing& r, const Limits& limits) {
  if (r.order() > limits.ideal_enum_cap)
    throw ResourceLimit("ideal enumeration cap exceeded");
  std::vector<ElemSet> principals;
  std::set<ElemSet, SetOrder> seen;
  for (std::uint32_t e = 0; e < r.order(); ++e) {
    Ideal p = ideal_generated(r, std::vector<std::uint32_t>{e});
    if (seen.insert(p.members).second) principals.push_back(p.members);
  }
  // Closure of principal ideals under pairwise sums.
  std::vector<ElemSet> work(seen.begin(), seen.end());
  while (!work.empty()) {
    ElemSet cur = work.back();
    work.pop_back();
    for (const auto& p : principals) {
      Ideal s = ideal_sum(Ideal{&r, cur}, Ideal{&r, p});
      if (seen.insert(s.members).second) work.push_back(s.members);
    }
  }
  std::vector<Ideal> out;
  for (const auto& m : seen) out.push_back(Ideal{&r, m});
  return out;
}

bool is_prime(const Ideal& i) {
  const FiniteRing& r = *i.ring;
  if (i.is_whole()) return false;
  for (std::uint32_t a = 0; a < r.order(); ++a) {
    if (i.contains(a)) continue;
    for (std::uint32_t b = a; b < r.order(); ++b) {
      if (i.contains(b)) continue;
      if (i.contains(r.mul(a, b))) return false;
    }
  }
  return true;
}

bool is_maximal(const Ideal& i) {
  const FiniteRing& r = *i.ring;
  if (i.is_whole()) return false;
  for (std::uint32_t x = 0; x < r.order(); ++x) {
    if (i.contains(x)) continue;
    std::vector<std::uint32_t> gens = i.members.to_indices();
    gens.push_back(x);
    if (!ideal_generated(r, gens).is_whole()) return false;
  }
  return true;
}

std::vector<Ideal> minimal_primes(const FiniteRing& r, const Limits& limits) {
  std::vector<Ideal> primes;
  for (const auto& i : enumerate_ideals(r, limits))
    if (is_prime(i)) primes.push_back(i);
  std::vector<Ideal> mins;
  for (const auto& p : primes) {
    bool minimal = true;
    for (const auto& q : primes)
      if (!(q == p) && q.subset_of(p)) {
        minimal = false;
        break;
      }
    if (minimal) mins.push_back(p);
  }
  return mins;
}

std::vector<Ideal> associated_primes(const FiniteRing& r) {
  std::set<ElemSet, SetOrder> seen;
  for (std::uint32_t x = 0; x < r.order(); ++x) {
    if (x == r.zero()) continue;
    Ideal ann = ideal_colon_elem(zero_ideal(r), x);
    if (is_prime(ann)) seen.insert(ann.members);
  }
  std::vector<Ideal> out;
  for (const auto& m : seen) out.push_back(Ideal{&r, m});
  return out;
}

bool has_property_A(const FiniteRing& r, const Limits& limits) {
  ElemSet z = zero_divisors(r);
  for (const auto& i : enumerate_ideals(r, limits)) {
    if (!i.members.subset_of(z)) continue;
    Ideal ann = annihilator(i);
    if (ann.size() <= 1) return false;
  }
  return true;
}

std::optional<ZdDegree> zd_degree(const FiniteRing& r, const Limits& limits) {
  if (r.order() == 1) return ZdDegree{0, {}};
  ElemSet z = zero_divisors(r);
  std::vector<Ideal> inside;
  for (const auto& i : enumerate_ideals(r, limits))
    if (is_prime(i) && i.members.subset_of(z)) inside.push_back(i);
  std::vector<Ideal> maximal;
  for (const auto& p : inside) {
    bool max = true;
    for (const auto& q : inside)
      if (!(q == p) && p.subset_of(q)) {
        max = false;
        break;
      }
    if (max) maximal.push_back(p);
  }
  ElemSet u(r.order());
  for (const auto& p : maximal) u |= p.members;
  if (!(u == z)) return std::nullopt;
  return ZdDegree{static_cast<std::uint32_t>(maximal.size()), maximal};
}

bool very_few_zd(const FiniteRing& r) {
  ElemSet z = zero_divisors(r);
  ElemSet u(r.order());
  for (const auto& p : associated_primes(r))
    if (p.members.subset_of(z)) u |= p.members;
  return u == z;
}

ElemSet s_of_ideal(const Ideal& i) {
  const FiniteRing& r = *i.ring;
  ElemSet s(r.order());
  for (std::uint32_t e = 0; e < r.order(); ++e)
    if (!(ideal_colon_elem(i, e) == i)) s.set(e);
  return s;
}

bool is_primal_ideal(const Ideal& i) {
  const FiniteRing& r = *i.ring;
  ElemSet s = s_of_ideal(i);
  if (!s.test(r.zero())) return false;
  auto sv = s.to_indices();
  for (auto a : sv) {
    for (auto b : sv)
      if (!s.test(r.add(a, b))) return false;
    for (std::uint32_t e = 0; e < r.order(); ++e)
      if (!s.test(r.mul(a, e))) return false;
  }
  return true;
}

PrimalityResult primality(const FiniteRing& r) {
  PrimalityResult res;
  ElemSet z = zero_divisors(r);
  if (!z.test(r.zero()) && r.order() > 1) {
    res.primal = false;  // cannot happen: 0 is a zero-divisor when order > 1
    return res;
  }
  if (r.order() == 1) return res;  // zero ring: Z empty, not an ideal
  auto zv = z.to_indices();
  for (auto a : zv)
    for (auto b : zv)
      if (!z.test(r.add(a, b))) {
        res.closure_witness = {a, b};
        return res;
      }
  res.primal = true;
  // When Z(R) is an ideal it must be prime.
  Ideal zi{&r, z};
  if (!is_prime(zi))
    throw std::logic_error("primal ring with non-prime Z(R)");
  return res;
}

bool is_primal(const FiniteRing& r) { return primality(r).primal; }

std::optional<std::size_t> prime_cover_locate(const Ideal& i,
                                              std::span<const Ideal> primes) {
  for (std::size_t k = 0; k < primes.size(); ++k)
    if (i.subset_of(primes[k])) return k;
  return std::nullopt;
}

}  // namespace contalg
