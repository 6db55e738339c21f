#include "contalg/checks.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "contalg/format.hpp"

namespace contalg {

namespace {

MonoidPtr free1() {
  static MonoidPtr m = Monoid::free_comm(1);
  return m;
}

/// All coefficients of f lie in the member set of I. Equivalent to
/// c(f) subseteq I when I is an ideal.
bool coeffs_in(const MRElem& f, const ElemSet& members) {
  for (const auto& [e, c] : f.terms)
    if (!members.test(c)) return false;
  return true;
}

std::vector<MRElem> materialize_nonzero(const PolyEnum& en) {
  std::vector<MRElem> polys;
  polys.reserve(en.count() - 1);
  for (std::size_t i = 1; i < en.count(); ++i) polys.push_back(en.at(i));
  return polys;
}

MonoidElem multiple(const Monoid& m, std::uint64_t n, const MonoidElem& s) {
  MonoidElem acc = m.identity();
  for (std::uint64_t i = 0; i < n; ++i) acc = m.op(acc, s);
  return acc;
}

}  // namespace

CheckOutcome CheckOutcome::verified(std::string name, std::uint64_t cases,
                                    std::uint32_t degree, std::string detail) {
  CheckOutcome o;
  o.name = std::move(name);
  o.verdict = Verdict::Verified;
  o.cases = cases;
  o.degree = degree;
  o.detail = std::move(detail);
  return o;
}

CheckOutcome CheckOutcome::refuted(std::string name, std::uint64_t cases,
                                   std::uint32_t degree,
                                   std::vector<MRElem> witness_polys,
                                   std::string detail) {
  CheckOutcome o;
  o.name = std::move(name);
  o.verdict = Verdict::Refuted;
  o.cases = cases;
  o.degree = degree;
  o.detail = std::move(detail);
  o.witness_polys = std::move(witness_polys);
  for (const auto& w : o.witness_polys) o.witness.push_back(poly_to_string(w));
  return o;
}

CheckOutcome CheckOutcome::inconclusive(std::string name, std::string reason,
                                        std::uint32_t degree) {
  CheckOutcome o;
  o.name = std::move(name);
  o.verdict = Verdict::Inconclusive;
  o.detail = std::move(reason);
  o.degree = degree;
  return o;
}

DMResult dm_exponent(const MRElem& f, const MRElem& g, std::uint32_t n_max) {
  if (n_max == 0) n_max = static_cast<std::uint32_t>(g.term_count()) + 1;
  DMResult res;
  res.searched_up_to = n_max;
  Ideal cf = content(f);
  Ideal cg = content(g);
  Ideal cfg = content(mr_mul(f, g));
  for (std::uint32_t n = 1; n <= n_max; ++n) {
    Ideal lhs = ideal_product(ideal_power(cf, n), cg);
    Ideal rhs = ideal_product(ideal_power(cf, n - 1), cfg);
    if (lhs == rhs) {
      res.exponent = n;
      return res;
    }
  }
  return res;
}

CheckOutcome unit_content_check(const RingPtr& r, const MonoidPtr& m,
                                std::uint32_t d, const Limits& limits) {
  PolyEnum en(r, m, d, limits);
  auto polys = materialize_nonzero(en);
  std::vector<char> full(polys.size());
  for (std::size_t i = 0; i < polys.size(); ++i)
    full[i] = content(polys[i]).is_whole();
  std::uint64_t cases = 0;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (!full[i]) continue;
    for (std::size_t j = 0; j < polys.size(); ++j) {
      if (!full[j]) continue;
      ++cases;
      if (!content(mr_mul(polys[i], polys[j])).is_whole())
        return CheckOutcome::refuted("unit_content", cases, d,
                                     {polys[i], polys[j]},
                                     "c(f)=c(g)=R but c(fg)!=R");
    }
  }
  return CheckOutcome::verified("unit_content", cases, d);
}

CheckOutcome weak_content_check(const RingPtr& r, const MonoidPtr& m,
                                std::uint32_t d, const Limits& limits) {
  PolyEnum en(r, m, d, limits);
  auto polys = materialize_nonzero(en);
  std::vector<Ideal> contents;
  contents.reserve(polys.size());
  for (const auto& f : polys) contents.push_back(content(f));
  std::uint64_t cases = 0;
  for (std::size_t i = 0; i < polys.size(); ++i)
    for (std::size_t j = i; j < polys.size(); ++j) {
      ++cases;
      Ideal lhs = ideal_product(contents[i], contents[j]);
      Ideal rad = radical(content(mr_mul(polys[i], polys[j])));
      if (!lhs.subset_of(rad))
        return CheckOutcome::refuted("weak_content", cases, d,
                                     {polys[i], polys[j]},
                                     "c(f)c(g) not within rad(c(fg))");
    }
  return CheckOutcome::verified("weak_content", cases, d);
}

std::optional<MRElem> zero_divisor_oracle(const MRElem& f, std::uint32_t d,
                                          const Limits& limits) {
  PolyEnum en(f.ring, f.monoid, d, limits);
  for (std::size_t i = 1; i < en.count(); ++i) {
    MRElem h = en.at(i);
    if (mr_mul(f, h).is_zero()) return h;
  }
  return std::nullopt;
}

std::optional<std::uint32_t> mccoy_witness(const MRElem& f) {
  const FiniteRing& r = *f.ring;
  for (std::uint32_t s = 0; s < r.order(); ++s) {
    if (s == r.zero()) continue;
    bool kills = true;
    for (const auto& [e, c] : f.terms)
      if (r.mul(s, c) != r.zero()) {
        kills = false;
        break;
      }
    if (kills) return s;
  }
  return std::nullopt;
}

CheckOutcome mccoy_equiv_check(const RingPtr& r, const MonoidPtr& m,
                               std::uint32_t d, const Limits& limits) {
  PolyEnum en(r, m, d, limits);
  auto polys = materialize_nonzero(en);
  std::uint64_t cases = 0;
  for (const auto& f : polys) {
    ++cases;
    bool scalar = mccoy_witness(f).has_value();
    std::optional<MRElem> oracle;
    for (const auto& h : polys)
      if (mr_mul(f, h).is_zero()) {
        oracle = h;
        break;
      }
    if (scalar != oracle.has_value()) {
      std::vector<MRElem> w{f};
      if (oracle) w.push_back(*oracle);
      return CheckOutcome::refuted(
          "mccoy_equiv", cases, d, std::move(w),
          scalar ? "scalar annihilator without polynomial zero-divisor partner"
                 : "polynomial zero-divisor without scalar annihilator");
    }
  }
  return CheckOutcome::verified("mccoy_equiv", cases, d);
}

std::pair<MRElem, MRElem> counterexample_noncancellative(const RingPtr& r,
                                                         const MonoidPtr& m,
                                                         const MonoidElem& s,
                                                         const MonoidElem& t,
                                                         const MonoidElem& u) {
  if (t == u || !(m->op(s, t) == m->op(s, u)))
    throw InvalidParameter(
        "noncancellative counterexample needs s+t = s+u with t != u");
  MRElem f = mr_term(r, m, r->one(), s);
  MRElem g = mr_sub(mr_term(r, m, r->one(), t), mr_term(r, m, r->one(), u));
  if (!mr_mul(f, g).is_zero() || !content(f).is_whole() || !content(g).is_whole())
    throw std::logic_error("noncancellative construction failed to replay");
  return {f, g};
}

TorsionCounterexample counterexample_torsion(const MonoidPtr& m, const RingPtr& r,
                                             const MonoidElem& s,
                                             const MonoidElem& t) {
  if (s == t) throw InvalidParameter("torsion counterexample needs s != t");
  std::uint64_t bound =
      m->kind() == Monoid::Kind::Finite ? std::uint64_t{m->size()} * m->size() : 0;
  if (bound == 0) throw InvalidParameter("free monoid has no torsion pair");
  std::uint32_t k = 0;
  MonoidElem ks = m->identity(), kt = m->identity();
  for (std::uint64_t i = 1; i <= bound; ++i) {
    ks = m->op(ks, s);
    kt = m->op(kt, t);
    if (ks == kt) {
      k = static_cast<std::uint32_t>(i);
      break;
    }
  }
  if (k == 0) throw InvalidParameter("no k with ks = kt within bound");
  TorsionCounterexample out;
  out.k = k;
  out.f = mr_sub(mr_term(r, m, r->one(), s), mr_term(r, m, r->one(), t));
  MRElem g = mr_zero(r, m);
  for (std::uint32_t i = 0; i < k; ++i) {
    MonoidElem e = m->op(multiple(*m, k - i - 1, s), multiple(*m, i, t));
    g = mr_add(g, mr_term(r, m, r->one(), e));
  }
  out.g = g;
  if (out.g.is_zero() || !mr_mul(out.f, out.g).is_zero())
    throw std::logic_error("torsion construction failed to replay");
  return out;
}

bool in_extended_ideal(const MRElem& f, const Ideal& i) {
  return content(f).subset_of(i);
}

CheckOutcome prime_extension_check(const RingPtr& r, const Ideal& p,
                                   std::uint32_t d, const Limits& limits) {
  // The tested implication only depends on coefficients modulo p: shifting
  // a coefficient by a member of p moves fg by an element with coefficients
  // in p. Quantifying over canonical coset representatives is therefore
  // exhaustive over all degree <= d pairs.
  const FiniteRing& ring = *r;
  std::vector<std::uint32_t> rep_of(ring.order());
  std::vector<std::uint32_t> reps;
  for (std::uint32_t a = 0; a < ring.order(); ++a) {
    std::uint32_t rep = a;
    for (std::uint32_t b = 0; b < a; ++b)
      if (p.contains(ring.sub(a, b))) {
        rep = rep_of[b];
        break;
      }
    rep_of[a] = rep;
    if (rep == a) reps.push_back(a);
  }

  auto m = free1();
  const std::size_t nreps = reps.size();
  std::size_t total = 1;
  for (std::uint32_t i = 0; i <= d; ++i) {
    total *= nreps;
    if (total - 1 > limits.poly_enum_cap)
      return CheckOutcome::inconclusive("prime_extension",
                                        "resource limit: coset enumeration", d);
  }
  auto poly_at = [&](std::size_t idx) {
    MRElem f = mr_zero(r, m);
    for (std::uint32_t j = 0; j <= d; ++j) {
      std::uint32_t c = reps[idx % nreps];
      idx /= nreps;
      if (c != ring.zero()) f.terms.emplace(MonoidElem{j}, c);
    }
    return f;
  };
  std::vector<MRElem> polys;
  std::vector<char> outside;  // c(f) not within p
  for (std::size_t i = 1; i < total; ++i) {
    MRElem f = poly_at(i);
    outside.push_back(!coeffs_in(f, p.members));
    polys.push_back(std::move(f));
  }
  std::uint64_t cases = 0;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (!outside[i]) continue;
    for (std::size_t j = i; j < polys.size(); ++j) {
      if (!outside[j]) continue;
      ++cases;
      if (coeffs_in(mr_mul(polys[i], polys[j]), p.members))
        return CheckOutcome::refuted("prime_extension", cases, d,
                                     {polys[i], polys[j]},
                                     "c(f),c(g) outside " + p.describe() +
                                         " but c(fg) inside");
    }
  }
  return CheckOutcome::verified("prime_extension", cases, d,
                                "coset representatives: " +
                                    std::to_string(nreps));
}

CheckOutcome contraction_check(const RingPtr& r, const Ideal& i, std::uint32_t d,
                               const Limits& limits) {
  (void)limits;
  auto m = free1();
  std::uint64_t cases = 0;
  for (std::uint32_t a = 0; a < r->order(); ++a) {
    ++cases;
    MRElem c = mr_const(r, m, a);
    if (in_extended_ideal(c, i) != i.contains(a))
      return CheckOutcome::refuted("contraction", cases, d, {c},
                                   "IB cap R differs from I at " + r->name(a));
  }
  return CheckOutcome::verified("contraction", cases, d);
}

CheckOutcome min_prime_bijection_check(const RingPtr& r, std::uint32_t d,
                                       const Limits& limits) {
  std::vector<Ideal> mins;
  try {
    mins = minimal_primes(*r, limits);
  } catch (const ResourceLimit& e) {
    return CheckOutcome::inconclusive("min_prime_bijection", e.what(), d);
  }
  std::uint64_t cases = 0;
  for (const auto& p : mins) {
    CheckOutcome pe = prime_extension_check(r, p, d, limits);
    cases += pe.cases;
    if (pe.verdict != Verdict::Verified) {
      pe.name = "min_prime_bijection";
      pe.detail = "extension of " + p.describe() + " fails primality: " + pe.detail;
      return pe;
    }
    CheckOutcome co = contraction_check(r, p, d, limits);
    cases += co.cases;
    if (co.verdict != Verdict::Verified) {
      co.name = "min_prime_bijection";
      co.detail = "contraction of " + p.describe() + " fails: " + co.detail;
      return co;
    }
  }
  // Injectivity and restricted minimality over constants.
  for (std::size_t a = 0; a < mins.size(); ++a)
    for (std::size_t b = 0; b < mins.size(); ++b) {
      if (a == b) continue;
      ++cases;
      if (mins[a].subset_of(mins[b]))
        return CheckOutcome::refuted("min_prime_bijection", cases, d, {},
                                     "distinct minimal primes " +
                                         mins[a].describe() + " within " +
                                         mins[b].describe());
    }
  return CheckOutcome::verified("min_prime_bijection", cases, d,
                                "|Min| = " + std::to_string(mins.size()));
}

CheckOutcome ass_extension_check(const RingPtr& r, std::uint32_t d,
                                 const Limits& limits) {
  auto m = free1();
  PolyEnum en(r, m, d, limits);
  std::uint64_t cases = 0;
  // one representative x per associated prime Ann(x)
  std::vector<std::pair<std::uint32_t, Ideal>> reps;
  for (std::uint32_t x = 0; x < r->order(); ++x) {
    if (x == r->zero()) continue;
    Ideal ann = ideal_colon_elem(zero_ideal(*r), x);
    if (!is_prime(ann)) continue;
    bool seen = false;
    for (const auto& [y, p] : reps)
      if (p == ann) seen = true;
    if (!seen) reps.emplace_back(x, ann);
  }
  for (const auto& [x, p] : reps) {
    for (std::size_t i = 0; i < en.count(); ++i) {
      MRElem f = en.at(i);
      ++cases;
      bool annihilated = mr_scalar_mul(x, f).is_zero();
      bool inside = coeffs_in(f, p.members);
      if (annihilated != inside)
        return CheckOutcome::refuted(
            "ass_extension", cases, d, {f},
            "Ann(" + r->name(x) + ")B mismatch at x = " + r->name(x));
    }
  }
  return CheckOutcome::verified("ass_extension", cases, d,
                                "|Ass| = " + std::to_string(reps.size()));
}

CheckOutcome zd_cover_check(const RingPtr& r, std::uint32_t d, CoverMode mode,
                            const Limits& limits) {
  const char* nm = mode == CoverMode::Ass ? "zd_cover_ass" : "zd_cover_min";
  ElemSet z = zero_divisors(*r);
  std::vector<Ideal> family;
  try {
    family = mode == CoverMode::Ass ? associated_primes(*r)
                                    : minimal_primes(*r, limits);
  } catch (const ResourceLimit& e) {
    return CheckOutcome::inconclusive(nm, e.what(), d);
  }
  std::erase_if(family,
                [&](const Ideal& p) { return !p.members.subset_of(z); });
  ElemSet u(r->order());
  for (const auto& p : family) u |= p.members;
  if (!(u == z))
    return CheckOutcome::inconclusive(
        nm, "hypothesis unmet: Z(R) not covered by the chosen prime family", d);

  auto m = free1();
  PolyEnum en(r, m, d, limits);
  auto polys = materialize_nonzero(en);
  std::uint64_t cases = 0;
  for (const auto& f : polys) {
    ++cases;
    bool zd = mccoy_witness(f).has_value();
    bool covered = false;
    for (const auto& p : family)
      if (coeffs_in(f, p.members)) {
        covered = true;
        break;
      }
    if (zd != covered)
      return CheckOutcome::refuted(
          nm, cases, d, {f},
          zd ? "zero-divisor polynomial outside every extended prime"
             : "extended-prime member that is not a zero-divisor");
  }
  // Irredundance transfer: containment of extensions at truncation matches
  // containment of the base primes, both directions.
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = 0; j < family.size(); ++j) {
      if (i == j) continue;
      bool ext_contained = true;
      for (const auto& f : polys) {
        ++cases;
        if (coeffs_in(f, family[i].members) &&
            !coeffs_in(f, family[j].members)) {
          ext_contained = false;
          break;
        }
      }
      if (ext_contained != family[i].subset_of(family[j]))
        return CheckOutcome::refuted(nm, cases, d, {},
                                     "extension containment differs from base "
                                     "containment for " +
                                         family[i].describe() + ", " +
                                         family[j].describe());
    }
  // inclusion-maximal members = the truncated zd count
  std::size_t maximal = 0;
  for (std::size_t i = 0; i < family.size(); ++i) {
    bool max = true;
    for (std::size_t j = 0; j < family.size(); ++j)
      if (i != j && family[i].subset_of(family[j])) max = false;
    if (max) ++maximal;
  }
  return CheckOutcome::verified(nm, cases, d,
                                "cover size = " + std::to_string(family.size()) +
                                    ", zd count = " + std::to_string(maximal));
}

CheckOutcome regular_content_check(const RingPtr& r, std::uint32_t d,
                                   const Limits& limits) {
  ElemSet z = zero_divisors(*r);
  auto m = free1();
  PolyEnum en(r, m, d, limits);
  std::uint64_t cases = 0;
  for (std::size_t i = 1; i < en.count(); ++i) {
    MRElem f = en.at(i);
    ++cases;
    bool regular = !mccoy_witness(f).has_value();
    bool content_regular = !content(f).members.subset_of(z);
    if (regular != content_regular)
      return CheckOutcome::refuted(
          "regular_content", cases, d, {f},
          regular ? "regular element with c(f) inside Z(R)"
                  : "zero-divisor with regular content");
  }
  return CheckOutcome::verified("regular_content", cases, d);
}

CheckOutcome nil_extension_check(const RingPtr& r, std::uint32_t d,
                                 const Limits& limits) {
  Ideal nil = nilradical(*r);
  auto m = free1();
  PolyEnum en(r, m, d, limits);
  std::uint64_t cases = 0;
  for (std::size_t i = 1; i < en.count(); ++i) {
    MRElem f = en.at(i);
    ++cases;
    bool nilpotent = false;
    MRElem g = f;
    for (std::uint32_t k = 2; k <= r->order() + 1; ++k) {
      g = mr_mul(g, f);
      if (g.is_zero()) {
        nilpotent = true;
        break;
      }
    }
    bool inside = coeffs_in(f, nil.members);
    if (nilpotent != inside)
      return CheckOutcome::refuted(
          "nil_extension", cases, d, {f},
          nilpotent ? "nilpotent polynomial with c(f) outside Nil(R)"
                    : "c(f) within Nil(R) but no vanishing power");
  }
  return CheckOutcome::verified("nil_extension", cases, d);
}

CheckOutcome zpow_check(const RingPtr& r, std::uint32_t d, const Limits& limits) {
  ElemSet z = zero_divisors(*r);
  // least n with every n-fold product of zero-divisors equal to 0
  auto zv = z.to_indices();
  std::optional<std::uint32_t> n;
  {
    ElemSet cur = z;
    for (std::uint32_t k = 1; k <= r->order() + 1; ++k) {
      bool only_zero = true;
      cur.for_each([&](std::uint32_t e) {
        if (e != r->zero()) only_zero = false;
      });
      if (zv.empty() || only_zero) {
        n = k;
        break;
      }
      ElemSet next(r->order());
      cur.for_each([&](std::uint32_t a) {
        for (auto b : zv) next.set(r->mul(a, b));
      });
      cur = next;
    }
  }
  if (!n)
    return CheckOutcome::inconclusive(
        "zpow", "no n with Z(R)^n = (0) within the order bound", d);

  auto m = free1();
  PolyEnum en(r, m, d, limits);
  std::vector<MRElem> zd_polys;
  for (std::size_t i = 1; i < en.count(); ++i) {
    MRElem f = en.at(i);
    if (mccoy_witness(f)) zd_polys.push_back(std::move(f));
  }
  std::uint64_t cases = 0;
  std::vector<MRElem> bad;
  const std::uint32_t depth = *n;

  double est = 1;
  for (std::uint32_t i = 0; i < depth; ++i) est *= static_cast<double>(zd_polys.size());
  bool exhaustive = est <= static_cast<double>(limits.zpow_case_cap);
  std::string mode_note;
  if (exhaustive) {
    // depth-first with partial-product pruning: a zero prefix product stays zero
    std::vector<std::size_t> pick(depth, 0);
    std::function<bool(std::uint32_t, const MRElem&)> rec =
        [&](std::uint32_t level, const MRElem& acc) -> bool {
      if (acc.is_zero()) return true;
      if (level == depth) {
        for (std::uint32_t l = 0; l < depth; ++l) bad.push_back(zd_polys[pick[l]]);
        return false;
      }
      for (std::size_t i = 0; i < zd_polys.size(); ++i) {
        pick[level] = i;
        ++cases;
        if (!rec(level + 1, mr_mul(acc, zd_polys[i]))) return false;
      }
      return true;
    };
    if (!zd_polys.empty() && !rec(0, mr_one(r, m)))
      return CheckOutcome::refuted("zpow", cases, d, std::move(bad),
                                   "nonzero product of " + std::to_string(depth) +
                                       " zero-divisor polynomials");
    mode_note = "exhaustive";
  } else {
    std::mt19937_64 rng(limits.seed);
    std::uniform_int_distribution<std::size_t> dist(0, zd_polys.size() - 1);
    for (std::size_t trial = 0; trial < limits.zpow_case_cap / depth; ++trial) {
      MRElem acc = mr_one(r, m);
      std::vector<std::size_t> picks(depth);
      for (std::uint32_t l = 0; l < depth; ++l) {
        picks[l] = dist(rng);
        acc = mr_mul(acc, zd_polys[picks[l]]);
      }
      ++cases;
      if (!acc.is_zero()) {
        for (auto pi : picks) bad.push_back(zd_polys[pi]);
        return CheckOutcome::refuted("zpow", cases, d, std::move(bad),
                                     "nonzero sampled product (seed " +
                                         std::to_string(limits.seed) + ")");
      }
    }
    mode_note = "stratified sampling, seed " + std::to_string(limits.seed);
  }
  return CheckOutcome::verified("zpow", cases, d,
                                "n = " + std::to_string(depth) + ", " + mode_note);
}

CheckOutcome prime_to_check(const RingPtr& r, const Ideal& i, std::uint32_t d,
                            const Limits& limits) {
  auto m = free1();
  PolyEnum en(r, m, d, limits);
  auto oracle_side = [&](const MRElem& f, std::uint32_t dd) {
    PolyEnum gen(r, m, dd, limits);
    for (std::size_t gi = 0; gi < gen.count(); ++gi) {
      MRElem g = gen.at(gi);
      if (coeffs_in(g, i.members)) continue;  // g in IB
      if (coeffs_in(mr_mul(f, g), i.members)) return true;
    }
    return false;
  };
  auto scalar_side = [&](const MRElem& f) {
    for (std::uint32_t e = 0; e < r->order(); ++e) {
      if (i.contains(e)) continue;
      if (coeffs_in(mr_scalar_mul(e, f), i.members)) return true;
    }
    return false;
  };
  std::uint64_t cases = 0;
  bool escalated = false;
  for (std::size_t fi = 0; fi < en.count(); ++fi) {
    MRElem f = en.at(fi);
    ++cases;
    bool lhs = oracle_side(f, d);
    bool rhs = scalar_side(f);
    if (lhs != rhs) {
      // The degree-bounded oracle may miss a high-degree g; retry once at d+1.
      escalated = true;
      lhs = oracle_side(f, d + 1);
      if (lhs != rhs)
        return CheckOutcome::refuted(
            "prime_to", cases, d, {f},
            std::string(lhs ? "not prime to IB without scalar route"
                            : "scalar route without degree-bounded g") +
                " (after escalation to d+1); I = " + i.describe());
    }
  }
  return CheckOutcome::verified(
      "prime_to", cases, d,
      std::string("I = ") + i.describe() +
          (escalated ? "; degree escalation used, residual high-degree risk"
                     : ""));
}

CheckOutcome primal_extension_check(const RingPtr& r, std::uint32_t d,
                                    const Limits& limits) {
  PrimalityResult pr = primality(*r);
  if (!pr.primal)
    return CheckOutcome::inconclusive("primal_extension",
                                      "hypothesis unmet: not primal", d);
  bool prop_a;
  try {
    prop_a = has_property_A(*r, limits);
  } catch (const ResourceLimit& e) {
    return CheckOutcome::inconclusive("primal_extension", e.what(), d);
  }
  if (!prop_a)
    return CheckOutcome::inconclusive("primal_extension",
                                      "hypothesis unmet: no Property (A)", d);
  ElemSet z = zero_divisors(*r);
  auto m = free1();
  PolyEnum en(r, m, d, limits);
  std::uint64_t cases = 0;
  std::vector<MRElem> zd_polys;
  for (std::size_t i = 1; i < en.count(); ++i) {
    MRElem f = en.at(i);
    ++cases;
    bool zd = mccoy_witness(f).has_value();
    bool inside = coeffs_in(f, z);
    if (zd != inside)
      return CheckOutcome::refuted("primal_extension", cases, d, {f},
                                   zd ? "Z(B) member outside Z(R)B"
                                      : "Z(R)B member that is regular");
    if (zd) zd_polys.push_back(std::move(f));
  }
  for (std::size_t a = 0; a < zd_polys.size(); ++a)
    for (std::size_t b = a; b < zd_polys.size(); ++b) {
      ++cases;
      MRElem s = mr_add(zd_polys[a], zd_polys[b]);
      if (!s.is_zero() && !mccoy_witness(s))
        return CheckOutcome::refuted("primal_extension", cases, d,
                                     {zd_polys[a], zd_polys[b]},
                                     "truncated Z(B) not additively closed");
    }
  return CheckOutcome::verified("primal_extension", cases, d);
}

CheckOutcome tq_triviality_check(const RingPtr& r) {
  UnitsRegulars ur = units_and_regulars(*r);
  if (ur.units == ur.regulars)
    return CheckOutcome::verified("tq_triviality", r->order(), 0,
                                  "degenerate: regular = unit, T(R) = R");
  // unreachable on finite rings
  std::uint32_t bad = 0;
  ur.regulars.for_each([&](std::uint32_t e) {
    if (!ur.units.test(e)) bad = e;
  });
  CheckOutcome o = CheckOutcome::refuted("tq_triviality", r->order(), 0, {},
                                         "regular non-unit " + r->name(bad));
  return o;
}

}  // namespace contalg
