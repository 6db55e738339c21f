#include "contalg/ring.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace contalg {

namespace {

std::string env_or_default_note() { return {}; }

std::uint64_t checked_pow(std::uint64_t base, std::uint32_t exp,
                          std::uint64_t cap) {
  std::uint64_t v = 1;
  for (std::uint32_t i = 0; i < exp; ++i) {
    v *= base;
    if (v > cap) throw ResourceLimit("ring order cap exceeded");
  }
  return v;
}

// Canonical univariate polynomial name, descending degree: "y^2+y+1".
std::string poly_name(const std::vector<std::uint32_t>& coeffs,
                      const std::string& var) {
  std::string s;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    std::uint32_t c = coeffs[i];
    if (c == 0) continue;
    if (!s.empty()) s += "+";
    if (i == 0) {
      s += std::to_string(c);
    } else {
      if (c != 1) s += std::to_string(c);
      s += var;
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s.empty() ? "0" : s;
}

std::string monomial_name(const std::vector<std::uint32_t>& exps,
                          const std::vector<std::string>& vars) {
  std::string s;
  for (std::size_t v = 0; v < exps.size(); ++v) {
    if (exps[v] == 0) continue;
    if (!s.empty()) s += "*";
    s += vars[v];
    if (exps[v] > 1) s += "^" + std::to_string(exps[v]);
  }
  return s;  // empty means the monomial 1
}

}  // namespace

Limits limits_from_env() {
  Limits l;
  if (const char* cap = std::getenv("CONTALG_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(cap, &end, 10);
    if (end && *end == '\0' && v > 0) {
      l.order_cap = static_cast<std::size_t>(v);
      l.vertex_cap = static_cast<std::size_t>(v);
    }
  }
  return l;
}

FiniteRing::FiniteRing(std::uint32_t order, std::vector<std::uint32_t> add_table,
                       std::vector<std::uint32_t> mul_table, std::uint32_t zero,
                       std::uint32_t one, std::vector<std::string> names,
                       Construction construction)
    : order_(order),
      add_(std::move(add_table)),
      mul_(std::move(mul_table)),
      zero_(zero),
      one_(one),
      names_(std::move(names)),
      construction_(std::move(construction)) {
  if (order_ == 0) throw InvalidParameter("ring order must be >= 1");
  if (add_.size() != std::size_t{order_} * order_ ||
      mul_.size() != std::size_t{order_} * order_)
    throw InvalidParameter("operation table size mismatch");
  if (names_.size() != order_) throw InvalidParameter("name list size mismatch");
  for (std::uint32_t i = 0; i < order_; ++i) {
    auto [it, inserted] = name_index_.emplace(names_[i], i);
    if (!inserted) throw InvalidParameter("duplicate element name: " + names_[i]);
  }
  neg_.assign(order_, 0);
  for (std::uint32_t a = 0; a < order_; ++a) {
    bool found = false;
    for (std::uint32_t b = 0; b < order_; ++b)
      if (add(a, b) == zero_) {
        neg_[a] = b;
        found = true;
        break;
      }
    if (!found) throw InvalidParameter("element without additive inverse");
  }
  (void)env_or_default_note();
}

std::optional<std::uint32_t> FiniteRing::index_of(const std::string& name) const {
  auto it = name_index_.find(name);
  if (it == name_index_.end()) return std::nullopt;
  return it->second;
}

RingPtr make_from_tables(std::uint32_t order, std::vector<std::uint32_t> add_table,
                         std::vector<std::uint32_t> mul_table, std::uint32_t zero,
                         std::uint32_t one, std::vector<std::string> names,
                         Construction construction) {
  return std::make_shared<FiniteRing>(order, std::move(add_table),
                                      std::move(mul_table), zero, one,
                                      std::move(names), std::move(construction));
}

RingPtr make_zn(std::uint32_t n) {
  if (n == 0) throw InvalidParameter("make_zn: n must be >= 1");
  std::vector<std::uint32_t> add(std::size_t{n} * n), mul(std::size_t{n} * n);
  std::vector<std::string> names(n);
  for (std::uint32_t a = 0; a < n; ++a) {
    names[a] = std::to_string(a);
    for (std::uint32_t b = 0; b < n; ++b) {
      add[std::size_t{a} * n + b] = (a + b) % n;
      mul[std::size_t{a} * n + b] =
          static_cast<std::uint32_t>((std::uint64_t{a} * b) % n);
    }
  }
  std::uint32_t one = n == 1 ? 0 : 1;
  return make_from_tables(n, std::move(add), std::move(mul), 0, one,
                          std::move(names),
                          {RingKind::Zn, "Z" + std::to_string(n)});
}

RingPtr make_univariate_quotient(std::uint32_t n, const std::string& var,
                                 const std::vector<std::uint32_t>& monic_coeffs) {
  if (n < 2) throw InvalidParameter("univariate quotient: n must be >= 2");
  if (monic_coeffs.size() < 2)
    throw InvalidParameter("modulus must have degree >= 1");
  if (monic_coeffs.back() % n != 1)
    throw InvalidParameter("modulus must be monic");
  const std::uint32_t deg = static_cast<std::uint32_t>(monic_coeffs.size() - 1);
  const auto order64 = checked_pow(n, deg, limits_from_env().order_cap);
  const std::uint32_t order = static_cast<std::uint32_t>(order64);

  auto decode = [&](std::uint32_t idx) {
    std::vector<std::uint32_t> c(deg);
    for (std::uint32_t i = 0; i < deg; ++i) {
      c[i] = idx % n;
      idx /= n;
    }
    return c;
  };
  auto encode = [&](const std::vector<std::uint32_t>& c) {
    std::uint32_t idx = 0;
    for (std::uint32_t i = deg; i-- > 0;) idx = idx * n + c[i] % n;
    return idx;
  };
  // Reduce mod the monic modulus by synthetic division.
  auto reduce = [&](std::vector<std::uint32_t> c) {
    for (std::size_t i = c.size(); i-- > deg;) {
      std::uint32_t lead = c[i] % n;
      if (lead == 0) continue;
      for (std::uint32_t j = 0; j <= deg; ++j) {
        std::uint64_t sub = std::uint64_t{lead} * monic_coeffs[j] % n;
        std::uint64_t cur = c[i - deg + j] % n;
        c[i - deg + j] = static_cast<std::uint32_t>((cur + n - sub) % n);
      }
    }
    c.resize(deg);
    return c;
  };

  std::vector<std::uint32_t> add(std::size_t{order} * order),
      mul(std::size_t{order} * order);
  std::vector<std::string> names(order);
  for (std::uint32_t a = 0; a < order; ++a) {
    auto ca = decode(a);
    names[a] = poly_name(ca, var);
    for (std::uint32_t b = 0; b < order; ++b) {
      auto cb = decode(b);
      std::vector<std::uint32_t> s(deg);
      for (std::uint32_t i = 0; i < deg; ++i) s[i] = (ca[i] + cb[i]) % n;
      add[std::size_t{a} * order + b] = encode(s);
      std::vector<std::uint32_t> p(2 * deg - 1, 0);
      for (std::uint32_t i = 0; i < deg; ++i)
        for (std::uint32_t j = 0; j < deg; ++j)
          p[i + j] = static_cast<std::uint32_t>(
              (p[i + j] + std::uint64_t{ca[i]} * cb[j]) % n);
      mul[std::size_t{a} * order + b] = encode(reduce(std::move(p)));
    }
  }
  std::vector<std::uint32_t> one_c(deg, 0);
  one_c[0] = 1;
  std::string text =
      "Z" + std::to_string(n) + "[" + var + "]/(" + poly_name(monic_coeffs, var) + ")";
  return make_from_tables(order, std::move(add), std::move(mul), 0,
                          encode(one_c), std::move(names),
                          {RingKind::UnivarQuot, text});
}

RingPtr make_trunc_local(std::uint32_t n, const std::vector<std::string>& vars,
                         std::uint32_t trunc_degree,
                         const std::vector<std::vector<std::uint32_t>>& extra,
                         const Limits& limits) {
  if (n < 2) throw InvalidParameter("trunc local: n must be >= 2");
  if (vars.empty()) throw InvalidParameter("trunc local: need >= 1 variable");
  if (trunc_degree < 1) throw InvalidParameter("trunc local: m must be >= 1");
  const std::uint32_t k = static_cast<std::uint32_t>(vars.size());
  for (const auto& e : extra)
    if (e.size() != k)
      throw InvalidParameter("relation monomial has wrong arity");

  auto divisible_by_relation = [&](const std::vector<std::uint32_t>& m) {
    for (const auto& e : extra) {
      bool div = true;
      for (std::uint32_t v = 0; v < k; ++v)
        if (m[v] < e[v]) {
          div = false;
          break;
        }
      if (div) return true;
    }
    return false;
  };

  // Basis monomials: total degree < m, not divisible by any relation;
  // sorted by (degree, lex) for deterministic naming.
  std::vector<std::vector<std::uint32_t>> basis;
  std::vector<std::uint32_t> cur(k, 0);
  auto total = [](const std::vector<std::uint32_t>& m) {
    return std::accumulate(m.begin(), m.end(), 0u);
  };
  // odometer over exponents bounded by trunc_degree
  while (true) {
    if (total(cur) < trunc_degree && !divisible_by_relation(cur))
      basis.push_back(cur);
    std::uint32_t v = 0;
    while (v < k) {
      if (++cur[v] < trunc_degree) break;
      cur[v] = 0;
      ++v;
    }
    if (v == k) break;
  }
  std::sort(basis.begin(), basis.end(),
            [&](const auto& a, const auto& b) {
              auto ta = total(a), tb = total(b);
              if (ta != tb) return ta < tb;
              return a < b;
            });

  const std::uint32_t b = static_cast<std::uint32_t>(basis.size());
  const auto order64 = checked_pow(n, b, limits.order_cap);
  const std::uint32_t order = static_cast<std::uint32_t>(order64);

  std::map<std::vector<std::uint32_t>, std::uint32_t> basis_index;
  for (std::uint32_t i = 0; i < b; ++i) basis_index[basis[i]] = i;

  // prod_target[i][j]: basis index of basis[i]*basis[j], or -1 when truncated.
  std::vector<std::vector<std::int32_t>> prod_target(
      b, std::vector<std::int32_t>(b, -1));
  for (std::uint32_t i = 0; i < b; ++i)
    for (std::uint32_t j = 0; j < b; ++j) {
      std::vector<std::uint32_t> m(k);
      for (std::uint32_t v = 0; v < k; ++v) m[v] = basis[i][v] + basis[j][v];
      if (total(m) >= trunc_degree || divisible_by_relation(m)) continue;
      auto it = basis_index.find(m);
      if (it != basis_index.end()) prod_target[i][j] = static_cast<std::int32_t>(it->second);
    }

  auto decode = [&](std::uint32_t idx) {
    std::vector<std::uint32_t> c(b);
    for (std::uint32_t i = 0; i < b; ++i) {
      c[i] = idx % n;
      idx /= n;
    }
    return c;
  };
  auto encode = [&](const std::vector<std::uint32_t>& c) {
    std::uint32_t idx = 0;
    for (std::uint32_t i = b; i-- > 0;) idx = idx * n + c[i];
    return idx;
  };
  auto name_of = [&](const std::vector<std::uint32_t>& c) {
    // terms in descending (degree, lex) basis order
    std::string s;
    for (std::uint32_t i = b; i-- > 0;) {
      if (c[i] == 0) continue;
      if (!s.empty()) s += "+";
      std::string mon = monomial_name(basis[i], vars);
      if (mon.empty()) {
        s += std::to_string(c[i]);
      } else {
        if (c[i] != 1) s += std::to_string(c[i]) + "*";
        s += mon;
      }
    }
    return s.empty() ? std::string("0") : s;
  };

  std::vector<std::uint32_t> add(std::size_t{order} * order),
      mul(std::size_t{order} * order);
  std::vector<std::string> names(order);
  std::vector<std::vector<std::uint32_t>> coeffs(order);
  for (std::uint32_t a = 0; a < order; ++a) {
    coeffs[a] = decode(a);
    names[a] = name_of(coeffs[a]);
  }
  for (std::uint32_t a = 0; a < order; ++a)
    for (std::uint32_t c2 = 0; c2 < order; ++c2) {
      std::vector<std::uint32_t> s(b), p(b, 0);
      for (std::uint32_t i = 0; i < b; ++i)
        s[i] = (coeffs[a][i] + coeffs[c2][i]) % n;
      for (std::uint32_t i = 0; i < b; ++i) {
        if (coeffs[a][i] == 0) continue;
        for (std::uint32_t j = 0; j < b; ++j) {
          if (coeffs[c2][j] == 0) continue;
          std::int32_t t = prod_target[i][j];
          if (t < 0) continue;
          p[t] = static_cast<std::uint32_t>(
              (p[t] + std::uint64_t{coeffs[a][i]} * coeffs[c2][j]) % n);
        }
      }
      add[std::size_t{a} * order + c2] = encode(s);
      mul[std::size_t{a} * order + c2] = encode(p);
    }

  std::vector<std::uint32_t> one_c(b, 0);
  one_c[0] = 1;  // basis[0] is the constant monomial
  std::string text = "Z" + std::to_string(n) + "[";
  for (std::size_t v = 0; v < vars.size(); ++v) {
    if (v) text += ",";
    text += vars[v];
  }
  text += "]@" + std::to_string(trunc_degree);
  if (!extra.empty()) {
    text += "/(";
    for (std::size_t e = 0; e < extra.size(); ++e) {
      if (e) text += ",";
      text += monomial_name(extra[e], vars);
    }
    text += ")";
  }
  return make_from_tables(order, std::move(add), std::move(mul), 0,
                          encode(one_c), std::move(names),
                          {RingKind::TruncLocal, text});
}

RingPtr make_product(const RingPtr& a, const RingPtr& b, const Limits& limits) {
  const std::uint64_t order64 = std::uint64_t{a->order()} * b->order();
  if (order64 > limits.order_cap)
    throw ResourceLimit("product ring order cap exceeded");
  const std::uint32_t order = static_cast<std::uint32_t>(order64);
  const std::uint32_t ob = b->order();
  std::vector<std::uint32_t> add(std::size_t{order} * order),
      mul(std::size_t{order} * order);
  std::vector<std::string> names(order);
  for (std::uint32_t i = 0; i < order; ++i) {
    std::uint32_t ia = i / ob, ib = i % ob;
    names[i] = "(" + a->name(ia) + "," + b->name(ib) + ")";
    for (std::uint32_t j = 0; j < order; ++j) {
      std::uint32_t ja = j / ob, jb = j % ob;
      add[std::size_t{i} * order + j] = a->add(ia, ja) * ob + b->add(ib, jb);
      mul[std::size_t{i} * order + j] = a->mul(ia, ja) * ob + b->mul(ib, jb);
    }
  }
  std::string text = a->construction().text + " x " + b->construction().text;
  return make_from_tables(order, std::move(add), std::move(mul),
                          a->zero() * ob + b->zero(), a->one() * ob + b->one(),
                          std::move(names), {RingKind::Product, text});
}

AxiomReport check_axioms(const FiniteRing& r) {
  AxiomReport rep;
  const std::uint32_t n = r.order();
  auto witness2 = [&](std::uint32_t a, std::uint32_t b) {
    return "(" + r.name(a) + "," + r.name(b) + ")";
  };
  auto witness3 = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    return "(" + r.name(a) + "," + r.name(b) + "," + r.name(c) + ")";
  };
  for (std::uint32_t a = 0; a < n && rep.failures.size() < 16; ++a) {
    if (r.add(a, r.zero()) != a)
      rep.failures.push_back("additive identity fails at " + r.name(a));
    if (r.mul(a, r.one()) != a)
      rep.failures.push_back("multiplicative identity fails at " + r.name(a));
    bool inv = false;
    for (std::uint32_t b = 0; b < n; ++b)
      if (r.add(a, b) == r.zero()) inv = true;
    if (!inv) rep.failures.push_back("no additive inverse for " + r.name(a));
  }
  for (std::uint32_t a = 0; a < n && rep.failures.size() < 16; ++a)
    for (std::uint32_t b = 0; b < n && rep.failures.size() < 16; ++b) {
      if (r.add(a, b) != r.add(b, a))
        rep.failures.push_back("add not commutative at " + witness2(a, b));
      if (r.mul(a, b) != r.mul(b, a))
        rep.failures.push_back("mul not commutative at " + witness2(a, b));
    }
  for (std::uint32_t a = 0; a < n && rep.failures.size() < 16; ++a)
    for (std::uint32_t b = 0; b < n && rep.failures.size() < 16; ++b)
      for (std::uint32_t c = 0; c < n && rep.failures.size() < 16; ++c) {
        if (r.add(r.add(a, b), c) != r.add(a, r.add(b, c)))
          rep.failures.push_back("add not associative at " + witness3(a, b, c));
        if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c)))
          rep.failures.push_back("mul not associative at " + witness3(a, b, c));
        if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c)))
          rep.failures.push_back("distributivity fails at " + witness3(a, b, c));
      }
  if (n > 1 && r.zero() == r.one())
    rep.failures.push_back("zero equals one in a ring of order > 1");
  return rep;
}

ElemSet zero_divisors(const FiniteRing& r) {
  const std::uint32_t n = r.order();
  ElemSet z(n);
  if (n == 1) return z;  // zero ring: empty by convention
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t s = 0; s < n; ++s) {
      if (s == r.zero()) continue;
      if (r.mul(a, s) == r.zero()) {
        z.set(a);
        break;
      }
    }
  return z;
}

UnitsRegulars units_and_regulars(const FiniteRing& r) {
  const std::uint32_t n = r.order();
  UnitsRegulars out{ElemSet(n), ElemSet(n)};
  ElemSet z = zero_divisors(r);
  for (std::uint32_t a = 0; a < n; ++a) {
    if (!z.test(a)) out.regulars.set(a);
    for (std::uint32_t b = 0; b < n; ++b)
      if (r.mul(a, b) == r.one()) {
        out.units.set(a);
        break;
      }
  }
  return out;
}

}  // namespace contalg
