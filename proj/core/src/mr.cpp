#include "contalg/mr.hpp"

#include <algorithm>

namespace contalg {

namespace {

void require_same_ambient(const MRElem& f, const MRElem& g) {
  if (f.ring.get() != g.ring.get() || f.monoid.get() != g.monoid.get())
    throw InvalidParameter("monoid-ring operands have different ambients");
}

void drop_zero_terms(MRElem& f) {
  for (auto it = f.terms.begin(); it != f.terms.end();)
    it = it->second == f.ring->zero() ? f.terms.erase(it) : std::next(it);
}

}  // namespace

MRElem mr_zero(RingPtr r, MonoidPtr m) { return MRElem{std::move(r), std::move(m), {}}; }

MRElem mr_one(RingPtr r, MonoidPtr m) {
  std::uint32_t one = r->one();
  auto id = m->identity();
  return mr_term(std::move(r), std::move(m), one, std::move(id));
}

MRElem mr_term(RingPtr r, MonoidPtr m, std::uint32_t coeff, MonoidElem e) {
  if (e.empty()) e = m->identity();
  MRElem f{std::move(r), std::move(m), {}};
  if (coeff != f.ring->zero()) f.terms.emplace(std::move(e), coeff);
  return f;
}

MRElem mr_const(RingPtr r, MonoidPtr m, std::uint32_t coeff) {
  auto id = m->identity();
  return mr_term(std::move(r), std::move(m), coeff, std::move(id));
}

MRElem mr_add(const MRElem& f, const MRElem& g) {
  require_same_ambient(f, g);
  MRElem out = f;
  for (const auto& [e, c] : g.terms) {
    auto it = out.terms.find(e);
    if (it == out.terms.end())
      out.terms.emplace(e, c);
    else
      it->second = out.ring->add(it->second, c);
  }
  drop_zero_terms(out);
  return out;
}

MRElem mr_neg(const MRElem& f) {
  MRElem out = f;
  for (auto& [e, c] : out.terms) c = out.ring->neg(c);
  drop_zero_terms(out);
  return out;
}

MRElem mr_sub(const MRElem& f, const MRElem& g) { return mr_add(f, mr_neg(g)); }

MRElem mr_mul(const MRElem& f, const MRElem& g) {
  require_same_ambient(f, g);
  MRElem out{f.ring, f.monoid, {}};
  const FiniteRing& r = *f.ring;
  for (const auto& [u, cu] : f.terms)
    for (const auto& [v, cv] : g.terms) {
      MonoidElem w = f.monoid->op(u, v);
      std::uint32_t p = r.mul(cu, cv);
      auto it = out.terms.find(w);
      if (it == out.terms.end())
        out.terms.emplace(std::move(w), p);
      else
        it->second = r.add(it->second, p);
    }
  drop_zero_terms(out);
  return out;
}

MRElem mr_scalar_mul(std::uint32_t s, const MRElem& f) {
  MRElem out = f;
  for (auto& [e, c] : out.terms) c = out.ring->mul(s, c);
  drop_zero_terms(out);
  return out;
}

Ideal content(const MRElem& f) {
  std::vector<std::uint32_t> coeffs;
  coeffs.reserve(f.terms.size());
  for (const auto& [e, c] : f.terms) coeffs.push_back(c);
  return ideal_generated(*f.ring, coeffs);
}

std::vector<MonoidElem> support(const MRElem& f) {
  std::vector<MonoidElem> out;
  out.reserve(f.terms.size());
  for (const auto& [e, c] : f.terms) out.push_back(e);
  return out;
}

PolyEnum::PolyEnum(RingPtr r, MonoidPtr m, std::uint32_t max_degree,
                   const Limits& limits)
    : ring_(std::move(r)), monoid_(std::move(m)) {
  if (monoid_->kind() == Monoid::Kind::Finite) {
    for (std::uint32_t i = 0; i < monoid_->size(); ++i)
      monomials_.push_back(MonoidElem{i});
  } else {
    const std::uint32_t k = monoid_->arity();
    MonoidElem cur(k, 0);
    while (true) {
      std::uint32_t total = 0;
      for (auto e : cur) total += e;
      if (total <= max_degree) monomials_.push_back(cur);
      std::uint32_t v = 0;
      while (v < k) {
        if (++cur[v] <= max_degree) break;
        cur[v] = 0;
        ++v;
      }
      if (v == k) break;
    }
    std::sort(monomials_.begin(), monomials_.end());
  }
  std::size_t c = 1;
  for (std::size_t i = 0; i < monomials_.size(); ++i) {
    c *= ring_->order();
    if (c - 1 > limits.poly_enum_cap)
      throw ResourceLimit("polynomial enumeration cap exceeded");
  }
  count_ = c;
}

MRElem PolyEnum::at(std::size_t index) const {
  MRElem f{ring_, monoid_, {}};
  const std::uint32_t ord = ring_->order();
  for (const auto& mono : monomials_) {
    std::uint32_t digit = static_cast<std::uint32_t>(index % ord);
    index /= ord;
    if (digit != ring_->zero()) f.terms.emplace(mono, digit);
  }
  return f;
}

}  // namespace contalg
