#include "contalg/monoid.hpp"

#include <map>

namespace contalg {

MonoidPtr Monoid::free_comm(std::uint32_t arity) {
  if (arity == 0) throw InvalidParameter("free monoid arity must be >= 1");
  // memoized per arity so that equal free monoids share one instance;
  // monoid-ring equality compares by pointer
  static std::map<std::uint32_t, MonoidPtr> cache;
  auto it = cache.find(arity);
  if (it != cache.end()) return it->second;
  auto m = std::shared_ptr<Monoid>(new Monoid());
  m->kind_ = Kind::Free;
  m->arity_ = arity;
  m->description_ = "FreeComm(" + std::to_string(arity) + ")";
  cache.emplace(arity, m);
  return m;
}

MonoidPtr Monoid::cyclic(std::uint32_t n) {
  if (n == 0) throw InvalidParameter("cyclic monoid order must be >= 1");
  std::vector<std::vector<std::uint32_t>> table(n, std::vector<std::uint32_t>(n));
  std::vector<std::string> names(n);
  for (std::uint32_t a = 0; a < n; ++a) {
    names[a] = std::to_string(a);
    for (std::uint32_t b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  }
  auto m = from_table(std::move(table), 0, std::move(names));
  const_cast<Monoid&>(*m).description_ = "Cyclic(" + std::to_string(n) + ")";
  return m;
}

MonoidPtr Monoid::from_table(std::vector<std::vector<std::uint32_t>> table,
                             std::uint32_t identity,
                             std::vector<std::string> names) {
  const std::uint32_t n = static_cast<std::uint32_t>(table.size());
  if (n == 0) throw InvalidParameter("empty monoid table");
  if (names.size() != n) throw InvalidParameter("monoid name list size mismatch");
  if (identity >= n) throw InvalidParameter("monoid identity out of range");
  for (std::uint32_t a = 0; a < n; ++a) {
    if (table[a].size() != n) throw InvalidParameter("monoid table not square");
    for (std::uint32_t b = 0; b < n; ++b)
      if (table[a][b] >= n) throw InvalidParameter("monoid table entry out of range");
  }
  for (std::uint32_t a = 0; a < n; ++a) {
    if (table[identity][a] != a || table[a][identity] != a)
      throw InvalidParameter("stated identity fails at " + names[a]);
    for (std::uint32_t b = 0; b < n; ++b) {
      if (table[a][b] != table[b][a])
        throw InvalidParameter("monoid not commutative at (" + names[a] + "," +
                               names[b] + ")");
      for (std::uint32_t c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw InvalidParameter("monoid not associative at (" + names[a] + "," +
                                 names[b] + "," + names[c] + ")");
    }
  }
  auto m = std::shared_ptr<Monoid>(new Monoid());
  m->kind_ = Kind::Finite;
  m->table_ = std::move(table);
  m->identity_ = identity;
  m->names_ = std::move(names);
  m->description_ = "Table(" + std::to_string(n) + ")";
  return m;
}

MonoidElem Monoid::identity() const {
  if (kind_ == Kind::Free) return MonoidElem(arity_, 0);
  return MonoidElem{identity_};
}

MonoidElem Monoid::op(const MonoidElem& a, const MonoidElem& b) const {
  if (kind_ == Kind::Free) {
    MonoidElem r(arity_);
    for (std::uint32_t i = 0; i < arity_; ++i) r[i] = a[i] + b[i];
    return r;
  }
  return MonoidElem{table_[a[0]][b[0]]};
}

std::string Monoid::elem_name(const MonoidElem& e) const {
  if (kind_ == Kind::Finite) return names_[e[0]];
  std::string s;
  for (std::uint32_t i = 0; i < arity_; ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += "X" + std::to_string(i + 1);
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s.empty() ? std::string("1") : s;
}

std::optional<MonoidElem> Monoid::elem_by_name(const std::string& name) const {
  if (kind_ == Kind::Free) return std::nullopt;
  for (std::uint32_t i = 0; i < size(); ++i)
    if (names_[i] == name) return MonoidElem{i};
  return std::nullopt;
}

std::optional<Monoid::CancelWitness> Monoid::cancellation_failure() const {
  if (kind_ == Kind::Free) return std::nullopt;
  const std::uint32_t n = size();
  for (std::uint32_t s = 0; s < n; ++s)
    for (std::uint32_t t = 0; t < n; ++t)
      for (std::uint32_t u = t + 1; u < n; ++u)
        if (table_[s][t] == table_[s][u])
          return CancelWitness{{s}, {t}, {u}};
  return std::nullopt;
}

std::optional<Monoid::TorsionWitness> Monoid::torsion_failure(
    std::uint64_t bound) const {
  if (kind_ == Kind::Free) return std::nullopt;
  const std::uint32_t n = size();
  if (bound == 0) bound = std::uint64_t{n} * n;
  // cur[s] = k*s, advanced one step per iteration
  std::vector<std::uint32_t> cur(n);
  for (std::uint32_t s = 0; s < n; ++s) cur[s] = s;
  for (std::uint64_t k = 1; k <= bound; ++k) {
    if (k > 1)
      for (std::uint32_t s = 0; s < n; ++s) cur[s] = table_[cur[s]][s];
    for (std::uint32_t s = 0; s < n; ++s)
      for (std::uint32_t t = s + 1; t < n; ++t)
        if (cur[s] == cur[t]) return TorsionWitness{k, {s}, {t}};
  }
  return std::nullopt;
}

std::string Monoid::describe() const { return description_; }

}  // namespace contalg
