#include "contalg/zdgraph.hpp"

#include <sstream>
#include <stdexcept>

#include "contalg/format.hpp"
#include "contalg/ideal.hpp"
#include "contalg/mr.hpp"

namespace contalg {

std::size_t ZDGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& row : adj) twice += row.count();
  return twice / 2;
}

ZDGraph gamma_of_ring(const RingPtr& r) {
  ZDGraph g;
  g.kind = ZDGraph::Kind::BaseRing;
  ElemSet z = zero_divisors(*r);
  std::vector<std::uint32_t> verts;
  z.for_each([&](std::uint32_t e) {
    if (e != r->zero()) verts.push_back(e);
  });
  g.labels.reserve(verts.size());
  for (auto v : verts) g.labels.push_back(r->name(v));
  g.adj.assign(verts.size(), ElemSet(verts.size()));
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (r->mul(verts[i], verts[j]) == r->zero()) {
        g.adj[i].set(j);
        g.adj[j].set(i);
      }
  return g;
}

ZDGraph gamma_poly_truncated(const RingPtr& r, std::uint32_t d,
                             const Limits& limits) {
  static MonoidPtr m = Monoid::free_comm(1);
  PolyEnum en(r, m, d, limits);
  std::vector<MRElem> verts;
  for (std::size_t i = 1; i < en.count(); ++i) {
    MRElem f = en.at(i);
    if (mccoy_witness(f)) verts.push_back(std::move(f));
    if (verts.size() > limits.vertex_cap)
      throw ResourceLimit("truncated graph exceeds the vertex cap");
  }
  ZDGraph g;
  g.kind = ZDGraph::Kind::TruncatedPoly;
  g.degree = d;
  g.labels.reserve(verts.size());
  for (const auto& f : verts) g.labels.push_back(poly_to_string(f));
  g.adj.assign(verts.size(), ElemSet(verts.size()));
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (mr_mul(verts[i], verts[j]).is_zero()) {
        g.adj[i].set(j);
        g.adj[j].set(i);
      }
  return g;
}

DiamReport diameter(const ZDGraph& g) {
  DiamReport rep;
  const std::size_t n = g.vertex_count();
  if (n == 0) return rep;
  rep.diameter = 0;
  for (std::size_t src = 0; src < n; ++src) {
    ElemSet seen(n);
    seen.set(src);
    ElemSet frontier = seen;
    int dist = 0;
    std::size_t last = src;
    while (true) {
      ElemSet next(n);
      frontier.for_each([&](std::uint32_t v) { next |= g.adj[v]; });
      next.subtract(seen);
      if (next.none()) break;
      ++dist;
      next.for_each([&](std::uint32_t v) { last = v; });
      seen |= next;
      frontier = next;
    }
    if (seen.count() != n) rep.connected = false;
    if (dist > rep.diameter) {
      rep.diameter = dist;
      rep.witness_a = g.labels[src];
      rep.witness_b = g.labels[last];
    }
  }
  if (g.kind == ZDGraph::Kind::BaseRing && (!rep.connected || rep.diameter > 3))
    throw std::logic_error(
        "zero-divisor graph violates connectivity/diameter bound");
  return rep;
}

Prediction predict_from_facts(const GammaFacts& f) {
  if (f.vertices == 0) return {-1, "no proper zero-divisors"};
  if (f.diam == 0) return {1, "single proper zero-divisor"};
  if (f.diam == 1) {
    if (!f.reduced && f.z_square_zero)
      return {1, "nonreduced, Z(R)^2 = (0): extension stays complete"};
    if (f.reduced && f.vertices == 2)
      return {2, "reduced with exactly two proper zero-divisors"};
  }
  if (f.diam == 2) {
    if (f.reduced && f.min_primes == 2 && f.vertices >= 3)
      return {2, "reduced with two minimal primes and >= 3 vertices"};
    if (f.primal && !f.z_square_zero && f.property_a)
      return {2, "primal, Z(R)^2 != (0), Property (A)"};
    if (f.primal && !f.property_a)
      return {3, "primal without Property (A)"};
  }
  if (f.diam == 3) return {3, "base diameter already 3, bounded above by 3"};
  throw std::logic_error("extension-diameter facts match no branch");
}

namespace {

GammaFacts gather_facts(const RingPtr& r, const ZDGraph& g, int diam,
                        const Limits& limits) {
  GammaFacts f;
  f.diam = diam;
  f.vertices = g.vertex_count();
  f.reduced = nilradical(*r).is_zero();
  ElemSet z = zero_divisors(*r);
  auto zv = z.to_indices();
  f.z_square_zero = true;
  for (auto a : zv) {
    for (auto b : zv)
      if (r->mul(a, b) != r->zero()) {
        f.z_square_zero = false;
        break;
      }
    if (!f.z_square_zero) break;
  }
  f.min_primes = minimal_primes(*r, limits).size();
  f.primal = is_primal(*r);
  f.property_a = has_property_A(*r, limits);
  return f;
}

bool graph_complete(const ZDGraph& g) {
  for (std::size_t i = 0; i < g.vertex_count(); ++i)
    if (g.adj[i].count() != g.vertex_count() - 1) return false;
  return true;
}

}  // namespace

Prediction predict_extension_diam(const RingPtr& r, const Limits& limits) {
  ZDGraph g = gamma_of_ring(r);
  DiamReport rep = diameter(g);
  return predict_from_facts(gather_facts(r, g, rep.diameter, limits));
}

Classification classify_gamma(const RingPtr& r) {
  ZDGraph g = gamma_of_ring(r);
  Classification c;
  Limits limits = limits_from_env();
  if (g.vertex_count() == 0) {
    c.diameter = -1;
    c.branch = "no proper zero-divisors";
  } else if (g.vertex_count() == 1) {
    c.diameter = 0;
    c.branch = "single vertex";
  } else if (graph_complete(g)) {
    c.diameter = 1;
    c.branch = "complete: xy = 0 for every pair of proper zero-divisors";
  } else {
    bool reduced = nilradical(*r).is_zero();
    ElemSet z = zero_divisors(*r);
    Ideal z_as = Ideal{r.get(), z};
    bool z_ideal = ideal_generated(*r, z) == z_as;
    bool z_sq_nonzero = false;
    auto zv = z.to_indices();
    for (auto a : zv) {
      for (auto b : zv)
        if (r->mul(a, b) != r->zero()) {
          z_sq_nonzero = true;
          break;
        }
      if (z_sq_nonzero) break;
    }
    if (reduced && minimal_primes(*r, limits).size() == 2) {
      c.diameter = 2;
      c.branch = "reduced with exactly two minimal primes";
    } else if (z_ideal && z_sq_nonzero) {
      c.diameter = 2;
      c.branch = "Z(R) an ideal with nonzero square";
    } else {
      c.diameter = 3;
      c.branch = "neither complete nor a diameter-2 configuration";
    }
  }
  DiamReport rep = diameter(g);
  if (rep.diameter != c.diameter)
    throw std::logic_error("structural classification (" + c.branch +
                           " -> " + std::to_string(c.diameter) +
                           ") disagrees with BFS diameter " +
                           std::to_string(rep.diameter));
  return c;
}

CheckOutcome verify_diam(const RingPtr& r, std::vector<std::uint32_t> d_list,
                         const Limits& limits) {
  if (d_list.empty()) d_list = {1, 2};
  int base = diameter(gamma_of_ring(r)).diameter;
  Prediction pred = predict_extension_diam(r, limits);
  std::vector<int> diams;
  std::uint64_t cases = 0;
  for (auto d : d_list) {
    ZDGraph g;
    try {
      g = gamma_poly_truncated(r, d, limits);
    } catch (const ResourceLimit& e) {
      return CheckOutcome::inconclusive("diam", e.what(), d);
    }
    cases += g.vertex_count();
    diams.push_back(diameter(g).diameter);
  }
  std::uint32_t d_top = d_list.back();
  std::string seq;
  for (std::size_t i = 0; i < diams.size(); ++i)
    seq += (i ? "," : "") + std::to_string(diams[i]);
  for (std::size_t i = 1; i < diams.size(); ++i)
    if (diams[i] > diams[i - 1])
      return CheckOutcome::refuted(
          "diam", cases, d_top, {},
          "truncated diameter increased with the degree: " + seq);
  for (auto dm : diams)
    if (dm < base)
      return CheckOutcome::refuted(
          "diam", cases, d_top, {},
          "truncated diameter " + std::to_string(dm) +
              " below the base diameter " + std::to_string(base));
  for (auto dm : diams)
    if (dm != diams.front())
      return CheckOutcome::inconclusive(
          "diam", "diameter not stable across degrees: " + seq, d_top);
  if (diams.back() != pred.value)
    return CheckOutcome::refuted("diam", cases, d_top, {},
                                 "truncated diameter " + seq +
                                     " differs from the predicted " +
                                     std::to_string(pred.value) + " (" +
                                     pred.trace + ")");
  return CheckOutcome::verified("diam", cases, d_top,
                                "diameters " + seq + " match prediction " +
                                    std::to_string(pred.value) + " (" +
                                    pred.trace + ")");
}

std::string to_dot(const ZDGraph& g) {
  std::ostringstream os;
  os << "graph G {\n";
  for (const auto& l : g.labels) os << "  \"" << l << "\";\n";
  for (std::size_t i = 0; i < g.vertex_count(); ++i)
    g.adj[i].for_each([&](std::uint32_t j) {
      if (j > i) os << "  \"" << g.labels[i] << "\" -- \"" << g.labels[j] << "\";\n";
    });
  os << "}\n";
  return os.str();
}

}  // namespace contalg
