#ifndef CONTALG_ZDGRAPH_HPP
#define CONTALG_ZDGRAPH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "contalg/checks.hpp"
#include "contalg/elemset.hpp"
#include "contalg/ring.hpp"

namespace contalg {

/// Zero-divisor graph: vertices are the proper zero-divisors (of the ring,
/// or of a degree-truncated polynomial window), an edge joins distinct a, b
/// with ab = 0. Adjacency is stored as bitset rows.
struct ZDGraph {
  enum class Kind { BaseRing, TruncatedPoly };
  Kind kind = Kind::BaseRing;
  std::uint32_t degree = 0;  // TruncatedPoly only
  std::vector<std::string> labels;
  std::vector<ElemSet> adj;

  std::size_t vertex_count() const { return labels.size(); }
  std::size_t edge_count() const;
};

ZDGraph gamma_of_ring(const RingPtr& r);

/// Vertices: nonzero degree <= d polynomials with a scalar annihilator;
/// edges by exact product. Throws ResourceLimit past the vertex cap.
ZDGraph gamma_poly_truncated(const RingPtr& r, std::uint32_t d,
                             const Limits& limits = limits_from_env());

/// diameter -1 encodes the empty graph.
struct DiamReport {
  int diameter = -1;
  bool connected = true;
  std::string witness_a, witness_b;  // a farthest pair, empty when diam <= 0
};

/// All-pairs BFS. Base-ring graphs additionally assert connectivity and
/// diameter <= 3 (hard failure on violation).
DiamReport diameter(const ZDGraph& g);

/// Diameter derived from structural criteria alone, then asserted against
/// BFS; a mismatch is a hard logic error carrying both traces.
struct Classification {
  int diameter = -1;
  std::string branch;
};
Classification classify_gamma(const RingPtr& r);

/// Inputs of the extension-diameter decision procedure, separated out so
/// the branch that no finite ring reaches stays unit-testable.
struct GammaFacts {
  int diam = -1;
  std::size_t vertices = 0;
  bool reduced = false;
  bool z_square_zero = false;
  std::size_t min_primes = 0;
  bool primal = false;
  bool property_a = false;
};
struct Prediction {
  int value = -1;  // -1: no proper zero-divisors anywhere
  std::string trace;
};
Prediction predict_from_facts(const GammaFacts& f);
Prediction predict_extension_diam(const RingPtr& r,
                                  const Limits& limits = limits_from_env());

/// Truncated diameters across d_list (default {1,2}) against the
/// prediction; unstable diameters surface as Inconclusive.
CheckOutcome verify_diam(const RingPtr& r, std::vector<std::uint32_t> d_list = {},
                         const Limits& limits = limits_from_env());

std::string to_dot(const ZDGraph& g);

}  // namespace contalg

#endif
