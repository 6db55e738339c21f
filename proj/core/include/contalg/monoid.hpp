#ifndef CONTALG_MONOID_HPP
#define CONTALG_MONOID_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "contalg/common.hpp"

namespace contalg {

/// A monoid element: exponent vector for the free commutative monoid N^k,
/// or a single-entry vector {index} for a table monoid.
using MonoidElem = std::vector<std::uint32_t>;

/// Commutative monoid: either free N^k or given by a Cayley table.
class Monoid {
 public:
  enum class Kind { Free, Finite };

  static std::shared_ptr<const Monoid> free_comm(std::uint32_t arity);
  static std::shared_ptr<const Monoid> cyclic(std::uint32_t n);
  /// Validates commutativity, associativity and the stated identity;
  /// throws InvalidParameter with a witness on failure.
  static std::shared_ptr<const Monoid> from_table(
      std::vector<std::vector<std::uint32_t>> table, std::uint32_t identity,
      std::vector<std::string> names);

  Kind kind() const { return kind_; }
  std::uint32_t arity() const { return arity_; }
  std::uint32_t size() const { return static_cast<std::uint32_t>(names_.size()); }

  MonoidElem identity() const;
  MonoidElem op(const MonoidElem& a, const MonoidElem& b) const;
  std::string elem_name(const MonoidElem& e) const;
  std::optional<MonoidElem> elem_by_name(const std::string& name) const;

  struct CancelWitness {
    MonoidElem s, t, u;  // s+t == s+u with t != u
  };
  struct TorsionWitness {
    std::uint64_t n = 0;  // n*s == n*t with s != t
    MonoidElem s, t;
  };

  /// nullopt means cancellative. Free monoids answer analytically.
  std::optional<CancelWitness> cancellation_failure() const;
  /// bound 0 picks |M|^2 (orbit index+period <= |M| makes it safe).
  std::optional<TorsionWitness> torsion_failure(std::uint64_t bound = 0) const;

  bool is_cancellative() const { return !cancellation_failure(); }
  bool is_torsion_free(std::uint64_t bound = 0) const {
    return !torsion_failure(bound);
  }

  std::string describe() const;

 private:
  Monoid() = default;
  Kind kind_ = Kind::Free;
  std::uint32_t arity_ = 0;                       // Free
  std::vector<std::vector<std::uint32_t>> table_; // Finite
  std::uint32_t identity_ = 0;
  std::vector<std::string> names_;
  std::string description_;
};

using MonoidPtr = std::shared_ptr<const Monoid>;

}  // namespace contalg

#endif
