#ifndef CONTALG_CHECKS_HPP
#define CONTALG_CHECKS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "contalg/ideal.hpp"
#include "contalg/mr.hpp"

namespace contalg {

enum class Verdict { Verified, Refuted, Inconclusive };

/// Result of one property check. Refuted outcomes carry a replayable witness
/// in literal syntax (plus the structured polynomials when applicable).
struct CheckOutcome {
  std::string name;
  Verdict verdict = Verdict::Inconclusive;
  std::string detail;                  // reason / branch note
  std::vector<std::string> witness;    // literals, possibly empty
  std::vector<MRElem> witness_polys;   // structured replay payload
  std::uint64_t cases = 0;
  std::uint32_t degree = 0;

  static CheckOutcome verified(std::string name, std::uint64_t cases,
                               std::uint32_t degree, std::string detail = {});
  static CheckOutcome refuted(std::string name, std::uint64_t cases,
                              std::uint32_t degree,
                              std::vector<MRElem> witness_polys,
                              std::string detail = {});
  static CheckOutcome inconclusive(std::string name, std::string reason,
                                   std::uint32_t degree = 0);
};

/// Minimal n with c(f)^n c(g) = c(f)^{n-1} c(fg), searched in [1, searched_up_to].
struct DMResult {
  std::optional<std::uint32_t> exponent;
  std::uint32_t searched_up_to = 0;
};

/// n_max = 0 picks termCount(g) + 1.
DMResult dm_exponent(const MRElem& f, const MRElem& g, std::uint32_t n_max = 0);

CheckOutcome unit_content_check(const RingPtr& r, const MonoidPtr& m,
                                std::uint32_t d,
                                const Limits& limits = limits_from_env());
CheckOutcome weak_content_check(const RingPtr& r, const MonoidPtr& m,
                                std::uint32_t d,
                                const Limits& limits = limits_from_env());

/// First nonzero h with support in the enumeration window and f*h = 0.
std::optional<MRElem> zero_divisor_oracle(const MRElem& f, std::uint32_t d,
                                          const Limits& limits = limits_from_env());
/// First nonzero scalar r with r*f = 0.
std::optional<std::uint32_t> mccoy_witness(const MRElem& f);

CheckOutcome mccoy_equiv_check(const RingPtr& r, const MonoidPtr& m,
                               std::uint32_t d,
                               const Limits& limits = limits_from_env());

/// Zero-divisor pair from a cancellation failure s+t = s+u, t != u:
/// f = X^s, g = X^t - X^u, fg = 0 with c(f) = c(g) = R.
std::pair<MRElem, MRElem> counterexample_noncancellative(const RingPtr& r,
                                                         const MonoidPtr& m,
                                                         const MonoidElem& s,
                                                         const MonoidElem& t,
                                                         const MonoidElem& u);

/// Torsion pair for s != t with ks = kt at minimal k:
/// f = X^s - X^t, g = sum_{i<k} X^{(k-i-1)s + it}, fg = 0.
struct TorsionCounterexample {
  MRElem f, g;
  std::uint32_t k = 0;
};
TorsionCounterexample counterexample_torsion(const MonoidPtr& m, const RingPtr& r,
                                             const MonoidElem& s,
                                             const MonoidElem& t);

/// f in IB, decided by the content-module membership rule c(f) subseteq I.
bool in_extended_ideal(const MRElem& f, const Ideal& i);

CheckOutcome prime_extension_check(const RingPtr& r, const Ideal& p,
                                   std::uint32_t d,
                                   const Limits& limits = limits_from_env());
CheckOutcome contraction_check(const RingPtr& r, const Ideal& i, std::uint32_t d,
                               const Limits& limits = limits_from_env());
CheckOutcome min_prime_bijection_check(const RingPtr& r, std::uint32_t d,
                                       const Limits& limits = limits_from_env());
CheckOutcome ass_extension_check(const RingPtr& r, std::uint32_t d,
                                 const Limits& limits = limits_from_env());

enum class CoverMode { Ass, Min };
CheckOutcome zd_cover_check(const RingPtr& r, std::uint32_t d, CoverMode mode,
                            const Limits& limits = limits_from_env());

CheckOutcome regular_content_check(const RingPtr& r, std::uint32_t d,
                                   const Limits& limits = limits_from_env());
CheckOutcome nil_extension_check(const RingPtr& r, std::uint32_t d,
                                 const Limits& limits = limits_from_env());
CheckOutcome zpow_check(const RingPtr& r, std::uint32_t d,
                        const Limits& limits = limits_from_env());
CheckOutcome prime_to_check(const RingPtr& r, const Ideal& i, std::uint32_t d,
                            const Limits& limits = limits_from_env());
CheckOutcome primal_extension_check(const RingPtr& r, std::uint32_t d,
                                    const Limits& limits = limits_from_env());
CheckOutcome tq_triviality_check(const RingPtr& r);

}  // namespace contalg

#endif
