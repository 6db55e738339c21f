#ifndef CONTALG_FORMAT_HPP
#define CONTALG_FORMAT_HPP

#include <string>

#include "contalg/mr.hpp"

namespace contalg {

/// Element name as a polynomial-literal coefficient token: parenthesized
/// unless it is a plain number.
std::string coeff_token(const FiniteRing& r, std::uint32_t elem);

/// Canonical polynomial literal, descending term order, explicit "+".
/// Round-trips through parse_poly_literal.
std::string poly_to_string(const MRElem& f);

}  // namespace contalg

#endif
