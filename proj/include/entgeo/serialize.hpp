#pragma once

#include "entgeo/rank_locus.hpp"
#include "entgeo/spin_chain.hpp"
#include "entgeo/splitting.hpp"
#include "entgeo/weyl.hpp"

#include "json.hpp"

namespace entgeo {

// Rational values serialize to the string "p/q"; genuinely cyclotomic ones
// to {"conductor": m, "coeffs": ["p/q", ...]} over the power basis.
nlohmann::json scalar_to_json(const CycNum& x);
CycNum scalar_from_json(const nlohmann::json& j);

// Scalar literals on the command line: "p/q", "zeta(m)", "zeta(m)^k", with
// an optional "p/q*" prefix and leading sign.
CycNum parse_scalar(const std::string& text);

nlohmann::json state_to_json(const StateVector& psi);
nlohmann::json matrix_to_json(const ExactMatrix& m);
nlohmann::json rational_vector_to_json(const std::vector<Rational>& v);

}  // namespace entgeo
