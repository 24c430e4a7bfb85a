#pragma once

#include <string>

#include <json.hpp>

#include "qknot/laurent.hpp"
#include "qknot/quotient.hpp"

namespace qknot {

/// [[exponent, "coefficient"], ...] sorted by exponent; coefficients are
/// decimal strings.
nlohmann::json to_json(const LaurentPolynomial& p);
LaurentPolynomial laurent_from_json(const nlohmann::json& j);

/// {"N": n, "coeffs": ["c0", ..., "c_{N-1}"]}
nlohmann::json to_json(const QuotientElement& x);
QuotientElement quotient_from_json(const nlohmann::json& j);

/// One "exponent,coefficient" row per nonzero term, with a header row.
std::string to_csv(const LaurentPolynomial& p);
/// One "exponent,coefficient" row per slot 0..N-1, with a header row.
std::string to_csv(const QuotientElement& x);

}  // namespace qknot
