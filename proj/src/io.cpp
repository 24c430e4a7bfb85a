#include "qknot/io.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace qknot {

namespace {

Integer parse_integer(const nlohmann::json& j) {
  if (!j.is_string()) throw std::invalid_argument("coefficient must be a decimal string");
  Integer value;
  if (value.set_str(j.get<std::string>(), 10) != 0)
    throw std::invalid_argument("malformed coefficient '" + j.get<std::string>() + "'");
  return value;
}

}  // namespace

nlohmann::json to_json(const LaurentPolynomial& p) {
  auto out = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) out.push_back({e, c.get_str()});
  return out;
}

LaurentPolynomial laurent_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial must be a JSON array");
  std::vector<std::pair<Exponent, Integer>> terms;
  for (const auto& item : j) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer())
      throw std::invalid_argument("polynomial term must be [exponent, \"coefficient\"]");
    terms.emplace_back(item[0].get<Exponent>(), parse_integer(item[1]));
  }
  return LaurentPolynomial::from_terms(terms);
}

nlohmann::json to_json(const QuotientElement& x) {
  auto coeffs = nlohmann::json::array();
  for (const auto& c : x.coeffs()) coeffs.push_back(c.get_str());
  return {{"N", x.modulus()}, {"coeffs", coeffs}};
}

QuotientElement quotient_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("N") || !j.contains("coeffs"))
    throw std::invalid_argument("quotient element must have N and coeffs");
  std::vector<Integer> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(parse_integer(c));
  return QuotientElement(j.at("N").get<int>(), std::move(coeffs));
}

std::string to_csv(const LaurentPolynomial& p) {
  std::ostringstream os;
  os << "exponent,coefficient\n";
  for (const auto& [e, c] : p.terms()) os << e << ',' << c.get_str() << '\n';
  return os.str();
}

std::string to_csv(const QuotientElement& x) {
  std::ostringstream os;
  os << "exponent,coefficient\n";
  for (std::size_t e = 0; e < x.coeffs().size(); ++e)
    os << e << ',' << x.coeffs()[e].get_str() << '\n';
  return os.str();
}

}  // namespace qknot
