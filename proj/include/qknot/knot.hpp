#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "qknot/laurent.hpp"

namespace qknot {

/// K_(m,p): 2m and 2p half-twists; m, p nonzero.
struct DoubleTwist {
  int m = 1;
  int p = 1;
  friend bool operator==(const DoubleTwist&, const DoubleTwist&) = default;
};

/// b(l,t) with coprime odd l > t >= 1.
struct TwoBridge {
  int l = 3;
  int t = 1;
  friend bool operator==(const TwoBridge&, const TwoBridge&) = default;
};

/// T_(2,2t+1), t >= 1.
struct Torus2 {
  int t = 1;
  friend bool operator==(const Torus2&, const Torus2&) = default;
};

using KnotSpec = std::variant<DoubleTwist, TwoBridge, Torus2>;

/// Validates the invariants of each alternative; throws std::domain_error.
void validate(const KnotSpec& spec);

/**
 * Grammar (whitespace ignored): "K(m,p)" | "b(l,t)" | "T(2,k)" with k odd >= 3.
 * Syntax errors throw std::invalid_argument naming the position and token;
 * well-formed strings with bad parameters throw std::domain_error.
 */
KnotSpec parse_knot_spec(std::string_view text);

/// Inverse of parse_knot_spec: "K(-2,1)", "b(7,5)", "T(2,5)".
std::string render(const KnotSpec& spec);

enum class Formula { Auto, Cyclotomic, Theorem, Takata };

Formula parse_formula(std::string_view name);
std::string_view formula_name(Formula f);

/**
 * J_N(K_(m,p)) for any signs, using K_(m,p) = K_(p,m) to reach a formula:
 *   (+,+) cyclotomic (1.1)       (+,-) cyclotomic (1.2)
 *   (-,-) first nested sum       (-,+) second nested sum
 * Takata uses b(4mp-1, 4mp-2p-1) for (-,-) and b(4mp+1, 4mp-2p+1) for (-,+).
 * Auto takes the table above. An explicit formula that has no form for the
 * sign pattern, even after the swap, throws std::invalid_argument.
 */
LaurentPolynomial jones_any(const DoubleTwist& knot, int N, Formula formula);

/**
 * J_N of any supported knot. b(l,t) and T(2,2t+1) go through the Takata sum:
 * J_N(b(l,t)) is its value at q^-1, and T(2,2t+1) is the mirror of b(2t+1,1).
 */
LaurentPolynomial jones_knot(const KnotSpec& spec, int N, Formula formula);

}  // namespace qknot
