#include "qknot/knot.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "qknot/jones.hpp"
#include "qknot/sign_tables.hpp"
#include "qknot/takata.hpp"

namespace qknot {

namespace {

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  KnotSpec parse() {
    skip_space();
    const std::size_t head_pos = pos_;
    const char head = take("knot type 'K', 'b' or 'T'");
    if (head != 'K' && head != 'b' && head != 'T')
      fail(head_pos, "expected knot type 'K', 'b' or 'T'");
    expect('(');
    const int first = integer();
    expect(',');
    const int second = integer();
    expect(')');
    skip_space();
    if (pos_ != text_.size()) fail(pos_, "unexpected trailing input");

    KnotSpec spec;
    if (head == 'K') {
      spec = DoubleTwist{first, second};
    } else if (head == 'b') {
      spec = TwoBridge{first, second};
    } else {
      if (first != 2) throw std::domain_error("T(a,k): only a = 2 is supported");
      if (second < 3 || second % 2 == 0)
        throw std::domain_error("T(2,k): k must be odd and at least 3");
      spec = Torus2{(second - 1) / 2};
    }
    validate(spec);
    return spec;
  }

 private:
  [[noreturn]] void fail(std::size_t at, const std::string& what) const {
    std::string token = at < text_.size() ? "'" + std::string(1, text_[at]) + "'"
                                          : std::string("end of input");
    throw std::invalid_argument("knot spec parse error at position " +
                                std::to_string(at) + ": " + what + ", found " +
                                token);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  char take(const char* expected) {
    skip_space();
    if (pos_ >= text_.size()) fail(pos_, std::string("expected ") + expected);
    return text_[pos_++];
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c)
      fail(pos_, std::string("expected '") + c + "'");
    ++pos_;
  }

  int integer() {
    skip_space();
    const std::size_t start = pos_;
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
      skip_space();
    }
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == digits) fail(digits, "expected an integer");
    long long value = 0;
    const auto [end, ec] = std::from_chars(text_.data() + digits, text_.data() + pos_, value);
    if (ec != std::errc() || end != text_.data() + pos_ || value > 1'000'000'000LL)
      fail(start, "integer out of range");
    return static_cast<int>(negative ? -value : value);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

LaurentPolynomial takata_double_twist(int m, int p, int N, DoubleTwistFamily family) {
  const TwoBridgeParams params = family_params(m, p, family);
  return jones_takata(params.l, params.t, N);
}

[[noreturn]] void no_formula(Formula formula, const DoubleTwist& k) {
  throw std::invalid_argument("formula '" + std::string(formula_name(formula)) +
                              "' has no form for " + render(KnotSpec{k}));
}

}  // namespace

void validate(const KnotSpec& spec) {
  if (const auto* k = std::get_if<DoubleTwist>(&spec)) {
    if (k->m == 0 || k->p == 0)
      throw std::domain_error("K(m,p): 2m and 2p must be nonzero integers");
  } else if (const auto* b = std::get_if<TwoBridge>(&spec)) {
    try {
      TwoBridgeParams(b->l, b->t);
    } catch (const std::invalid_argument& e) {
      throw std::domain_error(e.what());
    }
  } else if (std::get<Torus2>(spec).t < 1) {
    throw std::domain_error("T(2,2t+1): t must be positive");
  }
}

KnotSpec parse_knot_spec(std::string_view text) { return SpecParser(text).parse(); }

std::string render(const KnotSpec& spec) {
  if (const auto* k = std::get_if<DoubleTwist>(&spec))
    return "K(" + std::to_string(k->m) + "," + std::to_string(k->p) + ")";
  if (const auto* b = std::get_if<TwoBridge>(&spec))
    return "b(" + std::to_string(b->l) + "," + std::to_string(b->t) + ")";
  return "T(2," + std::to_string(2 * std::get<Torus2>(spec).t + 1) + ")";
}

Formula parse_formula(std::string_view name) {
  if (name == "auto") return Formula::Auto;
  if (name == "cyclotomic") return Formula::Cyclotomic;
  if (name == "theorem") return Formula::Theorem;
  if (name == "takata") return Formula::Takata;
  throw std::invalid_argument("unknown formula '" + std::string(name) + "'");
}

std::string_view formula_name(Formula f) {
  switch (f) {
    case Formula::Auto: return "auto";
    case Formula::Cyclotomic: return "cyclotomic";
    case Formula::Theorem: return "theorem";
    case Formula::Takata: return "takata";
  }
  return "?";
}

LaurentPolynomial jones_any(const DoubleTwist& knot, int N, Formula formula) {
  validate(knot);
  detail::require_positive("jones_any", {N});
  const int m = knot.m;
  const int p = knot.p;
  const int am = std::abs(m);
  const int ap = std::abs(p);

  if (m > 0 && p > 0) {
    if (formula == Formula::Auto || formula == Formula::Cyclotomic)
      return jones_cyclotomic_pp(m, p, N);
    no_formula(formula, knot);
  }
  if (m < 0 && p < 0) {
    switch (formula) {
      case Formula::Auto:
      case Formula::Theorem: return jones_thm1(am, ap, N);
      case Formula::Takata:
        return takata_double_twist(am, ap, N, DoubleTwistFamily::MinusMinus);
      case Formula::Cyclotomic: no_formula(formula, knot);
    }
  }
  // Mixed signs: write the knot as K_(pos,-neg) and K_(-neg,pos).
  const int pos = m > 0 ? m : p;
  const int neg = m > 0 ? ap : am;
  switch (formula) {
    case Formula::Auto:
      return m > 0 ? jones_cyclotomic_pm(pos, neg, N) : jones_thm2(neg, pos, N);
    case Formula::Cyclotomic: return jones_cyclotomic_pm(pos, neg, N);
    case Formula::Theorem: return jones_thm2(neg, pos, N);
    case Formula::Takata:
      return takata_double_twist(neg, pos, N, DoubleTwistFamily::MinusPlus);
  }
  no_formula(formula, knot);
}

LaurentPolynomial jones_knot(const KnotSpec& spec, int N, Formula formula) {
  if (const auto* k = std::get_if<DoubleTwist>(&spec)) return jones_any(*k, N, formula);
  validate(spec);
  if (formula != Formula::Auto && formula != Formula::Takata)
    throw std::invalid_argument("formula '" + std::string(formula_name(formula)) +
                                "' applies only to double twist knots");
  if (const auto* b = std::get_if<TwoBridge>(&spec))
    return substitute_power(jones_takata(b->l, b->t, N), -1);
  const int t = std::get<Torus2>(spec).t;
  return jones_takata(2 * t + 1, 1, N);
}

}  // namespace qknot
