#include "qknot/verifier.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "qknot/chains.hpp"
#include "qknot/io.hpp"
#include "qknot/jones.hpp"
#include "qknot/qseries.hpp"
#include "qknot/sign_tables.hpp"
#include "qknot/takata.hpp"

namespace qknot {

namespace {

constexpr std::array<std::string_view, kCheckCount> kNames = {
    "MirrorPP",     "MirrorPM",     "TakataVsThm1", "TakataVsThm2",    "DualityFU",
    "DualityCalFCalU", "TorusDuality", "RootEvalF", "RootEvalU",       "RootEvalCalF",
    "RootEvalCalU", "LemmaTables",  "LemmaSums",    "ClosedFormA",     "DisplayKm2m2",
    "DisplayKm3p1", "TwistM1",      "SymmetryMP",   "JonesAtOne",      "StronglyUnimodal",
};

constexpr int kUnimodalOrder = 10;

DoubleTwistFamily family_of(int tag) {
  if (tag == 1) return DoubleTwistFamily::MinusMinus;
  if (tag == 2) return DoubleTwistFamily::MinusPlus;
  throw std::invalid_argument("family must be 1 or 2");
}

void check_cell(CheckId check, const Cell& cell) {
  const auto keys = cell_keys(check);
  if (cell.values.size() != keys.size())
    throw std::invalid_argument(std::string(check_name(check)) + " expects " +
                                std::to_string(keys.size()) + " cell parameters");
  for (std::size_t i = 0; i < keys.size(); ++i) {
    const int v = cell.values[i];
    if (keys[i] == "family") {
      family_of(v);
    } else if (keys[i] == "sign") {
      if (v != 1 && v != -1) throw std::invalid_argument("sign must be +1 or -1");
    } else if (v < 1) {
      throw std::invalid_argument(keys[i] + " must be positive");
    }
  }
}

LaurentPolynomial mirror(const LaurentPolynomial& p) { return substitute_power(p, -1); }

QuotientElement root_u(int m, int p, int N) {
  return std::get<QuotientElement>(u_mp(m, p, minus_one(), RootOfUnity{N}));
}

/// Differences at position k are placed at q^{block * stride + k}.
void put(LaurentPolynomial& w, int block, int stride, int k, long diff) {
  if (diff != 0) w += LaurentPolynomial::monomial(Integer(diff), Exponent(block) * stride + k);
}

LaurentPolynomial lemma_table_witness(int m, int p, DoubleTwistFamily family) {
  const LemmaTable lemma = lemma_ik_sigma(m, p, family);
  const SigmaTable table = build_sigma_table(family_params(m, p, family));
  const int pp = table.p_prime;
  LaurentPolynomial w;
  if (lemma.p_prime != pp) return LaurentPolynomial::monomial(Integer(lemma.p_prime - pp), -1);
  for (int k = 1; k <= pp; ++k) {
    const auto K = static_cast<std::size_t>(k);
    put(w, 0, pp + 1, k, lemma.sigma[K] - table.sigma_at(k));
    put(w, 1, pp + 1, k, lemma.i_of_k[K] - table.i_at(k));
    put(w, 2, pp + 1, k, lemma.sigma_of_i_k[K] - table.sigma_of_i(k));
  }
  return w;
}

LaurentPolynomial lemma_sums_witness(int m, int p, DoubleTwistFamily family) {
  const SigmaTable table = build_sigma_table(family_params(m, p, family));
  const int pp = table.p_prime;
  LaurentPolynomial w;
  for (int k = 1; k <= pp; ++k) {
    const int got = table.sigma_of_i(k) + table.sigma_of_i(pp + 1 - k);
    int want = 0;
    if (family == DoubleTwistFamily::MinusMinus && k % p == 0) {
      const int block = k / p;
      if (block <= 2 * m - 1) want = block % 2 == 1 ? 2 : -2;
    }
    put(w, 0, pp + 1, k, got - want);
  }
  for (int j = 1; j <= pp - 1; ++j) {
    const int got = table.sigma_at(j + 1) + table.sigma_at(pp + 1 - j);
    int want = 0;
    if (family == DoubleTwistFamily::MinusPlus) {
      if (j % (2 * m) == 0) want = 2;
      else if (j % (2 * m) == m) want = -2;
    }
    put(w, 1, pp + 1, j, got - want);
  }
  return w;
}

/// Coefficient at q^{ordinal of the chain} is a(n) minus its closed form.
LaurentPolynomial closed_form_witness(int m, int p, int N, DoubleTwistFamily family) {
  const SigmaTable table = build_sigma_table(family_params(m, p, family));
  LaurentPolynomial w;
  Exponent ordinal = 0;
  ChainVector chain{std::vector<int>(static_cast<std::size_t>(table.p_prime)), N - 1};
  for_each_chain(table.p_prime, N - 1, [&](std::span<const int> n) {
    std::copy(n.begin(), n.end(), chain.entries.begin());
    const Exponent diff = a_coeff(chain, table) - a_closed_form(chain, m, p, family);
    if (diff != 0) w += LaurentPolynomial::monomial(Integer(static_cast<long>(diff)), ordinal);
    ++ordinal;
  });
  return w;
}

/**
 * Every evaluator at (m,p,N): both cyclotomic expansions, both nested sums
 * and both Takata families. For N > 1 the coefficient at q^i is J(1) - 1 of
 * evaluator i; for N = 1 it is the number of terms of J_1 - 1.
 */
LaurentPolynomial jones_at_one_witness(int m, int p, int N) {
  const std::array<std::function<LaurentPolynomial()>, 6> paths = {
      [&] { return jones_cyclotomic_pp(m, p, N); },
      [&] { return jones_cyclotomic_pm(m, p, N); },
      [&] { return jones_thm1(m, p, N); },
      [&] { return jones_thm2(m, p, N); },
      [&] {
        const auto b = family_params(m, p, DoubleTwistFamily::MinusMinus);
        return jones_takata(b.l, b.t, N);
      },
      [&] {
        const auto b = family_params(m, p, DoubleTwistFamily::MinusPlus);
        return jones_takata(b.l, b.t, N);
      },
  };
  LaurentPolynomial w;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const LaurentPolynomial J = paths[i]();
    const Integer diff = N == 1 ? Integer(static_cast<long>((J - 1).term_count()))
                                : Integer(evaluate_at_one(J) - 1);
    if (diff != 0) w += LaurentPolynomial::monomial(diff, static_cast<Exponent>(i));
  }
  return w;
}

bool strongly_unimodal(const std::vector<int>& parts) {
  std::size_t i = 1;
  while (i < parts.size() && parts[i] > parts[i - 1]) ++i;
  while (i < parts.size() && parts[i] < parts[i - 1]) ++i;
  return i == parts.size();
}

/// Walks every composition of every weight up to M.
LaurentPolynomial unimodal_counts(int M) {
  std::vector<long> counts(static_cast<std::size_t>(M + 1), 0);
  std::vector<int> parts;
  auto grow = [&](auto&& self, int weight) -> void {
    if (!parts.empty() && strongly_unimodal(parts)) ++counts[static_cast<std::size_t>(weight)];
    for (int next = 1; weight + next <= M; ++next) {
      parts.push_back(next);
      self(self, weight + next);
      parts.pop_back();
    }
  };
  grow(grow, 0);
  std::vector<std::pair<Exponent, Integer>> terms;
  for (int n = 0; n <= M; ++n)
    terms.emplace_back(n, Integer(counts[static_cast<std::size_t>(n)]));
  return LaurentPolynomial::from_terms(terms);
}

Witness evaluate(CheckId check, const std::vector<int>& v) {
  switch (check) {
    case CheckId::MirrorPP:
      return mirror(jones_cyclotomic_pp(v[0], v[1], v[2])) - jones_thm1(v[0], v[1], v[2]);
    case CheckId::MirrorPM:
      return mirror(jones_cyclotomic_pm(v[0], v[1], v[2])) - jones_thm2(v[0], v[1], v[2]);
    case CheckId::TakataVsThm1: {
      const auto b = family_params(v[0], v[1], DoubleTwistFamily::MinusMinus);
      return jones_takata(b.l, b.t, v[2]) - jones_thm1(v[0], v[1], v[2]);
    }
    case CheckId::TakataVsThm2: {
      const auto b = family_params(v[0], v[1], DoubleTwistFamily::MinusPlus);
      return jones_takata(b.l, b.t, v[2]) - jones_thm2(v[0], v[1], v[2]);
    }
    case CheckId::DualityFU:
      return f_mp(v[0], v[1], v[2]) - root_u(v[0], v[1], v[2]).reversed();
    case CheckId::DualityCalFCalU:
      return cal_f_mp(v[0], v[1], v[2]) -
             cal_u_mp(v[0], v[1], minus_one(), RootOfUnity{v[2]}).reversed();
    case CheckId::TorusDuality:
      return f_t_torus(v[0], v[1]) -
             std::get<QuotientElement>(u_t_torus(v[0], minus_one(), RootOfUnity{v[1]}))
                 .reversed();
    case CheckId::RootEvalF:
      return f_mp(v[0], v[1], v[2]) - reduce_mod_qN(jones_thm1(v[0], v[1], v[2]), v[2]);
    case CheckId::RootEvalU:
      return root_u(v[0], v[1], v[2]) -
             reduce_mod_qN(jones_cyclotomic_pp(v[0], v[1], v[2]), v[2]);
    case CheckId::RootEvalCalF:
      return cal_f_mp(v[0], v[1], v[2]) - reduce_mod_qN(jones_thm2(v[0], v[1], v[2]), v[2]);
    case CheckId::RootEvalCalU:
      return cal_u_mp(v[0], v[1], minus_one(), RootOfUnity{v[2]}) -
             reduce_mod_qN(jones_cyclotomic_pm(v[0], v[1], v[2]), v[2]);
    case CheckId::LemmaTables:
      return lemma_table_witness(v[1], v[2], family_of(v[0]));
    case CheckId::LemmaSums:
      return lemma_sums_witness(v[1], v[2], family_of(v[0]));
    case CheckId::ClosedFormA:
      return closed_form_witness(v[1], v[2], v[3], family_of(v[0]));
    case CheckId::DisplayKm2m2:
      return jones_display_example(DisplayExample::Km2m2, v[0]) - jones_thm1(2, 2, v[0]);
    case CheckId::DisplayKm3p1:
      return jones_display_example(DisplayExample::Km3p1, v[0]) - jones_thm2(3, 1, v[0]);
    case CheckId::TwistM1:
      return v[0] > 0
                 ? jones_twist_m1(TwistSign::Positive, v[1], v[2]) - jones_thm1(1, v[1], v[2])
                 : jones_twist_m1(TwistSign::Negative, v[1], v[2]) - jones_thm2(1, v[1], v[2]);
    case CheckId::SymmetryMP:
      return jones_cyclotomic_pp(v[0], v[1], v[2]) - jones_cyclotomic_pp(v[1], v[0], v[2]);
    case CheckId::JonesAtOne:
      return jones_at_one_witness(v[0], v[1], v[2]);
    case CheckId::StronglyUnimodal: {
      const auto U = std::get<LaurentPolynomial>(u_mp(1, 1, MonomialUnit(1, 0), Series{v[0]}));
      return U.shifted(1).truncated_above(v[0]) - unimodal_counts(v[0]);
    }
  }
  throw std::logic_error("unhandled check");
}

bool witness_is_zero(const Witness& w) {
  return std::visit([](const auto& x) { return x.is_zero(); }, w);
}

std::vector<int> n_range(const Grid& grid) {
  std::vector<int> out;
  if (grid.n_max == 1) return {1};
  for (int N = 2; N <= grid.n_max; ++N) out.push_back(N);
  return out;
}

void add_mpn(std::vector<std::pair<CheckId, Cell>>& out, CheckId id, const Grid& g,
             const std::vector<int>& ns) {
  for (int m = 1; m <= g.m_max; ++m)
    for (int p = 1; p <= g.p_max; ++p)
      for (int N : ns) out.push_back({id, Cell{{m, p, N}}});
}

void add_family_mp(std::vector<std::pair<CheckId, Cell>>& out, CheckId id, const Grid& g) {
  for (int f = 1; f <= 2; ++f)
    for (int m = 1; m <= g.m_max; ++m)
      for (int p = 1; p <= g.p_max; ++p) out.push_back({id, Cell{{f, m, p}}});
}

}  // namespace

std::string_view check_name(CheckId id) { return kNames.at(static_cast<std::size_t>(id)); }

CheckId parse_check_id(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i)
    if (kNames[i] == name) return static_cast<CheckId>(i);
  throw std::invalid_argument("unknown check '" + std::string(name) + "'");
}

std::vector<std::string> cell_keys(CheckId id) {
  switch (id) {
    case CheckId::TorusDuality: return {"t", "N"};
    case CheckId::LemmaTables:
    case CheckId::LemmaSums: return {"family", "m", "p"};
    case CheckId::ClosedFormA: return {"family", "m", "p", "N"};
    case CheckId::DisplayKm2m2:
    case CheckId::DisplayKm3p1: return {"N"};
    case CheckId::TwistM1: return {"sign", "p", "N"};
    case CheckId::StronglyUnimodal: return {"M"};
    default: return {"m", "p", "N"};
  }
}

VerificationReport run_check(CheckId check, const Cell& cell) {
  check_cell(check, cell);
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.check = check;
  report.cell = cell;
  report.witness = evaluate(check, cell.values);
  report.passed = witness_is_zero(report.witness);
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

Suite parse_suite(std::string_view name) {
  if (name == "all") return Suite::All;
  if (name == "mirror") return Suite::Mirror;
  if (name == "duality") return Suite::Duality;
  if (name == "takata") return Suite::Takata;
  if (name == "lemmas") return Suite::Lemmas;
  if (name == "displays") return Suite::Displays;
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

std::vector<std::pair<CheckId, Cell>> suite_cells(Suite suite, const Grid& grid) {
  if (grid.m_max < 1 || grid.p_max < 1 || grid.n_max < 1 || grid.t_max < 1)
    throw std::invalid_argument("grid bounds must be at least 1");
  const auto ns = n_range(grid);
  const bool all = suite == Suite::All;
  std::vector<std::pair<CheckId, Cell>> out;

  if (all || suite == Suite::Mirror) {
    add_mpn(out, CheckId::MirrorPP, grid, ns);
    add_mpn(out, CheckId::MirrorPM, grid, ns);
  }
  if (all || suite == Suite::Takata) {
    add_mpn(out, CheckId::TakataVsThm1, grid, ns);
    add_mpn(out, CheckId::TakataVsThm2, grid, ns);
  }
  if (all || suite == Suite::Duality) {
    add_mpn(out, CheckId::DualityFU, grid, ns);
    add_mpn(out, CheckId::DualityCalFCalU, grid, ns);
    for (int t = 1; t <= grid.t_max; ++t)
      for (int N : ns) out.push_back({CheckId::TorusDuality, Cell{{t, N}}});
    add_mpn(out, CheckId::RootEvalF, grid, ns);
    add_mpn(out, CheckId::RootEvalU, grid, ns);
    add_mpn(out, CheckId::RootEvalCalF, grid, ns);
    add_mpn(out, CheckId::RootEvalCalU, grid, ns);
  }
  if (all || suite == Suite::Lemmas) {
    add_family_mp(out, CheckId::LemmaTables, grid);
    add_family_mp(out, CheckId::LemmaSums, grid);
  }
  if (all || suite == Suite::Takata) {
    // The 4mp-1 closed form is claimed for m >= 2 only; at m = 1 the
    // Takata a(n) carries an extra -n_{2p-1}.
    for (int f = 1; f <= 2; ++f)
      for (int m = f == 1 ? 2 : 1; m <= grid.m_max; ++m)
        for (int p = 1; p <= grid.p_max; ++p)
          for (int N : ns) out.push_back({CheckId::ClosedFormA, Cell{{f, m, p, N}}});
  }
  if (all || suite == Suite::Displays) {
    for (int N : ns) out.push_back({CheckId::DisplayKm2m2, Cell{{N}}});
    for (int N : ns) out.push_back({CheckId::DisplayKm3p1, Cell{{N}}});
    for (int s : {-1, 1})
      for (int p = 1; p <= grid.p_max; ++p)
        for (int N : ns) out.push_back({CheckId::TwistM1, Cell{{s, p, N}}});
  }
  if (all) {
    add_mpn(out, CheckId::SymmetryMP, grid, ns);
    std::vector<int> every_n;
    for (int N = 1; N <= grid.n_max; ++N) every_n.push_back(N);
    add_mpn(out, CheckId::JonesAtOne, grid, every_n);
    out.push_back({CheckId::StronglyUnimodal, Cell{{kUnimodalOrder}}});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VerificationReport> run_suite(
    Suite suite, const Grid& grid, int jobs,
    const std::map<ReportKey, VerificationReport>& previous) {
  if (jobs < 1) throw std::invalid_argument("jobs must be at least 1");
  const auto cells = suite_cells(suite, grid);
  std::vector<VerificationReport> reports(cells.size());
  std::vector<std::size_t> todo;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (auto it = previous.find(cells[i]); it != previous.end())
      reports[i] = it->second;
    else
      todo.push_back(i);
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t k = next++; k < todo.size(); k = next++) {
      const auto& [check, cell] = cells[todo[k]];
      try {
        reports[todo[k]] = run_check(check, cell);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const int threads = std::min<int>(jobs, static_cast<int>(std::max<std::size_t>(todo.size(), 1)));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return reports;
}

nlohmann::ordered_json report_to_json(const VerificationReport& r, bool with_timing) {
  nlohmann::ordered_json cell = nlohmann::ordered_json::object();
  const auto keys = cell_keys(r.check);
  for (std::size_t i = 0; i < keys.size() && i < r.cell.values.size(); ++i)
    cell[keys[i]] = r.cell.values[i];
  nlohmann::ordered_json witness;
  if (const auto* p = std::get_if<LaurentPolynomial>(&r.witness)) {
    witness["laurent"] = to_json(*p);
  } else {
    const auto& x = std::get<QuotientElement>(r.witness);
    auto coeffs = nlohmann::ordered_json::array();
    for (const auto& c : x.coeffs()) coeffs.push_back(c.get_str());
    witness["quotient"] = {{"N", x.modulus()}, {"coeffs", coeffs}};
  }
  nlohmann::ordered_json out;
  out["check"] = std::string(check_name(r.check));
  out["cell"] = cell;
  out["status"] = r.passed ? "pass" : "fail";
  out["witness"] = witness;
  if (with_timing)
    out["elapsed_ms"] =
        std::chrono::duration<double, std::milli>(r.elapsed).count();
  return out;
}

VerificationReport report_from_json(const nlohmann::ordered_json& j) {
  VerificationReport r;
  r.check = parse_check_id(j.at("check").get<std::string>());
  for (const auto& key : cell_keys(r.check)) r.cell.values.push_back(j.at("cell").at(key).get<int>());
  const auto& status = j.at("status").get<std::string>();
  if (status != "pass" && status != "fail")
    throw std::invalid_argument("status must be pass or fail");
  r.passed = status == "pass";
  const auto& w = j.at("witness");
  if (w.contains("laurent")) {
    r.witness = laurent_from_json(nlohmann::json::parse(w.at("laurent").dump()));
  } else {
    r.witness = quotient_from_json(nlohmann::json::parse(w.at("quotient").dump()));
  }
  if (r.passed != witness_is_zero(r.witness))
    throw std::invalid_argument("witness disagrees with status");
  if (j.contains("elapsed_ms"))
    r.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(
        std::chrono::duration<double, std::milli>(j.at("elapsed_ms").get<double>()));
  return r;
}

nlohmann::ordered_json summary_json(const std::vector<VerificationReport>& reports) {
  const auto passed = std::count_if(reports.begin(), reports.end(),
                                    [](const VerificationReport& r) { return r.passed; });
  nlohmann::ordered_json counts;
  counts["total"] = reports.size();
  counts["passed"] = passed;
  counts["failed"] = static_cast<long>(reports.size()) - passed;
  nlohmann::ordered_json out;
  out["summary"] = counts;
  return out;
}

}  // namespace qknot
