// qknot: colored Jones polynomials of double twist knots, q-series at roots
// of unity, and identity verification.

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qknot/io.hpp"
#include "qknot/knot.hpp"
#include "qknot/qseries.hpp"
#include "qknot/verifier.hpp"

namespace {

using namespace qknot;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

int parse_int(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw UsageError(what + ": expected an integer, got '" + s + "'");
  }
  if (used != s.size()) throw UsageError(what + ": expected an integer, got '" + s + "'");
  return v;
}

/// "-1", "+1", "1", "q", "-q^3", "+q^-2", ...
MonomialUnit parse_x(std::string s) {
  std::erase_if(s, [](unsigned char c) { return std::isspace(c); });
  if (s.empty()) throw UsageError("--x: empty value");
  int sign = 1;
  std::size_t i = 0;
  if (s[0] == '+' || s[0] == '-') {
    sign = s[0] == '-' ? -1 : 1;
    i = 1;
  }
  const std::string rest = s.substr(i);
  if (rest == "1") return {sign, 0};
  if (rest == "q") return {sign, 1};
  if (rest.rfind("q^", 0) == 0) return {sign, parse_int(rest.substr(2), "--x exponent")};
  throw UsageError("--x: expected +-1 or +-q^e, got '" + s + "'");
}

EvalMode parse_mode(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos) throw UsageError("--mode: expected root:N or series:M");
  const std::string kind = s.substr(0, colon);
  const int value = parse_int(s.substr(colon + 1), "--mode");
  if (kind == "root") {
    if (value < 1) throw UsageError("--mode root:N needs N >= 1");
    return RootOfUnity{value};
  }
  if (kind == "series") {
    if (value < 0) throw UsageError("--mode series:M needs M >= 0");
    return Series{value};
  }
  throw UsageError("--mode: unknown kind '" + kind + "'");
}

std::string mode_string(const EvalMode& mode) {
  if (const auto* r = std::get_if<RootOfUnity>(&mode)) return "root:" + std::to_string(r->N);
  return "series:" + std::to_string(std::get<Series>(mode).M);
}

struct ComputeArgs {
  std::string knot;
  int N = 1;
  std::string formula = "auto";
  std::string out = "text";
};

int cmd_compute(const ComputeArgs& a) {
  if (a.N < 1) throw UsageError("--N must be at least 1");
  const KnotSpec spec = parse_knot_spec(a.knot);
  const Formula formula = parse_formula(a.formula);
  const LaurentPolynomial J = jones_knot(spec, a.N, formula);
  if (a.out == "json") {
    nlohmann::ordered_json j;
    j["knot"] = render(spec);
    j["N"] = a.N;
    j["formula"] = std::string(formula_name(formula));
    j["polynomial"] = to_json(J);
    std::cout << j.dump() << '\n';
  } else if (a.out == "csv") {
    std::cout << to_csv(J);
  } else {
    std::cout << J.to_string() << '\n';
  }
  return kExitOk;
}

struct SeriesArgs {
  std::string function;
  std::optional<int> m, p, t;
  std::string x = "-1";
  std::string mode;
  std::string out = "text";
};

int require(const std::optional<int>& v, const char* flag) {
  if (!v) throw UsageError(std::string("this function needs ") + flag);
  if (*v < 1) throw UsageError(std::string(flag) + " must be at least 1");
  return *v;
}

int root_only(const EvalMode& mode, const std::string& fn) {
  const auto* r = std::get_if<RootOfUnity>(&mode);
  if (r == nullptr) throw UsageError(fn + " is defined only at roots of unity (use root:N)");
  return r->N;
}

int cmd_series(const SeriesArgs& a) {
  const EvalMode mode = parse_mode(a.mode);
  const MonomialUnit x = parse_x(a.x);
  const std::string& fn = a.function;
  const bool root = std::holds_alternative<RootOfUnity>(mode);
  if (root && (fn == "U" || fn == "calU" || fn == "Ut" || fn == "Ubase") &&
      !(x == minus_one()))
    throw UsageError(fn + " at roots of unity is defined only for x = -1");

  auto evaluate = [&]() -> SeriesValue {
    if (fn == "F") {
      return f_mp(require(a.m, "--m"), require(a.p, "--p"), root_only(mode, fn));
    } else if (fn == "U") {
      return u_mp(require(a.m, "--m"), require(a.p, "--p"), x, mode);
    } else if (fn == "calF") {
      return cal_f_mp(require(a.m, "--m"), require(a.p, "--p"), root_only(mode, fn));
    } else if (fn == "calU") {
      root_only(mode, fn);
      return cal_u_mp(require(a.m, "--m"), require(a.p, "--p"), x, mode);
    } else if (fn == "Ft") {
      return f_t_torus(require(a.t, "--t"), root_only(mode, fn));
    } else if (fn == "Ut") {
      return u_t_torus(require(a.t, "--t"), x, mode);
    } else if (fn == "KZ") {
      return kz_f(root_only(mode, fn));
    } else if (fn == "Ubase") {
      return u_base(x, mode);
    } else {
      throw UsageError("--function: unknown function '" + fn + "'");
    }
  };
  const SeriesValue value = evaluate();

  if (a.out == "json") {
    nlohmann::ordered_json j;
    j["function"] = fn;
    j["mode"] = mode_string(mode);
    if (const auto* q = std::get_if<QuotientElement>(&value)) {
      j["value"] = to_json(*q);
    } else {
      j["value"] = to_json(std::get<LaurentPolynomial>(value));
    }
    std::cout << j.dump() << '\n';
  } else if (const auto* q = std::get_if<QuotientElement>(&value)) {
    std::cout << q->to_string() << '\n';
  } else {
    std::cout << std::get<LaurentPolynomial>(value).to_string() << '\n';
  }
  return kExitOk;
}

struct VerifyArgs {
  std::string suite = "all";
  Grid grid;
  int jobs = 1;
  std::string report;
  bool resume = false;
  bool timing = false;
};

std::map<ReportKey, VerificationReport> load_previous(const std::string& path) {
  std::map<ReportKey, VerificationReport> out;
  std::ifstream in(path);
  if (!in) return out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    nlohmann::ordered_json j;
    try {
      j = nlohmann::ordered_json::parse(line);
      if (j.contains("summary")) continue;
      VerificationReport r = report_from_json(j);
      out.emplace(ReportKey{r.check, r.cell}, std::move(r));
    } catch (const std::exception&) {
      // A torn or foreign line is recomputed.
    }
  }
  return out;
}

int cmd_verify(const VerifyArgs& a) {
  const Suite suite = parse_suite(a.suite);
  if (a.jobs < 1) throw UsageError("--jobs must be at least 1");
  suite_cells(suite, a.grid);  // rejects bad bounds before any work

  std::map<ReportKey, VerificationReport> previous;
  if (a.resume && !a.report.empty()) previous = load_previous(a.report);
  const auto reports = run_suite(suite, a.grid, a.jobs, previous);

  std::ostringstream body;
  for (const auto& r : reports) body << report_to_json(r, a.timing).dump() << '\n';
  const auto summary = summary_json(reports).dump();
  body << summary << '\n';

  if (a.report.empty()) {
    std::cout << body.str();
  } else {
    const std::string tmp = a.report + ".tmp";
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      if (!out) throw std::runtime_error("cannot write report '" + a.report + "'");
      out << body.str();
    }
    std::filesystem::rename(tmp, a.report);
    std::cout << summary << '\n';
  }
  const bool ok = std::all_of(reports.begin(), reports.end(),
                              [](const VerificationReport& r) { return r.passed; });
  return ok ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Colored Jones polynomials of double twist knots and related q-series"};
  app.require_subcommand(1);

  ComputeArgs compute;
  auto* c = app.add_subcommand("compute", "colored Jones polynomial J_N(K;q)");
  c->add_option("--knot", compute.knot, "K(m,p), b(l,t) or T(2,k)")->required();
  c->add_option("--N", compute.N, "color N >= 1")->required();
  c->add_option("--formula", compute.formula, "auto|cyclotomic|theorem|takata")
      ->check(CLI::IsMember({"auto", "cyclotomic", "theorem", "takata"}));
  c->add_option("--out", compute.out, "text|json|csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  SeriesArgs series;
  auto* s = app.add_subcommand("series", "q-series at a root of unity or truncated");
  s->add_option("--function", series.function, "F|U|calF|calU|Ft|Ut|KZ|Ubase")
      ->required()
      ->check(CLI::IsMember({"F", "U", "calF", "calU", "Ft", "Ut", "KZ", "Ubase"}));
  s->add_option("--m", series.m);
  s->add_option("--p", series.p);
  s->add_option("--t", series.t);
  s->add_option("--x", series.x, "x = +-1 or +-q^e (default -1)");
  s->add_option("--mode", series.mode, "root:N or series:M")->required();
  s->add_option("--out", series.out, "text|json")->check(CLI::IsMember({"text", "json"}));

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "check identities over a parameter grid");
  v->add_option("--suite", verify.suite, "all|mirror|duality|takata|lemmas|displays")
      ->check(CLI::IsMember({"all", "mirror", "duality", "takata", "lemmas", "displays"}));
  v->add_option("--m-max", verify.grid.m_max);
  v->add_option("--p-max", verify.grid.p_max);
  v->add_option("--n-max", verify.grid.n_max);
  v->add_option("--t-max", verify.grid.t_max);
  v->add_option("--jobs", verify.jobs, "worker threads");
  v->add_option("--report", verify.report, "write JSONL here instead of stdout");
  v->add_flag("--resume", verify.resume, "reuse cells already in --report");
  v->add_flag("--timing", verify.timing, "include elapsed_ms per cell");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (c->parsed()) return cmd_compute(compute);
    if (s->parsed()) return cmd_series(series);
    return cmd_verify(verify);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
}
