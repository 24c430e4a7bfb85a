#pragma once

#include <chrono>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "qknot/laurent.hpp"
#include "qknot/quotient.hpp"

namespace qknot {

/**
 * Check              cell          identity
 * MirrorPP           (m,p,N)       J(K_(m,p)) at q^-1 = first nested sum
 * MirrorPM           (m,p,N)       J(K_(m,-p)) at q^-1 = second nested sum
 * TakataVsThm1       (m,p,N)       Takata sum for b(4mp-1,4mp-2p-1) = first nested sum
 * TakataVsThm2       (m,p,N)       Takata sum for b(4mp+1,4mp-2p+1) = second nested sum
 * DualityFU          (m,p,N)       F_{m,p} = U_{m,p}(-1) reversed
 * DualityCalFCalU    (m,p,N)       calF_{m,p} = calU_{m,p}(-1) reversed
 * TorusDuality       (t,N)         F_t = U_t(-1) reversed
 * RootEvalF          (m,p,N)       F_{m,p} = J(K_(-m,-p)) mod q^N - 1
 * RootEvalU          (m,p,N)       U_{m,p}(-1) = J(K_(m,p)) mod q^N - 1
 * RootEvalCalF       (m,p,N)       calF_{m,p} = J(K_(-m,p)) mod q^N - 1
 * RootEvalCalU       (m,p,N)       calU_{m,p}(-1) = J(K_(m,-p)) mod q^N - 1
 * LemmaTables        (family,m,p)  interval algorithms = definitional sigma table
 * LemmaSums          (family,m,p)  sigma_{i_k} + sigma_{i_{p'+1-k}} and sigma_{j+1} + sigma_{p'+1-j} patterns
 * ClosedFormA        (family,m,p,N) a(n) = alternating sum of n_{mj}, every chain
 * DisplayKm2m2       (N)           worked K_(-2,-2) example = first nested sum
 * DisplayKm3p1       (N)           worked K_(-3,1) example = second nested sum
 * TwistM1            (sign,p,N)    m = 1 forms = nested sums with m = 1
 * SymmetryMP         (m,p,N)       J(K_(m,p)) = J(K_(p,m))
 * JonesAtOne         (m,p,N)       J_1 = 1 and J_N(1) = 1 on every evaluator
 * StronglyUnimodal   (M)           q U_{1,1}(1;q) = unimodal sequence counts to q^M
 *
 * family is 1 for b(4mp-1, 4mp-2p-1) and 2 for b(4mp+1, 4mp-2p+1).
 */
enum class CheckId {
  MirrorPP,
  MirrorPM,
  TakataVsThm1,
  TakataVsThm2,
  DualityFU,
  DualityCalFCalU,
  TorusDuality,
  RootEvalF,
  RootEvalU,
  RootEvalCalF,
  RootEvalCalU,
  LemmaTables,
  LemmaSums,
  ClosedFormA,
  DisplayKm2m2,
  DisplayKm3p1,
  TwistM1,
  SymmetryMP,
  JonesAtOne,
  StronglyUnimodal,
};

inline constexpr int kCheckCount = 20;

std::string_view check_name(CheckId id);
CheckId parse_check_id(std::string_view name);
/// Parameter names of the cell, in order.
std::vector<std::string> cell_keys(CheckId id);

/// Named integer parameters, ordered as cell_keys(check).
struct Cell {
  std::vector<int> values;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

using Witness = std::variant<LaurentPolynomial, QuotientElement>;

struct VerificationReport {
  CheckId check = CheckId::MirrorPP;
  Cell cell;
  bool passed = false;
  Witness witness;  // zero exactly when passed
  std::chrono::nanoseconds elapsed{0};
};

/// Throws std::invalid_argument for a cell the check cannot take.
VerificationReport run_check(CheckId check, const Cell& cell);

enum class Suite { All, Mirror, Duality, Takata, Lemmas, Displays };
Suite parse_suite(std::string_view name);

struct Grid {
  int m_max = 1;
  int p_max = 1;
  int n_max = 1;
  int t_max = 1;
};

/// Cells of the suite in report order. N ranges over 2..n_max (just 1 when
/// n_max = 1), except JonesAtOne which covers 1..n_max.
std::vector<std::pair<CheckId, Cell>> suite_cells(Suite suite, const Grid& grid);

using ReportKey = std::pair<CheckId, Cell>;

/**
 * Runs every cell of the suite on `jobs` threads and returns the reports
 * sorted by (check, cell). Cells present in `previous` are reused as-is.
 */
std::vector<VerificationReport> run_suite(
    Suite suite, const Grid& grid, int jobs,
    const std::map<ReportKey, VerificationReport>& previous = {});

/// One JSONL record; elapsed is included only when requested.
nlohmann::ordered_json report_to_json(const VerificationReport& r, bool with_timing);
VerificationReport report_from_json(const nlohmann::ordered_json& j);
nlohmann::ordered_json summary_json(const std::vector<VerificationReport>& reports);

}  // namespace qknot
